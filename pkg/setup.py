import os

from setuptools import setup

ext_modules = []
if not os.environ.get("CELLRES_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/cellres/_fastrank.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # pure-Python install; the rank dispatch falls back automatically
        ext_modules = []

setup(ext_modules=ext_modules)
