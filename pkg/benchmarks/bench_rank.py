"""Compare the compiled and pure-Python rank kernels.

The workload mirrors the package's own hot loop: signed boundary
matrices of restricted Taylor complexes, plus dense random sign
matrices as a stress case.  Large dense matrices overflow the 64-bit
kernel (Bareiss intermediates are minors, which grow fast) and fall
back to the exact big-integer path; the fallback column counts those.

    python benchmarks/bench_rank.py [--sizes 16,32,48] [--repeat 5]
"""

import argparse
import random
import statistics
import time

from cellres.complexes import boundary_matrix, lcm_lattice, restrict_leq, taylor_complex
from cellres.monomial import MonomialIdeal
from cellres.rank import COMPILED_AVAILABLE, matrix_rank, rank_pure


def boundary_workload(seed=7, nideals=12):
    """All boundary matrices that one Taylor-exactness check visits."""
    rng = random.Random(seed)
    mats = []
    for _ in range(nideals):
        n, r = rng.randint(2, 4), rng.randint(4, 7)
        gens = set()
        while len(gens) < r:
            e = tuple(rng.randint(0, 6) for _ in range(n))
            if any(e):
                gens.add(e)
        M = MonomialIdeal.from_generators(n, gens)
        X = taylor_complex(M)
        for beta in lcm_lattice(X):
            Y = restrict_leq(X, beta)
            for k in range(1, Y.num_grades):
                mat = boundary_matrix(Y, k)
                if mat and mat[0]:
                    mats.append((mat, len(mat[0])))
    return mats


def dense_workload(size, seed=11):
    rng = random.Random(seed)
    mat = [[rng.choice((-1, 0, 1)) for _ in range(size)] for _ in range(size)]
    return [(mat, size)]


def run(mats, impl, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for mat, ncols in mats:
            matrix_rank(mat, ncols, impl=impl)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.mean(times)


def count_fallbacks(mats):
    """How many matrices overflow the 64-bit kernel (minors too large)."""
    n = 0
    for mat, ncols in mats:
        try:
            matrix_rank(mat, ncols, impl="compiled")
        except OverflowError:
            n += 1
    return n


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="16,32,48",
                    help="dense matrix sizes for the stress case")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    if not COMPILED_AVAILABLE:
        print("compiled kernel not available; showing pure timings only")

    rows = [("boundary matrices", boundary_workload())]
    for size in (int(s) for s in args.sizes.split(",")):
        rows.append((f"dense +-1 {size}x{size}", dense_workload(size)))

    header = f"{'workload':<24} {'matrices':>8} {'pure (s)':>10}"
    if COMPILED_AVAILABLE:
        header += f" {'auto (s)':>10} {'speedup':>8} {'fallbacks':>10}"
    print(header)
    for name, mats in rows:
        # consistency check before timing
        for mat, ncols in mats:
            assert rank_pure(mat, ncols) == matrix_rank(mat, ncols)
        best_pure, _ = run(mats, "pure", args.repeat)
        line = f"{name:<24} {len(mats):>8} {best_pure:>10.4f}"
        if COMPILED_AVAILABLE:
            best_fast, _ = run(mats, None, args.repeat)
            fb = count_fallbacks(mats)
            line += f" {best_fast:>10.4f} {best_pure / best_fast:>7.1f}x {fb:>6}/{len(mats)}"
        print(line)


if __name__ == "__main__":
    main()
