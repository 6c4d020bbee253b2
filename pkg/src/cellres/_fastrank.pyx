# cython: language_level=3
# cython: overflowcheck=True
# cython: boundscheck=False
# cython: wraparound=False
"""64-bit kernel for exact integer-matrix rank.

Same fraction-free elimination as ``cellres.rank.rank_pure`` but on C
long long entries.  Intermediate values are minors of the input, so an
OverflowError (from the overflowcheck directive, or from converting an
oversized input entry) means the matrix needs big integers; callers
fall back to the pure path.
"""

from libc.stdlib cimport free, malloc


def rank_int64(rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return 0
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, r, c, piv
    cdef long long p, q, prev, t
    try:
        for i in range(nrows):
            row = rows[i]
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for j in range(ncols):
                m[i * ncols + j] = row[j]
        prev = 1
        r = 0
        for c in range(ncols):
            piv = -1
            for i in range(r, nrows):
                if m[i * ncols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    t = m[r * ncols + j]
                    m[r * ncols + j] = m[piv * ncols + j]
                    m[piv * ncols + j] = t
            p = m[r * ncols + c]
            for i in range(r + 1, nrows):
                q = m[i * ncols + c]
                for j in range(c + 1, ncols):
                    # division by the previous pivot is exact
                    m[i * ncols + j] = (m[i * ncols + j] * p - q * m[r * ncols + j]) // prev
                m[i * ncols + c] = 0
            prev = p
            r += 1
            if r == nrows:
                break
        return r
    finally:
        free(m)
