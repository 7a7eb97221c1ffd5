# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled monotone-triangle enumeration kernels.

Row ``k`` of a triangle is the set of columns whose partial column sum is 1
after the first ``k`` rows of the ASM. Both kernels fill caller-owned int64
histograms and release the GIL while enumerating.
"""

import numpy as np

cimport cython
from libc.string cimport memset

DEF MAXN = 24


cdef struct State:
    int n
    int tri[MAXN][MAXN]
    long long *hist
    int hist_mu
    int first


cdef void _finish_row(State *st, int k, int mu) noexcept nogil:
    # tri[k] (length k+1) complete; add the -1 count of the new ASM row
    cdef int i, hits
    cdef int *a = st.tri[k - 1]
    cdef int *b = st.tri[k]
    if k > 0:
        for i in range(k):
            hits = (b[i] == a[i]) or (b[i + 1] == a[i])
            if not hits:
                mu += 1
    _descend(st, k + 1, mu)


cdef void _fill(State *st, int k, int pos, int mu) noexcept nogil:
    # choose tri[k][pos]; row k has k+1 entries, row k-1 has k entries
    cdef int n = st.n
    cdef int *a = st.tri[k - 1]
    cdef int *b = st.tri[k]
    cdef int lo, hi, v
    if pos == k + 1:
        _finish_row(st, k, mu)
        return
    if pos == 0:
        lo = 1
    else:
        lo = a[pos - 1]
        if lo <= b[pos - 1]:
            lo = b[pos - 1] + 1
    if pos == k:
        hi = n
    else:
        hi = a[pos]
    v = lo
    while v <= hi:
        b[pos] = v
        _fill(st, k, pos + 1, mu)
        v += 1


cdef void _descend(State *st, int k, int mu) noexcept nogil:
    # rows 0..k-1 fixed (row r has r+1 entries); next is row k
    cdef int n = st.n
    cdef int i, ell, f
    cdef long long idx
    if k == n - 1:
        # the last ASM row is forced; ell is the column missing from row n-2
        ell = n
        for i in range(n - 1):
            if st.tri[n - 2][i] != i + 1:
                ell = i + 1
                break
        f = st.tri[0][0]
        idx = (<long long>mu * n + (f - 1)) * n + (ell - 1)
        st.hist[idx] += 1
        return
    _fill(st, k, 0, mu)


def stats_histogram(int n, int first=0):
    """counts[mu, f-1, ell-1] over all n x n ASMs (only f == first if first > 0)."""
    if n < 1 or n > MAXN:
        raise ValueError(f"n must lie in 1..{MAXN}")
    cdef int mu_cap = (n - 1) * (n - 1) // 2 + 1
    out = np.zeros((mu_cap, n, n), dtype=np.int64)
    cdef long long[:, :, ::1] view = out
    cdef State st
    cdef int c, lo, hi
    if n == 1:
        out[0, 0, 0] = 1
        return out
    memset(&st, 0, sizeof(State))
    st.n = n
    st.hist = &view[0, 0, 0]
    lo = 1 if first <= 0 else first
    hi = n if first <= 0 else first
    with nogil:
        for c in range(lo, hi + 1):
            st.tri[0][0] = c
            _descend(&st, 1, 0)
    return out


cdef void _hs_fill(State *st, int k, int pos, int mu) noexcept nogil:
    cdef int n = st.n
    cdef int m = (n - 1) // 2
    cdef int *a = st.tri[k - 1]
    cdef int *b = st.tri[k]
    cdef int lo, hi, v, i, add
    if pos == k + 1:
        add = 0
        for i in range(k):
            if not ((b[i] == a[i]) or (b[i + 1] == a[i])):
                add += 1
        _hs_descend(st, k + 1, mu + add)
        return
    if pos == 0:
        lo = 1
    else:
        lo = a[pos - 1]
        if lo <= b[pos - 1]:
            lo = b[pos - 1] + 1
    hi = n if pos == k else a[pos]
    v = lo
    while v <= hi:
        b[pos] = v
        _hs_fill(st, k, pos + 1, mu)
        v += 1


cdef void _hs_descend(State *st, int k, int mu) noexcept nogil:
    # the triangle row after the top half must be the complement of row m-1,
    # which interlaces only when row m-1 is {2, 4, ..., 2m}
    cdef int n = st.n
    cdef int m = (n - 1) // 2
    cdef int i
    if k == m:
        for i in range(m):
            if st.tri[m - 1][i] != 2 * (i + 1):
                return
        st.hist[<long long>mu * n + st.tri[0][0] - 1] += 1
        return
    _hs_fill(st, k, 0, mu)


def hsasm_histogram(int m):
    """counts[top_mu, f-1] over horizontally symmetric ASMs of order 2m+1."""
    if m < 1 or 2 * m + 1 > MAXN:
        raise ValueError(f"m must lie in 1..{(MAXN - 1) // 2}")
    cdef int n = 2 * m + 1
    cdef int mu_cap = m * m + 1
    out = np.zeros((mu_cap, n), dtype=np.int64)
    cdef long long[:, ::1] view = out
    cdef State st
    cdef int c
    memset(&st, 0, sizeof(State))
    st.n = n
    st.hist = &view[0, 0]
    with nogil:
        for c in range(1, n + 1):
            st.tri[0][0] = c
            _hs_descend(&st, 1, 0)
    return out
