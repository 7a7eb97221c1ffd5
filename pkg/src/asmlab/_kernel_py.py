"""Pure-Python twin of the compiled enumeration kernels (same signatures)."""

from __future__ import annotations

import numpy as np


def interlacing_rows(a: tuple[int, ...], n: int):
    """All strictly increasing rows of length len(a)+1 interlacing ``a`` within 1..n."""
    k = len(a)
    b = [0] * (k + 1)

    def fill(pos):
        if pos == k + 1:
            yield tuple(b)
            return
        lo = 1 if pos == 0 else max(a[pos - 1], b[pos - 1] + 1)
        hi = n if pos == k else a[pos]
        for v in range(lo, hi + 1):
            b[pos] = v
            yield from fill(pos + 1)

    return fill(0)


def _lost(a, b):
    # entries of a absent from b = -1s in the ASM row between them
    return sum(1 for i, x in enumerate(a) if b[i] != x and b[i + 1] != x)


def stats_histogram(n: int, first: int = 0) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be positive")
    out = np.zeros(((n - 1) * (n - 1) // 2 + 1, n, n), dtype=np.int64)
    if n == 1:
        out[0, 0, 0] = 1
        return out
    full = tuple(range(1, n + 1))

    def descend(row, depth, mu, f):
        if depth == n - 1:
            ell = next(c for c in full if c not in row)
            out[mu, f - 1, ell - 1] += 1
            return
        for nxt in interlacing_rows(row, n):
            descend(nxt, depth + 1, mu + _lost(row, nxt), f)

    starts = range(1, n + 1) if first <= 0 else (first,)
    for c in starts:
        descend((c,), 1, 0, c)
    return out


def hsasm_histogram(m: int) -> np.ndarray:
    if m < 1:
        raise ValueError("m must be positive")
    n = 2 * m + 1
    out = np.zeros((m * m + 1, n), dtype=np.int64)
    evens = tuple(range(2, n, 2))

    def descend(row, depth, mu, f):
        if depth == m:
            if row == evens:
                out[mu, f - 1] += 1
            return
        for nxt in interlacing_rows(row, n):
            descend(nxt, depth + 1, mu + _lost(row, nxt), f)

    for c in range(1, n + 1):
        descend((c,), 1, 0, c)
    return out
