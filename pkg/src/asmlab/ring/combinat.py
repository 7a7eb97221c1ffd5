"""Integer combinatorics shared by every determinant formula."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod


def binom(a: int, b: int) -> int:
    """Binomial coefficient that vanishes off the support ``0 <= b <= a``.

    Every reindexed sum in the determinant formulas relies on this
    convention; in particular ``binom(-1, 0) == 0``.
    """
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def gbinom(a: int, b: int) -> int:
    """Generalized binomial ``a(a-1)...(a-b+1)/b!`` for any integer ``a``.

    Differs from :func:`binom` only for negative ``a``, e.g.
    ``gbinom(-1, 0) == 1``. Needed by the Behrend-type matrix whose first
    row reads ``binom(-1, 0)``.
    """
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b) if b <= a else 0
    # upper negation
    return (-1) ** b * comb(b - a - 1, b)


def sign(k: int) -> int:
    """(-1)**k as an int for any integer k."""
    return -1 if k % 2 else 1


def rising(a: int, k: int) -> int:
    """Pochhammer symbol (a)_k."""
    return prod(range(a, a + k))


@lru_cache(maxsize=None)
def asm_count(n: int) -> int:
    """Number of n x n alternating sign matrices by the product formula."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    value = Fraction(1)
    for j in range(1, n + 1):
        value *= Fraction(factorial(3 * j - 2), factorial(n + j - 1))
    assert value.denominator == 1
    return value.numerator


def refined_count(n: int, r: int) -> int:
    """Number of n x n ASMs whose first-row 1 sits in column r.

    A_n * C(n+r-2, r-1) * C(2n-r-1, n-r) / C(3n-2, n-1), which is the
    rising-factorial form (r)_{n-1} (n+1-r)_{n-1} / (n-1)! * A_n further
    divided by (n-1)! C(3n-2, n-1).
    """
    if not 1 <= r <= n:
        raise ValueError(f"column {r} outside 1..{n}")
    value = Fraction(rising(r, n - 1) * rising(n + 1 - r, n - 1), factorial(n - 1))
    value *= asm_count(n)
    value /= factorial(n - 1) * comb(3 * n - 2, n - 1)
    assert value.denominator == 1
    return value.numerator


def three_enumeration(n: int) -> int:
    """Closed form for the 3-enumeration A_n(3, 1, 1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    m, odd = divmod(n, 2)
    value = Fraction(1)
    if odd:
        value *= Fraction(3) ** (m * (m + 1))
        for k in range(m):
            value *= Fraction(factorial(3 * k + 2), factorial(m + k + 1)) ** 2
    else:
        value *= Fraction(3) ** (m * m - 1)
        value *= Fraction(factorial(m - 1), factorial(3 * m - 1))
        for k in range(m):
            value *= Fraction(factorial(3 * k + 2), factorial(m + k)) ** 2
    assert value.denominator == 1
    return value.numerator


def one_enumeration_scaled(n: int) -> int:
    """3^(n(n-1)/2) times the ASM count, written with the (3k+1)! product."""
    value = Fraction(3) ** (n * (n - 1) // 2)
    for k in range(n):
        value *= Fraction(factorial(3 * k + 1), factorial(n + k))
    assert value.denominator == 1
    return value.numerator
