"""Balanced q-integers [k] = (q^k - q^-k) / (q - q^-1), division free."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .mpoly import MPoly


@lru_cache(maxsize=256)
def qint(k: int) -> MPoly:
    if k < 0:
        return -qint(-k)
    return MPoly({(2 * (k - 1 - 2 * j), 0, 0, 0): 1 for j in range(k)})


def qint_value(k: int, q) -> Fraction:
    """[k] at a rational (or any field element) q, still without dividing by q - 1/q."""
    if k < 0:
        return -qint_value(-k, q)
    if isinstance(q, int):
        q = Fraction(q)
    total = 0
    for j in range(k):
        total = total + q ** (k - 1 - 2 * j)
    return total
