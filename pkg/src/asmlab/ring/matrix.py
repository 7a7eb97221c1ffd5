"""Square matrices over exact commutative rings and their determinants."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .mpoly import MPoly, NotDivisible


class SqMatrix:
    """Immutable square matrix; all entries share one ring."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        self.rows = rows

    @classmethod
    def build(cls, n: int, entry: Callable[[int, int], object]) -> "SqMatrix":
        """Matrix with 1-based ``entry(i, j)``."""
        return cls([[entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def map(self, fn: Callable) -> "SqMatrix":
        return SqMatrix([[fn(x) for x in r] for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, SqMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def det(self):
        return bareiss_det(self.rows)

    def __repr__(self):
        return f"SqMatrix({[list(r) for r in self.rows]})"


def _exact_div(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{a} / {b}")
        return q
    if isinstance(a, MPoly):
        return a.exact_div(b)
    if isinstance(b, MPoly):
        return MPoly.const(a).exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def bareiss_det(rows: Sequence[Sequence]):
    """Fraction-free determinant with row-swap pivoting."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0 * m[0][0]
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - lead * row_k[j]
                row_i[j] = _exact_div(num, prev)
            row_i[k] = 0 * lead
        prev = pivot
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def cofactor_det(rows: Sequence[Sequence]):
    """Laplace expansion along the first row; exponential, for oracles only."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in (tuple(x) for x in rows[1:])]
        term = rows[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else 0 * rows[0][0]
