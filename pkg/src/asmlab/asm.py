"""Alternating sign matrices: validation, enumeration, statistics and generating functions."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from . import kernel
from ._kernel_py import interlacing_rows
from .ring import MPoly, asm_count, refined_count

ENUMERATION_CEILING = 9


class NotAlternating(ValueError):
    """A row or column violates the alternating-sign condition."""

    def __init__(self, kind: str, index: int, detail: str = ""):
        self.kind = kind
        self.index = index
        super().__init__(f"{kind} {index} is not alternating{': ' + detail if detail else ''}")


class EnumerationCeiling(ValueError):
    """Requested order exceeds the enumeration ceiling without an override."""


class OddExponent(ArithmeticError):
    """A horizontally symmetric ASM with mu(A) - m odd."""


@dataclass(frozen=True)
class Stats:
    mu: int
    f: int
    ell: int


@dataclass(frozen=True)
class Asm:
    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @cached_property
    def stats(self) -> Stats:
        return asm_stats(self)

    def is_horizontally_symmetric(self) -> bool:
        return self.entries == self.entries[::-1]

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)

    @classmethod
    def from_text(cls, text: str) -> "Asm":
        grid = [[int(x) for x in line.split()] for line in text.strip().splitlines() if line.strip()]
        return validate_asm(grid)


def _check_line(values: Sequence[int], kind: str, index: int) -> None:
    partial = 0
    for x in values:
        if x not in (-1, 0, 1):
            raise NotAlternating(kind, index, f"entry {x} not in {{-1, 0, 1}}")
        partial += x
        if partial not in (0, 1):
            raise NotAlternating(kind, index, "partial sums leave {0, 1}")
    if partial != 1:
        raise NotAlternating(kind, index, "line sum is not 1")


def validate_asm(grid: Sequence[Sequence[int]]) -> Asm:
    n = len(grid)
    if n == 0 or any(len(r) != n for r in grid):
        raise ValueError("an ASM must be a nonempty square array")
    for i, row in enumerate(grid, 1):
        _check_line(row, "row", i)
    for j in range(n):
        _check_line([grid[i][j] for i in range(n)], "column", j + 1)
    return Asm(tuple(tuple(int(x) for x in r) for r in grid))


def asm_stats(a: Asm) -> Stats:
    mu = sum(row.count(-1) for row in a.entries)
    return Stats(mu, a.entries[0].index(1) + 1, a.entries[-1].index(1) + 1)


def triangle_to_asm(rows: Sequence[Sequence[int]], n: int) -> Asm:
    """ASM from monotone-triangle rows S_1..S_n (S_n = 1..n)."""
    prev = [0] * n
    out = []
    for row in rows:
        cur = [0] * n
        for c in row:
            cur[c - 1] = 1
        out.append(tuple(x - y for x, y in zip(cur, prev)))
        prev = cur
    return Asm(tuple(out))


def asm_to_triangle(a: Asm) -> list[tuple[int, ...]]:
    n = a.n
    partial = [0] * n
    rows = []
    for row in a.entries:
        partial = [x + y for x, y in zip(partial, row)]
        rows.append(tuple(j + 1 for j in range(n) if partial[j]))
    return rows


def check_ceiling(n: int, override: bool = False) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > ENUMERATION_CEILING and not override:
        raise EnumerationCeiling(
            f"n={n} exceeds the enumeration ceiling {ENUMERATION_CEILING}; pass override=True"
        )


def enumerate_asms(n: int, override: bool = False) -> Iterator[Asm]:
    """Every n x n ASM exactly once, in lexicographic order of monotone triangles."""
    check_ceiling(n, override)
    full = tuple(range(1, n + 1))

    def walk(rows):
        if len(rows) == n - 1 or n == 1:
            yield triangle_to_asm(rows + [full] if n > 1 else [full], n)
            return
        for nxt in interlacing_rows(rows[-1], n):
            yield from walk(rows + [nxt])

    if n == 1:
        yield from walk([])
        return
    for c in full:
        yield from walk([(c,)])


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ASMLAB_THREADS", "1")))
    except ValueError:
        return 1


def stats_histogram(n: int, override: bool = False) -> np.ndarray:
    """counts[mu, f-1, ell-1]; fans out over the first-row column when threads > 1."""
    check_ceiling(n, override)
    workers = min(_threads(), n)
    if workers <= 1 or n < 7:
        return kernel.stats_histogram(n)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda c: kernel.stats_histogram(n, c), range(1, n + 1)))
    return sum(parts[1:], parts[0])


@lru_cache(maxsize=None)
def gen_fun(n: int, override: bool = False) -> MPoly:
    """A_n(z, rho, tau) = sum of z^mu rho^f tau^ell over all n x n ASMs."""
    hist = stats_histogram(n, override)
    terms = {}
    for mu, f, ell in zip(*np.nonzero(hist)):
        terms[(0, int(mu), int(f) + 1, int(ell) + 1)] = int(hist[mu, f, ell])
    return MPoly(terms)


def gen_fun_bruteforce(n: int) -> MPoly:
    """Same polynomial from materialized matrices; independent of the kernels."""
    terms: dict = {}
    for a in enumerate_asms(n):
        s = a.stats
        key = (0, s.mu, s.f, s.ell)
        terms[key] = terms.get(key, 0) + 1
    return MPoly(terms)


def count_closed_form(n: int) -> int:
    return asm_count(n)


def refined_closed_form(n: int, r: int) -> int:
    return refined_count(n, r)


@lru_cache(maxsize=None)
def hsasm_gen_fun(m: int, method: str = "kernel", override: bool = False) -> MPoly:
    """B_{2m+1}(z, rho): z^((mu-m)/2) rho^(f-2) summed over horizontally symmetric ASMs.

    ``method="filter"`` filters the full enumeration (order <= 7 in practice)
    and raises :class:`OddExponent` if some mu - m is odd; ``"kernel"`` walks
    only the top half of the triangle.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    n = 2 * m + 1
    check_ceiling(n, override)
    terms: dict = {}
    if method == "filter":
        for a in enumerate_asms(n, override):
            if not a.is_horizontally_symmetric():
                continue
            s = a.stats
            if (s.mu - m) % 2:
                raise OddExponent(f"mu - m = {s.mu - m} is odd for\n{a.to_text()}")
            key = (0, (s.mu - m) // 2, s.f - 2, 0)
            terms[key] = terms.get(key, 0) + 1
    elif method == "kernel":
        hist = kernel.hsasm_histogram(m)
        for mu, f in zip(*np.nonzero(hist)):
            terms[(0, int(mu), int(f) + 1 - 2, 0)] = int(hist[mu, f])
    else:
        raise ValueError(f"unknown method {method!r}")
    return MPoly(terms)
