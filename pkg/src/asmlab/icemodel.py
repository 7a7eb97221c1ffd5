"""Square ice with domain-wall boundary: the ASM bijection, vertex weights and Z_n.

Spectral parameters are passed through their exponentials: ``a[i]`` stands
for q^{x_i} and ``b[j]`` for q^{y_j}, so every bracket becomes a rational
function of rationals and half-integer powers never appear.

Edge conventions: a horizontal edge points right (R) or left (L), a vertical
edge up (U) or down (D). States 1-6 are

    1: horizontal edges in, vertical out   (entry  1)
    2: horizontal edges out, vertical in   (entry -1)
    3: R R / U U    4: L L / D D    5: L L / U U    6: R R / D D
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .asm import Asm, enumerate_asms, validate_asm
from .ring import bareiss_det


class DegenerateParams(ZeroDivisionError):
    """Spectral parameters hit a vanishing denominator."""


class InconsistentArrows(ValueError):
    """Vertex states disagree on a shared edge or break the boundary."""


# (left edge, right edge, top edge, bottom edge) for each vertex state
_EDGES = {
    1: ("R", "L", "U", "D"),
    2: ("L", "R", "D", "U"),
    3: ("R", "R", "U", "U"),
    4: ("L", "L", "D", "D"),
    5: ("L", "L", "U", "U"),
    6: ("R", "R", "D", "D"),
}
_ENTRY = {1: 1, 2: -1, 3: 0, 4: 0, 5: 0, 6: 0}


@dataclass(frozen=True)
class IceState:
    states: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.states)

    def counts(self) -> "StateCounts":
        c = Counter(s for row in self.states for s in row)
        return StateCounts(*(c.get(k, 0) for k in range(1, 7)))

    def horizontal_edge(self, i: int, j: int) -> str:
        """Direction of the edge left of vertex (i, j); j == n is the right boundary."""
        if j == self.n:
            return _EDGES[self.states[i][j - 1]][1]
        return _EDGES[self.states[i][j]][0]

    def vertical_edge(self, i: int, j: int) -> str:
        """Direction of the edge above vertex (i, j); i == n is the bottom boundary."""
        if i == self.n:
            return _EDGES[self.states[i - 1][j]][3]
        return _EDGES[self.states[i][j]][2]

    def to_text(self) -> str:
        return "\n".join("".join(str(s) for s in row) for row in self.states)

    @classmethod
    def from_text(cls, text: str) -> "IceState":
        rows = [line.strip() for line in text.strip().splitlines() if line.strip()]
        return cls(tuple(tuple(int(ch) for ch in row) for row in rows))


@dataclass(frozen=True)
class StateCounts:
    n1: int
    n2: int
    n3: int
    n4: int
    n5: int
    n6: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.n1, self.n2, self.n3, self.n4, self.n5, self.n6)

    def to_json(self) -> str:
        return json.dumps({f"n{i}": v for i, v in enumerate(self.as_tuple(), 1)})


@dataclass(frozen=True)
class SpectralParams:
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        object.__setattr__(self, "q", Fraction(self.q))
        if len(self.a) != len(self.b):
            raise ValueError("a and b must have the same length")
        if not self.q or self.q * self.q == 1 or any(x == 0 for x in self.a + self.b):
            raise DegenerateParams("a_i, b_j must be nonzero and q not in {0, 1, -1}")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def u(self) -> tuple[Fraction, ...]:
        return tuple(x * x for x in self.a)

    @property
    def v(self) -> tuple[Fraction, ...]:
        return tuple(x * x for x in self.b)

    def is_generic(self) -> bool:
        u, v, q2 = self.u, self.v, self.q * self.q
        if len(set(u)) < len(u) or len(set(v)) < len(v):
            return False
        return all(ui != vj and ui != q2 * vj for ui in u for vj in v)


def asm_to_ice(a: Asm) -> IceState:
    n = a.n
    col = [0] * n
    grid = []
    for row in a.entries:
        r = 0
        states = []
        for j, x in enumerate(row):
            if x == 1:
                s = 1
            elif x == -1:
                s = 2
            else:
                # zero: row partial sum decides left/right, column partial sum up/down
                s = {(0, 0): 3, (1, 1): 4, (1, 0): 5, (0, 1): 6}[(r, col[j])]
            states.append(s)
            r += x
            col[j] += x
        grid.append(tuple(states))
    return IceState(tuple(grid))


def ice_to_asm(s: IceState) -> Asm:
    n = s.n
    if any(len(row) != n or any(x not in _EDGES for x in row) for row in s.states):
        raise InconsistentArrows("states must be an n x n grid over 1..6")
    for i in range(n):
        for j in range(n - 1):
            if _EDGES[s.states[i][j]][1] != _EDGES[s.states[i][j + 1]][0]:
                raise InconsistentArrows(f"horizontal edge between ({i + 1},{j + 1}) and ({i + 1},{j + 2})")
        if _EDGES[s.states[i][0]][0] != "R" or _EDGES[s.states[i][n - 1]][1] != "L":
            raise InconsistentArrows(f"row {i + 1} violates the inward side boundary")
    for j in range(n):
        for i in range(n - 1):
            if _EDGES[s.states[i][j]][3] != _EDGES[s.states[i + 1][j]][2]:
                raise InconsistentArrows(f"vertical edge between ({i + 1},{j + 1}) and ({i + 2},{j + 1})")
        if _EDGES[s.states[0][j]][2] != "U" or _EDGES[s.states[n - 1][j]][3] != "D":
            raise InconsistentArrows(f"column {j + 1} violates the outward top/bottom boundary")
    return validate_asm([[_ENTRY[x] for x in row] for row in s.states])


def _bracket(a: Fraction, b: Fraction, q: Fraction, shift: int) -> Fraction:
    # [xi - shift] with q^xi = a / b
    num = a * a - q ** (2 * shift) * b * b
    return num / (q ** shift * a * b * (q - 1 / q))


def vertex_weight(state: int, a: Fraction, b: Fraction, q: Fraction) -> Fraction:
    if state == 1:
        return -b / a
    if state == 2:
        return -a / b
    if state in (3, 4):
        return _bracket(a, b, q, 1)
    if state in (5, 6):
        return _bracket(a, b, q, 0)
    raise ValueError(f"no vertex state {state}")


def config_weight(s: IceState, params: SpectralParams) -> Fraction:
    if s.n != params.n:
        raise ValueError("configuration and parameters differ in size")
    w = Fraction(1)
    for i, row in enumerate(s.states):
        for j, state in enumerate(row):
            w *= vertex_weight(state, params.a[i], params.b[j], params.q)
    return w


def brute_zn(n: int, params: SpectralParams) -> Fraction:
    """Sum of configuration weights over all square-ice states (n <= 6)."""
    if n != params.n:
        raise ValueError("size mismatch")
    if n > 6:
        raise ValueError("brute-force partition function is limited to n <= 6")
    return sum((config_weight(asm_to_ice(a), params) for a in enumerate_asms(n)), Fraction(0))


def ik_zn(n: int, params: SpectralParams) -> Fraction:
    """Izergin-Korepin determinant in bracket form."""
    if n != params.n:
        raise ValueError("size mismatch")
    a, b, q = params.a, params.b, params.q
    kernel = [[None] * n for _ in range(n)]
    prod_all = Fraction(1)
    for i in range(n):
        for j in range(n):
            d = _bracket(a[i], b[j], q, 0) * _bracket(a[i], b[j], q, 1)
            if not d:
                raise DegenerateParams(f"[x_{i + 1} - y_{j + 1}][x_{i + 1} - y_{j + 1} - 1] = 0")
            prod_all *= d
            kernel[i][j] = 1 / d
    vander = Fraction(1)
    for i in range(n):
        for j in range(i):
            vander *= _bracket(a[i], a[j], q, 0)  # [x_i - x_j], j < i
            vander *= _bracket(b[j], b[i], q, 0)  # [y_j - y_i], j < i
    if not vander:
        raise DegenerateParams("repeated spectral parameter")
    pre = Fraction((-1) ** n)
    for i in range(n):
        pre *= b[i] / a[i]
    return pre * prod_all / vander * bareiss_det(kernel)


def ik_zn_uv(n: int, params: SpectralParams) -> Fraction:
    """The same partition function written in u_i = q^{2x_i}, v_j = q^{2y_j}."""
    if n != params.n:
        raise ValueError("size mismatch")
    u, v, q2 = params.u, params.v, params.q * params.q
    kernel = [[None] * n for _ in range(n)]
    prod_all = Fraction(1)
    for i in range(n):
        for j in range(n):
            d = (u[i] - v[j]) * (u[i] - q2 * v[j])
            if not d:
                raise DegenerateParams(f"(u_{i + 1} - v_{j + 1})(u_{i + 1} - q^2 v_{j + 1}) = 0")
            prod_all *= d
            kernel[i][j] = 1 / d
    denom = (q2 - 1) ** (n * n - n)
    for i in range(n):
        # (v_i u_i)^{n/2} v_i^{-1} with the square roots a_i, b_i
        denom *= (params.a[i] * params.b[i]) ** n / v[i]
    for i in range(n):
        for j in range(i + 1, n):
            denom *= (u[i] - u[j]) * (v[i] - v[j])
    if not denom:
        raise DegenerateParams("repeated spectral parameter")
    sign = (-1) ** (n * (n + 1) // 2)
    return sign * prod_all * bareiss_det(kernel) / denom


def random_params(n: int, rng, bound: int = 50, max_tries: int = 1000) -> SpectralParams:
    """Seeded generic parameters with numerators/denominators in 1..bound, rejecting degenerate draws."""
    for _ in range(max_tries):
        def draw():
            x = Fraction(rng.randint(1, bound), rng.randint(1, bound))
            return -x if rng.random() < 0.5 else x

        try:
            params = SpectralParams(tuple(draw() for _ in range(n)), tuple(draw() for _ in range(n)), draw())
        except DegenerateParams:
            continue
        if params.is_generic():
            return params
    raise RuntimeError("could not draw generic parameters")


FIG2_STATES = IceState(
    (
        (3, 1, 5, 5, 5),
        (1, 2, 3, 1, 5),
        (6, 1, 5, 2, 1),
        (6, 6, 3, 1, 4),
        (6, 6, 1, 4, 4),
    )
)


def homogeneous(n: int, a, b, q) -> SpectralParams:
    return SpectralParams((a,) * n, (b,) * n, q)


def weight_vector(counts: StateCounts | Sequence[int], a, b, q) -> Fraction:
    """Weight of a configuration with homogeneous parameters from its state counts."""
    c = counts.as_tuple() if isinstance(counts, StateCounts) else tuple(counts)
    a, b, q = Fraction(a), Fraction(b), Fraction(q)
    w = Fraction(1)
    for state, k in enumerate(c, 1):
        w *= vertex_weight(state, a, b, q) ** k
    return w
