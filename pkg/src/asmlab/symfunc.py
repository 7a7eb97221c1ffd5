"""Elementary/complete symmetric functions and the rectangular-product factorization."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .icemodel import DegenerateParams, SpectralParams
from .ring import bareiss_det, binom, sign


def elem_sym(u: Sequence, k: int) -> Fraction:
    if k < 0 or k > len(u):
        return Fraction(0)
    e = [Fraction(1)] + [Fraction(0)] * k
    for x in u:
        for i in range(k, 0, -1):
            e[i] += x * e[i - 1]
    return e[k]


def hom_sym(u: Sequence, k: int) -> Fraction:
    if k < 0:
        return Fraction(0)
    h = [Fraction(1)] + [Fraction(0)] * k
    for x in u:
        # multiply the series by 1/(1 - x t)
        for i in range(1, k + 1):
            h[i] += x * h[i - 1]
    return h[k]


def specialized_elem(n: int, k: int, phi, psi, q) -> Fraction:
    """e_k of {phi*q, q, ..., q, psi*q} (n entries) in closed form."""
    if n < 2:
        raise ValueError("needs n >= 2")
    phi, psi, q = Fraction(phi), Fraction(psi), Fraction(q)
    return (
        binom(n - 2, k) + (phi + psi) * binom(n - 2, k - 1) + phi * psi * binom(n - 2, k - 2)
    ) * q ** k if k >= 0 else Fraction(0)


def _vandermonde(xs: Sequence[Fraction]) -> Fraction:
    d = Fraction(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            d *= xs[i] - xs[j]
    return d


def fq_direct(v: Sequence, u: Sequence, q) -> Fraction:
    """F_q(V, U) from the double-kernel determinant and its normalizing products."""
    n = len(v)
    if len(u) != n:
        raise ValueError("V and U must have equal size")
    v = [Fraction(x) for x in v]
    u = [Fraction(x) for x in u]
    q = Fraction(q)
    full = Fraction(1)
    kernel = []
    for vi in v:
        row = []
        for uj in u:
            d = (vi - uj) * (q * vi - uj)
            if not d:
                raise DegenerateParams("kernel denominator vanishes")
            full *= d
            row.append(1 / d)
        kernel.append(row)
    vd = _vandermonde(v) * _vandermonde(u)
    if not vd:
        raise DegenerateParams("Vandermonde vanishes")
    return (-1) ** (n * (n - 1) // 2) * bareiss_det(kernel) * full / vd


def _geom_diff(a: int, b: int, q: Fraction) -> Fraction:
    # (q^a - q^b) / (q - 1) as a finite geometric sum
    if a == b:
        return Fraction(0)
    if a < b:
        return -_geom_diff(b, a, q)
    return q ** b * sum((q ** t for t in range(a - b)), Fraction(0))


def lascoux_factors(v: Sequence, u: Sequence, q) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """The n x (2n-1) matrix of h's and the (2n-1) x n matrix of e's."""
    n = len(v)
    q = Fraction(q)
    h = [[hom_sym(v, j - i) for j in range(1, 2 * n)] for i in range(1, n + 1)]
    e = [
        [
            _geom_diff(j - k + 1, k - 1, q) * sign(n - j + k - 1) * elem_sym(u, n - j + k - 1)
            for k in range(1, n + 1)
        ]
        for j in range(1, 2 * n)
    ]
    return h, e


def fq_factored(v: Sequence, u: Sequence, q) -> Fraction:
    n = len(v)
    if len(u) != n:
        raise ValueError("V and U must have equal size")
    if Fraction(q) == 1:
        raise DegenerateParams("q = 1")
    h, e = lascoux_factors(v, u, q)
    prod = [[sum((h[i][t] * e[t][k] for t in range(2 * n - 1)), Fraction(0)) for k in range(n)] for i in range(n)]
    return bareiss_det(prod)


def zn_via_lascoux(n: int, params: SpectralParams) -> Fraction:
    """Partition function through F_{q^2}(V, U), V = {q^{2y_j}}, U = {q^{2x_i}}."""
    if n != params.n:
        raise ValueError("size mismatch")
    if not params.is_generic():
        raise DegenerateParams("parameters are not generic (repeated u or v, or u_i in {v_j, q^2 v_j})")
    q2 = params.q * params.q
    denom = (q2 - 1) ** (n * n - n)
    for ai, bi in zip(params.a, params.b):
        denom *= (ai * bi) ** n / (bi * bi)
    return (-1) ** (n * n) * fq_factored(params.v, params.u, q2) / denom
