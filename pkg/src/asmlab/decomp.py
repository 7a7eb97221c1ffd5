"""Kuperberg's factorization of A_n(z) and its rho-refined conjecture."""

from __future__ import annotations

from dataclasses import dataclass

from .asm import ENUMERATION_CEILING, gen_fun, hsasm_gen_fun
from .report import Report, timed
from .ring import RHO, MPoly, NotDivisible

DEFAULT_MAX_N = 7
DEEP_MAX_N = 9


@dataclass(frozen=True)
class BPoly:
    index: int
    poly: MPoly

    def __post_init__(self):
        if self.index < 2:
            raise ValueError("B polynomials are indexed from 2")

    def at_one(self) -> int:
        return self.poly.evaluate(z=1, rho=1)

    def coefficient_signs(self) -> str:
        """"nonnegative" when every coefficient is >= 0, otherwise "mixed"."""
        return "nonnegative" if all(c >= 0 for _, c in self.poly.terms()) else "mixed"


def z_only(poly: MPoly) -> MPoly:
    """A polynomial at rho = tau = 1."""
    return MPoly._coerce(poly.evaluate(rho=1, tau=1))


def a_z(n: int, override: bool = False) -> MPoly:
    return z_only(gen_fun(n, override))


def a_z_rho(n: int, override: bool = False) -> MPoly:
    """A_n(z, rho) = A_n(z, rho, 1)."""
    return MPoly._coerce(gen_fun(n, override).evaluate(tau=1))


def b_odd(m: int, override: bool = False) -> MPoly:
    """B_{2m+1}(z, rho) from horizontally symmetric ASMs of order 2m+1."""
    return hsasm_gen_fun(m, "kernel", override)


def kuperberg_b(n_max: int, override: bool = False) -> list[BPoly]:
    """B_2(z) .. B_{n_max+1}(z) by exact division of A_n(z) for n <= n_max."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if n_max > ENUMERATION_CEILING and not override:
        raise ValueError(f"n_max={n_max} exceeds the enumeration ceiling {ENUMERATION_CEILING}")
    out: dict[int, MPoly] = {}
    for n in range(2, n_max + 1):
        if n % 2 == 0:
            m = n // 2
            odd = z_only(b_odd(m, override))
            out[2 * m + 1] = odd
            out[2 * m] = a_z(n, override).exact_div(odd * 2)
        else:
            m = (n - 1) // 2
            odd = z_only(b_odd(m, override)) if m >= 1 else MPoly.const(1)
            out.setdefault(2 * m + 1, odd)
            out[2 * m + 2] = a_z(n, override).exact_div(odd)
    return [BPoly(k, out[k]) for k in sorted(out) if k >= 2]


def _check_range(n: int, deep: bool) -> None:
    limit = DEEP_MAX_N if deep else DEFAULT_MAX_N
    if not 2 <= n <= limit:
        raise ValueError(f"conjecture check needs 2 <= n <= {limit}{'' if deep else ' (use deep for 8, 9)'}")


@timed
def conjecture_check(n: int, deep: bool = False) -> Report:
    """Even n = 2m: A(z,rho) = rho(rho+1) B_2m(z,1) B_2m+1(z,rho).
    Odd n = 2m+1: B_2m+2(z,rho) = A(z,rho) / (rho B_2m+1(z,1)) must be an integer polynomial."""
    _check_range(n, deep)
    a = a_z_rho(n, override=deep)
    if n % 2 == 0:
        m = n // 2
        odd = b_odd(m, override=deep)
        odd_z = z_only(odd)
        try:
            even_z = a_z(n, override=deep).exact_div(odd_z * 2)
        except NotDivisible as exc:
            return Report("conjecture", n, False, f"A_{n}(z) not divisible by 2 B_{n + 1}(z): {exc}")
        rhs = RHO * (RHO + 1) * even_z * odd
        details = {"B_index": n + 1, "B_polynomial": str(odd), "B_even_at_rho_1": str(even_z)}
        if a != rhs:
            return Report("conjecture", n, False, a.first_difference(rhs), details=details)
        return Report("conjecture", n, True, details=details)
    m = (n - 1) // 2
    odd_z = z_only(b_odd(m, override=deep)) if m >= 1 else MPoly.const(1)
    try:
        quotient = a.exact_div(RHO * odd_z)
    except NotDivisible as exc:
        return Report("conjecture", n, False, f"A_{n}(z,rho) not divisible by rho B_{n}(z,1): {exc}")
    bp = BPoly(n + 1, quotient)
    details = {"B_index": n + 1, "B_polynomial": str(quotient), "signs": bp.coefficient_signs()}
    bad = [c for _, c in quotient.terms() if not isinstance(c, int)]
    if bad or any(e[0] or e[3] for e, _ in quotient.terms()):
        return Report("conjecture", n, False, f"quotient is not an integer polynomial in z, rho: {quotient}", details=details)
    if z_only(quotient) != a_z(n, override=deep).exact_div(odd_z):
        return Report("conjecture", n, False, "B_{n+1}(z,1) disagrees with the rho = 1 factorization", details=details)
    return Report("conjecture", n, True, details=details)
