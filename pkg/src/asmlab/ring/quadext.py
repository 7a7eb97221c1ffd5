"""Quadratic cyclotomic rings Q(zeta) for zeta a primitive 3rd, 4th or 6th root of unity."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .mpoly import MPoly

# zeta**2 = s + t*zeta
_MODULI = {
    3: (-1, -1),
    4: (-1, 0),
    6: (-1, 1),
}

ROOTS = {"omegaMinus": 3, "i": 4, "omegaPlus": 6}


class HalfPowerAtRoot(ValueError):
    """A half-integer power of q cannot be evaluated at a bare root of unity."""


def _norm(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class QuadExt:
    """Element ``a + b*zeta`` with ``zeta`` of the given multiplicative order."""

    __slots__ = ("a", "b", "order")

    def __init__(self, a=0, b=0, order: int = 4):
        if order not in _MODULI:
            raise ValueError(f"unsupported root order {order}")
        self.a = _norm(a)
        self.b = _norm(b)
        self.order = order

    @classmethod
    def zeta(cls, order: int) -> "QuadExt":
        return cls(0, 1, order)

    def _lift(self, other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.order != self.order:
                raise TypeError(
                    f"cannot combine order-{self.order} and order-{other.order} elements"
                )
            return other
        if isinstance(other, (int, Rational)):
            return QuadExt(other, 0, self.order)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.order)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.order)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.order)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        s, t = _MODULI[self.order]
        bd = self.b * o.b
        return QuadExt(self.a * o.a + s * bd, self.a * o.b + self.b * o.a + t * bd, self.order)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        _, t = _MODULI[self.order]
        # conj(zeta) = t - zeta
        return QuadExt(self.a + self.b * t, -self.b, self.order)

    def norm(self) -> Fraction:
        s, t = _MODULI[self.order]
        return _norm(self.a * self.a + t * self.a * self.b - s * self.b * self.b)

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        c = self.conjugate()
        return QuadExt(Fraction(c.a) / n, Fraction(c.b) / n, self.order)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> "QuadExt":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = QuadExt(1, 0, self.order)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.order) == (other.a, other.b, other.order)
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.order))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        sym = "I" if self.order == 4 else f"zeta{self.order}"
        if not self.b:
            return str(self.a)
        bpart = sym if self.b == 1 else f"-{sym}" if self.b == -1 else f"{self.b}*{sym}"
        if not self.a:
            return bpart
        if bpart.startswith("-"):
            return f"{self.a} - {bpart[1:]}"
        return f"{self.a} + {bpart}"

    def __repr__(self) -> str:
        return f"QuadExt({self.a}, {self.b}, order={self.order})"


def gaussian(a=0, b=0) -> QuadExt:
    """``a + b*I``."""
    return QuadExt(a, b, 4)


def eval_root(f: MPoly, root: str, z=None, rho=None, tau=None) -> QuadExt:
    """Substitute q by a root of unity (omegaMinus, i or omegaPlus).

    Remaining variables present in ``f`` must be assigned rationals.
    """
    order = ROOTS[root]
    if f.has_odd_p():
        raise HalfPowerAtRoot(f"{f} has half-integer powers of q")
    zeta = QuadExt.zeta(order)
    powers = [zeta ** k for k in range(order)]
    vals = (None, z, rho, tau)
    total = QuadExt(0, 0, order)
    for (ep, *rest), c in f.terms():
        value = Fraction(c)
        for name, v, e in zip(("z", "rho", "tau"), vals[1:], rest):
            if e:
                if v is None:
                    raise ValueError(f"no value supplied for {name}")
                value *= Fraction(v) ** e
        total = total + powers[(ep // 2) % order] * value
    return total
