"""Laurent polynomials in p, z, rho, tau with exact rational coefficients.

The base Laurent variable is ``p`` with ``q = p**2``; half-integer powers of
``q`` are therefore odd powers of ``p``. The other three variables carry
nonnegative exponents only.

Monomials are packed into a single Python int,
``e_p * 2**48 + e_z * 2**32 + e_rho * 2**16 + e_tau``, so monomial
multiplication is integer addition and integer order is lexicographic order
on ``(e_p, e_z, e_rho, e_tau)``. Negative ``e_p`` works because the low
fields are nonnegative and ``>>`` floors.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Mapping

VARIABLES = ("p", "z", "rho", "tau")

_SHIFT = 16
_MASK = (1 << _SHIFT) - 1
_P_UNIT = 1 << (3 * _SHIFT)


class NotDivisible(ArithmeticError):
    """Raised when an exact quotient does not exist in the Laurent ring."""


def pack(ep: int = 0, ez: int = 0, er: int = 0, et: int = 0) -> int:
    if not (0 <= ez <= _MASK and 0 <= er <= _MASK and 0 <= et <= _MASK):
        raise ValueError(f"exponents of z, rho, tau must lie in 0..{_MASK}")
    return (((ep << _SHIFT) + ez << _SHIFT) + er << _SHIFT) + et


def unpack(key: int) -> tuple[int, int, int, int]:
    return (
        key >> (3 * _SHIFT),
        (key >> (2 * _SHIFT)) & _MASK,
        (key >> _SHIFT) & _MASK,
        key & _MASK,
    )


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _sort_key(exps: tuple[int, int, int, int]):
    ep, ez, er, et = exps
    return (abs(ep) + ez + er + et, abs(ep), ep < 0, ez, er, et)


class MPoly:
    """Immutable Laurent polynomial; see the module docstring for encoding."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int, int, int], object] | None = None):
        t: dict = {}
        for exps, c in (terms or {}).items():
            if isinstance(c, float):
                raise TypeError("MPoly coefficients must be exact")
            k = pack(*exps)
            t[k] = t.get(k, 0) + c
        self._t = {k: _norm(c) for k, c in t.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "MPoly":
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def const(cls, c) -> "MPoly":
        c = _norm(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, c=1, p: int = 0, z: int = 0, rho: int = 0, tau: int = 0) -> "MPoly":
        c = _norm(c)
        return cls._raw({pack(p, z, rho, tau): c} if c else {})

    @classmethod
    def qpow(cls, k: int, c=1) -> "MPoly":
        """``c * q**k``."""
        return cls.monomial(c, p=2 * k)

    # inspection

    def terms(self) -> Iterator[tuple[tuple[int, int, int, int], object]]:
        for k, c in self._t.items():
            yield unpack(k), c

    def coeff(self, p: int = 0, z: int = 0, rho: int = 0, tau: int = 0):
        return self._t.get(pack(p, z, rho, tau), 0)

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._t.get(0, 0)

    def p_range(self) -> tuple[int, int]:
        if not self._t:
            raise ValueError("zero polynomial has no p-range")
        eps = [k >> (3 * _SHIFT) for k in self._t]
        return min(eps), max(eps)

    def degree(self, var: str) -> int:
        i = VARIABLES.index(var)
        return max((unpack(k)[i] for k in self._t), default=0)

    def has_odd_p(self) -> bool:
        return any((k >> (3 * _SHIFT)) & 1 for k in self._t)

    # arithmetic

    @staticmethod
    def _coerce(other) -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Rational)):
            return MPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o._t) > len(self._t):
            a, b = o._t, self._t
        else:
            a, b = self._t, o._t
        t = dict(a)
        for k, c in b.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return MPoly._raw({k: _norm(c) for k, c in t.items()})

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({k: -c for k, c in self._t.items()})

    def __pos__(self) -> "MPoly":
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            return _mul(self._t, other._t)
        if isinstance(other, (int, Rational)):
            if not other:
                return MPoly._raw({})
            return MPoly._raw({k: _norm(c * other) for k, c in self._t.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational scalar or an exact divisor."""
        if isinstance(other, MPoly):
            return self.exact_div(other)
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("division of MPoly by zero")
            inv = Fraction(1) / Fraction(other)
            return MPoly._raw({k: _norm(c * inv) for k, c in self._t.items()})
        return NotImplemented

    def __pow__(self, e: int) -> "MPoly":
        if e < 0:
            if len(self._t) != 1:
                raise ValueError("negative powers only exist for monomials")
            (k, c), = self._t.items()
            ep, ez, er, et = unpack(k)
            if ez or er or et:
                raise ValueError("only p may carry negative exponents")
            return MPoly._raw({pack(ep * e): _norm(Fraction(c) ** e)})
        result = MPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift_p(self, k: int) -> "MPoly":
        """Multiply by ``p**k``."""
        d = k * _P_UNIT
        return MPoly._raw({key + d: c for key, c in self._t.items()})

    def exact_div(self, other: "MPoly | int") -> "MPoly":
        """Return ``h`` with ``self == other * h``, or raise :class:`NotDivisible`."""
        g = self._coerce(other)
        if g is None or not g._t:
            raise ZeroDivisionError("exact division by zero")
        if not self._t:
            return MPoly._raw({})
        if len(g._t) == 1:
            (gk, gc), = g._t.items()
            inv = Fraction(1) / Fraction(gc)
            t = {}
            for k, c in self._t.items():
                if not _divisible_low(k, gk):
                    raise NotDivisible(f"{self} is not divisible by {g}")
                t[k - gk] = _norm(c * inv)
            return MPoly._raw(t)
        return _divide(self, g)

    # substitution

    def subs_p_inverse(self) -> "MPoly":
        """Substitute ``p -> 1/p`` (equivalently ``q -> 1/q``)."""
        t = {}
        for k, c in self._t.items():
            ep, ez, er, et = unpack(k)
            t[pack(-ep, ez, er, et)] = c
        return MPoly._raw(t)

    def evaluate(self, p=None, z=None, rho=None, tau=None):
        """Substitute any subset of the variables by exact values.

        Values may be rationals, :class:`MPoly` or any ring element that
        supports ``+`` and ``*`` with rationals (for example ``QuadExt``).
        Returns a bare value when every variable present is substituted.
        """
        vals = (p, z, rho, tau)
        if all(v is None for v in vals):
            return self
        pow_cache: list[dict] = [{}, {}, {}, {}]

        def power(i, e):
            cache = pow_cache[i]
            if e not in cache:
                v = vals[i]
                if e < 0:
                    if isinstance(v, MPoly):
                        base = v ** -1
                    elif isinstance(v, Rational):
                        base = Fraction(1) / v
                    else:
                        base = 1 / v
                    cache[e] = base ** (-e)
                else:
                    cache[e] = v ** e
            return cache[e]

        total = None
        for k, c in self._t.items():
            exps = unpack(k)
            keep = [0, 0, 0, 0]
            value = c
            for i, e in enumerate(exps):
                if vals[i] is None:
                    keep[i] = e
                elif e:
                    value = value * power(i, e)
            if any(keep):
                mono = MPoly._raw({pack(*keep): 1})
                rest_term = mono * value
                total = rest_term if total is None else total + rest_term
            else:
                total = value if total is None else total + value
        if total is None:
            return 0
        if isinstance(total, MPoly) and total.is_constant():
            return total.constant_value()
        return _norm(total) if isinstance(total, Fraction) else total

    def eval_q(self, q, **others):
        """Evaluate at ``q`` (needs only even p-exponents) and optional z/rho/tau."""
        if self.has_odd_p():
            raise ValueError("polynomial has half-integer q-powers")
        t = {}
        for k, c in self._t.items():
            ep, ez, er, et = unpack(k)
            nk = pack(ep // 2, ez, er, et)
            t[nk] = c
        return MPoly._raw(t).evaluate(p=q, **others)

    # comparison

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def is_p_palindromic(self) -> bool:
        """True when invariant under ``p -> 1/p``."""
        return self == self.subs_p_inverse()

    def first_difference(self, other: "MPoly") -> str | None:
        """Canonically-first monomial where two polynomials disagree."""
        diff = self - other
        if not diff._t:
            return None
        exps, c = min(diff.terms(), key=lambda item: _sort_key(item[0]))
        return (
            f"{_monomial_str(exps) or '1'}: left={self.coeff(*exps)} right={other.coeff(*exps)}"
        )

    # text format

    def sorted_terms(self) -> list[tuple[tuple[int, int, int, int], object]]:
        return sorted(self.terms(), key=lambda item: _sort_key(item[0]))

    def __str__(self) -> str:
        if not self._t:
            return "0"
        out = []
        for i, (exps, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            mag = -c if neg else c
            mono = _monomial_str(exps)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"MPoly('{self}')"

    @classmethod
    def parse(cls, text: str) -> "MPoly":
        """Parse the canonical text format (and any reordering of it)."""
        s = text.replace(" ", "").replace("^-", "^~")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        terms: dict = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            coeff = Fraction(1)
            exps = [0, 0, 0, 0]
            for factor in body.split("*"):
                m = re.fullmatch(r"(p|z|rho|tau)(?:\^(~?\d+))?", factor)
                if m:
                    i = VARIABLES.index(m.group(1))
                    e = m.group(2)
                    exps[i] += int(e.replace("~", "-")) if e else 1
                else:
                    coeff *= Fraction(factor)
            if sign == "-":
                coeff = -coeff
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coeff
        return cls(terms)


def _monomial_str(exps: tuple[int, int, int, int]) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _mul(a: dict, b: dict) -> MPoly:
    if not a or not b:
        return MPoly._raw({})
    if len(a) < len(b):
        a, b = b, a
    t: dict = {}
    get = t.get
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            t[k] = get(k, 0) + ca * cb
    return MPoly._raw({k: _norm(c) for k, c in t.items() if c})


def _divisible_low(k: int, gk: int) -> bool:
    for s in (0, _SHIFT, 2 * _SHIFT):
        if ((k >> s) & _MASK) < ((gk >> s) & _MASK):
            return False
    return True


def _divisible(k: int, gk: int) -> bool:
    return (k >> (3 * _SHIFT)) >= (gk >> (3 * _SHIFT)) and _divisible_low(k, gk)


def _divide(f: MPoly, g: MPoly) -> MPoly:
    # Shift both to nonnegative p-degree; the lowest p-components multiply
    # without cancellation, so an exact Laurent quotient becomes a polynomial
    # quotient and lex-leading-term division terminates.
    fmin = f.p_range()[0]
    gmin = g.p_range()[0]
    fs = f.shift_p(-fmin)._t
    gs = g.shift_p(-gmin)._t
    glead = max(gs)
    gc = gs[glead]
    others = [(k - glead, c) for k, c in gs.items() if k != glead]
    r = dict(fs)
    heap = [-k for k in r]
    heapq.heapify(heap)
    quot: dict = {}
    while heap:
        k = -heapq.heappop(heap)
        c = r.pop(k, 0)
        if not c:
            continue
        while heap and -heap[0] == k:
            heapq.heappop(heap)
        if not _divisible(k, glead):
            raise NotDivisible(f"{f} is not divisible by {g}")
        qk = k - glead
        qc = _norm(Fraction(c) / gc) if type(c) is not int or type(gc) is not int or c % gc else c // gc
        quot[qk] = qc
        for dk, dc in others:
            nk = k + dk
            old = r.get(nk)
            v = (old or 0) - qc * dc
            if v:
                r[nk] = v
                if old is None:
                    heapq.heappush(heap, -nk)
            elif old is not None:
                del r[nk]
    return MPoly._raw({k: _norm(c) for k, c in quot.items()}).shift_p(fmin - gmin)


P = MPoly.monomial(p=1)
Q = MPoly.monomial(p=2)
QINV = MPoly.monomial(p=-2)
Z = MPoly.monomial(z=1)
RHO = MPoly.monomial(rho=1)
TAU = MPoly.monomial(tau=1)
ONE = MPoly.const(1)
ZERO = MPoly.const(0)
