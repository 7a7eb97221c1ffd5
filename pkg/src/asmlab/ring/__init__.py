"""Exact arithmetic kernel: rationals, Laurent polynomials, cyclotomic quadratics, determinants."""

from fractions import Fraction as Rational

from .combinat import asm_count, binom, gbinom, one_enumeration_scaled, refined_count, rising, sign, three_enumeration
from .matrix import SqMatrix, bareiss_det, cofactor_det
from .mpoly import ONE, P, Q, QINV, RHO, TAU, Z, ZERO, MPoly, NotDivisible
from .qint import qint, qint_value
from .quadext import HalfPowerAtRoot, QuadExt, eval_root, gaussian

__all__ = [
    "Rational", "MPoly", "NotDivisible", "QuadExt", "HalfPowerAtRoot", "SqMatrix",
    "binom", "gbinom", "sign", "rising", "asm_count", "refined_count", "three_enumeration",
    "one_enumeration_scaled", "qint", "qint_value", "bareiss_det", "cofactor_det",
    "eval_root", "gaussian", "P", "Q", "QINV", "Z", "RHO", "TAU", "ONE", "ZERO",
]
