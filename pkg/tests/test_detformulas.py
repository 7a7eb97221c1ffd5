from __future__ import annotations

import random

import pytest

from asmlab import detformulas as df
from asmlab.icemodel import DegenerateParams
from asmlab.ring import MPoly, eval_root, gaussian, sign
from asmlab.ring.quadext import QuadExt

I = gaussian(0, 1)

M_B4 = [[1, 1, 1, 1], [0, 2, 3, 4], [2, 4, 9, 14], [4, 12, 24, 44]]
M_C4 = [["0", "2", "0", "-1/2"], ["-8", "4", "2", "-2"], ["-4", "0", "5", "-5/2"], ["0", "-2", "4", "-1/2"]]
M_A4 = [
    [1, 1 - I, -I, 0],
    [0, 2, 3 * (1 - I), -4 * I],
    [-I, 0, 6, 10 * (1 - I)],
    [1 - I, -4 * I, 0, 20],
]


def named(name, n, **params):
    return df.build_named_matrix(df.NamedMatrixSpec(name, n, params))


@pytest.mark.parametrize("k", range(-12, 13))
def test_tables_match_root_evaluation(k):
    assert eval_root(df.signed_qint(k), "omegaMinus") == df.delta_minus(k)
    assert eval_root(df.signed_qint(k), "omegaPlus") == df.delta_plus(k)
    assert eval_root(df.aigner_factor(k), "i") == df.sigma(k)


def test_aigner_factor_is_the_quotient():
    for m in range(-6, 7):
        # (-q)^m = (-1)^m q^m
        assert df.aigner_factor(m) * (1 + df.Q) == 1 - MPoly.qpow(m) * sign(m)


def test_printed_comparison_matrices():
    assert [list(r) for r in named("BehrendT", 4).rows] == M_B4
    assert [[str(x) for x in r] for r in named("MatrixC", 4).rows] == M_C4
    ma = named("AignerAtI", 4)
    assert all(isinstance(x, QuadExt) for r in ma.rows for x in r)
    assert [list(r) for r in ma.rows] == M_A4
    assert ma.det() == named("BehrendT", 4).det() == named("MatrixC", 4).det() == 64


def test_small_named_matrices():
    assert named("L", 1).rows == ((MPoly.const(1),),)
    assert named("K11", 2).rows == ((4, 0), (2, 2))
    assert named("J", 2).n == 3
    assert named("Kcleared", 3).n == 3
    assert named("R", 3, phi=2, psi=5).n == 3


def test_named_matrix_errors():
    with pytest.raises(df.UnknownName):
        named("Nope", 3)
    with pytest.raises(df.UnsupportedSize):
        named("Kcleared", 1)
    with pytest.raises(df.UnsupportedSize):
        named("R", 1)


@pytest.mark.parametrize("name", sorted(df.BUILDERS))
def test_construction_is_deterministic(name):
    n = 3
    assert str(named(name, n)) == str(named(name, n))


def test_k11_determinants():
    # sympy oracle on the printed integer sums
    assert [df.k11_at_minus_one(n).det() for n in range(1, 6)] == [1, 8, 384, 98304, 125829120]
    for n in range(1, 9):
        assert df.corollary12_check(n).passed


def test_det_j_printed_forms():
    assert str(df.normalized_det_j(1)) == "p + p^-1 - p^3 - p^-3"
    printed = MPoly.parse("-2*p^8 + 8*p^6 - 8*p^4 - 8*p^2 + 20 - 8*p^-2 - 8*p^-4 + 8*p^-6 - 2*p^-8")
    assert df.normalized_det_j(2) == printed


def test_det_l3():
    # sympy oracle, q = p^2
    want = MPoly.parse("-p^8 - 2*p^6 + 32*p^4 - 94*p^2 + 130 - 94*p^-2 + 32*p^-4 - 2*p^-6 - p^-8")
    assert df.l_matrix(3).det() == want


@pytest.mark.parametrize("n", range(1, 6))
def test_cor_jrl_and_symmetry(n):
    assert df.cor_jrl_check(n).passed
    assert df.symmetry_check(n).passed


def test_symmetry_n6():
    assert df.symmetry_check(6).passed


@pytest.mark.parametrize("n", range(2, 5))
def test_main_identity(n):
    report = df.theorem1_check(n)
    assert report.passed, report.witness


def test_main_identity_size_guard():
    with pytest.raises(df.UnsupportedSize):
        df.theorem1_check(1)


@pytest.mark.parametrize("n", range(2, 5))
def test_row_operations_and_tau_one(n):
    assert df.m_equals_mprime_symbolic(n).passed
    assert df.corollary51_check(n).passed


def test_tau_one_n1():
    assert df.corollary51_check(1).passed


@pytest.mark.parametrize("n", [2, 3])
def test_proof_chain(n):
    rng = random.Random(314 + n)
    for _ in range(3):
        report = df.proof_chain_check(n, *df.random_chain_point(rng))
        assert report.passed, report.witness


def test_proof_chain_degenerate():
    # q = 4, s = 1/2: s q^(1/2) = 1 so [alpha + 1/2] = 0
    with pytest.raises(DegenerateParams):
        df.proof_chain_check(2, "1/4", 9, 4, "1/2", 3)
    with pytest.raises(DegenerateParams):
        df.proof_chain_check(2, 2, 9, 4, 2, 3)  # s^2 != phi
    with pytest.raises(DegenerateParams):
        df.proof_chain_check(2, 4, 9, 3, 2, 3)  # q not a square


def test_enumeration_examples():
    assert df.t_minus(3).det() == 189
    assert df.t_plus(2).det() == 2
    assert df.l_gauss(1).det() == 1
    assert df.aigner(3).det() == MPoly.parse("p^2 + 8 + p^-2")


@pytest.mark.parametrize("n", range(1, 8))
def test_enum_identities(n):
    for variant in ("one", "two", "three"):
        assert df.enum_identity_check(variant, n).passed
    assert df.enum_identity_check("two", n + 1).passed


@pytest.mark.parametrize("n", range(1, 7))
def test_aigner(n):
    report = df.aigner_check(n)
    assert report.passed, report.witness
    assert report.details["A"] == str(2 ** (n * (n - 1) // 2))
