from __future__ import annotations

import random
from fractions import Fraction
from math import comb

import pytest

from asmlab.icemodel import DegenerateParams, homogeneous, ik_zn, random_params
from asmlab.symfunc import elem_sym, fq_direct, fq_factored, hom_sym, specialized_elem, zn_via_lascoux


def rand_q(rng):
    return Fraction(rng.randint(1, 30), rng.randint(1, 30)) * rng.choice((1, -1))


def test_elementary_and_complete():
    assert elem_sym([1, 2, 3], 2) == 11
    assert elem_sym([1, 2, 3], 0) == 1
    assert elem_sym([1, 2, 3], 4) == 0
    assert hom_sym([1, 1], 2) == 3
    for n in range(1, 6):
        for k in range(6):
            assert hom_sym([1] * n, k) == comb(n + k - 1, k)


@pytest.mark.parametrize("n", range(2, 7))
def test_specialized_elem(n):
    rng = random.Random(n)
    for _ in range(5):
        phi, psi, q = rand_q(rng), rand_q(rng), rand_q(rng)
        values = [phi * q] + [q] * (n - 2) + [psi * q]
        for k in range(n + 2):
            assert specialized_elem(n, k, phi, psi, q) == elem_sym(values, k)


def _distinct_sample(rng, n):
    while True:
        v = [rand_q(rng) for _ in range(n)]
        u = [rand_q(rng) for _ in range(n)]
        q = rand_q(rng)
        if q in (0, 1) or len(set(v)) < n or len(set(u)) < n:
            continue
        if any(vi == uj or q * vi == uj for vi in v for uj in u):
            continue
        return v, u, q


@pytest.mark.parametrize("n", range(1, 5))
def test_lascoux_factorization(n):
    rng = random.Random(500 + n)
    for _ in range(20):
        v, u, q = _distinct_sample(rng, n)
        assert fq_direct(v, u, q) == fq_factored(v, u, q)


def test_lascoux_n1_and_fixed_point():
    assert fq_direct([3], [5], 2) == fq_factored([3], [5], 2) == 1
    assert fq_direct([1, 3], [5, 7], 2) == fq_factored([1, 3], [5, 7], 2)


def test_fq_symmetric():
    rng = random.Random(9)
    v, u, q = _distinct_sample(rng, 3)
    base = fq_direct(v, u, q)
    assert fq_direct(v[::-1], u, q) == base
    assert fq_direct(v, [u[1], u[2], u[0]], q) == base


def test_fq_factored_rejects_q_one():
    with pytest.raises(DegenerateParams):
        fq_factored([1, 2], [3, 4], 1)


@pytest.mark.parametrize("n", range(2, 5))
def test_zn_via_lascoux(n):
    rng = random.Random(77 + n)
    for _ in range(10):
        params = random_params(n, rng)
        assert zn_via_lascoux(n, params) == ik_zn(n, params)


def test_zn_via_lascoux_n1_and_degenerate():
    params = random_params(1, random.Random(3))
    assert zn_via_lascoux(1, params) == -params.b[0] / params.a[0]
    with pytest.raises(DegenerateParams):
        zn_via_lascoux(2, homogeneous(2, 3, 2, 5))
