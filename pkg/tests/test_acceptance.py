"""Acceptance criteria 1-11, one test each, each printing a PASS/FAIL line."""

from __future__ import annotations

import math
import os
import random
import time
from fractions import Fraction

import pytest

from asmlab import detformulas as df
from asmlab.asm import count_closed_form, enumerate_asms
from asmlab.decomp import conjecture_check, kuperberg_b, a_z
from asmlab.icemodel import asm_to_ice, brute_zn, ice_to_asm, ik_zn, ik_zn_uv, random_params
from asmlab.ring import MPoly, bareiss_det, cofactor_det, eval_root, gaussian, one_enumeration_scaled, three_enumeration
from asmlab.symfunc import fq_direct, fq_factored, zn_via_lascoux

RESULTS: list[str] = []
SEED = 20240611


@pytest.fixture(scope="module", autouse=True)
def summary(request):
    yield
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    lines = ["", "acceptance summary:"] + RESULTS
    for line in lines:
        if reporter is not None:
            reporter.write_line(line)
        else:
            print(line)


def verdict(number: int, ok: bool, what: str, elapsed: float, limit: float | None = None) -> None:
    within = limit is None or elapsed < limit
    budget = f" (limit {limit:g} s)" if limit else ""
    line = f"criterion {number:>2}: {'PASS' if ok and within else 'FAIL'}  {what}  [{elapsed:.2f} s{budget}]"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert within, line


def test_01_counting():
    start = time.perf_counter()
    got = [sum(1 for _ in enumerate_asms(n)) for n in range(1, 8)]
    want = [count_closed_form(n) for n in range(1, 8)]
    ok = got == want == [1, 2, 7, 42, 429, 7436, 218348]
    verdict(1, ok, f"|ASM(n)| n=1..7 = {got}", time.perf_counter() - start, 30)


def test_02_main_identity():
    start = time.perf_counter()
    reports = [df.theorem1_check(n) for n in range(2, 6)]
    bad = [r.witness for r in reports if not r.passed]
    verdict(2, not bad, f"cleared main identity n=2..5{' ' + str(bad) if bad else ''}", time.perf_counter() - start, 120)


def test_03_k11_determinant():
    start = time.perf_counter()
    dets = [df.k11_at_minus_one(n).det() for n in range(1, 9)]
    ok = dets == [4 ** (n * (n - 1) // 2) * math.factorial(n) for n in range(1, 9)]
    verdict(3, ok, "det K^{1,1}(-1) = 4^{n(n-1)/2} n!, n=1..8", time.perf_counter() - start, 10)


def test_04_izergin_korepin():
    start = time.perf_counter()
    failures = []
    for n in range(1, 5):
        rng = random.Random(SEED + n)
        for t in range(20):
            params = random_params(n, rng)
            b, ik, uv = brute_zn(n, params), ik_zn(n, params), ik_zn_uv(n, params)
            if not b == ik == uv:
                failures.append((n, t))
    verdict(4, not failures, f"brute = IK = u/v form, n=1..4 x 20 samples, seed {SEED}", time.perf_counter() - start, 60)


def test_05_lascoux():
    start = time.perf_counter()
    failures = []
    for n in range(1, 5):
        rng = random.Random(SEED + 10 + n)
        for t in range(20):
            params = random_params(n, rng)
            if fq_direct(params.v, params.u, params.q) != fq_factored(params.v, params.u, params.q):
                failures.append(("F", n, t))
    for n in (2, 3):
        rng = random.Random(SEED + 20 + n)
        for t in range(20):
            params = random_params(n, rng)
            if zn_via_lascoux(n, params) != ik_zn(n, params):
                failures.append(("Z", n, t))
    verdict(5, not failures, f"F direct = F factored n=1..4; Z via F = IK n=2,3{' ' + str(failures) if failures else ''}",
            time.perf_counter() - start, 60)


def test_06_proof_chain():
    start = time.perf_counter()
    failures = []
    for n in (2, 3):
        rng = random.Random(SEED + 30 + n)
        for _ in range(5):
            r = df.proof_chain_check(n, *df.random_chain_point(rng))
            if not r.passed:
                failures.append(r.witness)
        sym = df.m_equals_mprime_symbolic(n)
        if not sym.passed:
            failures.append(sym.witness)
    verdict(6, not failures, "Z brute = R form, C_n Z_n = A_n, det M = det M' = det K, n=2,3", time.perf_counter() - start)


def test_07_jrl_and_palindromy():
    start = time.perf_counter()
    ok = all(df.cor_jrl_check(n).passed and df.symmetry_check(n).passed for n in range(1, 6))
    # printed forms, rewritten in p = q^(1/2) and put in canonical order
    printed1 = MPoly.parse("-p^3 + p + p^-1 - p^-3")
    printed2 = MPoly.parse("-2*p^8 + 8*p^6 - 8*p^4 - 8*p^2 + 20 - 8*p^-2 - 8*p^-4 + 8*p^-6 - 2*p^-8")
    ok = ok and str(df.normalized_det_j(1)) == str(printed1) == "p + p^-1 - p^3 - p^-3"
    ok = ok and str(df.normalized_det_j(2)) == str(printed2)
    verdict(7, ok, "det J chain and palindromy n=1..5, printed n=1,2 reproduced", time.perf_counter() - start)


def test_08_x_enumerations():
    start = time.perf_counter()
    one = all(df.t_minus(n).det() == one_enumeration_scaled(n) for n in range(1, 8))
    two = all(df.l_gauss(n).det() == 2 ** (n * (n - 1)) for n in range(1, 9))
    three = all(df.t_plus(n).det() == three_enumeration(n) for n in range(1, 8))
    verdict(8, one and two and three, f"1-enum {one}, 2-enum {two}, 3-enum {three}", time.perf_counter() - start)


def test_09_aigner_and_comparison():
    start = time.perf_counter()
    i = gaussian(0, 1)
    ok = True
    for n in range(1, 7):
        want = 2 ** (n * (n - 1) // 2)
        ok = ok and df.aigner_at_i(n).det() == df.behrend_t(n).det() == df.matrix_c(n).det() == want
    ok = ok and [list(r) for r in df.aigner_at_i(4).rows] == [
        [1, 1 - i, -i, 0], [0, 2, 3 - 3 * i, -4 * i], [-i, 0, 6, 10 - 10 * i], [1 - i, -4 * i, 0, 20]
    ]
    ok = ok and [list(r) for r in df.behrend_t(4).rows] == [[1, 1, 1, 1], [0, 2, 3, 4], [2, 4, 9, 14], [4, 12, 24, 44]]
    h = Fraction(1, 2)
    ok = ok and [list(r) for r in df.matrix_c(4).rows] == [
        [0, 2, 0, -h], [-8, 4, 2, -2], [-4, 0, 5, -5 * h], [0, -2, 4, -h]
    ]
    ok = ok and df.aigner_at_i(4).det() == 64
    for n in range(2, 6):
        target = MPoly._coerce(df.gen_fun(n).evaluate(z=df.Z_SUB, rho=1, tau=1))
        ok = ok and df.aigner(n).det() == target
    verdict(9, ok, "M_A = M_B = M_C = 2^{n(n-1)/2} n=1..6, printed n=4, Aigner det n=2..5", time.perf_counter() - start)


def test_10_decomposition():
    start = time.perf_counter()
    b = {bp.index: bp.poly for bp in kuperberg_b(7)}
    ok = all(
        a_z(n) == (2 * b[n] * b[n + 1] if n % 2 == 0 else b[n] * b[n + 1]) for n in range(2, 8)
    )
    reports = [conjecture_check(n) for n in range(2, 8)]
    ok = ok and all(r.passed for r in reports)
    ok = ok and MPoly.parse(reports[1].details["B_polynomial"]) == MPoly.parse("2*rho^2 + rho*z + 2*rho + 2")
    b6 = MPoly.parse(
        "z^3*rho^2 + 3*z^2*rho^3 + 2*z*rho^4 + 6*z^2*rho^2 + 20*z*rho^3 + 12*rho^4 + 3*z^2*rho"
        " + 26*z*rho^2 + 12*rho^3 + 20*z*rho + 12*rho^2 + 2*z + 12*rho + 12"
    )
    ok = ok and MPoly.parse(reports[3].details["B_polynomial"]) == b6
    verdict(10, ok, "Kuperberg factorization and refined conjecture n=2..7, printed B_4, B_6", time.perf_counter() - start, 300)


@pytest.mark.slow
@pytest.mark.skipif(not os.environ.get("ASMLAB_DEEP"), reason="deep run (n = 8, 9) takes minutes; set ASMLAB_DEEP=1")
def test_10_deep():
    start = time.perf_counter()
    ok = all(conjecture_check(n, deep=True).passed for n in (8, 9))
    verdict(10, ok, "refined conjecture n=8,9 (deep)", time.perf_counter() - start)


def test_11_properties():
    start = time.perf_counter()
    rng = random.Random(SEED)
    ok = True
    pool = [MPoly.parse(s) for s in ("p^2", "p^-2", "rho", "tau", "1", "p^2 + rho", "z - 2*tau")]
    for _ in range(200):
        a, b, c = (sum((rng.choice(pool) * rng.randint(-3, 3) for _ in range(3)), MPoly.const(0)) for _ in range(3))
        ok = ok and a * (b + c) == a * b + a * c and (a * b) * c == a * (b * c) and a + b == b + a
        if b:
            ok = ok and (a * b).exact_div(b) == a
    for _ in range(150):
        n = rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        ok = ok and bareiss_det(m) == cofactor_det(m)
    for n in range(1, 6):
        for a in enumerate_asms(n):
            ice = asm_to_ice(a)
            n1, n2, n3, n4, n5, n6 = ice.counts().as_tuple()
            ok = ok and ice_to_asm(ice) == a and n1 == n + n2 and n3 == n4 and n5 == n6 and n2 == a.stats.mu
    for k in range(-12, 13):
        ok = ok and eval_root(df.signed_qint(k), "omegaMinus") == df.delta_minus(k)
        ok = ok and eval_root(df.signed_qint(k), "omegaPlus") == df.delta_plus(k)
        ok = ok and eval_root(df.aigner_factor(k), "i") == df.sigma(k)
    verdict(11, ok, f"ring axioms, Bareiss = cofactor, bijection, state counts, tables (seed {SEED})",
            time.perf_counter() - start)
