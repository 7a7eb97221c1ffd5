"""Verification suites: named groups of checks with per-check size limits."""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import decomp, detformulas as df
from .icemodel import DegenerateParams, brute_zn, ik_zn, ik_zn_uv, random_params
from .report import Report, timed
from .ring import NotDivisible
from .symfunc import fq_direct, fq_factored, zn_via_lascoux

SAMPLES = 20
DEFAULT_CEILING = 7
DEEP_CEILING = 9


class SuiteError(ValueError):
    """Bad suite name or size request."""


def check_rng(seed: int, check: str, n: int) -> random.Random:
    # string seeds hash deterministically, independent of PYTHONHASHSEED
    return random.Random(f"{seed}:{check}:{n}")


@timed
def ik_check(n: int, seed: int = 0, samples: int = SAMPLES) -> Report:
    """brute force = bracket determinant = u/v determinant at seeded points."""
    rng = check_rng(seed, "ik", n)
    for t in range(samples):
        params = random_params(n, rng)
        brute, ik, uv = brute_zn(n, params), ik_zn(n, params), ik_zn_uv(n, params)
        if not brute == ik == uv:
            return Report("ik", n, False, f"sample {t}: brute={brute} ik={ik} uv={uv}", seed=seed)
    return Report("ik", n, True, seed=seed, details={"samples": samples})


@timed
def lascoux_check(n: int, seed: int = 0, samples: int = SAMPLES) -> Report:
    """F_q direct = F_q factored at seeded points; Z_n through F_{q^2} = Z_n by determinant for n >= 2."""
    rng = check_rng(seed, "lascoux", n)
    for t in range(samples):
        params = random_params(n, rng)
        q = params.q
        v, u = params.v, params.u
        direct, factored = fq_direct(v, u, q), fq_factored(v, u, q)
        if direct != factored:
            return Report("lascoux", n, False, f"sample {t}: direct={direct} factored={factored}", seed=seed)
        if n >= 2:
            via, ik = zn_via_lascoux(n, params), ik_zn(n, params)
            if via != ik:
                return Report("lascoux", n, False, f"sample {t}: via F={via} ik={ik}", seed=seed)
    return Report("lascoux", n, True, seed=seed, details={"samples": samples})


def proof_chain_sampled(n: int, seed: int = 0, samples: int = 5) -> Report:
    rng = check_rng(seed, "proofchain", n)
    elapsed = 0
    for t in range(samples):
        point = df.random_chain_point(rng)
        r = df.proof_chain_check(n, *point)
        elapsed += r.elapsed_ms or 0
        if not r.passed:
            r.seed = seed
            return r
    return Report("proofchain", n, True, seed=seed, elapsed_ms=elapsed, details={"samples": samples})


@dataclass(frozen=True)
class CheckDef:
    name: str
    low: int
    high: int
    run: Callable[[int, int, bool], Report]


CHECKS = {
    "theorem1": CheckDef("theorem1", 2, 5, lambda n, s, d: df.theorem1_check(n)),
    "proofchain": CheckDef("proofchain", 2, 4, lambda n, s, d: proof_chain_sampled(n, s)),
    "rowops": CheckDef("rowops", 2, 4, lambda n, s, d: df.m_equals_mprime_symbolic(n)),
    "corollary51": CheckDef("corollary51", 1, 4, lambda n, s, d: df.corollary51_check(n)),
    "corollary12": CheckDef("corollary12", 1, 8, lambda n, s, d: df.corollary12_check(n)),
    "corJRL": CheckDef("corJRL", 1, 5, lambda n, s, d: df.cor_jrl_check(n)),
    "symmetry": CheckDef("symmetry", 1, 6, lambda n, s, d: df.symmetry_check(n)),
    "enum-one": CheckDef("enum-one", 1, 7, lambda n, s, d: df.enum_identity_check("one", n)),
    "enum-two": CheckDef("enum-two", 1, 8, lambda n, s, d: df.enum_identity_check("two", n)),
    "enum-three": CheckDef("enum-three", 1, 7, lambda n, s, d: df.enum_identity_check("three", n)),
    "aigner": CheckDef("aigner", 1, 6, lambda n, s, d: df.aigner_check(n)),
    "ik": CheckDef("ik", 1, 4, lambda n, s, d: ik_check(n, s)),
    "lascoux": CheckDef("lascoux", 1, 4, lambda n, s, d: lascoux_check(n, s)),
    "conjecture": CheckDef("conjecture", 2, DEEP_CEILING, lambda n, s, d: decomp.conjecture_check(n, deep=d)),
}

SUITES = {
    "core": ("theorem1", "proofchain", "rowops", "corollary51"),
    "corollaries": ("corollary12", "corJRL", "symmetry", "enum-one", "enum-two", "enum-three", "aigner"),
    "ik": ("ik",),
    "lascoux": ("lascoux",),
    "conjecture": ("conjecture",),
}
SUITES["all"] = tuple(name for key in ("core", "corollaries", "ik", "lascoux", "conjecture") for name in SUITES[key])


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ASMLAB_THREADS", "1")))
    except ValueError:
        return 1


def plan(suite: str, max_n: int, deep: bool = False) -> list[tuple[str, int]]:
    if suite not in SUITES:
        raise SuiteError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    ceiling = DEEP_CEILING if deep else DEFAULT_CEILING
    if max_n < 1:
        raise SuiteError("max-n must be positive")
    if max_n > ceiling:
        hint = "" if deep else " (pass --deep for up to 9)"
        raise SuiteError(f"max-n={max_n} exceeds the ceiling {ceiling}{hint}")
    jobs = []
    for name in SUITES[suite]:
        c = CHECKS[name]
        high = c.high if name != "conjecture" else (DEEP_CEILING if deep else DEFAULT_CEILING)
        jobs.extend((name, n) for n in range(c.low, min(high, max_n) + 1))
    return jobs


def run_one(name: str, n: int, seed: int, deep: bool) -> Report:
    try:
        return CHECKS[name].run(n, seed, deep)
    except (DegenerateParams, NotDivisible, ArithmeticError, ValueError) as exc:
        return Report(name, n, False, f"{type(exc).__name__}: {exc}", seed=seed)


def run_suite(suite: str, max_n: int, seed: int = 0, deep: bool = False) -> list[Report]:
    jobs = plan(suite, max_n, deep)
    workers = min(_threads(), len(jobs)) or 1
    if workers == 1:
        reports = [run_one(name, n, seed, deep) for name, n in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda job: run_one(job[0], job[1], seed, deep), jobs))
    return sorted(reports, key=lambda r: (r.check, r.n))
