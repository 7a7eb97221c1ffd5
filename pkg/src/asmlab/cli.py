"""Command-line entry point: ``asmlab <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import decomp
from .asm import EnumerationCeiling, gen_fun
from .detformulas import BUILDERS, NamedMatrixSpec, UnknownName, UnsupportedSize, build_named_matrix
from .icemodel import brute_zn, ik_zn, ik_zn_uv, random_params
from .ring import MPoly, QuadExt, asm_count
from .suites import DEEP_CEILING, DEFAULT_CEILING, SuiteError, SUITES, check_rng, run_suite
from .symfunc import zn_via_lascoux


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


def entry_json(x):
    """Integers stay integers; everything else becomes its canonical string."""
    if isinstance(x, MPoly) and x.is_constant():
        x = x.constant_value()
    if isinstance(x, QuadExt) and x.is_rational():
        x = x.a
    if isinstance(x, Fraction) and x.denominator == 1:
        x = x.numerator
    if isinstance(x, int):
        return x
    return str(x)


def emit_count(n: int) -> str:
    return str(asm_count(n))


def emit_genfun(n: int, fmt: str = "text") -> str:
    poly = gen_fun(n)
    if fmt == "json":
        return dumps({"n": n, "genfun": str(poly)})
    return str(poly)


def emit_matrix(name: str, n: int, **params) -> str:
    m = build_named_matrix(NamedMatrixSpec(name, n, params))
    return dumps({"name": name, "n": n, "entries": [[entry_json(x) for x in row] for row in m.rows]})


def emit_partition(n: int, seed: int) -> str:
    """Z_n at one seeded generic point, by every available route."""
    if not 1 <= n <= 6:
        raise ValueError("partition needs 1 <= n <= 6 (brute force)")
    params = random_params(n, check_rng(seed, "partition", n))
    values = {
        "bruteForce": brute_zn(n, params),
        "izerginKorepin": ik_zn(n, params),
        "uvForm": ik_zn_uv(n, params),
    }
    if n >= 2:
        values["lascoux"] = zn_via_lascoux(n, params)
    return dumps(
        {
            "n": n,
            "seed": seed,
            "a": [str(x) for x in params.a],
            "b": [str(x) for x in params.b],
            "q": str(params.q),
            "Z": {k: str(v) for k, v in values.items()},
            "agree": len(set(values.values())) == 1,
        }
    )


def _finish(reports, timings: bool, extra: dict) -> int:
    doc = dict(extra)
    doc["pass"] = all(r.passed for r in reports)
    doc["reports"] = [r.to_dict(timings) for r in reports]
    print(dumps(doc))
    failed = [r for r in reports if not r.passed]
    if failed:
        print(json.dumps(failed[0].to_dict()), file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="asmlab", description="Exact ASM enumeration and determinant identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="number of n x n ASMs")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("genfun", help="A_n(z, rho, tau) in canonical form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("matrix", help="a named matrix as JSON")
    p.add_argument("--name", required=True, help=", ".join(BUILDERS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--phi", type=Fraction, default=Fraction(2), help="R only")
    p.add_argument("--psi", type=Fraction, default=Fraction(3), help="R only")

    p = sub.add_parser("partition", help="Z_n at a seeded random point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=tuple(SUITES), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--deep", action="store_true", help=f"allow max-n up to {DEEP_CEILING}")
    p.add_argument("--timings", action="store_true", help="include elapsedMs (output no longer byte-stable)")

    p = sub.add_parser("conjecture", help="refined decomposition conjecture for n = 2..max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--deep", action="store_true", help=f"allow max-n up to {DEEP_CEILING}")
    p.add_argument("--timings", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "count":
            print(emit_count(args.n))
        elif args.command == "genfun":
            print(emit_genfun(args.n, args.format))
        elif args.command == "matrix":
            print(emit_matrix(args.name, args.n, phi=args.phi, psi=args.psi))
        elif args.command == "partition":
            print(emit_partition(args.n, args.seed))
        elif args.command == "verify":
            reports = run_suite(args.suite, args.max_n, args.seed, args.deep)
            return _finish(reports, args.timings, {"suite": args.suite, "maxN": args.max_n, "seed": args.seed})
        elif args.command == "conjecture":
            ceiling = DEEP_CEILING if args.deep else DEFAULT_CEILING
            if not 2 <= args.max_n <= ceiling:
                raise SuiteError(f"max-n must be in 2..{ceiling}")
            reports = [decomp.conjecture_check(n, deep=args.deep) for n in range(2, args.max_n + 1)]
            return _finish(reports, args.timings, {"maxN": args.max_n})
    except UnknownName as exc:
        print(f"asmlab: error: unknown matrix name {exc.args[0]!r}; choose from {', '.join(BUILDERS)}", file=sys.stderr)
        return 2
    except (UnsupportedSize, SuiteError, EnumerationCeiling, ValueError) as exc:
        print(f"asmlab: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
