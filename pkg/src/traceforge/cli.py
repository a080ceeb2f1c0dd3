"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 mathematical input error (e.g. a
gcd above 1), 3 verification failure, 4 precision failure from the
truncated engine.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import census_bound, conductor_ideals, integrally_closed_ideals, stable_trace_ideals, trace_fiber, trace_ideals
from .classify import gorenstein_flavors
from .errors import MathInputError, PrecisionError
from .oracle import TruncatedSubalgebra
from .textio import (
    format_tail,
    ideal_to_json,
    parse_ideal,
    parse_polynomial,
    parse_polynomial_list,
    parse_semigroup,
    semigroup_to_json,
)
from .verification import run_verification

USAGE_ERROR, MATH_ERROR, VERIFY_ERROR, PRECISION_ERROR = 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _build_parser() -> _Parser:
    parser = _Parser(prog="traceforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sgp = sub.add_parser("sgp", help="numerical semigroup queries")
    sgp_sub = sgp.add_subparsers(dest="subcommand", required=True)
    info = sgp_sub.add_parser("info", help="structure and classification flags")
    info.add_argument("--gens", required=True, help="comma-separated generators, e.g. 4,5,6")
    info.add_argument("--json", action="store_true")

    idl = sub.add_parser("ideal", help="one ideal operation")
    idl.add_argument(
        "operation",
        choices=["trace", "stable", "dual", "closure", "reflexive", "blowup"],
    )
    idl.add_argument("--gens", required=True, help="ideal generators, e.g. 5,12")
    idl.add_argument("--sgp", required=True, help="semigroup generators, e.g. 3,5")
    idl.add_argument("--json", action="store_true")

    census = sub.add_parser("census", help="enumerate ideals between conductor and ring")
    census.add_argument("--sgp", required=True)
    census.add_argument(
        "--kind",
        choices=["all", "trace", "stable-trace", "integrally-closed"],
        default="all",
    )
    census.add_argument("--json", action="store_true")

    fiber = sub.add_parser("tfiber", help="trace ideals with a given minimum")
    fiber.add_argument("--sgp", required=True)
    fiber.add_argument("--min", required=True, type=int, dest="minimum")
    fiber.add_argument("--json", action="store_true")

    oracle = sub.add_parser("oracle", help="truncated power-series engine")
    oracle.add_argument("operation", choices=["trace", "stable", "closure"])
    oracle.add_argument("--algebra", required=True, help="comma-separated polynomials, e.g. t^3,t^5")
    oracle.add_argument("--ideal", required=True, help="comma-separated polynomials")
    oracle.add_argument("--precision", type=int, default=None)
    oracle.add_argument("--json", action="store_true")

    verify = sub.add_parser("verify-paper", help="replay every example and theorem suite")
    verify.add_argument("--json", metavar="PATH", default=None, help="also write the report as JSON")
    return parser


def _emit(payload: dict, human: str, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def _cmd_sgp_info(args) -> int:
    h = parse_semigroup(args.gens)
    flags = gorenstein_flavors(h)
    payload = {**semigroup_to_json(h), "flags": flags.to_json()}
    lines = [
        f"semigroup       <{','.join(map(str, h.generators))}>",
        f"frobenius       {h.frobenius}",
        f"conductor       {h.conductor}",
        f"multiplicity    {h.multiplicity}",
        f"gaps            {h.gaps()}",
        f"flags           {json.dumps(flags.to_json())}",
    ]
    _emit(payload, "\n".join(lines), args.json)
    return 0


def _cmd_ideal(args) -> int:
    e = parse_ideal(f"{args.gens}@{args.sgp}")
    if args.operation == "trace":
        out = e.trace_ideal()
    elif args.operation == "dual":
        out = e.dual()
    elif args.operation == "closure":
        out = e.integral_closure()
    elif args.operation == "blowup":
        out = e.blowup_ring()
    elif args.operation == "stable":
        flag = e.is_stable()
        _emit({"stable": flag}, str(flag).lower(), args.json)
        return 0
    else:
        flag = e.is_reflexive()
        _emit({"reflexive": flag}, str(flag).lower(), args.json)
        return 0
    _emit(ideal_to_json(out), format_tail(out), args.json)
    return 0


def _cmd_census(args) -> int:
    h = parse_semigroup(args.sgp)
    kinds = {
        "all": conductor_ideals,
        "trace": trace_ideals,
        "stable-trace": stable_trace_ideals,
        "integrally-closed": integrally_closed_ideals,
    }
    ideals = kinds[args.kind](h)
    payload = {
        "semigroup": list(h.generators),
        "kind": args.kind,
        "bound": census_bound(),
        "count": len(ideals),
        "ideals": [ideal_to_json(e) for e in ideals],
    }
    human = "\n".join(format_tail(e) for e in ideals) + f"\n-- {len(ideals)} ideals"
    _emit(payload, human, args.json)
    return 0


def _cmd_tfiber(args) -> int:
    h = parse_semigroup(args.sgp)
    fiber = trace_fiber(h, args.minimum)
    payload = {
        "semigroup": list(h.generators),
        "min": args.minimum,
        "note": "monomial members only; non-monomial members are out of census reach",
        "ideals": [
            {**ideal_to_json(e), "stable": e.is_stable()} for e in fiber
        ],
    }
    human = "\n".join(
        f"{format_tail(e)}  stable={str(e.is_stable()).lower()}" for e in fiber
    ) or "(empty fiber)"
    _emit(payload, human, args.json)
    return 0


def _cmd_oracle(args) -> int:
    algebra_polys = parse_polynomial_list(args.algebra)
    ideal_polys = parse_polynomial_list(args.ideal)
    if args.precision is not None:
        algebra = TruncatedSubalgebra.build(algebra_polys, args.precision)
    else:
        last = None
        for n in (24, 48, 96, 192):
            try:
                algebra = TruncatedSubalgebra.build(algebra_polys, n)
                break
            except PrecisionError as exc:
                last = exc
        else:
            raise last
    member = algebra.ideal(ideal_polys)
    if args.operation == "stable":
        flag = member.is_stable()
        _emit({"stable": flag, "precision": algebra.precision}, str(flag).lower(), args.json)
        return 0
    out = member.trace_ideal() if args.operation == "trace" else member.integral_closure()
    vs = out.valuation_set()
    payload = {
        "operation": args.operation,
        "precision": algebra.precision,
        "valueSemigroup": list(algebra.value_semigroup.generators),
        "valuations": ideal_to_json(vs),
    }
    _emit(payload, format_tail(vs), args.json)
    return 0


def _cmd_verify(args) -> int:
    report = run_verification()
    for item in report.items:
        print(f"{item.status.upper():4}  {item.id}")
        if item.status == "fail":
            print(f"      {json.dumps(item.details, default=str)}")
    counts = report.counts
    print(
        f"-- {counts['pass']} passed, {counts['fail']} failed, "
        f"{counts['skipped']} skipped (tool {report.tool_version})"
    )
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=2, sort_keys=True)
        print(f"report written to {args.json}")
    return 0 if report.all_passed else VERIFY_ERROR


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    handlers = {
        "sgp": _cmd_sgp_info,
        "ideal": _cmd_ideal,
        "census": _cmd_census,
        "tfiber": _cmd_tfiber,
        "oracle": _cmd_oracle,
        "verify-paper": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except PrecisionError as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return PRECISION_ERROR
    except MathInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return MATH_ERROR
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
