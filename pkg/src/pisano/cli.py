"""Command-line front end: profiles, OEIS generators, verification suites,
censuses, and Wall-Sun-Sun searches with machine-readable output.

Exit codes: 0 all checks pass, 1 counterexample found, 2 usage error.
Machine payloads go to stdout; progress notes go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import classify, lab
from .periods import PisanoProfile, profile_fast, profile_oracle
from .report import SweepReport
from .seq import RecurrenceParams

_SUITES = {
    "oeis-conjectures": lambda args: classify.verify_oeis_conjectures(args.max or 200),
    "main-theorem": lambda args: lab.verify_main_theorem(
        args.max or 500, list(range(1, (args.kmax or 4) + 1))
    ),
    "lcm-tables": lambda args: lab.verify_lcm_tables(args.max or 100, args.kmax or 4),
    "identities": lambda args: lab.verify_identities(
        k_max=args.kmax or 8, m_max=args.max or 500
    ),
    "wyler": lambda args: lab.verify_wyler(args.max or 500, args.kmax or 4),
    "powers-of-two": lambda args: lab.verify_powers_of_two(args.kmax or 16),
    "negativemult": lambda args: lab.verify_negativemult(args.kmax or 4, args.max or 60),
    "finite-orders": None,  # handled specially: runs all five cases
    "even-k-exceptions": lambda args: lab.verify_even_k_exceptions(
        args.kmax or 4, args.max or 300
    ),
    "williams": lambda args: lab.williams_check(args.max or 1000),
    "carmichael": lambda args: lab.carmichael_check(min(args.max or 90, 90)),
}


def _profile_fields(prof: PisanoProfile) -> dict:
    return {
        "period": prof.period,
        "rank": prof.rank,
        "order": prof.order,
        "residue": prof.residue,
        "preperiod": prof.preperiod,
    }


def _emit_fields(fields: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(fields, sort_keys=True))
    elif fmt == "csv":
        keys = list(fields)
        print(",".join(keys))
        print(",".join("" if fields[k] is None else str(fields[k]) for k in keys))
    else:
        print(" ".join(f"{k}={fields[k]}" for k in fields))


def _emit_report(report: SweepReport, fmt: str) -> None:
    doc = report.to_dict()
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True))
    elif fmt == "csv":
        keys = ["claim", "params", "range", "status", "counterexamples", "census"]
        print(",".join(keys))
        print(",".join(json.dumps(doc[k], sort_keys=True).replace(",", ";") for k in keys))
    else:
        print(
            f"suite={doc['claim']} status={doc['status']} "
            f"range=[{report.lo},{report.hi}] "
            f"counterexamples={len(report.counterexamples)}"
        )
        for c in report.counterexamples[:20]:
            print(f"  counterexample inputs={c.inputs} expected={c.expected} actual={c.actual}")
        if report.census is not None:
            for value in sorted(report.census):
                entry = report.census[value]
                print(f"  order={value} first={entry['first']} count={entry['count']}")


def _parse_params(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RecurrenceParams:
    has_k = args.k is not None
    has_ab = args.a is not None or args.b is not None
    if has_k == has_ab:
        parser.error("give exactly one of --k or the --a/--b pair")
    if has_k:
        return RecurrenceParams.k_fibonacci(args.k)
    if args.a is None or args.b is None:
        parser.error("--a and --b must be given together")
    return RecurrenceParams(args.a, args.b)


def _default_jobs(args: argparse.Namespace) -> int:
    if getattr(args, "jobs", None):
        return args.jobs
    env = os.environ.get("PISANO_JOBS")
    if env and env.isdigit():
        return int(env)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pisano")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", help="period/rank/order/residue of a modulus")
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")

    p = sub.add_parser("oeis", help="emit a zero-count class sequence")
    p.add_argument("--id", required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=["plain", "bfile"], default="plain")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")

    p = sub.add_parser("census", help="distinct order values over a modulus range")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--jobs", type=int)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")

    p = sub.add_parser("wss", help="Wall-Sun-Sun primes up to a bound")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0

    if args.command == "profile":
        params = _parse_params(args, parser)
        if args.mod < 1:
            parser.error("--mod must be >= 1")
        if params.b == 1 and args.mod > 1:
            prof = profile_fast(params, args.mod)
        else:
            prof = profile_oracle(params, args.mod)
        _emit_fields(_profile_fields(prof), args.format)
        return 0

    if args.command == "oeis":
        if args.id not in classify.OEIS_IDS:
            print(f"unknown sequence id: {args.id}", file=sys.stderr)
            return 2
        seq = classify.oeis_sequence(args.id, args.max)
        if args.format == "bfile":
            sys.stdout.write(classify.format_bfile(seq))
        else:
            print(" ".join(map(str, seq)))
        return 0

    if args.command == "verify":
        if args.suite not in _SUITES:
            print(f"unknown suite: {args.suite}", file=sys.stderr)
            return 2
        print(f"running suite {args.suite}", file=sys.stderr)
        if args.suite == "finite-orders":
            reports = [
                lab.verify_finite_orders_conjecture(case, m_max=args.max or 200)
                for case in ("i", "ii", "iii", "iv", "v")
            ]
            for report in reports:
                _emit_report(report, args.format)
            return 0 if all(r.passed for r in reports) else 1
        report = _SUITES[args.suite](args)
        _emit_report(report, args.format)
        return 0 if report.passed else 1

    if args.command == "census":
        if args.max > 20000:
            parser.error("--max is capped at 20000")
        print(f"census (a={args.a}, b={args.b}) up to {args.max}", file=sys.stderr)
        report = lab.order_census(args.a, args.b, args.max, jobs=_default_jobs(args))
        _emit_report(report, args.format)
        return 0

    if args.command == "wss":
        if args.pmax * args.pmax > 2**31 - 1:
            print("--pmax out of supported range", file=sys.stderr)
            return 2
        found = lab.wall_sun_sun_primes(args.k, args.pmax)
        if args.format == "json":
            print(json.dumps({"k": args.k, "pmax": args.pmax, "primes": found}))
        elif args.format == "csv":
            print("k,pmax,primes")
            print(f"{args.k},{args.pmax},{' '.join(map(str, found))}")
        else:
            print(" ".join(map(str, found)))
        return 0

    return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
