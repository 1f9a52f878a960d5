"""Command-line surface.

Exit codes: 0 success (and member=yes), 1 clean negative (member=no /
not a member), 2 usage or parse error, 3 undecidable at this scale,
4 construction gap.
"""
from __future__ import annotations

import argparse
import json
import sys

from .classifier import lind_lehmer_constant, member
from .errors import (
    ConstructionGap,
    GroupDetError,
    NotInSet,
    UndecidableAtScale,
    UnsupportedGroup,
)
from .exactdet import group_determinant
from .groups import build_group
from .names import parse_name, supported_names
from .verify import EnumerationJob, default_jobs, soundness_check
from .witness import achieve

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_UNDECIDABLE = 3
EXIT_GAP = 4


def _fail_usage(message: str) -> int:
    print(message, file=sys.stderr)
    return EXIT_USAGE


def _parse_group(name: str):
    try:
        return parse_name(name)
    except UnsupportedGroup as exc:
        raise SystemExit(_fail_usage(str(exc)))


def cmd_det(args) -> int:
    spec = _parse_group(args.group)
    try:
        coeffs = tuple(int(tok) for tok in args.coeffs.split(","))
    except ValueError:
        return _fail_usage("coefficients must be comma-separated integers")
    n = spec.order
    if len(coeffs) != n:
        return _fail_usage(f"{args.group} needs exactly {n} coefficients")
    print(group_determinant(build_group(spec), coeffs))
    return EXIT_OK


def cmd_member(args) -> int:
    spec = _parse_group(args.group)
    try:
        cert = member(spec, args.value)
    except UnsupportedGroup as exc:
        return _fail_usage(str(exc))
    except UndecidableAtScale as exc:
        if args.json:
            payload = {"verdict": None, "branch": None, "params": {},
                       "undecidable": True}
            print(json.dumps(payload))
        else:
            print("undecidable")
        print(str(exc), file=sys.stderr)
        return EXIT_UNDECIDABLE
    if args.json:
        print(json.dumps(cert.to_json_dict()))
    else:
        print("yes" if cert.verdict else "no")
    return EXIT_OK if cert.verdict else EXIT_NO


def cmd_witness(args) -> int:
    spec = _parse_group(args.group)
    try:
        w = achieve(spec, args.value)
    except UnsupportedGroup as exc:
        return _fail_usage(str(exc))
    except NotInSet:
        print("not a member", file=sys.stderr)
        return EXIT_NO
    except UndecidableAtScale as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNDECIDABLE
    except ConstructionGap as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_GAP
    print(w.to_json())
    return EXIT_OK


def cmd_lambda(args) -> int:
    spec = _parse_group(args.group)
    try:
        print(lind_lehmer_constant(spec))
    except UnsupportedGroup as exc:
        return _fail_usage(str(exc))
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _parse_group(args.group)
    job = EnumerationJob(spec, args.radius, args.bound)
    try:
        report = soundness_check(job, jobs=args.jobs)
    except GroupDetError as exc:
        return _fail_usage(str(exc))
    print(report.to_json())
    return EXIT_OK if report.ok else EXIT_NO


def cmd_groups(_args) -> int:
    from .classifier import CATALOG

    ids = {entry.spec: entry.predicate_id for entry in CATALOG}
    for name in supported_names():
        spec = parse_name(name)
        pid = ids.get(spec, name)
        note = "" if pid == name else f"  (same group as {pid})"
        print(f"{name:6s} order {spec.order:2d}{note}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupdet",
        description="Integer group determinants, value sets and witnesses "
        "for every group of order at most 14.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="Exact group determinant of a vector.")
    p.add_argument("group")
    p.add_argument("coeffs", help="comma-separated integers, one per element")
    p.set_defaults(fn=cmd_det)

    p = sub.add_parser("member", help="Decide membership in the value set.")
    p.add_argument("group")
    p.add_argument("value", type=int)
    p.add_argument("--json", action="store_true", help="print the certificate")
    p.set_defaults(fn=cmd_member)

    p = sub.add_parser("witness", help="Construct a verified witness vector.")
    p.add_argument("group")
    p.add_argument("value", type=int)
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("lambda", help="Smallest nontrivial attainable |value|.")
    p.add_argument("group")
    p.set_defaults(fn=cmd_lambda)

    p = sub.add_parser(
        "verify",
        help="Enumerate a coefficient box and check the classifier on it.",
    )
    p.add_argument("group")
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--bound", type=int, default=1000)
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: all cores)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("groups", help="List supported group names.")
    p.set_defaults(fn=cmd_groups)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", None) is None and args.command == "verify":
        args.jobs = default_jobs()
    try:
        return args.fn(args)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
