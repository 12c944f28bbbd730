"""Command-line interface: ``markoff {enumerate,reduce,classify,verify}``.

Exit codes: 0 success, 1 a mathematical violation was found, 2 bad usage or
input (argparse already exits with 2 on malformed arguments).
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import Callable, Dict, List, Optional

from . import kernels
from .arith import DEFAULT_ROUNDS
from .congruence import sweep_congruences
from .enumeration import enumerate_up_to
from .oracles import sweep_lemma1, sweep_lemma2, sweep_rewrites
from .records import (
    Emitter,
    certificate_record,
    finding_record,
    summary_record,
    triple_record,
    violation_record,
)
from .triples import check_lemma3, make_triple, reduce_to_root
from .unicity import check_unicity_empirically, classify, sweep_classify

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

DEFAULT_MAX_C = 10**6
DEFAULT_MAX_M = 2000
DEFAULT_MAX_XY = 300
SUITES = ("congruence", "unicity", "lemma1", "lemma2", "rewrites", "descent")


def _int_at_least(lo: int) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v
    return parse


def cmd_enumerate(args, out: Emitter) -> int:
    for t in enumerate_up_to(args.max_c).triples:
        out.emit(triple_record(t))
    return EXIT_OK


def cmd_reduce(args, out: Emitter) -> int:
    try:
        t = make_triple(args.a, args.b, args.c)
    except ValueError as exc:  # includes NotMarkoffError, which shows both sides
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for step in reduce_to_root(t):
        out.emit(triple_record(step))
    return EXIT_OK


def cmd_classify(args, out: Emitter) -> int:
    if args.c is not None and args.max_c is not None:
        print("error: give either C or --max-c, not both", file=sys.stderr)
        return EXIT_USAGE
    if args.c is not None:
        if args.c < 1:
            print(f"error: c must be >= 1, got {args.c}", file=sys.stderr)
            return EXIT_USAGE
        out.emit(certificate_record(classify(args.c, args.mr_rounds)))
        return EXIT_OK
    if args.max_c is None:
        print("error: give C or --max-c", file=sys.stderr)
        return EXIT_USAGE
    sweep = sweep_classify(enumerate_up_to(args.max_c), args.mr_rounds)
    for cert in sweep.certificates:
        out.emit(certificate_record(cert))
    out.emit(summary_record(
        max_c=args.max_c,
        certificates=len(sweep.certificates),
        verdicts={v.value: n for v, n in sweep.counts.items()},
        no_criterion=sweep.uncovered,
    ))
    return EXIT_OK


# -- verify suites ----------------------------------------------------------
# Each returns (violation count, summary fields) after emitting violations.

def _suite_congruence(args, out):
    sweep = sweep_congruences(enumerate_up_to(args.max_c))
    for f in sweep.failing:
        out.emit(violation_record("congruence", **{k: v for k, v in finding_record(f).items() if k != "kind"}))
    return sweep.failures, {"max_c": args.max_c, "findings": len(sweep.findings), "checks": sweep.checks}


def _suite_unicity(args, out):
    report = enumerate_up_to(args.max_c)
    _, violations = check_unicity_empirically(report)
    certs = {cert.c: cert for cert in sweep_classify(report, args.mr_rounds).certificates}
    for v in violations:
        print(f"UNICITY COUNTEREXAMPLE: c = {v.c} has {len(v.triples)} triples", file=sys.stderr)
        out.emit(violation_record(
            "unicity", c=v.c, triples=[list(t) for t in v.triples],
            certified=certs[v.c].certified,
        ))
    covered = sum(1 for cert in certs.values() if cert.certified)
    return len(violations), {
        "max_c": args.max_c,
        "markoff_numbers": len(report.registry),
        "certified": covered,
        "no_criterion": [c for c, cert in certs.items() if not cert.certified],
    }


def _suite_lemma1(args, out):
    s = sweep_lemma1(args.max_xy)
    for x, y, d in s.violations:
        out.emit(violation_record("lemma1", x=x, y=y, divisor=d))
    return len(s.violations), {"max_xy": args.max_xy, "pairs": s.cases, "odd_divisors": s.checks}


def _suite_lemma2(args, out):
    s = sweep_lemma2(args.max_m)
    for v in s.violations:
        out.emit(violation_record("lemma2", m=v.m, r=v.r, solutions=list(v.solutions)))
    return len(s.violations), {"max_m": args.max_m, "moduli": s.cases, "residues": s.checks}


def _suite_rewrites(args, out):
    s = sweep_rewrites(enumerate_up_to(args.max_c).triples)
    for t in s.violations:
        out.emit(violation_record("rewrites", a=t.a, b=t.b, c=t.c))
    return len(s.violations), {"max_c": args.max_c, "triples": s.cases, "identities": s.checks}


def _suite_descent(args, out):
    bad = 0
    triples = enumerate_up_to(args.max_c).triples
    for t in triples:
        path = reduce_to_root(t)
        growth_ok = t.is_singular or t == (1, 2, 5) or check_lemma3(t)
        if not growth_ok or path[-1] != (1, 1, 1):
            bad += 1
            out.emit(violation_record("descent", a=t.a, b=t.b, c=t.c, growth_bounds=growth_ok))
    return bad, {"max_c": args.max_c, "triples": len(triples)}


SUITE_RUNNERS = {
    "congruence": _suite_congruence,
    "unicity": _suite_unicity,
    "lemma1": _suite_lemma1,
    "lemma2": _suite_lemma2,
    "rewrites": _suite_rewrites,
    "descent": _suite_descent,
}


def cmd_verify(args, out: Emitter) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    total = 0
    start_all = time.perf_counter()
    for name in names:
        start = time.perf_counter()
        violations, fields = SUITE_RUNNERS[name](args, out)
        total += violations
        if not args.no_timing:
            fields["wall_time_s"] = round(time.perf_counter() - start, 3)
        out.emit(summary_record(suite=name, violations=violations, **fields))
    if len(names) > 1:
        fields = {"suite": "all", "violations": total, "suites": list(names), "backend": kernels.BACKEND}
        if not args.no_timing:
            fields["wall_time_s"] = round(time.perf_counter() - start_all, 3)
        out.emit(summary_record(**fields))
    return EXIT_VIOLATION if total else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("jsonl", "csv"), default="jsonl",
                        help="output format (default: jsonl)")
    common.add_argument("--mr-rounds", type=_int_at_least(1), default=None,
                        help="Miller-Rabin rounds above the deterministic range "
                             f"(default {DEFAULT_ROUNDS})")

    parser = argparse.ArgumentParser(prog="markoff", description="Markoff triple verification toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list all triples with max <= N")
    p.add_argument("--max-c", type=_int_at_least(1), required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("reduce", parents=[common], help="descent path of a triple to (1,1,1)")
    for name in ("a", "b", "c"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("classify", parents=[common], help="uniqueness certificate for c, or for all c <= N")
    p.add_argument("c", type=int, nargs="?")
    p.add_argument("--max-c", type=_int_at_least(1))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-c", type=_int_at_least(1), default=DEFAULT_MAX_C)
    p.add_argument("--max-m", type=_int_at_least(3), default=DEFAULT_MAX_M)
    p.add_argument("--max-xy", type=_int_at_least(1), default=DEFAULT_MAX_XY)
    p.add_argument("--no-timing", action="store_true",
                   help="omit wall times so output is byte-for-byte reproducible")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = Emitter(sys.stdout, args.format)
    try:
        code = args.func(args, out)
    finally:
        out.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
