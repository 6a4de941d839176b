"""Command-line interface.

Subcommands:

    tau EXPR                  order, spectrum, same-order type, AP verdict
    info EXPR                 structural profile
    verify [--suite NAME] [--max-order K] [--json PATH]
    search --tau-size S [--max-order K] [--ap]
    ingest PATH [--export PATH]

Exit status: 0 on success, 1 on suite failure (or a violated rule), 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cayley_io import export, ingest
from .classify import is_arithmetic_progression
from .corpus import builtin_corpus
from .errors import SameOrderError, SuiteFailure, TheoremViolation
from .expr import eval_expr, parse_group_expr
from .group import FiniteGroup
from .stats import order_spectrum, same_order_type
from .suites import SUITE_NAMES, run_suite


def _format_tau(tau: tuple[int, ...]) -> str:
    return "{" + ", ".join(str(v) for v in tau) + "}"


def _print_tau_block(group: FiniteGroup) -> None:
    spectrum = order_spectrum(group)
    tau = same_order_type(spectrum)
    verdict = is_arithmetic_progression(tau)
    print(f"{group.label}  order {group.size}")
    print("  spectrum: " + "  ".join(f"{n}:{c}" for n, c in sorted(spectrum.counts.items())))
    print(f"  same-order type: {_format_tau(tau)}")
    if verdict.is_ap:
        print(f"  arithmetic progression: yes, ratio {verdict.ratio}")
    else:
        print("  arithmetic progression: no")


def _cmd_tau(args) -> int:
    group = eval_expr(parse_group_expr(args.expr))
    _print_tau_block(group)
    return 0


def _cmd_info(args) -> int:
    group = eval_expr(parse_group_expr(args.expr))
    profile = group.structural_profile()
    print(f"{group.label}  order {group.size}")
    print(f"  abelian: {'yes' if profile.is_abelian else 'no'}")
    print(f"  nilpotent: {'yes' if profile.is_nilpotent else 'no'}")
    print(f"  solvable: {'yes' if profile.is_solvable else 'no'}")
    if profile.p_group_prime is not None:
        print(f"  p-group: yes (p = {profile.p_group_prime})")
    else:
        print("  p-group: no")
    print(f"  exponent: {profile.exponent}")
    print(f"  center size: {profile.center_size}")
    print(f"  involutions: {profile.c2}")
    primes = ", ".join(str(p) for p in profile.prime_divisors) or "none"
    print(f"  prime divisors: {primes}")
    return 0


def _emit_report(report, json_path: str | None) -> None:
    if json_path:
        payload = json.dumps(report.as_dict(), indent=2, sort_keys=True) + "\n"
        Path(json_path).write_text(payload)
    print(
        f"suite {report.suite}: {report.groups_checked} groups checked, "
        f"{len(report.failures)} failure(s), {report.wall_time_ms} ms"
    )
    for failure in report.failures:
        print(f"  FAIL {failure['group']}: {failure['check']} -- {failure['detail']}")


def _cmd_verify(args) -> int:
    try:
        report = run_suite(args.suite, args.max_order)
    except SuiteFailure as exc:
        _emit_report(exc.report, args.json)
        return 1
    _emit_report(report, args.json)
    return 0


def _cmd_search(args) -> int:
    matches = 0
    for expr in builtin_corpus(args.max_order):
        group = eval_expr(expr)
        tau = same_order_type(order_spectrum(group))
        if len(tau) != args.tau_size:
            continue
        verdict = is_arithmetic_progression(tau)
        if args.ap and not verdict.is_ap:
            continue
        matches += 1
        ap_note = f"  AP ratio {verdict.ratio}" if verdict.is_ap else ""
        print(f"{group.label}  order {group.size}  tau {_format_tau(tau)}{ap_note}")
    print(f"{matches} group(s) matched")
    return 0


def _cmd_ingest(args) -> int:
    group = ingest(args.path)
    _print_tau_block(group)
    if args.export:
        export(group, args.export)
        print(f"exported to {args.export}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sameorder",
        description="Finite-group order statistics over Cayley tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tau = sub.add_parser("tau", help="order spectrum, same-order type and AP verdict")
    p_tau.add_argument("expr", help='group expression, e.g. "C(7) x Q(8)"')
    p_tau.set_defaults(func=_cmd_tau)

    p_info = sub.add_parser("info", help="structural profile of a group")
    p_info.add_argument("expr")
    p_info.set_defaults(func=_cmd_info)

    p_verify = sub.add_parser("verify", help="run a verification suite over the corpus")
    p_verify.add_argument("--suite", default="all", choices=SUITE_NAMES)
    p_verify.add_argument("--max-order", type=int, default=256, metavar="K")
    p_verify.add_argument("--json", metavar="PATH", help="write the full report as JSON")
    p_verify.set_defaults(func=_cmd_verify)

    p_search = sub.add_parser("search", help="list corpus groups by type size")
    p_search.add_argument("--max-order", type=int, default=256, metavar="K")
    p_search.add_argument("--tau-size", type=int, required=True, metavar="S")
    p_search.add_argument("--ap", action="store_true", help="only arithmetic progressions")
    p_search.set_defaults(func=_cmd_search)

    p_ingest = sub.add_parser("ingest", help="validate a Cayley-table file")
    p_ingest.add_argument("path")
    p_ingest.add_argument("--export", metavar="PATH", help="re-export in canonical form")
    p_ingest.set_defaults(func=_cmd_ingest)

    return parser


def cli_dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"VIOLATION: {exc}", file=sys.stderr)
        return 1
    except SameOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
