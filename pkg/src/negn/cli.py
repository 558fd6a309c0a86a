"""Command-line front end: ``negn dim|casimir|verify|table``.

Exit codes: 0 when everything requested holds, 1 when an identity fails,
2 on usage errors (including a rank below n_min).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .duality import CheckReport, exhaustive_corpus, random_corpus, run_checks
from .invariants import casimir_direct, casimir_formula, dim_polynomial, dim_stable
from .laurent import format_rational
from .partitions import YoungDiagram
from .stable import RankError, StableRep, realize

IDENTITY_CHOICES = ["prop1", "prop2", "z2", "classic", "const-term", "all"]
ALL_IDENTITIES = ["prop1", "prop2", "z2"]
FORMATS = ["text", "json", "latex"]


def _partition(text: str) -> YoungDiagram:
    try:
        return YoungDiagram.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _latex_partition(y: YoungDiagram) -> str:
    return r"\emptyset" if not y else f"({y})"


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="negn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in [
        ("dim", "dimension of D(lambda, tau)"),
        ("casimir", "quadratic Casimir eigenvalue of D(lambda, tau)"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--lambda", dest="lam", type=_partition, required=True,
                       help='partition such as "4,2,1"; "" is the empty diagram')
        p.add_argument("--tau", type=_partition, required=True)
        mode = p.add_mutually_exclusive_group(required=True)
        mode.add_argument("--n", type=int, help="concrete rank N")
        mode.add_argument("--symbolic", action="store_true", help="polynomial in N")
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("verify", help="check duality identities")
    p.add_argument("identity", choices=IDENTITY_CHOICES)
    p.add_argument("--lambda", dest="lam", type=_partition)
    p.add_argument("--tau", type=_partition, default=YoungDiagram())
    p.add_argument("--random", action="store_true", help="use a seeded random corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-area", type=int, default=5)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("table", help="tabulate every pair within an area bound")
    p.add_argument("--max-area", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    return parser


def cmd_dim(args, parser) -> int:
    rep = StableRep(args.lam, args.tau)
    if args.symbolic:
        poly = dim_polynomial(rep)
        if args.format == "json":
            _emit({**rep.to_json_obj(), "polynomial": poly.to_json_obj(), "degree": poly.degree or 0,
                   "leading_coefficient": format_rational(poly.leading_coefficient)})
        elif args.format == "latex":
            print(poly.to_latex())
        else:
            print(poly)
        return 0
    value = dim_stable(rep, args.n)
    if args.format == "json":
        _emit({**rep.to_json_obj(), "n": args.n, "dim": value})
    else:
        print(value)
    return 0


def cmd_casimir(args, parser) -> int:
    rep = StableRep(args.lam, args.tau)
    formula = casimir_formula(rep)
    if args.symbolic:
        if args.format == "json":
            _emit({**rep.to_json_obj(), "casimir": formula.to_json_obj()})
        elif args.format == "latex":
            print(formula.to_latex())
        else:
            print(formula)
        return 0
    direct = casimir_direct(realize(rep, args.n))
    value = formula.evaluate(args.n)
    agree = value == direct
    if args.format == "json":
        _emit({**rep.to_json_obj(), "n": args.n, "casimir": format_rational(value),
               "direct": format_rational(direct), "agree": agree})
    elif args.format == "latex":
        print(value.numerator if value.denominator == 1 else rf"\frac{{{value.numerator}}}{{{value.denominator}}}")
    else:
        print(f"{format_rational(value)} (direct: {format_rational(direct)}, {'agree' if agree else 'DISAGREE'})")
    return 0 if agree else 1


def _report_line(r: CheckReport) -> str:
    if r.holds is None:
        status = "not applicable"
    else:
        status = "holds" if r.holds else "FAILS"
    parts = [f"{r.identity} {r.subject}: {status}"]
    if r.sign is not None and r.holds is not None:
        parts.append(f"sign {r.sign:+d}")
    if r.witness is not None:
        parts.append(f"lhs {r.witness[0]}")
    if r.detail and r.detail != "not applicable":
        parts.append(r.detail)
    return ", ".join(parts)


def _summary(reports: Sequence[CheckReport]) -> dict[str, int]:
    return {
        "checks": len(reports),
        "hold": sum(r.holds is True for r in reports),
        "fail": sum(r.holds is False for r in reports),
        "not_applicable": sum(r.holds is None for r in reports),
    }


def cmd_verify(args, parser) -> int:
    if args.random:
        if args.lam is not None:
            parser.error("give either --lambda/--tau or --random, not both")
        if args.max_area < 0 or args.count < 0:
            parser.error("--max-area and --count must be nonnegative")
        reps = random_corpus(args.seed, args.max_area, args.count)
    else:
        if args.lam is None:
            parser.error("verify needs --lambda (and optionally --tau) or --random")
        reps = [StableRep(args.lam, args.tau)]
    names = ALL_IDENTITIES if args.identity == "all" else [args.identity]
    reports = run_checks(reps, names)
    summary = _summary(reports)
    if args.format == "json":
        _emit({"reports": [r.to_json_obj() for r in reports], "summary": summary})
    elif args.format == "latex":
        print(r"\begin{tabular}{llllr}")
        print(r"identity & $\lambda$ & $\tau$ & holds & sign \\ \hline")
        for r in reports:
            lam, tau = (r.subject.lam, r.subject.tau) if isinstance(r.subject, StableRep) else (r.subject, YoungDiagram())
            sign = "" if r.sign is None else f"{r.sign:+d}"
            holds = "n/a" if r.holds is None else ("yes" if r.holds else "no")
            print(f"{r.identity} & ${_latex_partition(lam)}$ & ${_latex_partition(tau)}$ & {holds} & {sign} \\\\")
        print(r"\end{tabular}")
    else:
        for r in reports:
            print(_report_line(r))
        print(f"{summary['checks']} checks: {summary['hold']} hold, {summary['fail']} fail, "
              f"{summary['not_applicable']} not applicable")
    return 1 if summary["fail"] else 0


def cmd_table(args, parser) -> int:
    if args.max_area < 0:
        parser.error("--max-area must be nonnegative")
    reps = exhaustive_corpus(args.max_area)
    reports = run_checks(reps, ALL_IDENTITIES)
    by_rep = [reports[i:i + len(ALL_IDENTITIES)] for i in range(0, len(reports), len(ALL_IDENTITIES))]
    rows = []
    for rep, checks in zip(reps, by_rep):
        rows.append((rep, dim_polynomial(rep), casimir_formula(rep), {c.identity: c.holds for c in checks}))

    if args.format == "json":
        _emit([
            {**rep.to_json_obj(), "dim": dim.to_json_obj(), "casimir": cas.to_json_obj(), **outcome}
            for rep, dim, cas, outcome in rows
        ])
    elif args.format == "latex":
        print(r"\begin{tabular}{lllllll}")
        print(r"$\lambda$ & $\tau$ & $\dim$ & $C$ & P1 & P2 & $Z_2$ \\ \hline")
        for rep, dim, cas, outcome in rows:
            flags = " & ".join("yes" if outcome[n] else "no" for n in ALL_IDENTITIES)
            print(f"${_latex_partition(rep.lam)}$ & ${_latex_partition(rep.tau)}$ & "
                  f"${dim.to_latex()}$ & ${cas.to_latex()}$ & {flags} \\\\")
        print(r"\end{tabular}")
    else:
        header = ["lambda", "tau", "dim", "casimir", *ALL_IDENTITIES]
        body = [
            [str(rep.lam) or "-", str(rep.tau) or "-", str(dim), str(cas),
             *("ok" if outcome[n] else "FAIL" for n in ALL_IDENTITIES)]
            for rep, dim, cas, outcome in rows
        ]
        widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
        for line in [header, *body]:
            print("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
    failed = any(not all(outcome.values()) for *_, outcome in rows)
    return 1 if failed else 0


COMMANDS = {"dim": cmd_dim, "casimir": cmd_casimir, "verify": cmd_verify, "table": cmd_table}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser)
    except RankError as exc:
        parser.exit(2, f"negn: error: rank N={exc.n} is below n_min={exc.n_min} for {exc.rep}\n")


if __name__ == "__main__":
    sys.exit(main())
