"""Command-line interface.

Six subcommands: verify, intersect, construct, search, audit, report.
Every subcommand takes --format {text,json} and --output PATH. JSON
output always uses the fixed-key envelope from reporting. Exit status:
0 on success, 1 when a check fails or the searched value disagrees with
the closed form, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import pathlib
import sys
import time
from typing import Optional, Sequence

from .audits import CLAIM_IDS, DEFAULT_SEED, run_claim
from .constructions import (
    balanced_split,
    construction_intersection_size,
    m_formula,
    split_of,
    type_xy,
)
from .families import GroundSet, find_violation, intersection_family
from .pairfile import ParseError, format_family_file, parse_family_file
from .reporting import (
    envelope,
    family_lists,
    finding_obj,
    render_json,
    search_envelope,
    witness_obj,
)
from .search import Pruning, default_worker_count, search_m


def _ms(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output:
        pathlib.Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _read_pair(args: argparse.Namespace):
    return parse_family_file(
        pathlib.Path(args.file).read_text(encoding="utf-8")
    )


def _auto_pruning(n: int) -> Pruning:
    if n <= 4:
        return Pruning.NONE
    if n == 5:
        return Pruning.COMMON_ELEMENT
    return Pruning.FULL


def _pick_pruning(args: argparse.Namespace) -> Pruning:
    if args.pruning == "auto":
        return _auto_pruning(args.n)
    return Pruning.from_string(args.pruning)


def _render_findings_text(findings) -> list[str]:
    lines = []
    fails = 0
    for f in findings:
        tag = "PASS" if f.passed else "FAIL"
        fails += 0 if f.passed else 1
        lines.append(f"[{tag}] {f.claim}: {f.instance}")
        if f.counterexample is not None:
            lines.append(f"       counterexample: {json.dumps(f.counterexample, sort_keys=True)}")
    lines.append(f"{len(findings)} findings, {fails} failures")
    return lines


def _cmd_verify(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    pair = _read_pair(args)
    viol = find_violation(pair)
    ok = viol is None
    if args.format == "json":
        counter = None
        if viol is not None:
            counter = {
                "A": list(viol[0].elements()),
                "B": list(viol[1].elements()),
            }
        finding = {
            "claim": "cross-sperner",
            "passed": ok,
            "instance": str(pair),
            "counterexample": counter,
        }
        doc = envelope(
            n=pair.ground.n,
            command="verify",
            elapsed_ms=_ms(t0),
            findings=[finding],
        )
        _emit(args, render_json(doc))
    else:
        lines = [f"n={pair.ground.n}", f"F = {pair.f}", f"G = {pair.g}"]
        if ok:
            lines.append("cross-Sperner: yes")
        else:
            lines.append("cross-Sperner: no")
            lines.append(f"violation: A={viol[0]} B={viol[1]}")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def _cmd_intersect(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    pair = _read_pair(args)
    inter = intersection_family(pair)
    if args.format == "json":
        finding = {
            "claim": "intersection-family",
            "passed": True,
            "instance": json.dumps(family_lists(inter), sort_keys=True),
            "counterexample": None,
        }
        doc = envelope(
            n=pair.ground.n,
            command="intersect",
            elapsed_ms=_ms(t0),
            m_value=len(inter),
            findings=[finding],
        )
        _emit(args, render_json(doc))
    else:
        lines = [f"n={pair.ground.n}", f"|I(F, G)| = {len(inter)}"]
        lines += [str(m) for m in inter]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    ground = GroundSet(args.n)
    if args.x:
        split = split_of(ground, args.x)
    else:
        split = balanced_split(ground)
    pair = type_xy(split)
    measured = len(intersection_family(pair))
    predicted = construction_intersection_size(split.x.size, split.y.size)
    if args.format == "json":
        witness = {
            "F": family_lists(pair.f),
            "G": family_lists(pair.g),
            "split": {
                "X": list(split.x.elements()),
                "Y": list(split.y.elements()),
            },
        }
        doc = envelope(
            n=args.n,
            command="construct",
            elapsed_ms=_ms(t0),
            method="type-xy",
            m_value=measured,
            formula_value=m_formula(args.n),
            agrees=measured == m_formula(args.n),
            witnesses=[witness],
        )
        _emit(args, render_json(doc))
    else:
        _emit(args, format_family_file(pair))
    return 0 if measured == predicted else 1


def _cmd_search(args: argparse.Namespace) -> int:
    pruning = _pick_pruning(args)
    workers = args.workers if args.workers else default_worker_count()
    report = search_m(
        args.n, pruning, enumerate_witnesses=True, workers=workers
    )
    if args.format == "json":
        _emit(args, render_json(search_envelope(report)))
    else:
        lines = [
            f"n={report.n} pruning={report.pruning.value} workers={workers}",
            f"m = {report.m_value}",
            f"closed form = {report.formula_value}",
            f"agree: {'yes' if report.agrees else 'no'}",
            f"candidates examined = {report.candidates_examined}",
            f"mutually maximal pairs = {report.mutually_maximal_found}",
            f"witness classes = {len(report.witnesses)}",
        ]
        for w in report.witnesses:
            if w.split is not None:
                tail = f" split X={w.split.x} Y={w.split.y}"
            else:
                tail = " split none"
            lines.append(f"  witness: {w.pair}{tail}")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if report.agrees else 1


def _cmd_audit(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    findings = run_claim(
        args.claim, args.n, samples=args.samples, seed=args.seed
    )
    ok = all(f.passed for f in findings)
    if args.format == "json":
        doc = envelope(
            n=args.n,
            command="audit",
            elapsed_ms=_ms(t0),
            method=args.claim,
            findings=[finding_obj(f) for f in findings],
            seed=args.seed,
        )
        _emit(args, render_json(doc))
    else:
        _emit(args, "\n".join(_render_findings_text(findings)) + "\n")
    return 0 if ok else 1


def _cmd_report(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    pruning = _pick_pruning(args)
    workers = args.workers if args.workers else default_worker_count()
    report = search_m(
        args.n, pruning, enumerate_witnesses=True, workers=workers
    )
    findings = run_claim("all", args.n, samples=args.samples, seed=args.seed)
    ok = report.agrees and all(f.passed for f in findings)
    if args.format == "json":
        doc = envelope(
            n=args.n,
            command="report",
            elapsed_ms=_ms(t0),
            method=report.pruning.value,
            m_value=report.m_value,
            formula_value=report.formula_value,
            agrees=report.agrees,
            witnesses=[witness_obj(w) for w in report.witnesses],
            findings=[finding_obj(f) for f in findings],
            candidates_examined=report.candidates_examined,
            seed=args.seed,
        )
        _emit(args, render_json(doc))
    else:
        lines = [
            f"n={report.n} pruning={report.pruning.value}",
            f"m = {report.m_value}",
            f"closed form = {report.formula_value}",
            f"agree: {'yes' if report.agrees else 'no'}",
            f"witness classes = {len(report.witnesses)}",
            "",
        ]
        lines += _render_findings_text(findings)
        _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--output",
        metavar="PATH",
        default=None,
        help="write the report to PATH instead of stdout",
    )

    parser = argparse.ArgumentParser(
        prog="cross-sperner",
        description=(
            "Exact analysis of cross-Sperner pairs: constructions,"
            " exhaustive search, and claim audits."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="check a pair file for the cross-Sperner property",
    )
    p.add_argument("file", help="pair file to check")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "intersect",
        parents=[common],
        help="list the pairwise-intersection family of a pair file",
    )
    p.add_argument("file", help="pair file to read")
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser(
        "construct",
        parents=[common],
        help=(
            "emit an extremal-construction pair; text output is a valid"
            " pair file"
        ),
    )
    p.add_argument("--n", type=int, required=True, help="ground set size")
    p.add_argument(
        "--x",
        type=int,
        nargs="+",
        metavar="ELEM",
        help="elements of the first block (default: balanced split)",
    )
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser(
        "search",
        parents=[common],
        help="exhaustively determine the maximum intersection-family size",
    )
    p.add_argument("--n", type=int, required=True, help="ground set size")
    p.add_argument(
        "--pruning",
        choices=("auto", "none", "common-element", "full"),
        default="auto",
        help="search space restriction (default: weakest feasible level)",
    )
    p.add_argument(
        "--workers",
        type=int,
        default=None,
        help="worker processes (default: CPU count)",
    )
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser(
        "audit",
        parents=[common],
        help="check structural claims on concrete instances",
    )
    p.add_argument(
        "--claim",
        choices=CLAIM_IDS + ("all",),
        default="all",
        help="claim to audit (default: all)",
    )
    p.add_argument(
        "--n", type=int, default=4, help="instance size (default: 4)"
    )
    p.add_argument(
        "--samples",
        type=int,
        default=10000,
        help="sample count for randomized audits (default: 10000)",
    )
    p.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"random seed for sampled audits (default: {DEFAULT_SEED})",
    )
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser(
        "report",
        parents=[common],
        help="search plus the full audit battery in one report",
    )
    p.add_argument("--n", type=int, required=True, help="ground set size")
    p.add_argument(
        "--pruning",
        choices=("auto", "none", "common-element", "full"),
        default="auto",
        help="search space restriction (default: weakest feasible level)",
    )
    p.add_argument(
        "--workers", type=int, default=None, help="worker processes"
    )
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    raise SystemExit(main())
