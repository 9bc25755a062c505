"""Command-line front end.

Exit codes: 0 success, 1 invalid recurrence, 2 invalid decomposition text,
3 scan exhausted under --expect-find, 4 internal inconsistency (oracle
mismatch or counterexample verification failure).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .enumerator import (
    bijection_count,
    count_legal,
    enumerate_legal,
    first_nonunique,
    grammar_budget,
    naive_oracle,
)
from .errors import (
    BudgetExceededError,
    ConstructionFailedError,
    DecompositionTextError,
    NotApplicableError,
    RecurrenceError,
    ZecklabError,
)
from .greedy import greedy_decompose
from .legality import evaluate, is_legal, parse_decomposition
from .recurrence import classify, parse_recurrence
from .sequence import SequenceHandle
from .uniqueness import (
    CSV_HEADER,
    case1_slack_closed_form,
    construct_counterexample,
    construction_slack,
    expand_grid,
    probe_family,
    verify_uniqueness_range,
)

EXIT_OK = 0
EXIT_BAD_RECURRENCE = 1
EXIT_BAD_DECOMP = 2
EXIT_NOT_FOUND = 3
EXIT_INCONSISTENT = 4


def _handle_for(args) -> SequenceHandle:
    return SequenceHandle(parse_recurrence(args.rec))


def _decomp_json(d, handle):
    return {
        "summands": [
            {"index": idx, "mult": mult, "value": str(handle.term(idx))}
            for idx, mult in d.summands
        ]
    }


def _cmd_seq(args) -> int:
    handle = _handle_for(args)
    terms = handle.terms(args.count)
    if args.json:
        print(json.dumps({
            "recurrence": handle.spec.text,
            "terms": [str(t) for t in terms],
            "duplicate_values": handle.has_duplicate_values,
        }))
    else:
        print(" ".join(str(t) for t in terms))
        if handle.has_duplicate_values:
            print("note: the sequence repeats a value at two indices", file=sys.stderr)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    handle = _handle_for(args)
    n = int(args.n)
    decomp, trace = greedy_decompose(handle, n, trace=True)
    verdict = is_legal(decomp, handle)
    if args.json:
        payload = {"n": str(n), **_decomp_json(decomp, handle), "legal": verdict.legal}
        if args.trace:
            payload["trace"] = [
                {
                    "kind": step.kind,
                    "anchor": step.anchor,
                    "takes": [
                        {"index": i, "copies": k, "value": str(g)}
                        for i, k, g in step.takes
                    ],
                    "remainder": str(step.remainder),
                }
                for step in trace.steps
            ]
        print(json.dumps(payload))
    else:
        pieces = " + ".join(f"{m}*G_{i}({handle.term(i)})" for i, m in decomp.summands)
        print(f"{n} = {pieces or '0'}  [{'legal' if verdict.legal else 'ILLEGAL'}]")
        if args.trace:
            for step in trace.steps:
                if step.kind == "unit":
                    print(f"  exact term: G_{step.anchor}")
                else:
                    takes = ", ".join(f"{k}*G_{i}({g})" for i, k, g in step.takes)
                    print(f"  anchor {step.anchor}: took {takes or 'nothing'};"
                          f" remainder {step.remainder}")
    if not verdict.legal:
        print("greedy output failed the legality check", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def _cmd_check(args) -> int:
    handle = _handle_for(args)
    decomp = parse_decomposition(args.decomp)
    value = evaluate(decomp, handle)
    verdict = is_legal(decomp, handle)
    if args.json:
        payload = {
            "decomposition": str(decomp),
            "value": str(value),
            "legal": verdict.legal,
            "alignment": verdict.alignment,
        }
        if verdict.blocks is not None:
            payload["derivation"] = [
                {k: v for k, v in {
                    "condition": b.condition, "start": b.start,
                    "t": b.t, "coefficient": b.coefficient, "gap": b.gap,
                }.items() if v is not None}
                for b in verdict.blocks
            ]
        if verdict.reason:
            payload["reason"] = verdict.reason
        print(json.dumps(payload))
    else:
        print(f"value {value}, alignment {verdict.alignment}: "
              f"{'legal' if verdict.legal else 'illegal'}")
        if verdict.blocks:
            for b in verdict.blocks:
                extra = "" if b.condition != 3 else (
                    f" t={b.t} coeff={b.coefficient} gap={b.gap}")
                print(f"  condition {b.condition} at position {b.start}{extra}")
        elif verdict.reason:
            print(f"  {verdict.reason}")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    handle = _handle_for(args)
    n = int(args.n)
    grammar = sorted(enumerate_legal(handle, n, args.budget), key=str)
    result = grammar
    if args.oracle:
        oracle = sorted(naive_oracle(handle, n, max(n, 1)), key=str)
        if oracle != grammar:
            print(
                "INCONSISTENT: oracle and grammar enumerations disagree for "
                f"N={n}: {list(map(str, oracle))} vs {list(map(str, grammar))}",
                file=sys.stderr,
            )
            return EXIT_INCONSISTENT
        result = oracle
    if args.json:
        print(json.dumps({
            "n": str(n),
            "count": len(result),
            "decompositions": [str(d) for d in result],
        }))
    else:
        print(f"{len(result)} legal decomposition(s) of {n}")
        for d in result:
            print(f"  {d or '(empty)'}")
    return EXIT_OK


def _cmd_scan(args) -> int:
    handle = _handle_for(args)
    if args.mode == "nonunique":
        hit = first_nonunique(handle, args.max, args.budget)
        if hit is None:
            print(f"no value in 1..{args.max} has two legal decompositions")
            return EXIT_NOT_FOUND if args.expect_find else EXIT_OK
        value, count = hit
        decomps = sorted(enumerate_legal(handle, value, args.budget), key=str)
        print(f"N={value} has {count} decompositions: "
              + "; ".join(str(d) for d in decomps))
        return EXIT_OK
    report = verify_uniqueness_range(handle, args.max, args.budget)
    if report.all_unique:
        print(f"all values 1..{args.max} have a unique legal decomposition")
    else:
        value, count = report.violation
        print("=" * 60)
        print(f"RESEARCH FINDING: uniqueness fails for {handle.spec.text} "
              f"at N={value} ({count} decompositions)")
        for d in report.witnesses:
            print(f"  {d}")
        print("=" * 60)
    return EXIT_OK


def _cmd_lemma22(args) -> int:
    handle = _handle_for(args)
    try:
        slack = construction_slack(handle)
    except NotApplicableError as exc:
        print(f"not applicable: {exc}")
        return EXIT_OK
    print(f"slack = {slack} ({'negative as required' if slack < 0 else 'NOT NEGATIVE'})")
    if handle.spec.order == handle.spec.depth + 2:
        print(f"closed form check: {case1_slack_closed_form(handle)}")
    return EXIT_OK if slack < 0 else EXIT_INCONSISTENT


def _cmd_counterexample(args) -> int:
    handle = _handle_for(args)
    try:
        report = construct_counterexample(handle)
    except NotApplicableError as exc:
        print(f"not applicable: {exc}")
        return EXIT_OK
    except ConstructionFailedError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        for key, val in sorted(exc.diagnostics.items()):
            print(f"  {key}: {val}", file=sys.stderr)
        return EXIT_INCONSISTENT
    if args.json:
        print(json.dumps({
            "n": str(report.n_value),
            "x": str(report.x),
            "decompA": str(report.decompA),
            "decompB": str(report.decompB),
            "window_ok": report.window_ok,
            "count_at_n": report.count_at_n,
            "direct_pair_legal": report.direct_pair_legal,
        }))
    else:
        print(f"N = {report.n_value} (x = {report.x}, window ok: {report.window_ok})")
        print(f"  A: {report.decompA}")
        print(f"  B: {report.decompB}")
        print(f"  total legal decompositions of N: {report.count_at_n}")
        if not report.direct_pair_legal:
            print("  note: the construction's direct second candidate "
                  f"{report.direct_candidate} is not grammar-legal; "
                  "B was found by enumeration")
    return EXIT_OK


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(p) for p in text.split(";")]


def _cmd_probe(args) -> int:
    grid: dict[str, str] = {}
    for part in args.grid.split(","):
        key, _, val = part.partition("=")
        grid[key.strip()] = val.strip()
    depths = _parse_range(grid.get("s", "1..2"))
    spans = _parse_range(grid.get("span", "2..3"))
    c_max = int(grid.get("c", "3").split("..")[-1])
    texts, skipped = expand_grid(depths, spans, c_max)
    for note in skipped:
        print(f"skipped invalid grid point: {note}", file=sys.stderr)
    records = probe_family(texts, args.max, args.budget)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(CSV_HEADER.split(","))
        for rec in records:
            writer.writerow(rec.csv_cells())
    finally:
        if args.out:
            out.close()
    findings = [r for r in records if r.status != "ok"]
    if findings:
        print(f"{len(findings)} of {len(records)} families reported a non-ok "
              "status; inspect the CSV", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zecklab",
        description="Decompositions over linear recurrence numeration systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, budget=True):
        p.add_argument("--rec", required=True, help="coefficients c1,c2,...,cL")
        p.add_argument("--json", action="store_true")
        if budget:
            p.add_argument("--budget", type=int, default=grammar_budget())

    p = sub.add_parser("seq", help="print sequence terms")
    common(p, budget=False)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("decompose", help="greedy decomposition of N")
    common(p, budget=False)
    p.add_argument("--n", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("check", help="legality verdict for a decomposition")
    common(p, budget=False)
    p.add_argument("--decomp", required=True, help='e.g. "8:2,7:1,5:2"')
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enumerate", help="all legal decompositions of N")
    common(p)
    p.add_argument("--n", required=True)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with the brute-force oracle")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("scan", help="scan a range for uniqueness failures")
    common(p)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--mode", choices=["nonunique", "unique"], default="nonunique")
    p.add_argument("--expect-find", action="store_true")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("lemma22", help="window-slack value for the construction")
    common(p, budget=False)
    p.set_defaults(func=_cmd_lemma22)

    p = sub.add_parser("counterexample", help="build the two-decompositions witness")
    common(p)
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("probe", help="sweep a family grid, write CSV")
    p.add_argument("--grid", default="s=1..2,span=2..3,c=0..3",
                   help='e.g. "s=1..2,span=2..3,c=0..3"')
    p.add_argument("--max", type=int, default=5000)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.add_argument("--budget", type=int, default=grammar_budget())
    p.set_defaults(func=_cmd_probe)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RecurrenceError as exc:
        print(f"invalid recurrence: {exc}", file=sys.stderr)
        return EXIT_BAD_RECURRENCE
    except DecompositionTextError as exc:
        print(f"invalid decomposition: {exc}", file=sys.stderr)
        return EXIT_BAD_DECOMP
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ZecklabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
