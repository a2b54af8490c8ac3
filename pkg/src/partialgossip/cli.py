"""Command-line driver.

Commands: pvalue, table, synth, verify, oracle, check-lemma.
Exit codes: 0 success, 1 validation/usage error, 2 violation or timeout
(verification target missed, lemma violations found, search budget spent).
All JSON output has a fixed key order so golden-file comparisons are stable.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .constructions import (
    max_feasible_blocks,
    synth_doubling,
    synth_multiblock,
    synth_tree_variant,
)
from .core import (
    Schedule,
    ValidationError,
    apply_preliminary,
    is_k_informing,
    schedule_from_json,
    schedule_to_json,
)
from .formulas import REGIME_BAND, classify_regime, p_min_calls
from .graph import classify_components, full_graph, to_dot
from .lemmas import LEMMA_IDS, LemmaParams, check_lemma
from .oracle import FOUND, SearchConfig, min_calls_bruteforce

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_VIOLATION = 2

_METHODS = {
    "doubling": synth_doubling,
    "tree": synth_tree_variant,
    "multiblock": synth_multiblock,
}


def _emit(doc: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print(text)


def _cmd_pvalue(args) -> int:
    regime = classify_regime(args.n, args.k)
    p = p_min_calls(args.n, args.k)
    doc: dict = {"p": p, "regime": regime.kind}
    if regime.kind == REGIME_BAND:
        doc["i"] = regime.i
        text = f"P({args.n},{args.k}) = {p}  [regime 2, i={regime.i}]"
    else:
        text = f"P({args.n},{args.k}) = {p}  [regime 1]"
    _emit(doc, args.format, text)
    return EXIT_OK


def _cmd_table(args) -> int:
    if args.n_min > args.n_max:
        raise ValidationError(f"empty range: n_min={args.n_min} > n_max={args.n_max}")
    boundary = (1 << (args.k - 1)) - 1
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        regime = classify_regime(n, args.k)
        row = {"n": n, "p": p_min_calls(n, args.k), "regime": regime.kind}
        if regime.kind == REGIME_BAND:
            row["i"] = regime.i
        rows.append(row)
    if args.format == "json":
        print(json.dumps({"k": args.k, "boundary": boundary, "rows": rows},
                         separators=(",", ":")))
        return EXIT_OK
    print(f"k={args.k}  (regime boundary at n = 2^(k-1)-1 = {boundary})")
    print(f"{'n':>6} {'P(n,k)':>8} {'regime':>7} {'i':>4}")
    for row in rows:
        i_txt = str(row.get("i", "-"))
        mark = "  <- boundary" if row["n"] == boundary else ""
        print(f"{row['n']:>6} {row['p']:>8} {row['regime']:>7} {i_txt:>4}{mark}")
    return EXIT_OK


def _cmd_synth(args) -> int:
    method = _METHODS[args.method]
    if args.method == "multiblock":
        schedule = method(args.n, args.k, args.i, args.blocks)
    else:
        schedule = method(args.n, args.k, args.i)
    if not is_k_informing(schedule, args.k):  # validate before writing
        raise AssertionError("synthesized schedule failed its own verification")
    payload = schedule_to_json(schedule, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(payload)
    if args.dot:
        Path(args.dot).write_text(to_dot(schedule))
    doc = {
        "method": args.method,
        "n": args.n,
        "k": args.k,
        "i": args.i,
        "calls": len(schedule.calls),
        "k_informing": True,
    }
    if args.method == "multiblock":
        doc["blocks"] = args.blocks if args.blocks else max_feasible_blocks(args.n, args.k, args.i)
    if args.format == "dot":
        print(to_dot(schedule), end="")
    elif args.out:
        doc["file"] = args.out
        _emit(doc, args.format,
              f"wrote {len(schedule.calls)} calls ({args.method}, n={args.n}, "
              f"k={args.k}, i={args.i}) to {args.out}")
    elif args.format == "json":
        print(schedule_to_json(schedule))
    else:
        print(schedule_to_json(schedule, indent=2))
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        text = Path(args.file).read_text()
    except OSError as e:
        raise ValidationError(f"cannot read {args.file}: {e}") from e
    aug = schedule_from_json(text)
    state = apply_preliminary(aug)
    aw = state.awareness()
    informing = min(aw) >= args.k
    exact = all(a == args.k for a in aw)
    merged = Schedule(aug.n, list(aug.preliminary) + list(aug.base.calls))
    components = [
        {"vertices": sorted(vs), "kind": str(kind)}
        for vs, kind in classify_components(full_graph(merged))
    ]
    doc = {
        "n": aug.n,
        "k": args.k,
        "calls": len(aug.base.calls),
        "preliminary": len(aug.preliminary),
        "awareness": aw,
        "min_awareness": min(aw),
        "k_informing": informing,
        "exact_k_informing": exact,
        "components": components,
    }
    if args.format == "json":
        print(json.dumps(doc, separators=(",", ":")))
    else:
        verdict = "PASS" if informing else "FAIL"
        print(f"{verdict}: min awareness {min(aw)} (target k={args.k})"
              f"{', exact' if exact else ''}")
        print(f"  n={aug.n}, {len(aug.preliminary)} preliminary + {len(aug.base.calls)} calls")
        print(f"  awareness: {aw}")
        for comp in components:
            print(f"  component {comp['vertices']}: {comp['kind']}")
    return EXIT_OK if informing else EXIT_VIOLATION


def _cmd_oracle(args) -> int:
    cfg = SearchConfig(time_budget=args.budget_secs)
    result = min_calls_bruteforce(args.n, args.k, cfg)
    doc = {
        "n": args.n,
        "k": args.k,
        "status": result.status,
        "min_calls": result.min_calls,
        "refuted_depth": result.refuted_depth,
        "nodes": result.nodes,
        "witness": result.witness.pairs() if result.witness else None,
    }
    if args.format == "json":
        print(json.dumps(doc, separators=(",", ":")))
    elif result.status == FOUND:
        print(f"min calls for (n={args.n}, k={args.k}): {result.min_calls}")
        print(f"  witness: {result.witness.pairs()}")
    else:
        print(f"{result.status}: no schedule with <= {result.refuted_depth} calls exists "
              f"({result.nodes} nodes searched)")
    return EXIT_OK if result.status == FOUND else EXIT_VIOLATION


def _cmd_check_lemma(args) -> int:
    params = LemmaParams(
        max_sampled_n=args.max_n,
        samples=args.samples,
        max_prelim=args.prelim_max,
        seed=args.seed,
        bound_slack=args.bound_slack,
    )
    report = check_lemma(args.lemma, params)
    doc = report.to_json_dict()
    if args.format == "json":
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print(f"{report.lemma_id}: {report.instances_checked} instances, "
              f"{len(report.violations)} violations")
        for v in report.violations[:10]:
            print(f"  bound {v.expected_bound} violated (observed {v.observed_n}): {v.instance}")
        if len(report.violations) > 10:
            print(f"  ... and {len(report.violations) - 10} more")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partialgossip",
        description="Optimal partial-gossip call counts, schedule synthesis and verification.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "text"), default="text",
                       help="output format (default: text)")

    p = sub.add_parser("pvalue", help="print P(n,k), its regime and band index")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_pvalue)

    p = sub.add_parser("table", help="tabulate P(n,k) for a range of n")
    p.add_argument("k", type=int)
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("synth", help="synthesize an optimal schedule of n+i calls")
    p.add_argument("method", choices=sorted(_METHODS))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("i", type=int)
    p.add_argument("--blocks", type=int, default=None,
                   help="block count for multiblock (default: maximum feasible)")
    p.add_argument("--out", help="write schedule JSON here (default: stdout)")
    p.add_argument("--dot", help="also write a DOT rendering here")
    p.add_argument("--format", choices=("json", "dot", "text"), default="text",
                   help="stdout format (default: text)")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("verify", help="simulate a schedule file and report awareness")
    p.add_argument("file")
    p.add_argument("k", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="exact minimum call count by exhaustive search")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--budget-secs", type=float, default=600.0)
    add_format(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("check-lemma", help="run one lemma verification suite")
    p.add_argument("lemma", choices=LEMMA_IDS)
    p.add_argument("--max-n", type=int, default=8, help="largest sampled scheme size")
    p.add_argument("--samples", type=int, default=400)
    p.add_argument("--prelim-max", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound-slack", type=int, default=0,
                   help="tighten bounds by this much (negative-control mode)")
    add_format(p)
    p.set_defaults(func=_cmd_check_lemma)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
