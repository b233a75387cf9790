"""Command-line entry point: ``hcaudit <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from hcaudit.decider import decide_exact_via_matchings, decide_paper
from hcaudit.graph import GraphFormatError, emit_arclist, read_arclist
from hcaudit.harness.bench import bench_scaling
from hcaudit.harness.campaign import fuzz_campaign
from hcaudit.harness.compare import Limits, NotADiscrepancy, compare_one, shrink_trace
from hcaudit.harness.generators import FAMILIES, InfeasibleSpec, InvalidProbability
from hcaudit.matching import DEFAULT_ENUM_LIMIT
from hcaudit.oracle import DEFAULT_NODE_BUDGET, BudgetExceeded, oracle

EXIT_DISCREPANCY = 2


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def cmd_decide(args) -> int:
    _dump(decide_paper(read_arclist(args.file), strong_prefilter=args.strong_prefilter).to_json())
    return 0


def cmd_oracle(args) -> int:
    try:
        res = oracle(read_arclist(args.file), args.budget)
    except BudgetExceeded as exc:
        print(f"hcaudit: {exc}", file=sys.stderr)
        return 1
    _dump(res.to_json())
    return 0


def cmd_exact(args) -> int:
    _dump(decide_exact_via_matchings(read_arclist(args.file), args.limit).to_json())
    return 0


def cmd_compare(args) -> int:
    limits = Limits(enum_limit=args.limit, node_budget=args.budget)
    rec = compare_one(read_arclist(args.file), limits)
    out = rec.to_json()
    if rec.discrepancy:
        pre, small = shrink_trace(rec.digraph, limits)
        out["shrunk_precompaction"] = emit_arclist(pre)
        out["shrunk"] = emit_arclist(small)
        if args.archive:
            with open(args.archive, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(emit_arclist(small))
    _dump(out)
    return EXIT_DISCREPANCY if rec.discrepancy else 0


def cmd_fuzz(args) -> int:
    limits = Limits(enum_limit=args.limit, node_budget=args.budget, run_exact=not args.no_exact)
    report = fuzz_campaign(
        args.family,
        args.n,
        args.trials,
        args.seed,
        limits,
        p=args.p,
        lengths=tuple(args.lengths or ()),
        workers=args.workers,
        with_timings=args.timings,
    )
    text = report.dumps()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_DISCREPANCY if report.discrepancies else 0


def cmd_shrink(args) -> int:
    limits = Limits(node_budget=args.budget)
    try:
        pre, small = shrink_trace(read_arclist(args.file), limits)
    except NotADiscrepancy as exc:
        print(f"hcaudit: {exc}", file=sys.stderr)
        return 1
    if args.precompaction:
        with open(args.precompaction, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(emit_arclist(pre))
    sys.stdout.write(emit_arclist(small))
    return 0


def cmd_bench(args) -> int:
    res = bench_scaling(args.n_list, args.p, args.seed, args.repeats)
    sys.stdout.write(res.to_csv())
    slope = "undefined" if res.slope is None else f"{res.slope:.3f}"
    print(f"log-log slope: {slope}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hcaudit", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="run the matching-cover rank test")
    p.add_argument("file")
    p.add_argument("--strong-prefilter", action="store_true",
                   help="answer NotHamiltonian early for non-strongly-connected inputs")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", help="exact Hamiltonicity (Held-Karp / backtracking)")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("exact", help="perfect-matching enumeration decider")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=DEFAULT_ENUM_LIMIT)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("compare", help="compare deciders with the oracle (exit 2 on discrepancy)")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=DEFAULT_ENUM_LIMIT)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--archive", help="write the shrunk discrepancy to this arc-list file")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("fuzz", help="seeded fuzz campaign (exit 2 if any discrepancy)")
    p.add_argument("--family", choices=[f for f in FAMILIES if f != "file"], required=True)
    p.add_argument("--n", type=_n_range, default=(6, 6), metavar="A..B")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--lengths", type=_int_list, default=None, help="cycle lengths for 'disjoint'")
    p.add_argument("--limit", type=int, default=DEFAULT_ENUM_LIMIT)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--no-exact", action="store_true", help="skip the enumeration decider")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include wall times (breaks byte-stability)")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("shrink", help="1-minimise a discrepancy instance")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--precompaction", help="also write the uncompacted instance here")
    p.set_defaults(func=cmd_shrink)

    p = sub.add_parser("bench", help="scaling benchmark, CSV on stdout")
    p.add_argument("--n-list", type=_int_list, required=True)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, InfeasibleSpec, InvalidProbability, OSError, ValueError) as exc:
        print(f"hcaudit: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
