"""Fuzz campaigns: many seeded comparisons, aggregated into a JSON report."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any

from hcaudit.decider import VerdictKind
from hcaudit.graph import emit_arclist, parse_arclist
from hcaudit.harness.compare import ComparisonRecord, Limits, compare_one, is_discrepant, shrink_trace
from hcaudit.harness.generators import GenSpec, generate, splitmix64, trial_seed

TOTAL_KEYS = ("true_pos", "true_neg", "claimed_pos_oracle_neg", "no_pm", "rank_deficient")


@dataclass
class CampaignReport:
    config: dict[str, Any]
    totals: dict[str, int]
    oracle_skipped: int
    discrepancies: list[dict[str, Any]]
    wall_time: dict[str, float] | None = None
    per_n: dict[str, dict[str, int]] = field(default_factory=dict)

    @property
    def trials(self) -> int:
        return sum(self.totals.values()) + self.oracle_skipped

    def to_json(self) -> dict[str, Any]:
        out = {
            "config": self.config,
            "totals": self.totals,
            "oracle_skipped": self.oracle_skipped,
            "per_n": self.per_n,
            "discrepancies": self.discrepancies,
        }
        if self.wall_time is not None:
            out["wall_time"] = self.wall_time
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def outcome(rec: ComparisonRecord) -> str | None:
    """Confusion bucket of a record; None if the oracle was skipped."""
    if rec.oracle is None:
        return None
    kind = rec.paper_verdict.kind
    if kind is VerdictKind.CLAIMED_HAMILTONIAN:
        return "true_pos" if rec.oracle.hamiltonian else "claimed_pos_oracle_neg"
    if kind is VerdictKind.NO_PERFECT_MATCHING:
        return "no_pm"
    if kind is VerdictKind.RANK_DEFICIENT:
        return "rank_deficient"
    return "true_neg"


def trial_spec(family: str, n_range: tuple[int, int], master_seed: int, index: int,
               p: float | None, lengths: tuple[int, ...]) -> GenSpec:
    seed = trial_seed(master_seed, index)
    lo, hi = n_range
    n = lo + splitmix64(seed) % (hi - lo + 1)
    if family == "disjoint":
        n = sum(lengths)
    elif family == "prism":
        n = 6
    return GenSpec(family, n, seed, p, tuple(lengths))


def _run_trial(args) -> tuple[int, ComparisonRecord]:
    index, spec, limits = args
    return index, compare_one(generate(spec), limits, spec)


def _archive(index: int, rec: ComparisonRecord, limits: Limits, do_shrink: bool) -> dict[str, Any]:
    entry: dict[str, Any] = {"trial": index, **rec.to_json()}
    if do_shrink:
        pre, small = shrink_trace(rec.digraph, limits)
        small_rec = compare_one(small, limits)
        entry["shrunk_precompaction"] = emit_arclist(pre)
        entry["shrunk"] = emit_arclist(small)
        entry["shrunk_paper_verdict"] = small_rec.paper_verdict.to_json()
        entry["shrunk_oracle"] = small_rec.oracle.to_json()
    return entry


def fuzz_campaign(
    family: str,
    n_range: tuple[int, int],
    trials: int,
    master_seed: int,
    limits: Limits = Limits(),
    *,
    p: float | None = None,
    lengths: tuple[int, ...] = (),
    workers: int = 1,
    shrink_discrepancies: bool = True,
    with_timings: bool = False,
) -> CampaignReport:
    """Run ``trials`` seeded comparisons.

    The report depends only on the arguments, never on ``workers``; wall
    times are left out unless ``with_timings`` is set.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    lo, hi = n_range
    if lo > hi:
        raise ValueError(f"empty n range {lo}..{hi}")
    start = time.perf_counter()
    jobs = [(i, trial_spec(family, n_range, master_seed, i, p, tuple(lengths)), limits)
            for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_trial, jobs, chunksize=max(1, trials // (4 * workers))))
    else:
        results = [_run_trial(job) for job in jobs]
    results.sort(key=lambda r: r[0])

    totals = dict.fromkeys(TOTAL_KEYS, 0)
    per_n: dict[str, dict[str, int]] = {}
    skipped = 0
    archive = []
    trial_time = 0.0
    for index, rec in results:
        trial_time += sum(v for k, v in rec.timings.items() if "." not in k)
        bucket = outcome(rec)
        if bucket is None:
            skipped += 1
            continue
        totals[bucket] += 1
        row = per_n.setdefault(str(rec.digraph.n), dict.fromkeys(TOTAL_KEYS, 0))
        row[bucket] += 1
        if rec.discrepancy:
            archive.append(_archive(index, rec, limits, shrink_discrepancies))

    config = {
        "family": family,
        "n_range": [lo, hi],
        "trials": trials,
        "master_seed": master_seed,
        "p": p,
        "lengths": list(lengths),
        "limits": asdict(limits),
    }
    wall = None
    if with_timings:
        wall = {"total_s": time.perf_counter() - start, "mean_trial_s": trial_time / trials}
    return CampaignReport(config, totals, skipped, archive, wall, dict(sorted(per_n.items())))


def revalidate(report: dict[str, Any], limits: Limits = Limits()) -> list[bool]:
    """Re-run every archived discrepancy (original and shrunk) from its stored text."""
    out = []
    for entry in report["discrepancies"]:
        ok = is_discrepant(parse_arclist(entry["instance"]), limits)
        for key in ("shrunk", "shrunk_precompaction"):
            if key in entry:
                ok = ok and is_discrepant(parse_arclist(entry[key]), limits)
        out.append(ok)
    return out
