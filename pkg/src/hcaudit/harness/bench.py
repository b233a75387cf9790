"""Wall-clock scaling of the paper pipeline on random digraphs."""

from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass

import numpy as np

from hcaudit.decider import decide_paper
from hcaudit.harness.generators import GenSpec, generate, trial_seed

STAGES = ("zmap", "matching", "allowed", "rank")


@dataclass(frozen=True)
class BenchRow:
    n: int
    repeats: int
    mean_arcs: float
    total_s: float
    stages: dict[str, float]


@dataclass(frozen=True)
class BenchResult:
    rows: list[BenchRow]
    slope: float | None

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "repeats", "mean_arcs", "total_s", *(f"{s}_s" for s in STAGES)])
        for r in self.rows:
            w.writerow([r.n, r.repeats, f"{r.mean_arcs:.1f}", f"{r.total_s:.6f}",
                        *(f"{r.stages[s]:.6f}" for s in STAGES)])
        return buf.getvalue()


def loglog_slope(ns, times) -> float | None:
    if len(ns) < 2 or any(t <= 0 for t in times):
        return None
    slope, _ = np.polyfit(np.log(ns), np.log(times), 1)
    return float(slope)


def bench_scaling(n_list, p: float, seed: int = 0, repeats: int = 3) -> BenchResult:
    n_list = list(n_list)
    if n_list != sorted(n_list):
        raise ValueError("n_list must be ascending")
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    rows = []
    for n in n_list:
        totals = []
        sums = dict.fromkeys(STAGES, 0.0)
        arcs = 0
        for r in range(repeats):
            d = generate(GenSpec("gnp", n, trial_seed(seed, n * 1_000 + r), p))
            arcs += d.m
            stages: dict[str, float] = {}
            t0 = time.perf_counter()
            decide_paper(d, timings=stages)
            totals.append(time.perf_counter() - t0)
            for s in STAGES:
                sums[s] += stages.get(s, 0.0)
        rows.append(BenchRow(n, repeats, arcs / repeats, math.fsum(totals) / repeats,
                             {s: v / repeats for s, v in sums.items()}))
    slope = loglog_slope([r.n for r in rows], [r.total_s for r in rows])
    return BenchResult(rows, slope)
