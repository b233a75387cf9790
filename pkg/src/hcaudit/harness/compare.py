"""Decider-versus-oracle comparison and discrepancy shrinking."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from hcaudit.decider import Verdict, VerdictKind, decide_exact_via_matchings, decide_paper
from hcaudit.graph import Digraph, emit_arclist
from hcaudit.harness.generators import GenSpec
from hcaudit.matching import DEFAULT_ENUM_LIMIT
from hcaudit.oracle import DEFAULT_NODE_BUDGET, BudgetExceeded, OracleResult, oracle


class SoundnessViolation(AssertionError):
    """A negative paper verdict on a Hamiltonian digraph, or an exact-decider
    answer that contradicts the oracle. Either one is a bug, not a finding."""

    def __init__(self, message: str, digraph: Digraph):
        self.digraph = digraph
        super().__init__(f"{message}\n{emit_arclist(digraph)}")


class NotADiscrepancy(ValueError):
    pass


@dataclass(frozen=True)
class Limits:
    enum_limit: int = DEFAULT_ENUM_LIMIT
    node_budget: int = DEFAULT_NODE_BUDGET
    run_exact: bool = True


@dataclass(frozen=True)
class ComparisonRecord:
    digraph: Digraph
    paper_verdict: Verdict
    exact_verdict: Verdict | None
    oracle: OracleResult | None
    spec: GenSpec | None = None
    timings: dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def discrepancy(self) -> bool | None:
        """None when the oracle was skipped."""
        if self.oracle is None:
            return None
        return (
            self.paper_verdict.kind is VerdictKind.CLAIMED_HAMILTONIAN
            and not self.oracle.hamiltonian
        )

    def to_json(self, with_timings: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "instance": emit_arclist(self.digraph),
            "paper_verdict": self.paper_verdict.to_json(),
            "exact_verdict": None if self.exact_verdict is None else self.exact_verdict.to_json(),
            "oracle": None if self.oracle is None else self.oracle.to_json(),
            "discrepancy": self.discrepancy,
        }
        if self.spec is not None:
            out["spec"] = self.spec.to_json()
        if with_timings:
            out["timings"] = dict(self.timings)
        return out


def _run_oracle(d: Digraph, limits: Limits) -> OracleResult | None:
    try:
        return oracle(d, limits.node_budget)
    except BudgetExceeded:
        return None


def compare_one(d: Digraph, limits: Limits = Limits(), spec: GenSpec | None = None) -> ComparisonRecord:
    clock = time.perf_counter
    timings: dict[str, float] = {}
    t = clock()
    stages: dict[str, float] = {}
    paper = decide_paper(d, timings=stages)
    timings["paper"] = clock() - t
    timings.update({f"paper.{k}": v for k, v in stages.items()})

    exact = None
    if limits.run_exact:
        t = clock()
        exact = decide_exact_via_matchings(d, limits.enum_limit)
        timings["exact"] = clock() - t

    t = clock()
    truth = _run_oracle(d, limits)
    timings["oracle"] = clock() - t

    if truth is not None:
        if truth.hamiltonian and paper.kind.is_negative:
            raise SoundnessViolation(
                f"paper pipeline said {paper.kind.value} on a Hamiltonian digraph", d
            )
        if exact is not None and exact.kind is not VerdictKind.UNKNOWN:
            if (exact.kind is VerdictKind.HAMILTONIAN) != truth.hamiltonian:
                raise SoundnessViolation(
                    f"exact decider said {exact.kind.value}, oracle said {truth.hamiltonian}", d
                )
    return ComparisonRecord(d, paper, exact, truth, spec, timings)


def is_discrepant(d: Digraph, limits: Limits = Limits()) -> bool:
    """Paper pipeline claims Hamiltonian and the oracle refutes it."""
    if decide_paper(d).kind is not VerdictKind.CLAIMED_HAMILTONIAN:
        return False
    truth = _run_oracle(d, limits)
    return truth is not None and not truth.hamiltonian


def compact(d: Digraph) -> Digraph:
    """Drop vertices touched by no arc, relabelling the rest in order."""
    used = sorted({v for a in d.arcs for v in a})
    relabel = {v: i for i, v in enumerate(used)}
    return Digraph(len(used), tuple((relabel[u], relabel[v]) for u, v in d.arcs))


def shrink_trace(d: Digraph, limits: Limits = Limits()) -> tuple[Digraph, Digraph]:
    """Greedy 1-minimisation; returns (pre-compaction, compacted) instances."""
    if not is_discrepant(d, limits):
        raise NotADiscrepancy("instance is not a discrepancy")
    arcs = list(d.arcs)
    changed = True
    while changed:
        changed = False
        j = 0
        while j < len(arcs):
            trial = arcs[:j] + arcs[j + 1:]
            if is_discrepant(Digraph(d.n, tuple(trial)), limits):
                arcs = trial
                changed = True
            else:
                j += 1
    pre = Digraph(d.n, tuple(arcs))
    small = compact(pre)
    # an isolated vertex blocks every perfect matching, so this never fires
    if not is_discrepant(small, limits):  # pragma: no cover
        small = pre
    return pre, small


def shrink(d: Digraph, limits: Limits = Limits()) -> Digraph:
    return shrink_trace(d, limits)[1]
