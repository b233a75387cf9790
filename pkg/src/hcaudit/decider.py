"""Decision procedures built on the Z-mapping.

``decide_paper`` is the cubic-time rank test over the matching-covered
subgraph; its positive answer is reported as ``ClaimedHamiltonian`` because
that direction is what the harness audits. ``decide_exact_via_matchings``
checks every perfect matching individually and is exact when it finishes.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Any

from hcaudit.graph import Digraph, is_strongly_connected, rank_of_arcset
from hcaudit.matching import (
    DEFAULT_ENUM_LIMIT,
    allowed_edges,
    iter_perfect_matchings,
    max_matching,
)
from hcaudit.zmap import build_zmap, preimage


class VerdictKind(enum.Enum):
    NO_PERFECT_MATCHING = "NoPerfectMatching"
    RANK_DEFICIENT = "RankDeficient"
    CLAIMED_HAMILTONIAN = "ClaimedHamiltonian"
    HAMILTONIAN = "Hamiltonian"
    NOT_HAMILTONIAN = "NotHamiltonian"
    UNKNOWN = "Unknown"

    @property
    def is_negative(self) -> bool:
        return self in (
            VerdictKind.NO_PERFECT_MATCHING,
            VerdictKind.RANK_DEFICIENT,
            VerdictKind.NOT_HAMILTONIAN,
        )


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    rank: int | None = None
    components: int | None = None
    witness: tuple[int, ...] | None = None
    matchings_examined: int | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "rank": self.rank,
            "components": self.components,
            "witness": None if self.witness is None else list(self.witness),
            "matchings_examined": self.matchings_examined,
        }

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> Verdict:
        w = obj.get("witness")
        return cls(
            VerdictKind(obj["kind"]),
            obj.get("rank"),
            obj.get("components"),
            None if w is None else tuple(w),
            obj.get("matchings_examined"),
        )


def decide_paper(
    d: Digraph,
    *,
    strong_prefilter: bool = False,
    timings: dict[str, float] | None = None,
) -> Verdict:
    """Rank test on the preimage of the allowed-edge subgraph C(G).

    ``timings``, if given, receives per-stage wall-clock seconds under the
    keys ``zmap``, ``matching``, ``allowed`` and ``rank``.
    """
    if d.n < 2:
        return Verdict(VerdictKind.NOT_HAMILTONIAN)
    if strong_prefilter and not is_strongly_connected(d):
        return Verdict(VerdictKind.NOT_HAMILTONIAN)

    clock = time.perf_counter
    t0 = clock()
    z = build_zmap(d)
    g = z.graph
    _ = g.adjacency
    t1 = clock()
    m = max_matching(g)
    t2 = clock()
    if timings is not None:
        timings.update(zmap=t1 - t0, matching=t2 - t1, allowed=0.0, rank=0.0)
    if len(m) < d.n:
        return Verdict(VerdictKind.NO_PERFECT_MATCHING)

    cover = allowed_edges(g, m)
    t3 = clock()
    rr = rank_of_arcset(d, preimage(z, cover.members))
    t4 = clock()
    if timings is not None:
        timings.update(allowed=t3 - t2, rank=t4 - t3)
    kind = (
        VerdictKind.CLAIMED_HAMILTONIAN if rr.rank == d.n - 1 else VerdictKind.RANK_DEFICIENT
    )
    return Verdict(kind, rr.rank, rr.components)


def decide_exact_via_matchings(d: Digraph, limit: int = DEFAULT_ENUM_LIMIT) -> Verdict:
    """Hamiltonian iff some perfect matching of Z(D) pulls back to a
    connected arc set (rank n-1). Three-valued when ``limit`` cuts the
    enumeration short."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if d.n < 2:
        return Verdict(VerdictKind.NOT_HAMILTONIAN, matchings_examined=0)
    z = build_zmap(d)
    examined = 0
    for pairs in iter_perfect_matchings(z.graph):
        if examined == limit:
            return Verdict(VerdictKind.UNKNOWN, matchings_examined=examined)
        examined += 1
        arcs = preimage(z, pairs)
        rr = rank_of_arcset(d, arcs)
        if rr.rank == d.n - 1:
            return Verdict(
                VerdictKind.HAMILTONIAN,
                rr.rank,
                rr.components,
                witness=tuple(sorted(arcs)),
                matchings_examined=examined,
            )
    return Verdict(VerdictKind.NOT_HAMILTONIAN, matchings_examined=examined)
