"""Audit harness for a matching-and-rank Hamiltonian cycle decision procedure."""

from hcaudit.decider import Verdict, VerdictKind, decide_exact_via_matchings, decide_paper
from hcaudit.graph import (
    ArcSetKind,
    Digraph,
    IncidenceMatrix,
    bowtie,
    classify_arcset,
    emit_arclist,
    incidence_matrix,
    parse_arclist,
    rank_of_arcset,
)
from hcaudit.matching import (
    AllowedEdgeSet,
    BipartiteGraph,
    Matching,
    allowed_edges,
    enumerate_perfect_matchings,
    hall_violator,
    max_matching,
)
from hcaudit.oracle import OracleResult, backtrack_hc, held_karp, oracle, undirected_to_digraph
from hcaudit.zmap import BipartiteZMap, build_zmap, preimage, push_forward

__all__ = [
    "AllowedEdgeSet",
    "ArcSetKind",
    "BipartiteGraph",
    "BipartiteZMap",
    "Digraph",
    "IncidenceMatrix",
    "Matching",
    "OracleResult",
    "Verdict",
    "VerdictKind",
    "allowed_edges",
    "backtrack_hc",
    "bowtie",
    "build_zmap",
    "classify_arcset",
    "decide_exact_via_matchings",
    "decide_paper",
    "emit_arclist",
    "enumerate_perfect_matchings",
    "hall_violator",
    "held_karp",
    "incidence_matrix",
    "max_matching",
    "oracle",
    "parse_arclist",
    "preimage",
    "push_forward",
    "rank_of_arcset",
    "undirected_to_digraph",
]
