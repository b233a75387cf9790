"""Z-mapping: the balanced bipartite out-copy/in-copy graph of a digraph.

Arc ``j = (u, v)`` of the digraph becomes edge ``j = (x_u, y_v)``. The
correspondence is the identity on indices, so pulling an edge set back to
arcs is just reinterpreting the indices.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from hcaudit.graph import Digraph, check_arcset
from hcaudit.matching import BipartiteGraph


@dataclass(frozen=True)
class BipartiteZMap:
    source: Digraph

    @property
    def x_size(self) -> int:
        return self.source.n

    @property
    def y_size(self) -> int:
        return self.source.n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.source.arcs

    @cached_property
    def graph(self) -> BipartiteGraph:
        # arcs of a simple digraph are already distinct (x, y) pairs
        return BipartiteGraph(self.x_size, self.y_size, self.edges, validate=False)

    def check_edgeset(self, edge_ids: Iterable[int]) -> frozenset[int]:
        s = frozenset(edge_ids)
        for j in s:
            if not 0 <= j < len(self.edges):
                raise IndexError(f"edge index {j} outside [0, {len(self.edges)})")
        return s


def build_zmap(d: Digraph) -> BipartiteZMap:
    return BipartiteZMap(d)


def preimage(z: BipartiteZMap, edge_ids: Iterable[int]) -> frozenset[int]:
    """Arc indices corresponding to the given edge indices."""
    return z.check_edgeset(edge_ids)


def push_forward(z: BipartiteZMap, arc_ids: Iterable[int]) -> frozenset[int]:
    return check_arcset(z.source, arc_ids)
