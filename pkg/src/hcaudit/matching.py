"""Bipartite matching: Hopcroft-Karp, Hall violators, allowed edges, enumeration.

Every routine scans vertices and edges in index order, so results are
reproducible for a fixed edge list.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import cached_property

from hcaudit.graph import strongly_connected_components

DEFAULT_ENUM_LIMIT = 1_000_000

_INF = float("inf")


class NotBalanced(ValueError):
    pass


@dataclass(frozen=True)
class BipartiteGraph:
    x_size: int
    y_size: int
    edges: tuple[tuple[int, int], ...] = ()
    validate: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(x), int(y)) for x, y in self.edges))
        if not self.validate:
            return
        seen = set()
        for x, y in self.edges:
            if not (0 <= x < self.x_size and 0 <= y < self.y_size):
                raise ValueError(f"edge ({x}, {y}) out of range")
            if (x, y) in seen:
                raise ValueError(f"duplicate edge ({x}, {y})")
            seen.add((x, y))

    @cached_property
    def adjacency(self) -> list[list[tuple[int, int]]]:
        """For each x, its ``(y, edge index)`` pairs in edge order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.x_size)]
        for e, (x, y) in enumerate(self.edges):
            adj[x].append((y, e))
        return adj

    def neighbours(self, xs) -> set[int]:
        adj = self.adjacency
        return {y for x in xs for y, _ in adj[x]}


@dataclass(frozen=True)
class Matching:
    graph: BipartiteGraph = field(repr=False)
    pairs: frozenset[int]

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def is_perfect(self) -> bool:
        g = self.graph
        return g.x_size == g.y_size and len(self.pairs) == g.x_size

    def mate_of_x(self) -> dict[int, int]:
        return {self.graph.edges[e][0]: self.graph.edges[e][1] for e in self.pairs}


def is_matching(g: BipartiteGraph, edge_ids) -> bool:
    xs, ys = set(), set()
    for e in edge_ids:
        x, y = g.edges[e]
        if x in xs or y in ys:
            return False
        xs.add(x)
        ys.add(y)
    return True


def _hopcroft_karp(g: BipartiteGraph) -> tuple[list[int], list[int]]:
    """Return ``(edge_of_x, x_of_y)``; -1 marks an unmatched vertex."""
    adj = g.adjacency
    nx = g.x_size
    edge_of_x = [-1] * nx
    y_of_x = [-1] * nx
    x_of_y = [-1] * g.y_size

    while True:
        dist = [_INF] * nx
        queue = deque()
        for x in range(nx):
            if y_of_x[x] == -1:
                dist[x] = 0
                queue.append(x)
        limit = _INF
        while queue:
            x = queue.popleft()
            if dist[x] >= limit:
                continue
            for y, _ in adj[x]:
                x2 = x_of_y[y]
                if x2 == -1:
                    limit = dist[x] + 1
                elif dist[x2] == _INF:
                    dist[x2] = dist[x] + 1
                    queue.append(x2)
        if limit == _INF:
            break

        pos = [0] * nx
        for root in range(nx):
            if y_of_x[root] != -1:
                continue
            stack = [root]
            via: list[tuple[int, int]] = []
            while stack:
                x = stack[-1]
                nbrs = adj[x]
                pushed = False
                while pos[x] < len(nbrs):
                    y, e = nbrs[pos[x]]
                    pos[x] += 1
                    x2 = x_of_y[y]
                    if x2 == -1:
                        if dist[x] + 1 != limit:
                            continue
                        via.append((y, e))
                        for xv, (yv, ev) in zip(stack, via):
                            y_of_x[xv] = yv
                            edge_of_x[xv] = ev
                            x_of_y[yv] = xv
                        stack = []
                        pushed = True
                        break
                    if dist[x2] == dist[x] + 1:
                        via.append((y, e))
                        stack.append(x2)
                        pushed = True
                        break
                if not pushed:
                    dist[x] = _INF
                    stack.pop()
                    if via:
                        via.pop()
    return edge_of_x, x_of_y


def max_matching(g: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching (Hopcroft-Karp)."""
    edge_of_x, _ = _hopcroft_karp(g)
    return Matching(g, frozenset(e for e in edge_of_x if e != -1))


def hall_violator(g: BipartiteGraph, matching: Matching | None = None) -> frozenset[int]:
    """A set S of X-vertices with |N(S)| < |S|, or the empty set when a
    matching saturating X exists.

    S is everything reachable from the free X-vertices of a maximum matching
    along alternating paths; its neighbourhood is matched back into S.
    """
    if matching is None:
        matching = max_matching(g)
    if len(matching) == g.x_size:
        return frozenset()
    x_of_y = [-1] * g.y_size
    matched_x = set()
    for e in matching.pairs:
        x, y = g.edges[e]
        x_of_y[y] = x
        matched_x.add(x)
    adj = g.adjacency
    seen_x = [x not in matched_x for x in range(g.x_size)]
    seen_y = [False] * g.y_size
    queue = deque(x for x in range(g.x_size) if seen_x[x])
    while queue:
        x = queue.popleft()
        for y, _ in adj[x]:
            if seen_y[y]:
                continue
            seen_y[y] = True
            x2 = x_of_y[y]
            # a free y here would be an augmenting path
            assert x2 != -1, "matching is not maximum"
            if not seen_x[x2]:
                seen_x[x2] = True
                queue.append(x2)
    return frozenset(x for x in range(g.x_size) if seen_x[x])


@dataclass(frozen=True)
class AllowedEdgeSet:
    graph: BipartiteGraph = field(repr=False)
    members: frozenset[int]
    is_empty_because_no_pm: bool = False


def allowed_edges(g: BipartiteGraph, matching: Matching | None = None) -> AllowedEdgeSet:
    """Edges lying in at least one perfect matching.

    Given one perfect matching M, orient M-edges x->y and all other edges
    y->x. A non-matching edge is allowed exactly when it closes an
    M-alternating cycle, i.e. its endpoints share a strong component.
    """
    if g.x_size != g.y_size:
        raise NotBalanced(f"sides differ: {g.x_size} != {g.y_size}")
    n = g.x_size
    if matching is None:
        matching = max_matching(g)
    if len(matching) < n:
        return AllowedEdgeSet(g, frozenset(), is_empty_because_no_pm=True)

    in_m = matching.pairs
    succ: list[list[int]] = [[] for _ in range(2 * n)]
    for e, (x, y) in enumerate(g.edges):
        if e in in_m:
            succ[x].append(n + y)
        else:
            succ[n + y].append(x)
    comp = strongly_connected_components(2 * n, succ)
    members = frozenset(
        e for e, (x, y) in enumerate(g.edges) if e in in_m or comp[x] == comp[n + y]
    )
    return AllowedEdgeSet(g, members)


def iter_perfect_matchings(g: BipartiteGraph) -> Iterator[frozenset[int]]:
    """Perfect matchings by backtracking over X in index order, trying each
    x's edges in edge order."""
    if g.x_size != g.y_size:
        return
    n = g.x_size
    adj = g.adjacency
    if any(not a for a in adj):
        return
    used_y = [False] * g.y_size
    chosen: list[int] = []

    def rec(x: int) -> Iterator[frozenset[int]]:
        if x == n:
            yield frozenset(chosen)
            return
        for y, e in adj[x]:
            if used_y[y]:
                continue
            used_y[y] = True
            chosen.append(e)
            yield from rec(x + 1)
            chosen.pop()
            used_y[y] = False

    yield from rec(0)


def enumerate_perfect_matchings(
    g: BipartiteGraph, limit: int = DEFAULT_ENUM_LIMIT
) -> tuple[list[Matching], bool]:
    """At most ``limit`` perfect matchings, plus a flag telling whether more exist."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    out: list[Matching] = []
    for pairs in iter_perfect_matchings(g):
        if len(out) == limit:
            return out, True
        out.append(Matching(g, pairs))
    return out, False
