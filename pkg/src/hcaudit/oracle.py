"""Ground-truth Hamiltonicity: Held-Karp subset DP and pruned backtracking."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np

from hcaudit.graph import Digraph, DuplicateArc, SelfLoop, is_strongly_connected

HELD_KARP_MAX_N = 24
DEFAULT_NODE_BUDGET = 10**8


class TooLarge(ValueError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"held_karp supports n <= {HELD_KARP_MAX_N}, got {n}")


class TooSmall(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"backtracking gave up after {nodes} nodes")


class DuplicateEdge(ValueError):
    pass


class OracleMethod(enum.Enum):
    HELD_KARP = "HeldKarp"
    BACKTRACKING = "Backtracking"
    TRIVIAL = "Trivial"


@dataclass(frozen=True)
class OracleResult:
    hamiltonian: bool
    witness: tuple[int, ...] | None
    method: OracleMethod

    def to_json(self) -> dict[str, Any]:
        return {
            "hamiltonian": self.hamiltonian,
            "witness": None if self.witness is None else list(self.witness),
            "method": self.method.value,
        }

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> OracleResult:
        w = obj.get("witness")
        return cls(obj["hamiltonian"], None if w is None else tuple(w), OracleMethod(obj["method"]))


def witness_arcs(d: Digraph, tour) -> list[int]:
    """Arc indices of a vertex tour, including the closing arc."""
    idx = d.arc_index
    return [idx[(tour[i], tour[(i + 1) % len(tour)])] for i in range(len(tour))]


def is_valid_tour(d: Digraph, tour) -> bool:
    if len(tour) != d.n or len(set(tour)) != d.n or d.n < 2:
        return False
    return all(d.has_arc(tour[i], tour[(i + 1) % d.n]) for i in range(d.n))


@lru_cache(maxsize=4)
def _layers(k: int) -> list[np.ndarray]:
    masks = np.arange(1 << k, dtype=np.int64)
    pop = np.zeros(1 << k, dtype=np.int8)
    for b in range(k):
        pop += ((masks >> b) & 1).astype(np.int8)
    order = np.argsort(pop, kind="stable")
    bounds = np.searchsorted(pop[order], np.arange(k + 2))
    return [order[bounds[c]:bounds[c + 1]] for c in range(k + 1)]


def held_karp(d: Digraph) -> OracleResult:
    """Exact subset DP anchored at vertex 0.

    Vertices 1..n-1 map to bits 0..n-2. ``reach[S]`` is the bitset of
    vertices v in S such that some path starts at 0, visits exactly S and
    ends at v.
    """
    n = d.n
    if n < 2:
        raise TooSmall(f"held_karp needs n >= 2, got {n}")
    if n > HELD_KARP_MAX_N:
        raise TooLarge(n)
    k = n - 1
    pred = [0] * n
    for u, v in d.arcs:
        if v and u:
            pred[v] |= 1 << (u - 1)
    reach = np.zeros(1 << k, dtype=np.uint32)
    for v in d.successors[0]:
        reach[1 << (v - 1)] = 1 << (v - 1)
    layers = _layers(k)
    for c in range(2, k + 1):
        masks = layers[c]
        for v in range(1, n):
            if not pred[v]:
                continue
            bit = 1 << (v - 1)
            sel = masks[(masks & bit) != 0]
            hit = (reach[sel ^ bit] & np.uint32(pred[v])) != 0
            reach[sel[hit]] |= np.uint32(bit)

    full = (1 << k) - 1
    ends = int(reach[full])
    last = next((v for v in d.predecessors[0] if ends >> (v - 1) & 1), None)
    if last is None:
        return OracleResult(False, None, OracleMethod.HELD_KARP)

    path = [last]
    mask = full
    cur = last
    while mask != 1 << (cur - 1):
        mask ^= 1 << (cur - 1)
        options = int(reach[mask]) & pred[cur]
        cur = (options & -options).bit_length()  # lowest set bit, as a vertex
        path.append(cur)
    tour = (0, *reversed(path))
    return OracleResult(True, tour, OracleMethod.HELD_KARP)


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def backtrack_hc(d: Digraph, node_budget: int = DEFAULT_NODE_BUDGET) -> OracleResult:
    """Depth-first search from vertex 0, successors lowest index first.

    Each partial path is pruned unless every unvisited vertex can still be
    entered and left, all of them are reachable from the path's end, and
    all can reach vertex 0. A vertex whose only remaining entry is the
    current end is forced next.
    """
    n = d.n
    if n < 2:
        raise TooSmall(f"backtracking needs n >= 2, got {n}")
    no = OracleResult(False, None, OracleMethod.BACKTRACKING)
    if any(not d.successors[v] or not d.predecessors[v] for v in range(n)):
        return no
    if not is_strongly_connected(d):
        return no

    succ = [0] * n
    pred = [0] * n
    for u, v in d.arcs:
        succ[u] |= 1 << v
        pred[v] |= 1 << u
    full = (1 << n) - 1

    def candidates(cur: int, visited: int) -> list[int]:
        unvisited = full & ~visited
        if not unvisited:
            return []
        cur_bit = 1 << cur
        forced = []
        for w in _bits(unvisited):
            entries = pred[w] & (unvisited | cur_bit)
            if not entries or not succ[w] & (unvisited | 1):
                return []
            if entries == cur_bit:
                forced.append(w)
        if len(forced) > 1:
            return []
        # forward reachability from cur through unvisited
        seen = 0
        frontier = succ[cur] & unvisited
        while frontier:
            seen |= frontier
            nxt = 0
            for w in _bits(frontier):
                nxt |= succ[w]
            frontier = nxt & unvisited & ~seen
        if seen != unvisited:
            return []
        # everything unvisited must still get back to 0
        seen = 0
        frontier = pred[0] & unvisited
        while frontier:
            seen |= frontier
            nxt = 0
            for w in _bits(frontier):
                nxt |= pred[w]
            frontier = nxt & unvisited & ~seen
        if seen != unvisited:
            return []
        if forced:
            return forced
        return list(_bits(succ[cur] & unvisited))

    nodes = 1
    path = [0]
    visited = 1
    stack = [(candidates(0, visited), 0)]
    while stack:
        cands, i = stack[-1]
        if len(path) == n:
            if succ[path[-1]] & 1:
                return OracleResult(True, tuple(path), OracleMethod.BACKTRACKING)
        if i >= len(cands):
            stack.pop()
            visited &= ~(1 << path.pop())
            continue
        stack[-1] = (cands, i + 1)
        w = cands[i]
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(nodes)
        path.append(w)
        visited |= 1 << w
        stack.append((candidates(w, visited), 0))
    return no


def oracle(d: Digraph, node_budget: int = DEFAULT_NODE_BUDGET) -> OracleResult:
    """Held-Karp up to its size limit, backtracking beyond; n < 2 is trivially no."""
    if d.n < 2:
        return OracleResult(False, None, OracleMethod.TRIVIAL)
    if d.n <= HELD_KARP_MAX_N:
        return held_karp(d)
    return backtrack_hc(d, node_budget)


def undirected_to_digraph(edges, n: int) -> Digraph:
    """Replace each undirected edge {u, v} by the arcs (u, v) and (v, u)."""
    arcs = []
    seen = set()
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {{{u}, {v}}}")
        seen.add(key)
        arcs.append((u, v))
        arcs.append((v, u))
    try:
        return Digraph(n, tuple(arcs))
    except DuplicateArc as exc:  # pragma: no cover - guarded above
        raise DuplicateEdge(str(exc)) from exc
