"""Seeded instance families for fuzzing.

Each family draws from its own ``random.Random`` seeded with the spec's
seed, so a given ``GenSpec`` always yields the same digraph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from hcaudit.graph import Digraph, read_arclist

FAMILIES = ("gnp", "degree2", "cycle", "disjoint", "prism", "file")

_MASK64 = (1 << 64) - 1


class InvalidProbability(ValueError):
    pass


class InfeasibleSpec(ValueError):
    pass


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def trial_seed(master_seed: int, index: int) -> int:
    """Seed of trial ``index``: splitmix64(splitmix64(master) xor index)."""
    return splitmix64(splitmix64(master_seed & _MASK64) ^ (index & _MASK64))


PRISM_ARCS = (
    (0, 1), (1, 2), (2, 0),
    (3, 4), (4, 5), (5, 3),
    (0, 3), (3, 0), (1, 4), (4, 1), (2, 5), (5, 2),
)


def prism() -> Digraph:
    """Two equally oriented directed triangles joined by three 2-cycle rungs."""
    return Digraph(6, PRISM_ARCS)


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int = 0
    seed: int = 0
    p: float | None = None
    lengths: tuple[int, ...] = field(default=())
    path: str | None = None

    def to_json(self) -> dict:
        out: dict = {"family": self.family, "n": self.n, "seed": self.seed}
        if self.p is not None:
            out["p"] = self.p
        if self.lengths:
            out["lengths"] = list(self.lengths)
        if self.path is not None:
            out["path"] = self.path
        return out


def gnp(n: int, p: float, rng: random.Random) -> Digraph:
    if not 0.0 <= p <= 1.0:
        raise InvalidProbability(f"p={p} outside [0, 1]")
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return Digraph(n, tuple(arcs))


def degree_bound_two(n: int, rng: random.Random) -> Digraph:
    """Every vertex picks up to two out-neighbours among vertices whose
    in-degree is still below two."""
    indeg = [0] * n
    arcs = []
    for u in range(n):
        open_ = [v for v in range(n) if v != u and indeg[v] < 2]
        for v in sorted(rng.sample(open_, min(2, len(open_)))):
            indeg[v] += 1
            arcs.append((u, v))
    return Digraph(n, tuple(arcs))


def single_cycle(n: int, rng: random.Random) -> Digraph:
    if n < 2:
        raise InfeasibleSpec(f"a directed cycle needs n >= 2, got {n}")
    order = list(range(n))
    rng.shuffle(order)
    return Digraph(n, tuple((order[i], order[(i + 1) % n]) for i in range(n)))


def disjoint_cycles(lengths, rng: random.Random) -> Digraph:
    if not lengths or any(k < 2 for k in lengths):
        raise InfeasibleSpec(f"cycle lengths must all be >= 2, got {tuple(lengths)}")
    n = sum(lengths)
    order = list(range(n))
    rng.shuffle(order)
    arcs = []
    start = 0
    for k in lengths:
        block = order[start:start + k]
        arcs.extend((block[i], block[(i + 1) % k]) for i in range(k))
        start += k
    return Digraph(n, tuple(arcs))


def generate(spec: GenSpec) -> Digraph:
    rng = random.Random(spec.seed)
    fam = spec.family
    if fam == "gnp":
        if spec.p is None:
            raise InvalidProbability("gnp needs p")
        return gnp(spec.n, spec.p, rng)
    if fam == "degree2":
        if spec.n < 0:
            raise InfeasibleSpec(f"negative n={spec.n}")
        return degree_bound_two(spec.n, rng)
    if fam == "cycle":
        return single_cycle(spec.n, rng)
    if fam == "disjoint":
        if spec.n and spec.n != sum(spec.lengths):
            raise InfeasibleSpec(f"n={spec.n} but cycle lengths sum to {sum(spec.lengths)}")
        return disjoint_cycles(spec.lengths, rng)
    if fam == "prism":
        if spec.n not in (0, 6):
            raise InfeasibleSpec("the prism has exactly 6 vertices")
        return prism()
    if fam == "file":
        if spec.path is None:
            raise InfeasibleSpec("file family needs a path")
        return read_arclist(spec.path)
    raise InfeasibleSpec(f"unknown family {fam!r}; expected one of {FAMILIES}")
