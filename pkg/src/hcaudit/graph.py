"""Simple digraphs, their incidence matrices, and the arc-list file format."""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

Arc = tuple[int, int]


class GraphFormatError(ValueError):
    """Base class for parse/validation failures; ``line`` is 1-based or None."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedHeader(GraphFormatError):
    pass


class MalformedLine(GraphFormatError):
    pass


class VertexOutOfRange(GraphFormatError):
    pass


class SelfLoop(GraphFormatError):
    pass


class DuplicateArc(GraphFormatError):
    pass


@dataclass(frozen=True)
class Digraph:
    """A finite simple digraph on vertices ``0..n-1``.

    Arc ``j`` is ``arcs[j]``; indices never change after construction.
    """

    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        seen: set[Arc] = set()
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexOutOfRange(f"arc ({u}, {v}) outside [0, {self.n})")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise DuplicateArc(f"duplicate arc ({u}, {v})")
            seen.add((u, v))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def tail(self, j: int) -> int:
        return self.arcs[j][0]

    def head(self, j: int) -> int:
        return self.arcs[j][1]

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        """Out-neighbours of every vertex, ascending."""
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return tuple(tuple(sorted(vs)) for vs in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].append(u)
        return tuple(tuple(sorted(us)) for us in inn)

    @cached_property
    def arc_index(self) -> dict[Arc, int]:
        return {a: j for j, a in enumerate(self.arcs)}

    def out_degree(self, v: int) -> int:
        return len(self.successors[v])

    def in_degree(self, v: int) -> int:
        return len(self.predecessors[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_index

    def subgraph(self, arc_ids: Iterable[int]) -> Digraph:
        """Same vertex set, only the given arcs (kept in index order)."""
        keep = sorted(set(arc_ids))
        return Digraph(self.n, tuple(self.arcs[j] for j in keep))


def check_arcset(d: Digraph, arc_ids: Iterable[int]) -> frozenset[int]:
    s = frozenset(arc_ids)
    for j in s:
        if not 0 <= j < d.m:
            raise IndexError(f"arc index {j} outside [0, {d.m})")
    return s


# --------------------------------------------------------------------------
# incidence matrix


@dataclass(frozen=True)
class IncidenceMatrix:
    """Sparse directed incidence matrix: +1 at an arc's tail row, -1 at its head row."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int]

    @property
    def plus_part(self) -> dict[tuple[int, int], int]:
        return {k: c for k, c in self.entries.items() if c > 0}

    @property
    def minus_part(self) -> dict[tuple[int, int], int]:
        return {k: c for k, c in self.entries.items() if c < 0}

    def column(self, j: int) -> dict[int, int]:
        return {i: c for (i, jj), c in self.entries.items() if jj == j}

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), c in self.entries.items():
            out[i][j] = c
        return out


def incidence_matrix(d: Digraph) -> IncidenceMatrix:
    entries: dict[tuple[int, int], int] = {}
    for j, (u, v) in enumerate(d.arcs):
        entries[(u, j)] = 1
        entries[(v, j)] = -1
    return IncidenceMatrix(d.n, d.m, entries)


# --------------------------------------------------------------------------
# rank by component counting


class DisjointSet:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, a: int) -> int:
        parent = self.parent
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.count -= 1
        return True


@dataclass(frozen=True)
class RankResult:
    rank: int
    components: int


def rank_of_arcset(d: Digraph, arc_ids: Iterable[int]) -> RankResult:
    """Rank of the incidence columns in ``arc_ids``, as n minus the number
    of weak components of ``(V, arc_ids)``. Isolated vertices count."""
    dsu = DisjointSet(d.n)
    for j in check_arcset(d, arc_ids):
        u, v = d.arcs[j]
        dsu.union(u, v)
    return RankResult(d.n - dsu.count, dsu.count)


# --------------------------------------------------------------------------
# arc relations and cycle classification


def bowtie(d: Digraph, i: int, j: int) -> int | None:
    """The vertex where arc i hands over to arc j, if arc i ends where arc j starts."""
    if i == j:
        return None
    head_i = d.arcs[i][1]
    return head_i if head_i == d.arcs[j][0] else None


def are_symmetric(d: Digraph, i: int, j: int) -> bool:
    return bowtie(d, i, j) is not None and bowtie(d, j, i) is not None


class ArcSetKind(enum.Enum):
    NOT_CYCLE = "NotCycle"
    CYCLE = "Cycle"
    SIMPLE_CYCLE = "SimpleCycle"
    HAMILTONIAN_CYCLE = "HamiltonianCycle"


def classify_arcset(d: Digraph, arc_ids: Iterable[int]) -> ArcSetKind:
    """Classify an arc set as a non-cycle, a union of disjoint cycles,
    a single simple cycle, or a Hamiltonian cycle."""
    s = check_arcset(d, arc_ids)
    if not s:
        return ArcSetKind.NOT_CYCLE
    outdeg: dict[int, int] = {}
    indeg: dict[int, int] = {}
    for j in s:
        u, v = d.arcs[j]
        outdeg[u] = outdeg.get(u, 0) + 1
        indeg[v] = indeg.get(v, 0) + 1
    touched = outdeg.keys() | indeg.keys()
    if any(outdeg.get(v, 0) != 1 or indeg.get(v, 0) != 1 for v in touched):
        return ArcSetKind.NOT_CYCLE
    # in = out = 1 on every touched vertex: a disjoint union of directed cycles
    dsu = DisjointSet(d.n)
    for j in s:
        dsu.union(*d.arcs[j])
    pieces = len({dsu.find(v) for v in touched})
    if pieces > 1:
        return ArcSetKind.CYCLE
    if len(s) == d.n and d.n >= 2:
        return ArcSetKind.HAMILTONIAN_CYCLE
    return ArcSetKind.SIMPLE_CYCLE


def strongly_connected_components(n: int, succ: list[list[int]] | tuple) -> list[int]:
    """Iterative Tarjan. Returns a component id per vertex."""
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            nbrs = succ[v]
            if i < len(nbrs):
                work[-1] = (v, i + 1)
                w = nbrs[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def is_strongly_connected(d: Digraph) -> bool:
    if d.n == 0:
        return True
    return len(set(strongly_connected_components(d.n, d.successors))) == 1


# --------------------------------------------------------------------------
# arc-list format


def _int_fields(line: str, lineno: int, count: int, err: type[GraphFormatError]) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise err(f"expected {count} integers, got {line!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise err(f"non-integer field in {line!r}", lineno) from None


def parse_arclist(text: bytes | str) -> Digraph:
    """Parse the line-oriented arc-list format (``n m`` header, then ``u v``
    lines, 1-indexed). DIMACS-style ``p``/``a`` files are accepted as well."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [(k, ln.strip()) for k, ln in enumerate(text.splitlines(), start=1)]
    body = [(k, ln) for k, ln in lines if ln and not ln.startswith("#")]
    if not body:
        raise MalformedHeader("missing header", 1)
    if body[0][1].startswith(("p ", "c ")) or body[0][1] in ("p", "c"):
        return _parse_dimacs(body)

    k0, header = body[0]
    n, m = _int_fields(header, k0, 2, MalformedHeader)
    if n < 0 or m < 0:
        raise MalformedHeader(f"negative count in {header!r}", k0)
    if len(body) - 1 != m:
        raise MalformedHeader(f"header declares {m} arcs, found {len(body) - 1}", k0)
    return _build(n, [(k, _int_fields(ln, k, 2, MalformedLine)) for k, ln in body[1:]])


def _parse_dimacs(body: list[tuple[int, str]]) -> Digraph:
    n = m = None
    header_line = 0
    rows: list[tuple[int, list[int]]] = []
    for k, ln in body:
        tag, _, rest = ln.partition(" ")
        if tag == "c":
            continue
        if tag == "p":
            if n is not None:
                raise MalformedHeader("second problem line", k)
            parts = rest.split()
            if len(parts) != 3:
                raise MalformedHeader(f"expected 'p <kind> n m', got {ln!r}", k)
            n, m = _int_fields(" ".join(parts[1:]), k, 2, MalformedHeader)
            header_line = k
        elif tag == "a":
            if n is None:
                raise MalformedHeader("arc before problem line", k)
            rows.append((k, _int_fields(rest, k, 2, MalformedLine)))
        else:
            raise MalformedLine(f"unknown line tag {tag!r}", k)
    if n is None:
        raise MalformedHeader("missing problem line", body[0][0])
    if len(rows) != m:
        raise MalformedHeader(f"header declares {m} arcs, found {len(rows)}", header_line)
    return _build(n, rows)


def _build(n: int, rows: list[tuple[int, list[int]]]) -> Digraph:
    seen: set[Arc] = set()
    arcs: list[Arc] = []
    for k, (u, v) in rows:
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexOutOfRange(f"vertex outside 1..{n} in arc {u} {v}", k)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}", k)
        if (u, v) in seen:
            raise DuplicateArc(f"duplicate arc {u} {v}", k)
        seen.add((u, v))
        arcs.append((u - 1, v - 1))
    return Digraph(n, tuple(arcs))


def emit_arclist(d: Digraph) -> str:
    lines = [f"{d.n} {d.m}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in d.arcs)
    return "\n".join(lines) + "\n"


def read_arclist(path) -> Digraph:
    with open(path, "rb") as fh:
        return parse_arclist(fh.read())


def write_arclist(d: Digraph, path) -> None:
    with open(path, "wb") as fh:
        fh.write(emit_arclist(d).encode("utf-8"))
