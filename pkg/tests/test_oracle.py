import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import digraphs
from oracles import brute_hamiltonian, brute_undirected_hamiltonian
from hcaudit.graph import ArcSetKind, Digraph, SelfLoop, classify_arcset
from hcaudit.harness.generators import prism
from hcaudit.oracle import (
    BudgetExceeded,
    DuplicateEdge,
    OracleMethod,
    OracleResult,
    TooLarge,
    TooSmall,
    backtrack_hc,
    held_karp,
    is_valid_tour,
    oracle,
    undirected_to_digraph,
    witness_arcs,
)

K4 = Digraph(4, tuple((u, v) for u in range(4) for v in range(4) if u != v))
TRIANGLE = Digraph(3, ((0, 1), (1, 2), (2, 0)))


def test_held_karp_examples():
    assert held_karp(K4).hamiltonian
    assert not held_karp(Digraph(3, ((0, 1), (1, 2)))).hamiltonian
    assert not held_karp(Digraph(4, ((0, 1), (1, 0), (2, 3), (3, 2)))).hamiltonian


def test_held_karp_bounds():
    with pytest.raises(TooSmall):
        held_karp(Digraph(1))
    with pytest.raises(TooLarge):
        held_karp(Digraph(25))


def test_backtrack_examples():
    r = backtrack_hc(TRIANGLE)
    assert r.hamiltonian and r.witness == (0, 1, 2)
    chord = Digraph(3, ((0, 1), (1, 2), (2, 0), (0, 2)))
    assert backtrack_hc(chord).witness == (0, 1, 2)
    with pytest.raises(TooSmall):
        backtrack_hc(Digraph(0))


def test_prism_is_not_hamiltonian():
    d = prism()
    assert not brute_hamiltonian(d)
    assert not held_karp(d).hamiltonian
    assert not backtrack_hc(d).hamiltonian


def test_backtrack_budget():
    # strongly connected, dense, but missing every arc into vertex 0 except one
    n = 12
    arcs = [(u, v) for u in range(1, n) for v in range(1, n) if u != v]
    arcs += [(0, v) for v in range(1, n)] + [(1, 0)]
    d = Digraph(n, tuple(arcs))
    with pytest.raises(BudgetExceeded) as info:
        backtrack_hc(d, node_budget=5)
    assert info.value.nodes > 5
    assert backtrack_hc(d).hamiltonian


@given(digraphs(min_n=2, max_n=7))
def test_oracles_agree_with_brute_force(d):
    expected = brute_hamiltonian(d)
    for res in (held_karp(d), backtrack_hc(d)):
        assert res.hamiltonian == expected
        if expected:
            assert is_valid_tour(d, res.witness)
            assert classify_arcset(d, witness_arcs(d, res.witness)) is ArcSetKind.HAMILTONIAN_CYCLE
        else:
            assert res.witness is None


def test_held_karp_and_backtracking_agree_up_to_ten():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(2, 10)
        p = rng.choice((0.2, 0.3, 0.45))
        d = Digraph(n, tuple((u, v) for u in range(n) for v in range(n)
                             if u != v and rng.random() < p))
        assert held_karp(d).hamiltonian == backtrack_hc(d).hamiltonian


def test_held_karp_larger_instance():
    rng = random.Random(5)
    n = 16
    order = list(range(n))
    rng.shuffle(order)
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)}
    arcs |= {(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.05}
    d = Digraph(n, tuple(sorted(arcs)))
    res = held_karp(d)
    assert res.hamiltonian and is_valid_tour(d, res.witness)


def test_oracle_dispatch():
    assert oracle(Digraph(1)).method is OracleMethod.TRIVIAL
    assert oracle(TRIANGLE).method is OracleMethod.HELD_KARP
    n = 30
    big = Digraph(n, tuple((i, (i + 1) % n) for i in range(n)))
    res = oracle(big)
    assert res.method is OracleMethod.BACKTRACKING and res.hamiltonian


def test_oracle_result_json():
    r = OracleResult(True, (0, 1, 2), OracleMethod.HELD_KARP)
    assert r.to_json() == {"hamiltonian": True, "witness": [0, 1, 2], "method": "HeldKarp"}
    assert OracleResult.from_json(r.to_json()) == r


def test_undirected_conversion():
    tri = undirected_to_digraph([(0, 1), (1, 2), (2, 0)], 3)
    assert tri.m == 6
    assert undirected_to_digraph([(0, 1)], 2).arcs == ((0, 1), (1, 0))
    assert undirected_to_digraph([], 3).m == 0
    with pytest.raises(SelfLoop):
        undirected_to_digraph([(1, 1)], 2)
    with pytest.raises(DuplicateEdge):
        undirected_to_digraph([(0, 1), (1, 0)], 2)


@st.composite
def undirected(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return n, draw(st.lists(st.sampled_from(pairs), unique=True))


@given(undirected())
def test_undirected_hamiltonicity_preserved(g):
    n, edges = g
    assert held_karp(undirected_to_digraph(edges, n)).hamiltonian == brute_undirected_hamiltonian(n, edges)
