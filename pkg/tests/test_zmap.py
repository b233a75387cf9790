import random

from hypothesis import given
from hypothesis import strategies as st

from conftest import digraphs
from oracles import stacked_zmap_matrix
from hcaudit.graph import Digraph, classify_arcset, rank_of_arcset, ArcSetKind
from hcaudit.matching import is_matching
from hcaudit.zmap import build_zmap, preimage, push_forward


def test_triangle_zmap():
    z = build_zmap(Digraph(3, ((0, 1), (1, 2), (2, 0))))
    assert z.edges == ((0, 1), (1, 2), (2, 0))
    assert (z.x_size, z.y_size, len(z.edges)) == (3, 3, 3)


def test_symmetric_pair_zmap():
    z = build_zmap(Digraph(2, ((0, 1), (1, 0))))
    assert z.edges == ((0, 1), (1, 0))


def test_empty_zmap():
    z = build_zmap(Digraph(3))
    assert (z.x_size, z.y_size, z.edges) == (3, 3, ())


def test_preimage_examples():
    z = build_zmap(Digraph(3, ((0, 1), (1, 2), (2, 0))))
    assert preimage(z, {0, 1, 2}) == {0, 1, 2}
    assert preimage(z, set()) == frozenset()
    got = preimage(z, {1})
    assert [z.source.arcs[j] for j in got] == [(1, 2)]


@given(digraphs())
def test_edges_follow_stacked_incidence_matrix(d):
    """Edge j joins the row of its +1 in the top block to the row of its +1 in
    the bottom block."""
    z = build_zmap(d)
    f = stacked_zmap_matrix(d)
    assert len(f) == 2 * d.n
    for j, (x, y) in enumerate(z.edges):
        col = [row[j] for row in f]
        assert col.count(1) == 2 and col.count(0) == 2 * d.n - 2
        assert col[x] == 1 and col[d.n + y] == 1


@given(digraphs(), st.data())
def test_preimage_inverts_push_forward(d, data):
    z = build_zmap(d)
    arcs = data.draw(st.sets(st.integers(0, d.m - 1)) if d.m else st.just(set()))
    assert preimage(z, push_forward(z, arcs)) == arcs


def permutation_digraph(perm):
    return Digraph(len(perm), tuple((i, p) for i, p in enumerate(perm)))


@given(st.permutations(list(range(7))).filter(lambda p: all(i != v for i, v in enumerate(p))))
def test_cycle_cover_is_perfect_matching(perm):
    d = permutation_digraph(perm)
    z = build_zmap(d)
    assert is_matching(z.graph, range(d.m)) and d.m == d.n
    arcs = preimage(z, range(d.m))
    assert all(d.out_degree(v) == 1 and d.in_degree(v) == 1 for v in range(d.n))
    assert len(arcs) == d.n


def test_single_cycle_unique_pm_has_full_rank():
    rng = random.Random(3)
    for n in range(2, 12):
        order = list(range(n))
        rng.shuffle(order)
        d = Digraph(n, tuple((order[i], order[(i + 1) % n]) for i in range(n)))
        arcs = preimage(build_zmap(d), range(n))
        assert classify_arcset(d, arcs) is ArcSetKind.HAMILTONIAN_CYCLE
        assert rank_of_arcset(d, arcs).rank == n - 1
