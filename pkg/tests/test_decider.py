from hypothesis import given

from conftest import digraphs
from oracles import brute_hamiltonian
from hcaudit.decider import Verdict, VerdictKind, decide_exact_via_matchings, decide_paper
from hcaudit.graph import ArcSetKind, Digraph, classify_arcset
from hcaudit.matching import hall_violator
from hcaudit.zmap import build_zmap

TRIANGLE = Digraph(3, ((0, 1), (1, 2), (2, 0)))
TWO_TWO = Digraph(4, ((0, 1), (1, 0), (2, 3), (3, 2)))
PATH = Digraph(3, ((0, 1), (1, 2)))
K4 = Digraph(4, tuple((u, v) for u in range(4) for v in range(4) if u != v))


def test_paper_triangle():
    v = decide_paper(TRIANGLE)
    assert (v.kind, v.rank, v.components) == (VerdictKind.CLAIMED_HAMILTONIAN, 2, 1)


def test_paper_two_disjoint_two_cycles():
    v = decide_paper(TWO_TWO)
    assert (v.kind, v.rank, v.components) == (VerdictKind.RANK_DEFICIENT, 2, 2)


def test_paper_path_has_no_pm():
    assert decide_paper(PATH).kind is VerdictKind.NO_PERFECT_MATCHING
    assert hall_violator(build_zmap(PATH).graph) == {2}


def test_small_n_never_hamiltonian():
    for d in (Digraph(0), Digraph(1)):
        assert decide_paper(d).kind is VerdictKind.NOT_HAMILTONIAN
        assert decide_exact_via_matchings(d).kind is VerdictKind.NOT_HAMILTONIAN


def test_two_vertex_symmetric_pair():
    d = Digraph(2, ((0, 1), (1, 0)))
    assert decide_paper(d).kind is VerdictKind.CLAIMED_HAMILTONIAN
    assert decide_exact_via_matchings(d).kind is VerdictKind.HAMILTONIAN


def test_strong_prefilter_short_circuits():
    d = Digraph(4, ((0, 1), (1, 0), (2, 3), (3, 2), (1, 2)))
    assert decide_paper(d).kind is VerdictKind.RANK_DEFICIENT
    assert decide_paper(d, strong_prefilter=True).kind is VerdictKind.NOT_HAMILTONIAN
    assert decide_paper(TRIANGLE, strong_prefilter=True).kind is VerdictKind.CLAIMED_HAMILTONIAN


def test_paper_timings_filled():
    t: dict = {}
    decide_paper(TRIANGLE, timings=t)
    assert set(t) == {"zmap", "matching", "allowed", "rank"}


def test_exact_examples():
    v = decide_exact_via_matchings(TRIANGLE)
    assert v.kind is VerdictKind.HAMILTONIAN and v.witness == (0, 1, 2)
    v = decide_exact_via_matchings(TWO_TWO)
    assert v.kind is VerdictKind.NOT_HAMILTONIAN and v.matchings_examined == 1
    assert brute_hamiltonian(K4)
    v = decide_exact_via_matchings(K4, 1_000_000)
    assert v.kind is VerdictKind.HAMILTONIAN
    assert classify_arcset(K4, v.witness) is ArcSetKind.HAMILTONIAN_CYCLE


def test_exact_unknown_when_truncated():
    # K4 has 9 cycle covers; the lexicographically first ones are 2-cycle pairs
    v = decide_exact_via_matchings(K4, limit=1)
    assert v.kind is VerdictKind.UNKNOWN and v.matchings_examined == 1


def test_verdict_json_round_trip():
    v = Verdict(VerdictKind.HAMILTONIAN, 2, 1, (0, 1, 2), 1)
    obj = v.to_json()
    assert list(obj) == ["kind", "rank", "components", "witness", "matchings_examined"]
    assert obj["kind"] == "Hamiltonian" and obj["witness"] == [0, 1, 2]
    assert Verdict.from_json(obj) == v


@given(digraphs(max_n=6))
def test_exact_agrees_with_brute_force(d):
    v = decide_exact_via_matchings(d)
    assert (v.kind is VerdictKind.HAMILTONIAN) == brute_hamiltonian(d)
    if v.witness is not None:
        assert classify_arcset(d, v.witness) is ArcSetKind.HAMILTONIAN_CYCLE


@given(digraphs(max_n=6))
def test_paper_negative_verdicts_are_sound(d):
    v = decide_paper(d)
    if brute_hamiltonian(d):
        assert v.kind is VerdictKind.CLAIMED_HAMILTONIAN
    if v.kind is VerdictKind.RANK_DEFICIENT:
        assert v.rank < d.n - 1 and v.rank == d.n - v.components
