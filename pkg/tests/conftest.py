import os
import sys

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from hcaudit.graph import Digraph  # noqa: E402
from hcaudit.matching import BipartiteGraph  # noqa: E402

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


@st.composite
def digraphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Digraph(n, tuple(chosen))


@st.composite
def bipartite_graphs(draw, max_side=6, balanced=False):
    nx = draw(st.integers(0, max_side))
    ny = nx if balanced else draw(st.integers(0, max_side))
    pairs = [(x, y) for x in range(nx) for y in range(ny)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return BipartiteGraph(nx, ny, tuple(chosen))


# one PASS/FAIL line per acceptance criterion in the terminal summary
_acceptance: dict[int, list] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    cid, text = props["criterion"]
    entry = _acceptance.setdefault(cid, [text, True])
    entry[1] = entry[1] and report.passed


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_acceptance):
        text, ok = _acceptance[cid]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{cid}] {text}")


@pytest.fixture
def prism_path():
    return os.path.join(REPO, "data", "prism.txt")
