from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import strategies as st

from petminor.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 12, max_density: float = 1.0) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    cap = int(max_density * len(pairs))
    chosen = [p for p, k in zip(pairs, keep) if k][: max(cap, 0)]
    return Graph.from_edges(n, chosen)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), ((index[a], index[b]) for a, b in h.edges()))


@st.composite
def sparse_graphs(draw, min_n: int = 0, max_n: int = 128, max_edges: int = 300) -> Graph:
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return Graph.empty(n)
    vertex = st.integers(0, n - 1)
    pairs = draw(st.lists(st.tuples(vertex, vertex), max_size=max_edges))
    return Graph.from_edges(n, {(min(a, b), max(a, b)) for a, b in pairs if a != b})


# acceptance summary: one line per criterion at the end of the run

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    previous = _criteria.get(number, ("", title))[0]
    if rep.failed:
        _criteria[number] = ("FAIL", title)
    elif rep.skipped and previous != "FAIL":
        _criteria[number] = ("SKIP", title)
    elif rep.when == "call" and previous != "FAIL":
        _criteria[number] = ("PASS", title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_criteria):
        status, title = _criteria[number]
        terminalreporter.write_line(f"{status} criterion {number}: {title}")
