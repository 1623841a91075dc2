from __future__ import annotations

import os
import subprocess
import sys
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from petminor import _pykernels, kernels
from petminor.census import graphs_up_to_iso
from petminor.families import (
    CockadeSpec,
    cockade,
    complete_bipartite,
    generic_cockade,
    petersen,
    wheel,
)
from petminor.graph import Graph, GraphError, add_edge, delete_vertices, disjoint_union, is_connected
from petminor.minors import (
    BudgetExhausted,
    clique_separator_reduce,
    has_minor,
    has_subgraph,
    petersen_spanning,
    rooted_k3_minor,
    twin_classes,
)
from petminor.oracle import OracleCapacityError, minor_oracle_bruteforce, rooted_k3_bruteforce
from petminor.sampling import make_rng, random_graph

from .conftest import graphs, to_nx

PET = petersen()


def independent_model_check(host: Graph, pattern: Graph, sets) -> None:
    """Branch-model invariants checked with networkx, not with the search's own helpers."""
    h = to_nx(host)
    members = [[v for v in range(host.n) if s >> v & 1] for s in sets]
    assert len(members) == pattern.n
    flat = [v for m in members for v in m]
    assert len(flat) == len(set(flat))
    for m in members:
        assert m and nx.is_connected(h.subgraph(m))
    for u, v in pattern.edges():
        assert any(h.has_edge(a, b) for a in members[u] for b in members[v])


def minor_present(host, pattern):
    model = has_minor(host, pattern)
    if model is not None:
        independent_model_check(host, pattern, model.branch_sets)
    return model is not None


# spec examples


def test_has_minor_examples():
    assert minor_present(Graph.complete(10), PET)
    for v in range(10):
        assert minor_present(delete_vertices(PET, 1 << v), complete_bipartite(3, 3))
    assert not minor_present(cockade(CockadeSpec.path(2)), PET)


def test_has_subgraph_examples():
    assert has_subgraph(Graph.complete(10), PET) is not None
    assert has_subgraph(PET, PET) is not None
    matching = [(2 * i, 2 * i + 1) for i in range(5)]
    k10_minus_matching = Graph.complete(10)
    for a, b in matching:
        k10_minus_matching = Graph.from_edges(10, [e for e in k10_minus_matching.edges() if e != (a, b)])
    assert k10_minus_matching.m == 40
    emb = has_subgraph(k10_minus_matching, PET)
    assert emb is not None
    assert len(set(emb)) == 10
    assert all(k10_minus_matching.has_edge(emb[u], emb[v]) for u, v in PET.edges())


def test_rooted_k3_examples():
    assert rooted_k3_minor(Graph.complete(3), (0, 1, 2))
    assert not rooted_k3_minor(Graph.path(3), (0, 1, 2))
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert not rooted_k3_minor(star, (1, 2, 3))
    with pytest.raises(GraphError):
        rooted_k3_minor(Graph.complete(3), (0, 0, 1))


def test_oracle_examples():
    assert minor_oracle_bruteforce(Graph.cycle(5), Graph.complete(3))
    assert minor_oracle_bruteforce(Graph.complete(4), Graph.complete(4))
    assert not minor_oracle_bruteforce(Graph.complete(4), Graph.complete(5))
    assert minor_oracle_bruteforce(wheel(5), Graph.complete(4))
    assert not minor_oracle_bruteforce(Graph.cycle(6), Graph.complete(4))
    assert minor_present(wheel(5), Graph.complete(4))
    assert not minor_present(Graph.cycle(6), Graph.complete(4))
    with pytest.raises(OracleCapacityError):
        minor_oracle_bruteforce(Graph.complete(10), Graph.complete(3))


def test_clique_separator_examples():
    pieces = clique_separator_reduce(cockade(CockadeSpec.path(2)), 2)
    assert [p for p in pieces] == [Graph.complete(9), Graph.complete(9)]
    assert clique_separator_reduce(Graph.complete(9), 2) == [Graph.complete(9)]
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert clique_separator_reduce(bowtie, 1) == [Graph.complete(3), Graph.complete(3)]
    with pytest.raises(GraphError):
        clique_separator_reduce(bowtie, -1)


# invariants


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7), graphs(max_n=5))
def test_agrees_with_oracle(host, pattern):
    assert minor_present(host, pattern) == minor_oracle_bruteforce(host, pattern)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9), graphs(max_n=6))
def test_subgraph_matches_networkx(host, pattern):
    emb = has_subgraph(host, pattern)
    expected = GraphMatcher(to_nx(host), to_nx(pattern)).subgraph_is_monomorphic()
    assert (emb is not None) == expected
    if emb is not None:
        assert len(set(emb)) == pattern.n
        assert all(host.has_edge(emb[u], emb[v]) for u, v in pattern.edges())
        assert has_minor(host, pattern) is not None


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=10, max_n=10, max_density=1.0))
def test_petersen_fast_path_agrees_with_generic(host):
    fast = petersen_spanning(host)
    generic, _ = _pykernels.subgraph_embed(list(host.rows), list(PET.rows), 0)
    assert (fast is None) == (generic is None)


def test_petersen_fast_path_on_dense_hosts():
    rng = make_rng(11)
    for m in range(15, 46, 3):
        for _ in range(10):
            host = random_graph(rng, 10, m)
            generic, _ = _pykernels.subgraph_embed(list(host.rows), list(PET.rows), 0)
            assert (petersen_spanning(host) is None) == (generic is None)


def has_k4_minor_by_reduction(g: Graph) -> bool:
    """K_4-minor-free graphs are exactly those that vanish under deleting
    vertices of degree <= 1 and suppressing vertices of degree 2."""
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            nb = adj[v]
            if len(nb) <= 2:
                for u in nb:
                    adj[u].discard(v)
                if len(nb) == 2:
                    a, b = nb
                    adj[a].add(b)
                    adj[b].add(a)
                del adj[v]
                changed = True
    return bool(adj)


def test_k4_reduction_oracle_agrees_with_closure_oracle():
    for n in range(7):
        for g in graphs_up_to_iso(n):
            assert has_k4_minor_by_reduction(g) == minor_oracle_bruteforce(g, Graph.complete(4))


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=4, max_n=8))
def test_clique_separator_reduce_sound_for_k4(host):
    pieces = clique_separator_reduce(host, 2)
    expected = has_k4_minor_by_reduction(host)
    assert expected == any(has_k4_minor_by_reduction(p) for p in pieces)
    assert expected == (has_minor(host, Graph.complete(4)) is not None)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=9), st.data())
def test_adding_an_edge_never_loses_a_minor(host, data):
    if not host.non_edges():
        return
    u, v = data.draw(st.sampled_from(host.non_edges()))
    pattern = data.draw(st.sampled_from([Graph.complete(4), Graph.complete(5), complete_bipartite(3, 3)]))
    if has_minor(host, pattern) is not None:
        assert has_minor(add_edge(host, u, v), pattern) is not None


def test_rooted_k3_matches_bruteforce_up_to_six():
    for n in range(3, 7):
        for g in graphs_up_to_iso(n):
            if not is_connected(g):
                continue
            for roots in combinations(range(n), 3):
                assert rooted_k3_minor(g, roots) == rooted_k3_bruteforce(g, roots)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=7, max_n=7))
def test_rooted_k3_matches_bruteforce_seven(g):
    if not is_connected(g):
        return
    for roots in list(combinations(range(7), 3))[::5]:
        assert rooted_k3_minor(g, roots) == rooted_k3_bruteforce(g, roots)


def test_cockades_of_small_cliques_avoid_higher_connectivity_minors():
    # K_4 is 2-connected: no minor of any (K_3, 1)-cockade; K_5 is 3-connected vs (K_4, 2)
    for spec in (CockadeSpec.path(2), CockadeSpec.path(3), CockadeSpec.star(3)):
        g = generic_cockade(Graph.complete(3), 1, spec)
        assert not minor_present(g, Graph.complete(4))
        assert not minor_oracle_bruteforce(g, Graph.complete(4))
        g = generic_cockade(Graph.complete(4), 2, spec)
        assert not minor_present(g, Graph.complete(5))
        if g.n <= 9:
            assert not minor_oracle_bruteforce(g, Graph.complete(5))
    k5_2 = generic_cockade(Graph.complete(5), 2, CockadeSpec.path(2))
    assert (k5_2.n, k5_2.m) == (8, 19)
    assert not minor_present(k5_2, Graph.complete(6))
    assert not minor_oracle_bruteforce(k5_2, Graph.complete(6))


def test_disconnected_pattern_and_host():
    two_triangles = disjoint_union(Graph.complete(3), Graph.complete(3))
    assert minor_present(disjoint_union(Graph.complete(4), Graph.cycle(5)), two_triangles)
    assert not minor_present(Graph.complete(5), two_triangles)
    assert minor_present(Graph.complete(6), two_triangles)
    assert minor_present(Graph.empty(3), Graph.empty(2))
    assert minor_present(Graph.empty(0), Graph.empty(0))


def test_budget_exhaustion_is_distinct():
    base = cockade(CockadeSpec.path(2))
    host = add_edge(base, *base.non_edges()[0])
    with pytest.raises(BudgetExhausted):
        has_minor(host, PET, budget=5, reduce=False)
    assert has_minor(host, PET) is not None


def test_twin_classes_partition():
    g = complete_bipartite(2, 3)
    classes = twin_classes(g)
    assert sorted(c.bit_count() for c in classes) == [2, 3]


# compiled kernels


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled extension not built")
def test_compiled_kernels_match_python():
    from petminor import _ckernels

    rng = make_rng(5)
    for _ in range(150):
        n = int(rng.integers(6, 15))
        host = random_graph(rng, n, int(rng.integers(n, n * (n - 1) // 2 + 1)))
        pattern = random_graph(rng, 6, int(rng.integers(5, 12)))
        hr, pr = list(host.rows), list(pattern.rows)
        assert _ckernels.subgraph_embed(hr, pr, 0) == _pykernels.subgraph_embed(hr, pr, 0)
        parts = [1 << v for v in range(n)]
        assert _ckernels.quotient_rows(hr, parts) == _pykernels.quotient_rows(hr, parts)
        classes = twin_classes(host)
        assert _ckernels.partition_key(parts, host.vertex_mask, classes) == \
            _pykernels.partition_key(parts, host.vertex_mask, classes)
        autos = _pykernels.automorphisms(pr, 5000) or []
        # a quotient on as many parts as the pattern has vertices
        merged = [mask for mask in (sum(1 << v for v in range(i, n, 6)) for i in range(6))]
        q = _pykernels.quotient_rows(hr, merged)
        assert _ckernels.quotient_rows(hr, merged) == q
        assert _ckernels.spanning_embed(q, pr, autos, 0) == _pykernels.spanning_embed(q, pr, autos, 0)


def test_kernels_fall_back_beyond_one_word():
    host = Graph.complete(70)
    assert has_subgraph(host, PET) is not None


def test_pure_backend_can_be_forced():
    env = {**os.environ, "PETMINOR_PURE": "1"}
    code = "import petminor; print(petminor.BACKEND)"
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "python"
