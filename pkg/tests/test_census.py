from __future__ import annotations

from collections import Counter
from math import comb, factorial

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from petminor.census import (
    automorphism_count,
    canonical_form,
    component_form,
    few_edge_classes,
    from_canonical,
    graphs_up_to_iso,
    iter_labelled,
)
from petminor.families import petersen
from petminor.graph import Graph

from .conftest import from_nx, graphs, to_nx


def relabel(g: Graph, perm: list[int]) -> Graph:
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@pytest.mark.parametrize("n", range(8))
def test_class_counts_match_atlas(n):
    atlas = [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n]
    ours = graphs_up_to_iso(n)
    assert len(ours) == len(atlas)
    assert {canonical_form(g) for g in ours} == {canonical_form(g) for g in atlas}


@pytest.mark.parametrize("n", range(1, 6))
def test_labelled_enumeration_orbits(n):
    # brute force: group all labelled graphs by canonical form
    orbits = Counter(canonical_form(g) for g in iter_labelled(n))
    classes = graphs_up_to_iso(n)
    assert len(orbits) == len(classes)
    for g in classes:
        assert orbits[canonical_form(g)] == factorial(n) // automorphism_count(g)


@settings(max_examples=80)
@given(graphs(max_n=8), st.randoms())
def test_canonical_form_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert canonical_form(g) == canonical_form(h)
    assert component_form(g) == component_form(h)
    assert nx.is_isomorphic(to_nx(from_canonical(canonical_form(g))), to_nx(g))


@settings(max_examples=80)
@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_form_separates(g, h):
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (canonical_form(g) == canonical_form(h)) == same


@settings(max_examples=50)
@given(graphs(max_n=7))
def test_automorphism_count_matches_networkx(g):
    expected = sum(1 for _ in GraphMatcher(to_nx(g), to_nx(g)).isomorphisms_iter())
    assert automorphism_count(g) == expected


def test_petersen_automorphisms():
    assert automorphism_count(petersen()) == 120


def test_few_edge_classes_on_ten_vertices():
    classes = few_edge_classes(10, 6)
    # graphs with k edges and no isolated vertices: 1, 1, 2, 5, 11, 26, 68;
    # for k = 6 the two needing 11 or 12 vertices (P3 + 4K2, 6K2) do not fit
    assert [len(classes[k]) for k in range(7)] == [1, 1, 2, 5, 11, 26, 66]
    for k, reps in classes.items():
        assert all(g.m == k and g.n == 10 for g in reps)
        assert sum(factorial(10) // automorphism_count(g) for g in reps) == comb(45, k)
    assert sum(comb(45, k) for k in range(7)) == 9_531_040
