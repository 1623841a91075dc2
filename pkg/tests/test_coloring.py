from __future__ import annotations

from itertools import product
from math import ceil

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from petminor.coloring import (
    CliqueFound,
    Coloring,
    ColoringError,
    DegeneracyError,
    ForestPartition,
    greedy_degeneracy_coloring,
    minus_one_coloring,
    verify_coloring,
    verify_forest_partition,
    vertex_arboricity_partition,
)
from petminor.families import CockadeSpec, cockade, cockade_blocks, dominant_k5_family, join_k5_empty
from petminor.graph import Graph, degeneracy

from .conftest import graphs, to_nx


def independent_proper(g: Graph, colors) -> bool:
    return all(colors[u] != colors[v] for u, v in to_nx(g).edges())


def independent_forests(g: Graph, parts) -> bool:
    h = to_nx(g)
    for p in set(parts):
        sub = h.subgraph([v for v in range(g.n) if parts[v] == p])
        if not nx.is_forest(sub):
            return False
    return True


def assert_clique_minor(g: Graph, size: int, sets) -> None:
    h = to_nx(g)
    members = [[v for v in range(g.n) if s >> v & 1] for s in sets]
    assert len(members) == size
    assert len({v for m in members for v in m}) == sum(map(len, members))
    for m in members:
        assert nx.is_connected(h.subgraph(m))
    for i in range(size):
        for j in range(i + 1, size):
            assert any(h.has_edge(a, b) for a in members[i] for b in members[j])


# greedy


def test_greedy_examples():
    assert greedy_degeneracy_coloring(Graph.complete(9)).colors_used == 9
    tree = Graph.from_edges(10, [(i, (i - 1) // 2) for i in range(1, 10)])
    assert greedy_degeneracy_coloring(tree).palette_size <= 2
    col = greedy_degeneracy_coloring(cockade_blocks(2))
    assert col.palette_size <= 9 and verify_coloring(cockade_blocks(2), col)


@given(graphs(max_n=14))
def test_greedy_bound(g):
    col = greedy_degeneracy_coloring(g)
    d, _ = degeneracy(g)
    assert verify_coloring(g, col) and independent_proper(g, col.colors)
    assert col.palette_size <= d + 1


@pytest.mark.parametrize("n", range(1, 9))
def test_greedy_tight_on_cliques(n):
    assert greedy_degeneracy_coloring(Graph.complete(n)).palette_size == n


# contraction colouring


def test_minus_one_examples():
    col = minus_one_coloring(Graph.complete(9), 5)
    assert col.colors_used == 9 and verify_coloring(Graph.complete(9), col)
    g = cockade(CockadeSpec.path(3))
    col = minus_one_coloring(g, 5)
    assert col.palette_size <= 9 and independent_proper(g, col.colors)
    with pytest.raises(CliqueFound) as err:
        minus_one_coloring(Graph.complete(10), 5)
    assert err.value.size == 10
    assert_clique_minor(Graph.complete(10), 10, err.value.branch_sets)


def test_minus_one_degeneracy_error():
    with pytest.raises(DegeneracyError):
        minus_one_coloring(Graph.complete(11), 5)
    with pytest.raises(ColoringError):
        minus_one_coloring(Graph.complete(3), 0)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12), st.integers(1, 4))
def test_minus_one_contract(g, c):
    try:
        col = minus_one_coloring(g, c)
    except CliqueFound as err:
        assert err.size == 2 * c
        assert_clique_minor(g, 2 * c, err.branch_sets)
        return
    except DegeneracyError:
        return
    assert col.palette_size <= 2 * c - 1
    assert independent_proper(g, col.colors)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12), st.integers(1, 4))
def test_minus_one_succeeds_below_bound(g, c):
    # degeneracy <= 2c - 2 means only deletions happen
    if degeneracy(g)[0] <= 2 * c - 2:
        assert minus_one_coloring(g, c).palette_size <= 2 * c - 1


@given(graphs(max_n=10))
def test_deterministic(g):
    assert greedy_degeneracy_coloring(g) == greedy_degeneracy_coloring(g)
    assert vertex_arboricity_partition(g) == vertex_arboricity_partition(g)


# forest partitions


def test_arboricity_examples():
    fp = vertex_arboricity_partition(Graph.complete(9))
    assert fp.part_count == 5 and independent_forests(Graph.complete(9), fp.parts)
    tree = Graph.from_edges(8, [(i, i // 2) for i in range(1, 8)])
    assert vertex_arboricity_partition(tree).part_count == 1
    g = cockade_blocks(4)
    fp = vertex_arboricity_partition(g)
    assert g.n == 30 and fp.part_count <= 5
    assert verify_forest_partition(g, fp) and independent_forests(g, fp.parts)


def test_k9_needs_five_forests():
    k9 = Graph.complete(9)
    for labels in product(range(4), repeat=9):
        assert not independent_forests(k9, labels)
        if labels[0] != 0:
            break  # part names are interchangeable, so vertex 0 in part 0 covers every case


@given(graphs(max_n=14))
def test_arboricity_bound_and_placement(g):
    fp = vertex_arboricity_partition(g)
    d, order = degeneracy(g)
    assert fp.part_count <= (ceil((d + 1) / 2) if g.n else 0)
    assert verify_forest_partition(g, fp) and independent_forests(g, fp.parts)
    placed = set()
    for v in reversed(order):
        same = [u for u in g.neighbors(v) if u in placed and fp.parts[u] == fp.parts[v]]
        assert len(same) <= 1
        placed.add(v)


@pytest.mark.parametrize("g", [dominant_k5_family(3), join_k5_empty(20), cockade_blocks(5)])
def test_families_within_bounds(g):
    col = minus_one_coloring(g, 5)
    assert col.palette_size <= 9 and independent_proper(g, col.colors)
    fp = vertex_arboricity_partition(g)
    assert fp.part_count <= 5 and independent_forests(g, fp.parts)


# verifiers


def test_verifiers_reject():
    k3 = Graph.complete(3)
    assert not verify_coloring(k3, Coloring((0, 0, 0), 1))
    assert not verify_coloring(k3, Coloring((0, 1, 5), 3))
    assert not verify_forest_partition(k3, ForestPartition((0, 0, 0), 1))
    assert verify_forest_partition(k3, ForestPartition((0, 0, 1), 2))
    assert not verify_forest_partition(k3, ForestPartition((0, 0), 1))


@given(graphs(max_n=10), st.data())
def test_forest_verifier_matches_networkx(g, data):
    parts = tuple(data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n)))
    assert verify_forest_partition(g, ForestPartition(parts, 3)) == independent_forests(g, parts)
