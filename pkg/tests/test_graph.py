from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from petminor.families import join_k5_empty, petersen
from petminor.graph import (
    CapacityError,
    ContractNonEdgeError,
    Graph,
    GraphError,
    Separation,
    VertexRangeError,
    add_edge,
    complement,
    components,
    contract_edge,
    degeneracy,
    delete_edge,
    delete_vertices,
    disjoint_union,
    induced,
    is_connected,
    is_k_connected,
    local_connectivity,
    mask_of,
    min_vertex_separation,
    triangles_per_edge,
    vertex_connectivity,
)

from .conftest import graphs, to_nx


def test_rejects_asymmetric_rows_and_loops():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (0b1,))
    with pytest.raises(VertexRangeError):
        Graph.from_edges(3, [(0, 3)])


def test_capacity():
    Graph.empty(128)
    with pytest.raises(CapacityError):
        Graph.empty(129)


# contraction


def test_contract_triangle_gives_edge():
    for v, w in Graph.complete(3).edges():
        assert contract_edge(Graph.complete(3), v, w) == Graph.complete(2)


def test_contract_c5_gives_c4():
    for v, w in Graph.cycle(5).edges():
        assert nx.is_isomorphic(to_nx(contract_edge(Graph.cycle(5), v, w)), nx.cycle_graph(4))


def test_contract_petersen_edge():
    p = petersen()
    for v, w in p.edges():
        assert triangles_per_edge(p, v, w) == 0
        h = contract_edge(p, v, w)
        assert (h.n, h.m) == (9, 14)


def test_contract_index_remap():
    # path 0-1-2-3, contract 1-2: remaining 0, 3 keep order, merged vertex is 2
    h = contract_edge(Graph.path(4), 1, 2)
    assert h == Graph.from_edges(3, [(0, 2), (1, 2)])


def test_contract_non_edge_rejected():
    with pytest.raises(ContractNonEdgeError):
        contract_edge(Graph.path(3), 0, 2)
    with pytest.raises(ContractNonEdgeError):
        contract_edge(Graph.path(3), 0, 7)


@given(graphs(min_n=2, max_n=10), st.data())
def test_contract_counts(g, data):
    if not g.m:
        return
    v, w = data.draw(st.sampled_from(g.edges()))
    h = contract_edge(g, v, w)
    assert h.n == g.n - 1
    assert h.m == g.m - 1 - triangles_per_edge(g, v, w)
    expected = nx.contracted_nodes(to_nx(g), v, w, self_loops=False)
    assert nx.is_isomorphic(to_nx(h), expected)


# components and connectivity


def test_components_examples():
    g = disjoint_union(Graph.complete(3), Graph.complete(2))
    assert sorted(c.bit_count() for c in components(g)) == [2, 3]
    assert components(Graph.empty(4)) == [1, 2, 4, 8]
    assert components(petersen()) == [(1 << 10) - 1]


@given(graphs(max_n=14, max_density=0.3))
def test_components_partition(g):
    comps = components(g)
    union = 0
    for c in comps:
        assert not c & union
        union |= c
        assert g.is_connected_set(c)
        assert not g.neighborhood_of_set(c) & ~c
    assert union == g.vertex_mask
    assert len(comps) == nx.number_connected_components(to_nx(g)) if g.n else comps == []


def test_k_connectivity_examples():
    assert is_k_connected(petersen(), 3)
    assert not is_k_connected(Graph.cycle(5), 3)
    assert is_k_connected(join_k5_empty(12), 5)
    assert not is_k_connected(join_k5_empty(12), 6)


@settings(max_examples=60)
@given(graphs(min_n=1, max_n=10))
def test_connectivity_matches_networkx(g):
    kappa = vertex_connectivity(g)
    assert kappa == nx.node_connectivity(to_nx(g))
    for k in range(1, 6):
        assert is_k_connected(g, k) == (g.n >= k + 1 and kappa >= k)


@settings(max_examples=60)
@given(graphs(min_n=3, max_n=9))
def test_flow_agrees_with_cut_enumeration(g):
    # smallest vertex cut separating each non-adjacent pair, by brute force
    for s, t in g.non_edges()[:6]:
        others = [v for v in range(g.n) if v not in (s, t)]
        best = None
        for size in range(len(others) + 1):
            for cut in combinations(others, size):
                within = g.vertex_mask & ~mask_of(cut)
                reach_s = components(g, within)
                if not any(c >> s & 1 and c >> t & 1 for c in reach_s):
                    best = size
                    break
            if best is not None:
                break
        value, cut = local_connectivity(g, s, t)
        assert value == best
        assert cut.bit_count() == value


@settings(max_examples=40)
@given(graphs(min_n=1, max_n=9))
def test_connectivity_monotone(g):
    flags = [is_k_connected(g, k) for k in range(1, 6)]
    for k in range(1, 5):
        if flags[k]:
            assert flags[k - 1]


def test_min_vertex_separation():
    sep = min_vertex_separation(Graph.cycle(6))
    assert sep.order == 2 and sep.is_valid(Graph.cycle(6))
    assert min_vertex_separation(Graph.complete(5)) is None
    assert not Separation(0b111, 0b111).is_valid(Graph.complete(3))


# triangles and degeneracy


@pytest.mark.parametrize("n, count", [(5, 3), (9, 7)])
def test_triangles_in_cliques(n, count):
    g = Graph.complete(n)
    assert {triangles_per_edge(g, v, w) for v, w in g.edges()} == {count}


def test_triangles_non_edge():
    with pytest.raises(GraphError):
        triangles_per_edge(Graph.path(3), 0, 2)


def test_degeneracy_examples():
    tree = nx.random_labeled_tree(12, seed=3) if hasattr(nx, "random_labeled_tree") else nx.path_graph(12)
    g = Graph.from_edges(12, tree.edges())
    assert degeneracy(g)[0] == 1
    assert degeneracy(Graph.complete(9))[0] == 8


@given(graphs(max_n=12))
def test_degeneracy_properties(g):
    d, order = degeneracy(g)
    assert sorted(order) == list(range(g.n))
    assert d == max(nx.core_number(to_nx(g)).values(), default=0)
    pos = {v: i for i, v in enumerate(order)}
    for v in range(g.n):
        later = sum(1 for u in g.neighbors(v) if pos[u] > pos[v])
        assert later <= d
    # every suffix of the removal order (prefix of the reversed order) has min degree <= d
    for i in range(g.n):
        h = induced(g, mask_of(order[i:]))
        assert h.min_degree() <= d


# plumbing


def test_plumbing_examples():
    assert complement(Graph.complete(5)) == Graph.empty(5)
    assert induced(petersen(), 0b11111) == Graph.cycle(5)
    g = petersen()
    assert delete_edge(add_edge(g, 0, 2), 0, 2) == g
    assert delete_vertices(g, 1).n == 9


@given(graphs(max_n=12))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


def test_is_connected_trivial():
    assert is_connected(Graph.empty(0))
    assert is_connected(Graph.empty(1))
    assert not is_connected(Graph.empty(2))
