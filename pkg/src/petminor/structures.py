"""Separations, skeletons and rooted tables.

For an induced subgraph H, a skeleton is a subtree of G[N[H]] whose leaves
are exactly N(H).  A table is a 6-tuple of disjoint connected vertex sets
X1..X6 with X5 adjacent to X1, X2, X6 and X6 adjacent to X3, X4; it is
rooted at S when X1..X4 each meet S exactly once and X5, X6 avoid S.

The constructions assume a 4-connected ambient graph and check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph import Graph, GraphError, Separation, bits, is_k_connected, lowest, mask_of, min_vertex_separation, reach


class StructureError(GraphError):
    """A precondition failed; ``clause`` names which one."""

    def __init__(self, clause: str, detail: str = "") -> None:
        super().__init__(f"precondition failed: {clause}" + (f" ({detail})" if detail else ""))
        self.clause = clause


Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Skeleton:
    ambient: Graph
    fragment: int
    tree: tuple[Edge, ...]
    construction: str = "given"

    @classmethod
    def from_edges(cls, g: Graph, fragment: int, edges: Iterable[Edge], construction: str = "given") -> "Skeleton":
        return cls(g, fragment, tuple(sorted({_norm(u, v) for u, v in edges})), construction)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {}
        for u, v in self.tree:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return adj

    @property
    def vertices(self) -> int:
        return mask_of(self.adjacency())

    def degree(self, v: int) -> int:
        return len(self.adjacency().get(v, ()))

    def leaves(self) -> int:
        return mask_of(v for v, nb in self.adjacency().items() if len(nb) == 1)

    def high_degree(self) -> list[int]:
        return sorted(v for v, nb in self.adjacency().items() if len(nb) >= 3)

    def path(self, a: int, b: int) -> list[int]:
        return _tree_path(self.adjacency(), a, b)

    def to_json(self) -> dict:
        return {"fragment": list(bits(self.fragment)), "tree": [list(e) for e in self.tree],
                "construction": self.construction}


@dataclass(frozen=True)
class Table:
    ambient: Graph
    parts: tuple[int, int, int, int, int, int]
    root: int

    def to_json(self) -> dict:
        return {"parts": [list(bits(p)) for p in self.parts], "root": list(bits(self.root))}


def _tree_path(adj: dict[int, set[int]], a: int, b: int) -> list[int]:
    parent = {a: a}
    frontier = [a]
    while frontier and b not in parent:
        nxt = []
        for x in frontier:
            for y in sorted(adj.get(x, ())):
                if y not in parent:
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    if b not in parent:
        raise GraphError(f"no tree path between {a} and {b}")
    out = [b]
    while out[-1] != a:
        out.append(parent[out[-1]])
    return out[::-1]


# validators


def skeleton_violations(g: Graph, skel: Skeleton) -> list[str]:
    """Failed skeleton clauses; empty when ``skel`` is a skeleton of g[fragment]."""
    bad = []
    frag = skel.fragment
    nbhd = g.neighborhood_of_set(frag)
    closed = frag | nbhd
    verts = 0
    for u, v in skel.tree:
        verts |= (1 << u) | (1 << v)
        if not g.has_edge(u, v):
            bad.append("tree edges are graph edges")
            break
    if verts & ~closed:
        bad.append("tree inside N[fragment]")
    count = verts.bit_count()
    if count == 0:
        if nbhd:
            bad.append("leaves equal N(fragment)")
        return bad
    # a connected graph with |V| - 1 edges is a tree
    if len(skel.tree) != count - 1:
        bad.append("acyclic and connected")
    else:
        adj: dict[int, int] = {}
        for u, v in skel.tree:
            adj[u] = adj.get(u, 0) | (1 << v)
            adj[v] = adj.get(v, 0) | (1 << u)
        seen = 1 << lowest(verts)
        frontier = seen
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= adj[x]
            frontier = nxt & ~seen
            seen |= nxt
        if seen != verts:
            bad.append("acyclic and connected")
    deg: dict[int, int] = {}
    for u, v in skel.tree:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    leaves = mask_of(v for v, d in deg.items() if d == 1)
    if leaves != nbhd:
        bad.append("leaves equal N(fragment)")
    return bad


def validate_skeleton(g: Graph, skel: Skeleton) -> bool:
    return not skeleton_violations(g, skel)


def table_violations(g: Graph, table: Table, within: int | None = None) -> list[str]:
    """Failed table clauses, each named; ``within`` restricts to an induced subgraph."""
    bad = []
    parts = table.parts
    region = g.vertex_mask if within is None else within
    if len(parts) != 6:
        return ["six parts"]
    seen = 0
    disjoint = True
    for p in parts:
        if p & seen:
            disjoint = False
        seen |= p
    if not disjoint:
        bad.append("pairwise disjoint")
    if any(p == 0 or p & ~region or reach(g, lowest(p), p) != p for p in parts):
        bad.append("each part a non-empty fragment")

    def adjacent(p: int, q: int) -> bool:
        return bool(g.neighborhood_of_set(p) & q)

    x1, x2, x3, x4, x5, x6 = parts
    if not (adjacent(x5, x1) and adjacent(x5, x2) and adjacent(x5, x6)):
        bad.append("X5 adjacent to X1, X2, X6")
    if not (adjacent(x6, x3) and adjacent(x6, x4)):
        bad.append("X6 adjacent to X3, X4")
    if any((p & table.root).bit_count() != 1 for p in parts[:4]):
        bad.append("X1..X4 each meet the root once")
    if (x5 | x6) & table.root:
        bad.append("X5, X6 avoid the root")
    return bad


def validate_table(g: Graph, table: Table, within: int | None = None) -> bool:
    return not table_violations(g, table, within)


# constructions


def find_separation(g: Graph, max_order: int) -> Separation | None:
    """A separation of order at most ``max_order`` from a minimum vertex cut, or None."""
    sep = min_vertex_separation(g)
    if sep is None or sep.order > max_order:
        return None
    return sep


def _lex_shortest_path(g: Graph, sources: int, targets: int, through: int) -> list[int] | None:
    """Lexicographically least among shortest paths from ``sources`` to ``targets``.

    Interior vertices must lie in ``through`` (disjoint from ``targets``).
    Distances to the targets are computed first; the path starts at the
    least source at minimum distance and always steps to the least
    neighbour one step closer.
    """
    dist = {t: 0 for t in bits(targets)}
    reached = targets
    frontier = targets
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for x in bits(frontier):
            nxt |= g.rows[x]
        nxt &= through & ~reached
        for v in bits(nxt):
            dist[v] = d
        reached |= nxt
        frontier = nxt
    best = None
    for src in bits(sources):
        if targets >> src & 1:
            ds = 0
        else:
            near = [dist[u] for u in bits(g.rows[src] & reached)]
            if not near:
                continue
            ds = min(near) + 1
        if best is None or ds < best[0]:
            best = (ds, src)
    if best is None:
        return None
    left, cur = best
    path = [cur]
    while left > 0:
        left -= 1
        cur = next(u for u in bits(g.rows[cur] & reached) if dist[u] == left)
        path.append(cur)
    return path


def skeleton_path(g: Graph, s: int, t: Skeleton, v: int, w: int) -> list[int]:
    """Path of G[N[s]] - {v, w} from the tree path vTw to the rest of the tree.

    Internal vertices avoid the tree; among the shortest such paths the
    lexicographically least vertex sequence is returned, starting on vTw.
    """
    if t.fragment != s:
        raise StructureError("skeleton belongs to the given fragment")
    if not validate_skeleton(g, t):
        raise StructureError("t is a skeleton of G[s]", ", ".join(skeleton_violations(g, t)))
    adj = t.adjacency()
    if v == w:
        raise StructureError("v and w distinct")
    if v not in adj or w not in adj:
        raise StructureError("v and w are tree vertices")
    if w in adj[v]:
        raise StructureError("vw is not a tree edge")
    spine = t.path(v, w)
    spine_mask = mask_of(spine)
    tree_mask = mask_of(adj)
    if spine_mask == tree_mask:
        raise StructureError("tree differs from the v-w tree path")
    rest = g.vertex_mask & ~((1 << v) | (1 << w))
    if reach(g, lowest(rest), rest) != rest:
        raise StructureError("G - {v, w} connected")
    region = (s | g.neighborhood_of_set(s)) & rest
    inner = spine_mask & ~((1 << v) | (1 << w))
    path = _lex_shortest_path(g, inner, tree_mask & ~spine_mask & region, region & ~tree_mask)
    if path is None:
        raise StructureError("G - {v, w} connected", "no path found")
    return path


def _check_separation(g: Graph, sep: Separation, need_root: int = 0) -> tuple[int, int]:
    if not sep.is_valid(g):
        raise StructureError("(A, B) is a separation")
    side = sep.a & ~sep.b
    root = sep.a & sep.b
    if g.neighborhood_of_set(side) != root:
        raise StructureError("N(A \\ B) = A ∩ B")
    if side.bit_count() < 2:
        raise StructureError("|A \\ B| >= 2")
    if reach(g, lowest(side), side) != side:
        raise StructureError("G[A \\ B] connected")
    if need_root and root.bit_count() < need_root:
        raise StructureError(f"|A ∩ B| >= {need_root}")
    if not is_k_connected(g, 4):
        raise StructureError("G is 4-connected")
    return side, root


def minimal_skeleton(g: Graph, side: int, root: int) -> Skeleton:
    """BFS spanning tree of G[side] from its least vertex, one edge to each root
    vertex (its least neighbour in ``side``), then non-root leaves pruned."""
    start = lowest(side)
    edges: set[Edge] = set()
    seen = 1 << start
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for y in bits(g.rows[x] & side & ~seen):
                seen |= 1 << y
                edges.add(_norm(x, y))
                nxt.append(y)
        frontier = nxt
    for r in bits(root):
        edges.add(_norm(r, lowest(g.rows[r] & side)))
    while True:
        deg: dict[int, int] = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        loose = [x for x, d in sorted(deg.items()) if d == 1 and not root >> x & 1]
        if not loose:
            break
        edges = {e for e in edges if loose[0] not in e}
    return Skeleton.from_edges(g, side, edges, "minimal")


def build_skeleton_two_branch(g: Graph, sep: Separation) -> Skeleton:
    """Skeleton of G[A \\ B] with at least two vertices of tree degree >= 3.

    Start from the minimal tree with leaves A ∩ B.  If it has a single
    branch vertex w: when some leg xTw has an interior vertex, reroute one
    other leg through a skeleton path off that leg; otherwise every leg is
    a single edge, and a path x-y-...-z between two roots plus a shortest
    connection to w replaces the edges xw and zw.
    """
    side, root = _check_separation(g, sep)
    tree = minimal_skeleton(g, side, root)
    high = tree.high_degree()
    if len(high) >= 2:
        return _checked(g, tree)
    if not high:
        raise StructureError("|A ∩ B| >= 3", "the minimal tree is a path")
    w = high[0]
    adj = tree.adjacency()
    edges = set(tree.tree)
    for x in bits(root):
        leg = _tree_path(adj, x, w)
        if len(leg) > 2:
            path = skeleton_path(g, side, tree, x, w)
            z = path[-1]
            dropped = _tree_path(adj, z, w)
            edges -= {_norm(a, b) for a, b in zip(dropped, dropped[1:])}
            edges |= {_norm(a, b) for a, b in zip(path, path[1:])}
            return _checked(g, Skeleton.from_edges(g, side, edges, "rerouted leg"))
    # every leg is a single edge: V(T) = {w} + roots
    for x in bits(root):
        ys = g.rows[x] & side & ~(1 << w)
        if ys:
            y = lowest(ys)
            break
    else:
        raise StructureError("G is 4-connected", "no root has a neighbour besides w")
    allowed = sep.a & ~((1 << x) | (1 << w))
    p1 = _lex_shortest_path(g, 1 << y, root & ~(1 << x), allowed & ~root)
    if p1 is None:
        raise StructureError("G is 4-connected", "no path avoiding x and w")
    z = p1[-1]
    p1_inner = mask_of(p1[:-1])
    p2 = _lex_shortest_path(g, p1_inner, 1 << w, side & ~p1_inner)
    if p2 is None:
        raise StructureError("G[A \\ B] connected")
    edges -= {_norm(x, w), _norm(z, w)}
    path1 = [x] + p1
    edges |= {_norm(a, b) for a, b in zip(path1, path1[1:])}
    edges |= {_norm(a, b) for a, b in zip(p2, p2[1:])}
    return _checked(g, Skeleton.from_edges(g, side, edges, "two paths"))


def _checked(g: Graph, skel: Skeleton) -> Skeleton:
    bad = skeleton_violations(g, skel)
    if bad or len(skel.high_degree()) < 2:
        raise AssertionError(f"skeleton construction broke its contract: {bad}")
    return skel


def extract_table(g: Graph, sep: Separation) -> Table:
    """Table of G[A] rooted at A ∩ B, read off a two-branch skeleton.

    With branch vertices w < x: X1, X2 follow tree paths from two neighbours
    of w (not towards x) down to leaves, X3, X4 likewise from x, X5 is the
    tree path from w up to the neighbour of x towards w, and X6 = {x}.
    Descents always take the least child.
    """
    side, root = _check_separation(g, sep, need_root=4)
    skel = build_skeleton_two_branch(g, sep)
    adj = skel.adjacency()
    w, x = skel.high_degree()[:2]
    spine = _tree_path(adj, w, x)
    w_towards, x_towards = spine[1], spine[-2]
    w1, w2 = sorted(adj[w] - {w_towards})[:2]
    x3, x4 = sorted(adj[x] - {x_towards})[:2]
    parts = (
        _descend(adj, w, w1),
        _descend(adj, w, w2),
        _descend(adj, x, x3),
        _descend(adj, x, x4),
        mask_of(spine[:-1]),
        1 << x,
    )
    table = Table(g, parts, root)
    bad = table_violations(g, table, sep.a)
    if bad:
        raise AssertionError(f"table construction broke its contract: {bad}")
    return table


def _descend(adj: dict[int, set[int]], parent: int, start: int) -> int:
    out = 1 << start
    prev, cur = parent, start
    while len(adj[cur]) > 1:
        nxt = min(adj[cur] - {prev})
        out |= 1 << nxt
        prev, cur = cur, nxt
    return out


# instances


def glued_instance(rng: np.random.Generator, clique: int = 9, roots: int = 4, fragment: int = 6,
                   density: float = 0.5) -> tuple[Graph, Separation]:
    """K_clique with a connected random fragment attached behind ``roots`` of its vertices.

    Returns the graph and the separation (A, B) = (fragment + roots, clique).
    The result need not be 4-connected; callers filter.
    """
    n = clique + fragment
    edges = [(a, b) for a in range(clique) for b in range(a + 1, clique)]
    frag = list(range(clique, n))
    order = list(rng.permutation(frag))
    for i in range(1, fragment):
        edges.append((int(order[i]), int(order[int(rng.integers(0, i))])))
    for i, a in enumerate(frag):
        for b in frag[i + 1:]:
            if rng.random() < density:
                edges.append((a, b))
    for r in range(roots):
        picks = [v for v in frag if rng.random() < density]
        if not picks:
            picks = [frag[int(rng.integers(0, fragment))]]
        edges += [(r, v) for v in picks]
    g = Graph.from_edges(n, set(_norm(a, b) for a, b in edges))
    a = mask_of(range(roots)) | mask_of(frag)
    b = mask_of(range(clique))
    return g, Separation(a, b)


def four_connected_instances(count: int, seed: int) -> list[tuple[Graph, Separation]]:
    """Seeded 4-connected glued instances with varied clique, root and fragment sizes."""
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    while len(out) < count:
        clique = int(rng.integers(7, 10))
        roots = int(rng.integers(4, 7))
        fragment = int(rng.integers(2, 8))
        density = float(rng.uniform(0.3, 0.8))
        g, sep = glued_instance(rng, clique, roots, fragment, density)
        if g.neighborhood_of_set(sep.a & ~sep.b) != (sep.a & sep.b):
            continue
        if is_k_connected(g, 4):
            out.append((g, sep))
    return out
