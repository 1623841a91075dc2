"""Constructive colourings and forest partitions of degenerate graphs."""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .graph import Graph, GraphError, bits, degeneracy


class ColoringError(GraphError):
    pass


class DegeneracyError(ColoringError):
    """The graph has a subgraph of minimum degree above the allowed bound."""


class CliqueFound(ColoringError):
    """The contraction procedure met a clique on 2c vertices.

    ``branch_sets`` are disjoint connected vertex sets of the input graph,
    pairwise joined by an edge: a K_{2c} minor model.  For inputs where no
    contraction happened before the failure they are singletons, i.e. a
    K_{2c} subgraph.
    """

    def __init__(self, size: int, branch_sets: tuple[int, ...]) -> None:
        members = [sorted(bits(s)) for s in branch_sets]
        super().__init__(f"found a K_{size} minor with branch sets {members}")
        self.size = size
        self.branch_sets = branch_sets


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    palette_size: int

    @property
    def colors_used(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class ForestPartition:
    parts: tuple[int, ...]
    part_count: int

    def part(self, i: int) -> int:
        return sum(1 << v for v, p in enumerate(self.parts) if p == i)


def _least_free(used: set[int]) -> int:
    c = 0
    while c in used:
        c += 1
    return c


def greedy_degeneracy_coloring(g: Graph) -> Coloring:
    """Colour along the reversed degeneracy ordering with the least free colour.

    Each vertex has at most d neighbours coloured before it, so at most
    d + 1 colours appear.
    """
    _, order = degeneracy(g)
    color = [-1] * g.n
    for v in reversed(order):
        color[v] = _least_free({color[u] for u in bits(g.rows[v]) if color[u] >= 0})
    return Coloring(tuple(color), max(color, default=-1) + 1)


def minus_one_coloring(g: Graph, c: int) -> Coloring:
    """Colour g with at most 2c - 1 colours by deletions and double contractions.

    Repeatedly take a minimum-degree vertex v (lowest label on ties; vertices
    made by contraction get fresh labels after all existing ones).  If
    deg(v) <= 2c - 2, delete v.  If deg(v) = 2c - 1, pick the
    lexicographically least non-adjacent pair x, y in N(v), contract vx and
    vy into a new vertex z.  Then replay the records backwards: a deleted v
    takes a colour missing from its recorded neighbourhood; for a
    contraction x and y inherit z's colour, which leaves a free colour for v.

    Raises :class:`DegeneracyError` if some minimum degree exceeds 2c - 1 and
    :class:`CliqueFound` if N[v] is a clique on 2c vertices.
    """
    if c < 1:
        raise ColoringError("c must be positive")
    limit = 2 * c - 1
    adj: dict[int, set[int]] = {v: {u for u in bits(g.rows[v])} for v in range(g.n)}
    origin: dict[int, int] = {v: 1 << v for v in range(g.n)}
    next_id = g.n
    undo: list[tuple] = []
    while adj:
        v = min(adj, key=lambda x: (len(adj[x]), x))
        nbrs = adj[v]
        deg = len(nbrs)
        if deg > limit:
            raise DegeneracyError(f"minimum degree {deg} exceeds {limit}; the graph is not {limit}-degenerate")
        if deg < limit:
            undo.append(("remove", v, tuple(sorted(nbrs))))
            for u in nbrs:
                adj[u].discard(v)
            del adj[v]
            continue
        pair = _least_non_adjacent(adj, sorted(nbrs))
        if pair is None:
            clique = tuple(origin[u] for u in sorted(nbrs | {v}))
            raise CliqueFound(limit + 1, clique)
        x, y = pair
        z = next_id
        next_id += 1
        undo.append(("contract", v, x, y, z, tuple(sorted(nbrs))))
        merged = (adj[v] | adj[x] | adj[y]) - {v, x, y}
        for u in (v, x, y):
            for w in adj[u]:
                adj[w].discard(u)
            del adj[u]
        adj[z] = merged
        for w in merged:
            adj[w].add(z)
        origin[z] = origin[v] | origin[x] | origin[y]

    color: dict[int, int] = {}
    for record in reversed(undo):
        if record[0] == "remove":
            _, v, nbrs = record
        else:
            _, v, x, y, z, nbrs = record
            color[x] = color[y] = color[z]
        free = _least_free({color[u] for u in nbrs})
        if free >= limit:
            raise AssertionError("no free colour during replay")
        color[v] = free
    out = tuple(color[v] for v in range(g.n))
    return Coloring(out, max(out, default=-1) + 1)


def _least_non_adjacent(adj: dict[int, set[int]], nbrs: list[int]) -> tuple[int, int] | None:
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if y not in adj[x]:
                return x, y
    return None


def vertex_arboricity_partition(g: Graph) -> ForestPartition:
    """Split into at most ceil((d + 1) / 2) forests, d the degeneracy.

    Vertices are placed along the reversed degeneracy ordering into the
    least part holding at most one of their already placed neighbours.  A
    vertex has at most d placed neighbours, so with ceil((d + 1) / 2) parts
    some part holds at most one of them; joining a part through at most one
    edge cannot close a cycle.
    """
    d, order = degeneracy(g)
    bound = ceil((d + 1) / 2) if g.n else 0
    part = [-1] * g.n
    for v in reversed(order):
        counts = [0] * bound
        for u in bits(g.rows[v]):
            if part[u] >= 0:
                counts[part[u]] += 1
        choice = next((i for i in range(bound) if counts[i] <= 1), None)
        if choice is None:
            raise AssertionError("placement bound violated")
        part[v] = choice
    return ForestPartition(tuple(part), max(part, default=-1) + 1)


def verify_coloring(g: Graph, col: Coloring) -> bool:
    if len(col.colors) != g.n:
        return False
    if any(not 0 <= x < col.palette_size for x in col.colors):
        return False
    return all(col.colors[u] != col.colors[v] for u, v in g.edges())


def verify_forest_partition(g: Graph, fp: ForestPartition) -> bool:
    """Union-find over each part's internal edges; a repeated root is a cycle."""
    if len(fp.parts) != g.n:
        return False
    if any(not 0 <= p < fp.part_count for p in fp.parts):
        return False
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        if fp.parts[u] != fp.parts[v]:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True
