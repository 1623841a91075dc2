"""Dense small graphs stored as rows of bit-adjacency.

A :class:`Graph` has vertices ``0..n-1`` and ``rows[v]`` is a Python int whose
bit ``u`` is set iff ``uv`` is an edge.  Vertex sets are plain int bitmasks
over the same index range.  Graphs are immutable; every operation returns a
new graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 128


class GraphError(ValueError):
    """Base class for invalid graph operations."""


class CapacityError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class ContractNonEdgeError(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


popcount = int.bit_count


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph on {self.n} vertices exceeds capacity {MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise VertexRangeError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    # construction

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graph on {n} vertices exceeds capacity {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    # queries

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return popcount(self.rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return list(bits(self.rows[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self.rows[v] | (1 << v)

    def neighborhood_of_set(self, s: int) -> int:
        """N(S): vertices outside ``s`` adjacent to some vertex of ``s``."""
        out = 0
        for v in bits(s):
            out |= self.rows[v]
        return out & ~s

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.rows[u] >> v & 1
        ]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_clique(self, s: int) -> bool:
        return all((self.rows[v] | (1 << v)) & s == s for v in bits(s))

    def is_connected_set(self, s: int) -> bool:
        """True iff ``s`` is non-empty and induces a connected subgraph."""
        if not s:
            return False
        return reach(self, lowest(s), s) == s

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Separation:
    """A pair (A, B) of vertex sets covering every edge, both private sides non-empty."""

    a: int
    b: int

    @property
    def order(self) -> int:
        return popcount(self.a & self.b)

    @property
    def separator(self) -> int:
        return self.a & self.b

    def is_valid(self, g: Graph) -> bool:
        if (self.a | self.b) != g.vertex_mask:
            return False
        if not (self.a & ~self.b) or not (self.b & ~self.a):
            return False
        only_a = self.a & ~self.b
        only_b = self.b & ~self.a
        return all(g.rows[v] & only_b == 0 for v in bits(only_a))


def reach(g: Graph, start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` inside ``g[within]``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.rows[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, within: int | None = None) -> list[int]:
    """Vertex sets of the components of ``g`` (or of ``g[within]``), ordered by lowest vertex."""
    left = g.vertex_mask if within is None else within
    out = []
    while left:
        comp = reach(g, lowest(left), left)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n == 0 or reach(g, 0, g.vertex_mask) == g.vertex_mask


# operations


def contract_edge(g: Graph, v: int, w: int) -> Graph:
    """Contract the edge vw.

    Remaining vertices keep their relative order; the merged vertex is
    appended last with neighbourhood (N(v) | N(w)) - {v, w}.
    """
    if not (0 <= v < g.n and 0 <= w < g.n) or v == w or not g.rows[v] >> w & 1:
        raise ContractNonEdgeError(f"cannot contract ({v}, {w}): not an edge")
    merged_nbrs = (g.rows[v] | g.rows[w]) & ~((1 << v) | (1 << w))
    keep = [u for u in range(g.n) if u != v and u != w]
    return _relabel(g, keep, extra_neighbors=merged_nbrs)


def _relabel(g: Graph, keep: Sequence[int], extra_neighbors: int | None = None) -> Graph:
    index = {u: i for i, u in enumerate(keep)}
    k = len(keep)
    rows = [0] * (k + (extra_neighbors is not None))
    for i, u in enumerate(keep):
        r = 0
        for x in bits(g.rows[u]):
            j = index.get(x)
            if j is not None:
                r |= 1 << j
        rows[i] = r
    if extra_neighbors is not None:
        r = 0
        for x in bits(extra_neighbors):
            r |= 1 << index[x]
        rows[k] = r
        for j in bits(r):
            rows[j] |= 1 << k
    return Graph(len(rows), tuple(rows))


def induced(g: Graph, s: int) -> Graph:
    """G[S], relabelled so that the vertices of ``s`` keep increasing order."""
    if s & ~g.vertex_mask:
        raise VertexRangeError("vertex set outside graph range")
    return _relabel(g, list(bits(s)))


def delete_vertices(g: Graph, s: int) -> Graph:
    if s & ~g.vertex_mask:
        raise VertexRangeError("vertex set outside graph range")
    return induced(g, g.vertex_mask & ~s)


def delete_edge(g: Graph, v: int, w: int) -> Graph:
    if not g.has_edge(v, w):
        raise GraphError(f"({v}, {w}) is not an edge")
    rows = list(g.rows)
    rows[v] &= ~(1 << w)
    rows[w] &= ~(1 << v)
    return Graph(g.n, tuple(rows))


def add_edge(g: Graph, v: int, w: int) -> Graph:
    g._check(v)
    g._check(w)
    if v == w:
        raise GraphError(f"loop at vertex {v}")
    rows = list(g.rows)
    rows[v] |= 1 << w
    rows[w] |= 1 << v
    return Graph(g.n, tuple(rows))


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(g.rows)
    for v, w in edges:
        g._check(v)
        g._check(w)
        if v == w:
            raise GraphError(f"loop at vertex {v}")
        rows[v] |= 1 << w
        rows[w] |= 1 << v
    return Graph(g.n, tuple(rows))


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(g.rows)
    for v, w in edges:
        if not g.rows[v] >> w & 1:
            raise GraphError(f"({v}, {w}) is not an edge")
        rows[v] &= ~(1 << w)
        rows[w] &= ~(1 << v)
    return Graph(g.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    gm = g.vertex_mask
    hm = h.vertex_mask << g.n
    rows = [r | hm for r in g.rows] + [(r << g.n) | gm for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def triangles_per_edge(g: Graph, v: int, w: int) -> int:
    if not g.has_edge(v, w):
        raise GraphError(f"({v}, {w}) is not an edge")
    return popcount(g.rows[v] & g.rows[w])


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Repeatedly remove a minimum-degree vertex (lowest index on ties).

    Returns the largest degree seen at removal time and the removal order.
    Every vertex has at most ``d`` neighbours removed after it.
    """
    alive = g.vertex_mask
    deg = g.degrees()
    order = []
    d = 0
    while alive:
        best = -1
        for v in bits(alive):
            if best < 0 or deg[v] < deg[best]:
                best = v
        d = max(d, deg[best])
        order.append(best)
        alive &= ~(1 << best)
        for u in bits(g.rows[best] & alive):
            deg[u] -= 1
    return d, order


# connectivity


def local_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> tuple[int, int]:
    """Maximum number of internally disjoint s-t paths for non-adjacent s, t.

    Unit-capacity max-flow on the vertex-split network.  Returns the flow
    value (capped at ``limit``) and, when the value is below the cap, a
    minimum s-t vertex cut as a bitmask.
    """
    if s == t or g.rows[s] >> t & 1:
        raise GraphError("local connectivity needs distinct non-adjacent vertices")
    n = g.n
    # node 2v is v_in, 2v+1 is v_out; only the v_in -> v_out arcs of
    # non-terminals are capacity-limited, so every min cut is a vertex cut
    flow: dict[tuple[int, int], int] = {}

    def cap_of(a: int, b: int) -> int:
        va, oa = divmod(a, 2)
        vb, ob = divmod(b, 2)
        if va == vb:
            if oa == 0 and ob == 1:
                return n if va in (s, t) else 1
            return 0
        if oa == 1 and ob == 0 and g.rows[va] >> vb & 1:
            return n
        return 0

    def res(a: int, b: int) -> int:
        return cap_of(a, b) - flow.get((a, b), 0) + flow.get((b, a), 0)

    def arcs(x: int) -> Iterator[int]:
        v, out = divmod(x, 2)
        yield 2 * v + (1 - out)
        for u in bits(g.rows[v]):
            yield 2 * u + (1 - out)

    source, sink = 2 * s + 1, 2 * t
    value = 0
    cap = n if limit is None else limit
    while value < cap:
        parent = {source: -1}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y in arcs(x):
                if y not in parent and res(x, y) > 0:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            cut = 0
            for v in range(n):
                if v not in (s, t) and 2 * v in parent and 2 * v + 1 not in parent:
                    cut |= 1 << v
            return value, cut
        y = sink
        while parent[y] != -1:
            x = parent[y]
            back = flow.get((y, x), 0)
            if back:
                flow[(y, x)] = back - 1
            else:
                flow[(x, y)] = flow.get((x, y), 0) + 1
            y = x
        value += 1
    return value, 0


def vertex_connectivity(g: Graph) -> int:
    """Largest k such that g is k-connected (n - 1 for complete graphs)."""
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    best = n - 1
    # A minimum cut misses one of the first best+1 vertices; probing from each
    # of them against every non-neighbour finds it.
    i = 0
    while i <= best and i < n:
        for u in range(n):
            if u != i and not g.rows[i] >> u & 1:
                value, _ = local_connectivity(g, i, u, limit=best)
                best = min(best, value)
        i += 1
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    if k < 1:
        raise GraphError("k must be positive")
    if g.n < k + 1:
        return False
    if not is_connected(g):
        return False
    n = g.n
    for i in range(min(k, n)):
        for u in range(n):
            if u != i and not g.rows[i] >> u & 1:
                value, _ = local_connectivity(g, i, u, limit=k)
                if value < k:
                    return False
    return True


def min_vertex_separation(g: Graph) -> Separation | None:
    """A separation of minimum order, or None for complete graphs.

    Pairs are scanned in lexicographic order and the first pair attaining the
    minimum order wins.
    """
    n = g.n
    comps = components(g)
    if len(comps) > 1:
        a = comps[0]
        return Separation(a, g.vertex_mask & ~a)
    best: tuple[int, int, int] | None = None
    for s in range(n):
        for t in range(s + 1, n):
            if g.rows[s] >> t & 1:
                continue
            limit = None if best is None else best[0]
            value, cut = local_connectivity(g, s, t, limit=limit)
            if best is None or value < best[0]:
                best = (value, s, cut)
                if value == 0:
                    break
    if best is None:
        return None
    _, s, cut = best
    side = reach(g, s, g.vertex_mask & ~cut)
    return Separation(side | cut, g.vertex_mask & ~side)
