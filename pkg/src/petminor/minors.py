"""Exact minor and subgraph containment.

``has_minor`` works on branch sets directly.  For a connected host every
model of a pattern H can be grown until its branch sets cover the host, so
H is a minor iff some partition of the host into |V(H)| connected parts has
a quotient graph containing H as a spanning subgraph.  The search starts
from singleton parts and merges adjacent parts depth-first, with

* memoisation of visited partitions up to permutations of twin vertices
  (vertices with equal open or closed neighbourhoods are interchangeable),
* forced moves for parts whose quotient degree is below the pattern's
  minimum degree (they can never stand alone as a branch set),
* an edge-count bound (each merge destroys at least one quotient edge).

Before the search the host is split along clique separators of order below
the pattern's connectivity and, for 3-connected patterns, along 2-vertex
separators with the separator pair joined by a virtual edge; models found in
a piece are lifted back to the host.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from . import kernels
from ._budget import BudgetExhausted
from .families import PETERSEN_EDGES
from .graph import (
    Graph,
    GraphError,
    bits,
    components,
    induced,
    is_connected,
    lowest,
    popcount,
    reach,
    vertex_connectivity,
)

DEFAULT_BUDGET = 10**8

__all__ = [
    "BranchModel",
    "BudgetExhausted",
    "DEFAULT_BUDGET",
    "clique_separator_reduce",
    "has_minor",
    "has_subgraph",
    "rooted_k3_minor",
    "validate_branch_model",
]


@dataclass(frozen=True)
class BranchModel:
    host: Graph
    pattern: Graph
    branch_sets: tuple[int, ...]

    def to_json(self) -> dict[str, list[int]]:
        return {str(p): list(bits(s)) for p, s in enumerate(self.branch_sets)}

    def is_valid(self) -> bool:
        return validate_branch_model(self.host, self.pattern, self.branch_sets)


def validate_branch_model(host: Graph, pattern: Graph, branch_sets) -> bool:
    """Check disjointness, connectivity and pattern adjacency of branch sets."""
    sets = list(branch_sets)
    if len(sets) != pattern.n:
        return False
    seen = 0
    for s in sets:
        if s <= 0 or s & ~host.vertex_mask or s & seen:
            return False
        seen |= s
        if reach(host, lowest(s), s) != s:
            return False
    for u, v in pattern.edges():
        touch = 0
        for x in bits(sets[u]):
            touch |= host.rows[x]
        if not touch & sets[v]:
            return False
    return True


class _Budget:
    def __init__(self, limit: int | None) -> None:
        self.limit = limit or 0
        self.nodes = 0

    def tick(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.limit and self.nodes > self.limit:
            raise BudgetExhausted(self.nodes)

    def remaining(self) -> int:
        if not self.limit:
            return 0
        return max(1, self.limit - self.nodes)


# subgraphs


_PETERSEN = Graph.from_edges(10, PETERSEN_EDGES)


def has_subgraph(host: Graph, pattern: Graph, budget: int | None = None) -> list[int] | None:
    """Injective map (pattern vertex -> host vertex) preserving edges, or None."""
    if pattern.n > host.n or pattern.m > host.m:
        return None
    if pattern == _PETERSEN and host.n == 10:
        return petersen_spanning(host, budget)
    mapping, _ = kernels.subgraph_embed(list(host.rows), list(pattern.rows), budget or 0)
    return mapping


def petersen_spanning(host: Graph, budget: int | None = None) -> list[int] | None:
    """Embed the Petersen graph into a 10-vertex host.

    Fixed order: outer cycle 0..4, then each spoke end 5..9.  Candidates are
    filtered with host bitsets; each inner vertex needs its spoke partner and
    both of its already placed pentagram neighbours.
    """
    if host.n != 10:
        raise GraphError("petersen_spanning needs a 10-vertex host")
    rows = host.rows
    ok = 0
    for v in range(10):
        if popcount(rows[v]) >= 3:
            ok |= 1 << v
    if popcount(ok) < 10:
        return None
    inner_nbrs = {5: (7, 8), 6: (8, 9), 7: (5, 9), 8: (5, 6), 9: (6, 7)}
    img = [-1] * 10
    nodes = 0

    def place(i: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if budget and nodes > budget:
            raise BudgetExhausted(nodes, "subgraph search budget exhausted")
        if i == 10:
            return True
        if i < 5:
            cand = ok & ~used
            if i > 0:
                cand &= rows[img[i - 1]]
            if i == 4:
                cand &= rows[img[0]]
        else:
            cand = ok & ~used & rows[img[i - 5]]
            for q in inner_nbrs[i]:
                if q < i:
                    cand &= rows[img[q]]
        for c in bits(cand):
            img[i] = c
            if place(i + 1, used | 1 << c):
                return True
        img[i] = -1
        return False

    return img[:] if place(0, 0) else None


# rooted triangles


def rooted_k3_minor(host: Graph, roots: tuple[int, int, int]) -> bool:
    """Decide whether host has a K_3 minor rooted at three given vertices.

    Absent exactly when some vertex v leaves the roots other than v in
    pairwise distinct components of host - v.
    """
    x, y, z = roots
    if len({x, y, z}) != 3 or not all(0 <= r < host.n for r in roots):
        raise GraphError(f"invalid root triple {roots}")
    full = host.vertex_mask
    root_mask = (1 << x) | (1 << y) | (1 << z)
    for v in range(host.n):
        rest = full & ~(1 << v)
        left = root_mask & ~(1 << v)
        split = True
        for r in bits(left):
            comp = reach(host, r, rest)
            if popcount(comp & left) > 1:
                split = False
                break
        if split:
            return False
    return True


# clique separators


def _find_clique_separator(g: Graph, max_size: int) -> int | None:
    """Smallest-order clique S (|S| <= max_size) with g - S disconnected."""
    full = g.vertex_mask
    comps = components(g)
    if len(comps) > 1:
        return 0
    for size in range(1, max_size + 1):
        if size >= g.n - 1:
            break
        for c in combinations(range(g.n), size):
            s = 0
            for v in c:
                s |= 1 << v
            if not g.is_clique(s):
                continue
            rest = full & ~s
            if reach(g, lowest(rest), rest) != rest:
                return s
    return None


def _split(g: Graph, sep: int) -> list[tuple[Graph, list[int]]]:
    """Pieces g[C + sep] for the components C of g - sep, with label maps."""
    pieces = []
    for comp in components(g, g.vertex_mask & ~sep):
        verts = comp | sep
        pieces.append((induced(g, verts), list(bits(verts))))
    return pieces


def clique_separator_reduce(host: Graph, t: int) -> list[Graph]:
    """Recursively split along clique separators of order at most ``t``.

    For a (t+1)-connected pattern H, H is a minor of host iff it is a minor
    of one of the returned pieces.
    """
    if t < 0:
        raise GraphError("t must be non-negative")
    out = []
    stack = [host]
    while stack:
        g = stack.pop()
        sep = _find_clique_separator(g, t) if g.n > 0 else None
        if sep is None:
            out.append(g)
            continue
        pieces = [p for p, _ in _split(g, sep)]
        stack.extend(reversed(pieces))
    return out


# minors


@lru_cache(maxsize=256)
def _pattern_connectivity(pattern: Graph) -> int:
    return vertex_connectivity(pattern)


AUTOMORPHISM_LIMIT = 5000


@lru_cache(maxsize=256)
def _pattern_automorphisms(pattern: Graph) -> list[list[int]]:
    # beyond the limit the search simply runs without symmetry breaking
    autos = kernels.automorphisms(list(pattern.rows), AUTOMORPHISM_LIMIT)
    return autos or []


def has_minor(
    host: Graph,
    pattern: Graph,
    budget: int | None = DEFAULT_BUDGET,
    reduce: bool = True,
) -> BranchModel | None:
    """Return a branch model of ``pattern`` in ``host``, or None if there is none.

    Raises :class:`BudgetExhausted` when the search needs more than
    ``budget`` nodes (None or 0 disables the limit).
    """
    counter = _Budget(budget)
    sets = _search(host, pattern, counter, reduce)
    if sets is None:
        return None
    model = BranchModel(host, pattern, tuple(sets))
    if not model.is_valid():
        raise AssertionError("minor search produced an invalid branch model")
    return model


def _search(host: Graph, pattern: Graph, counter: _Budget, reduce: bool) -> list[int] | None:
    if pattern.n == 0:
        return []
    if pattern.n > host.n or pattern.m > host.m:
        return None
    kappa = _pattern_connectivity(pattern) if pattern.n > 1 else 1
    pattern_connected = is_connected(pattern)

    if pattern_connected and not is_connected(host):
        for comp in components(host):
            sub = induced(host, comp)
            labels = list(bits(comp))
            found = _search(sub, pattern, counter, reduce)
            if found is not None:
                return [_lift(s, labels) for s in found]
        return None

    if reduce and pattern_connected:
        sep = _find_clique_separator(host, kappa - 1)
        virtual = None
        if sep is None and kappa >= 3:
            sep = _find_two_separator(host)
            if sep is not None and not host.is_clique(sep):
                virtual = tuple(bits(sep))
        if sep is not None:
            counter.tick()
            pieces = _split(host, sep)
            for i, (piece, labels) in enumerate(pieces):
                if virtual is not None:
                    a, b = labels.index(virtual[0]), labels.index(virtual[1])
                    rows = list(piece.rows)
                    rows[a] |= 1 << b
                    rows[b] |= 1 << a
                    piece = Graph(piece.n, tuple(rows))
                found = _search(piece, pattern, counter, reduce)
                if found is None:
                    continue
                sets = [_lift(s, labels) for s in found]
                if virtual is not None:
                    others = host.vertex_mask & ~(sum(1 << v for v in labels))
                    sets = _realise_virtual_edge(host, sets, virtual, others)
                return sets
            return None

    return _partition_search(host, pattern, counter)


def _lift(mask: int, labels: list[int]) -> int:
    out = 0
    for i in bits(mask):
        out |= 1 << labels[i]
    return out


def _find_two_separator(g: Graph) -> int | None:
    full = g.vertex_mask
    for a in range(g.n):
        for b in range(a + 1, g.n):
            s = (1 << a) | (1 << b)
            rest = full & ~s
            if rest and reach(g, lowest(rest), rest) != rest:
                return s
    return None


def _realise_virtual_edge(host: Graph, sets: list[int], pair: tuple[int, int], others: int) -> list[int]:
    """Replace the virtual edge ab by an a-b path through the other side."""
    a, b = pair
    holder_a = next((i for i, s in enumerate(sets) if s >> a & 1), None)
    holder_b = next((i for i, s in enumerate(sets) if s >> b & 1), None)
    if holder_a is None or holder_b is None:
        return sets
    # BFS from a to b through ``others``; such a path exists because the
    # other side contains a component adjacent to both a and b.
    parent = {a: -1}
    frontier = [a]
    allowed = others | (1 << b)
    while frontier and b not in parent:
        nxt = []
        for x in frontier:
            for y in bits(host.rows[x] & allowed):
                if y not in parent and (x != a or y != b):
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    if b not in parent:
        raise AssertionError("no path realising the virtual edge")
    path = 0
    y = parent[b]
    while y != a:
        path |= 1 << y
        y = parent[y]
    out = list(sets)
    out[holder_a] |= path
    return out


def twin_classes(g: Graph) -> list[int]:
    """Disjoint vertex classes in which any permutation is an automorphism.

    True twins (equal closed neighbourhoods) first; remaining vertices are
    grouped by equal open neighbourhoods.  Only classes of size >= 2 are kept.
    """
    groups: dict[int, int] = {}
    for v in range(g.n):
        key = g.rows[v] | (1 << v)
        groups[key] = groups.get(key, 0) | (1 << v)
    classes = [m for m in groups.values() if popcount(m) > 1]
    taken = 0
    for m in classes:
        taken |= m
    groups = {}
    for v in range(g.n):
        if not taken >> v & 1:
            groups[g.rows[v]] = groups.get(g.rows[v], 0) | (1 << v)
    classes += [m for m in groups.values() if popcount(m) > 1]
    classes.sort(key=lowest)
    return classes


def _partition_search(host: Graph, pattern: Graph, counter: _Budget) -> list[int] | None:
    target = pattern.n
    pm = pattern.m
    pmin = pattern.min_degree()
    prows = list(pattern.rows)
    hrows = list(host.rows)
    connected = is_connected(host)
    classes = twin_classes(host)
    singles = host.vertex_mask
    for c in classes:
        singles &= ~c

    partition_key = kernels.partition_key

    def key_of(parts: list[int]) -> tuple:
        return partition_key(parts, singles, classes)

    seen: set[tuple] = set()
    autos = _pattern_automorphisms(pattern)
    embed = kernels.spanning_embed
    quotient = kernels.quotient_rows

    def visit(parts: list[int]) -> list[int] | None:
        key = key_of(parts)
        if key in seen:
            return None
        seen.add(key)
        counter.tick()
        p = len(parts)
        q = quotient(hrows, parts)
        qdeg = [popcount(r) for r in q]
        qm = sum(qdeg) // 2
        if qm < pm:
            return None
        if connected and qm - (p - target) < pm:
            return None
        if p == target:
            if min(qdeg) < pmin:
                return None
            mapping, used = embed(q, prows, autos, counter.remaining())
            counter.tick(used)
            if mapping is None:
                return None
            return [parts[mapping[i]] for i in range(target)]
        for child in _children(parts, q, qdeg, pmin, target, connected):
            found = visit(child)
            if found is not None:
                return found
        return None

    return visit([1 << v for v in range(host.n)])


def _merge(parts: list[int], i: int, j: int) -> list[int]:
    out = [x for k, x in enumerate(parts) if k != i and k != j]
    out.append(parts[i] | parts[j])
    return out


def _children(
    parts: list[int], q: list[int], qdeg: list[int], pmin: int, target: int, connected: bool
) -> Iterator[list[int]]:
    p = len(parts)
    if not connected:
        comps = []
        left = (1 << p) - 1
        while left:
            seen = 1 << lowest(left)
            frontier = seen
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= q[v]
                nxt &= ~seen
                seen |= nxt
                frontier = nxt
            comps.append(seen)
            left &= ~seen
    else:
        comps = []

    weak = [i for i in range(p) if qdeg[i] < pmin]
    if weak:
        d = min(weak, key=lambda i: (qdeg[i], i))
        nbrs = list(bits(q[d]))
        if qdeg[d] == 2 and pmin >= 3:
            # either merge yields the same quotient: the host minus d plus an edge
            yield _merge(parts, d, nbrs[0])
        else:
            for u in nbrs:
                yield _merge(parts, d, u)
        for comp in comps:
            if comp >> d & 1 and p - popcount(comp) >= target:
                yield [x for k, x in enumerate(parts) if not comp >> k & 1]
        return

    pairs = []
    for i in range(p):
        for j in bits(q[i] >> (i + 1) << (i + 1)):
            pairs.append((popcount(q[i] & q[j]), i, j))
    pairs.sort()
    for _, i, j in pairs:
        yield _merge(parts, i, j)
    for comp in comps:
        if p - popcount(comp) >= target:
            yield [x for k, x in enumerate(parts) if not comp >> k & 1]
