"""Small-graph canonical forms and isomorphism-class enumeration.

Canonical forms come from colour refinement followed by an exhaustive
search over all orderings that respect the refined colour classes; the
form is the largest adjacency code seen.  That is exponential in the class
sizes and meant for graphs on at most ten or so vertices, or for graphs
whose components are that small (see :func:`component_form`).
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations, product
from math import factorial
from typing import Iterator

from .graph import Graph, bits, components, induced
from .kernels import automorphisms


def refine(g: Graph) -> list[int]:
    """Stable colour refinement; colours are isomorphism-invariant integers."""
    n = g.n
    colour = [g.degree(v) for v in range(n)]
    while True:
        sigs = [
            (colour[v], tuple(sorted(colour[u] for u in bits(g.rows[v])))) for v in range(n)
        ]
        names = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [names[s] for s in sigs]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def canonical_form(g: Graph) -> tuple[int, int]:
    """(n, code) equal for two graphs exactly when they are isomorphic."""
    n = g.n
    if n == 0:
        return (0, 0)
    colour = refine(g)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colour[v], []).append(v)
    order = sorted(classes)
    slots = []
    start = 0
    for c in order:
        size = len(classes[c])
        slots.append(list(range(start, start + size)))
        start += size
    edges = g.edges()
    best = -1
    pos = [0] * n
    for choice in product(*(permutations(s) for s in slots)):
        for c, perm in zip(order, choice):
            for v, p in zip(classes[c], perm):
                pos[v] = p
        code = 0
        for u, v in edges:
            a, b = pos[u], pos[v]
            if a > b:
                a, b = b, a
            code |= 1 << (a * n + b)
        if code > best:
            best = code
    return (n, best)


def from_canonical(form: tuple[int, int]) -> Graph:
    n, code = form
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if code >> (a * n + b) & 1]
    return Graph.from_edges(n, edges)


def component_form(g: Graph) -> tuple:
    """Canonical form built from the canonical forms of the components.

    Practical for graphs with many isolated vertices and small components,
    where a whole-graph search over orderings would be far too large.
    """
    forms = sorted(canonical_form(induced(g, c)) for c in components(g))
    return (g.n, tuple(forms))


def automorphism_count(g: Graph) -> int:
    """|Aut(g)| as the product over component types of count! * |Aut(C)|**count."""
    kinds = Counter(canonical_form(induced(g, c)) for c in components(g))
    total = 1
    for form, count in kinds.items():
        comp = from_canonical(form)
        autos = automorphisms(list(comp.rows))
        total *= factorial(count) * len(autos) ** count
    return total


def graphs_up_to_iso(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on exactly n vertices."""
    by_size = few_edge_classes(n, n * (n - 1) // 2)
    return [g for k in sorted(by_size) for g in by_size[k]]


def few_edge_classes(n: int, max_edges: int) -> dict[int, list[Graph]]:
    """Isomorphism classes of graphs on n vertices with at most ``max_edges`` edges.

    Edge augmentation: every class with k+1 edges arises by adding one edge
    to some class with k edges, so extending each representative by every
    non-edge and deduplicating by canonical form reaches all of them.
    """
    level = {component_form(Graph.empty(n)): Graph.empty(n)}
    out = {0: list(level.values())}
    for k in range(1, max_edges + 1):
        nxt: dict[tuple, Graph] = {}
        for g in level.values():
            for u, v in g.non_edges():
                rows = list(g.rows)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                h = Graph(n, tuple(rows))
                form = component_form(h)
                if form not in nxt:
                    nxt[form] = h
        level = dict(sorted(nxt.items()))
        out[k] = list(level.values())
    return out


def iter_labelled(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices (2 ** C(n, 2) of them)."""
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])
