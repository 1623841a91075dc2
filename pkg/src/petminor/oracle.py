"""Brute-force references used to cross-check the fast searches."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .census import canonical_form, from_canonical
from .graph import Graph, GraphError, contract_edge, delete_edge, delete_vertices, reach

ORACLE_MAX_VERTICES = 9
SHARED_CLOSURE_VERTICES = 7


class OracleCapacityError(GraphError):
    pass


def minor_oracle_bruteforce(host: Graph, pattern: Graph) -> bool:
    """Breadth-first closure of host under single deletions and contractions.

    Graphs are deduplicated by canonical form.  For hosts on at most
    ``SHARED_CLOSURE_VERTICES`` vertices the whole closure is computed once and
    cached, so a sweep over many patterns costs one closure per host; larger
    hosts drop states with fewer vertices or edges than the pattern, since no
    operation adds either.
    """
    if host.n > ORACLE_MAX_VERTICES:
        raise OracleCapacityError(f"oracle limited to {ORACLE_MAX_VERTICES} host vertices, got {host.n}")
    goal = canonical_form(pattern)
    if host.n <= SHARED_CLOSURE_VERTICES:
        return goal in minor_closure(canonical_form(host), 0, 0)
    return goal in minor_closure(canonical_form(host), pattern.n, pattern.m)


@lru_cache(maxsize=4096)
def minor_closure(start: tuple[int, int], min_n: int, min_m: int) -> frozenset[tuple[int, int]]:
    """Canonical forms of all minors of ``start`` with at least min_n vertices and min_m edges."""
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for form in frontier:
            g = from_canonical(form)
            children = [delete_vertices(g, 1 << v) for v in range(g.n)]
            for u, v in g.edges():
                children.append(delete_edge(g, u, v))
                children.append(contract_edge(g, u, v))
            for h in children:
                if h.n < min_n or h.m < min_m:
                    continue
                f = canonical_form(h)
                if f not in seen:
                    seen.add(f)
                    nxt.append(f)
        frontier = nxt
    return frozenset(seen)


def rooted_k3_bruteforce(host: Graph, roots: tuple[int, int, int]) -> bool:
    """Try every assignment of non-root vertices to one of three branch sets or none."""
    x, y, z = roots
    others = [v for v in range(host.n) if v not in roots]
    for labels in product(range(4), repeat=len(others)):
        sets = [1 << x, 1 << y, 1 << z]
        for v, lab in zip(others, labels):
            if lab < 3:
                sets[lab] |= 1 << v
        if any(reach(host, r, s) != s for r, s in zip(roots, sets)):
            continue
        touch = []
        for s in sets:
            t = 0
            for v in range(host.n):
                if s >> v & 1:
                    t |= host.rows[v]
            touch.append(t)
        if touch[0] & sets[1] and touch[0] & sets[2] and touch[1] & sets[2]:
            return True
    return False
