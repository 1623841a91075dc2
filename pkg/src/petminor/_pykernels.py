"""Pure-Python search kernels.

Reference implementation of the compiled ``_ckernels`` module; both expose
the same functions with the same results and node counts.
"""

from __future__ import annotations

from ._budget import BudgetExhausted


_popcount = int.bit_count


def subgraph_embed(
    hrows: list[int], prows: list[int], node_limit: int = 0
) -> tuple[list[int] | None, int]:
    """Find an injective map of pattern vertices to host vertices keeping edges.

    Domains are bitmasks over host vertices; after every assignment the
    domains of unassigned pattern vertices are filtered (used vertex removed,
    adjacency to the new image required for pattern neighbours) and the
    search backtracks on an empty domain.  The next variable is the one with
    the smallest domain, lowest index on ties.

    Returns (mapping or None, nodes visited).  ``node_limit`` 0 means no limit.
    """
    nh, npat = len(hrows), len(prows)
    if npat > nh:
        return None, 0
    if npat == 0:
        return [], 0
    hdeg = [_popcount(r) for r in hrows]
    pdeg = [_popcount(r) for r in prows]
    dom = []
    for p in range(npat):
        d = 0
        for h in range(nh):
            if hdeg[h] >= pdeg[p]:
                d |= 1 << h
        if not d:
            return None, 0
        dom.append(d)
    mapping = [-1] * npat
    nodes = 0

    def rec(dom: list[int], left: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit and nodes > node_limit:
            raise BudgetExhausted(nodes, "subgraph search budget exhausted")
        if left == 0:
            return True
        best = -1
        best_size = 1 << 30
        for p in range(npat):
            if mapping[p] < 0:
                size = _popcount(dom[p])
                if size < best_size:
                    best, best_size = p, size
        p = best
        prow = prows[p]
        cands = dom[p]
        while cands:
            low = cands & -cands
            cands ^= low
            c = low.bit_length() - 1
            hrow = hrows[c]
            new = dom[:]
            ok = True
            for q in range(npat):
                if mapping[q] >= 0 or q == p:
                    continue
                d = new[q] & ~low
                if prow >> q & 1:
                    d &= hrow
                if not d:
                    ok = False
                    break
                new[q] = d
            if not ok:
                continue
            mapping[p] = c
            if rec(new, left - 1):
                return True
            mapping[p] = -1
        return False

    if rec(dom, npat):
        return mapping[:], nodes
    return None, nodes


def quotient_rows(hrows: list[int], parts: list[int]) -> list[int]:
    """Adjacency rows of the graph obtained by contracting each part."""
    k = len(parts)
    reachable = []
    for part in parts:
        r = 0
        x = part
        while x:
            low = x & -x
            r |= hrows[low.bit_length() - 1]
            x ^= low
        reachable.append(r)
    rows = [0] * k
    for i in range(k):
        ri = reachable[i]
        for j in range(i + 1, k):
            if ri & parts[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def spanning_embed(
    qrows: list[int], prows: list[int], autos: list[list[int]], node_limit: int = 0
) -> tuple[list[int] | None, int]:
    """Bijection host -> pattern under which every pattern edge comes from a host edge.

    Host and pattern have the same order.  Host vertices are the variables
    and pattern vertices the values; assigning h -> p removes p from every
    other domain and, for host non-neighbours of h, removes the pattern
    neighbours of p.  ``autos`` lists pattern automorphisms (may be empty);
    at each node only one value per orbit of the pointwise stabiliser of
    the values already used is tried.

    Returns (pattern vertex -> host vertex mapping or None, nodes visited).
    """
    n = len(qrows)
    if len(prows) != n:
        raise ValueError("spanning_embed needs equal orders")
    if n == 0:
        return [], 0
    qdeg = [_popcount(r) for r in qrows]
    pdeg = [_popcount(r) for r in prows]
    dom = []
    for h in range(n):
        d = 0
        for p in range(n):
            if pdeg[p] <= qdeg[h]:
                d |= 1 << p
        if not d:
            return None, 0
        dom.append(d)
    image = [-1] * n
    nodes = 0

    def rec(dom: list[int], left: int, group: list[list[int]]) -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit and nodes > node_limit:
            raise BudgetExhausted(nodes, "subgraph search budget exhausted")
        if left == 0:
            return True
        best = -1
        best_size = 1 << 30
        for h in range(n):
            if image[h] < 0:
                size = _popcount(dom[h])
                if size < best_size:
                    best, best_size = h, size
        h = best
        qrow = qrows[h]
        cands = dom[h]
        covered = 0
        while cands:
            low = cands & -cands
            cands ^= low
            p = low.bit_length() - 1
            if covered >> p & 1:
                continue
            for a in group:
                covered |= 1 << a[p]
            covered |= low
            forbid = prows[p]
            new = dom[:]
            ok = True
            for x in range(n):
                if image[x] >= 0 or x == h:
                    continue
                d = new[x] & ~low
                if not qrow >> x & 1:
                    d &= ~forbid
                if not d:
                    ok = False
                    break
                new[x] = d
            if not ok:
                continue
            image[h] = p
            sub = [a for a in group if a[p] == p]
            if rec(new, left - 1, sub):
                return True
            image[h] = -1
        return False

    if rec(dom, n, list(autos)):
        inverse = [0] * n
        for h, p in enumerate(image):
            inverse[p] = h
        return inverse, nodes
    return None, nodes


def automorphisms(prows: list[int], limit: int = 0) -> list[list[int]] | None:
    """All automorphisms of a graph, or None if there are more than ``limit``."""
    n = len(prows)
    deg = [_popcount(r) for r in prows]
    out: list[list[int]] = []
    image = [-1] * n
    used = 0

    def rec(i: int) -> bool:
        nonlocal used
        if i == n:
            out.append(image[:])
            return not (limit and len(out) > limit)
        for c in range(n):
            if used >> c & 1 or deg[c] != deg[i]:
                continue
            good = True
            for j in range(i):
                if (prows[i] >> j & 1) != (prows[c] >> image[j] & 1):
                    good = False
                    break
            if not good:
                continue
            image[i] = c
            used |= 1 << c
            if not rec(i + 1):
                return False
            used &= ~(1 << c)
            image[i] = -1
        return True

    if not rec(0):
        return None
    return out


def partition_key(parts: list[int], singles: int, classes: list[int]) -> tuple[int, ...]:
    """Canonical form of a partition under permutations inside each class.

    Each part keeps its vertices outside the classes and, inside each class,
    is replaced by that class's lowest vertices in the same number.  The
    sorted tuple of the rewritten parts is the key.
    """
    out = []
    for p in parts:
        r = p & singles
        for c in classes:
            k = (p & c).bit_count()
            x = c
            while k:
                low = x & -x
                r |= low
                x ^= low
                k -= 1
        out.append(r)
    out.sort()
    return tuple(out)
