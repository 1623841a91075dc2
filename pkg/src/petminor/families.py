"""Generators for the Petersen graph, cockades and the named minor-free families."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Sequence

from .graph import CapacityError, Graph, GraphError, bits, join

PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
)


class CockadeSpecError(GraphError):
    pass


def petersen() -> Graph:
    """Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    return Graph.from_edges(10, PETERSEN_EDGES)


GLUE_RULES = ("least", "fresh")


@dataclass(frozen=True)
class CockadeSpec:
    """Block structure of a cockade.

    Block 0 is the base copy.  Block ``j >= 1`` is glued onto a clique of
    block ``parents[j - 1]``; ``glue[j - 1]`` names that clique explicitly
    (global vertex labels) or is None for the rule-based choice.  Rule
    "least" takes the lexicographically least clique of the parent block;
    rule "fresh" skips cliques of the parent that earlier blocks were
    already glued onto, which spreads the gluings out.
    """

    block_count: int
    parents: tuple[int, ...] = ()
    glue: tuple[tuple[int, ...] | None, ...] = field(default=())
    rule: str = "least"

    def __post_init__(self) -> None:
        if self.block_count < 1:
            raise CockadeSpecError("a cockade has at least one block")
        if len(self.parents) != self.block_count - 1:
            raise CockadeSpecError("need one parent per block after the first")
        for j, p in enumerate(self.parents, start=1):
            if not 0 <= p < j:
                raise CockadeSpecError(f"block {j} has parent {p}; parents must precede children")
        if self.glue and len(self.glue) != self.block_count - 1:
            raise CockadeSpecError("glue list must match the number of glued blocks")
        if self.rule not in GLUE_RULES:
            raise CockadeSpecError(f"unknown glue rule {self.rule!r}")

    @property
    def glue_tree(self) -> list[tuple[int, int]]:
        return [(p, j) for j, p in enumerate(self.parents, start=1)]

    def glue_choice(self, j: int) -> tuple[int, ...] | None:
        return self.glue[j - 1] if self.glue else None

    @classmethod
    def path(cls, k: int, rule: str = "least") -> "CockadeSpec":
        return cls(k, tuple(range(k - 1)), rule=rule)

    @classmethod
    def star(cls, k: int, rule: str = "least") -> "CockadeSpec":
        return cls(k, (0,) * (k - 1), rule=rule)


def all_glue_trees(k: int, rule: str = "least") -> Iterator[CockadeSpec]:
    """Every parent sequence with parents[j] < j: all rooted glue-tree shapes on k blocks."""
    for parents in product(*(range(j) for j in range(1, k))):
        yield CockadeSpec(k, tuple(parents), rule=rule)


def _cliques(g: Graph, within: int, size: int) -> list[tuple[int, ...]]:
    verts = list(bits(within))
    return [
        c for c in combinations(verts, size)
        if all(g.rows[u] >> v & 1 for u, v in combinations(c, 2))
    ]


@dataclass(frozen=True)
class CockadeBuild:
    graph: Graph
    blocks: tuple[int, ...]
    glue_sites: tuple[tuple[int, ...], ...]


def build_cockade(h: Graph, t: int, spec: CockadeSpec) -> CockadeBuild:
    """Glue copies of ``h`` along t-cliques following ``spec``.

    Each new copy attaches through the lexicographically least t-clique of
    ``h``; its other vertices receive fresh labels appended in ``h``'s order.
    """
    base_sites = _cliques(h, h.vertex_mask, t)
    if not base_sites:
        raise CockadeSpecError(f"h has no clique of size {t} to glue on")
    attach = base_sites[0]
    rest = [v for v in range(h.n) if v not in attach]

    n = h.n
    blocks = [h.vertex_mask]
    used: list[set[tuple[int, ...]]] = [set()]
    sites: list[tuple[int, ...]] = []
    rows_so_far = list(h.rows)
    for j in range(1, spec.block_count):
        parent = spec.parents[j - 1]
        current = Graph(n, tuple(rows_so_far))
        choice = spec.glue_choice(j)
        if choice is None:
            options = _cliques(current, blocks[parent], t)
            if spec.rule == "fresh":
                options = [c for c in options if c not in used[parent]]
            if not options:
                raise CockadeSpecError(f"block {parent} has no unused {t}-clique for block {j}")
            site = options[0]
        else:
            site = tuple(sorted(choice))
            if len(site) != t or len(set(site)) != t:
                raise CockadeSpecError(f"glue site {choice} is not a {t}-set")
            if any(not 0 <= v < n for v in site):
                raise CockadeSpecError(f"glue site {choice} references missing vertices")
            if any(not blocks[parent] >> v & 1 for v in site):
                raise CockadeSpecError(f"glue site {choice} is not inside block {parent}")
            if any(not current.rows[u] >> v & 1 for u, v in combinations(site, 2)):
                raise CockadeSpecError(f"glue site {choice} is not a clique")
        used[parent].add(site)
        sites.append(site)
        label = {a: s for a, s in zip(attach, site)}
        for i, v in enumerate(rest):
            label[v] = n + i
        n += len(rest)
        rows_so_far.extend([0] * len(rest))
        block = 0
        for v in range(h.n):
            block |= 1 << label[v]
        for u, v in h.edges():
            a, b = label[u], label[v]
            if not rows_so_far[a] >> b & 1:
                rows_so_far[a] |= 1 << b
                rows_so_far[b] |= 1 << a
        blocks.append(block)
        used.append(set())
    return CockadeBuild(Graph(n, tuple(rows_so_far)), tuple(blocks), tuple(sites))


def generic_cockade(h: Graph, t: int, spec: CockadeSpec) -> Graph:
    return build_cockade(h, t, spec).graph


def cockade(spec: CockadeSpec) -> Graph:
    """A (K_9, 2)-cockade: n = 9 + 7(k - 1) vertices and 5n - 9 edges."""
    return generic_cockade(Graph.complete(9), 2, spec)


def cockade_blocks(k: int) -> Graph:
    """Path-shaped (K_9, 2)-cockade with ``k`` blocks, canonical glue rule."""
    return cockade(CockadeSpec.path(k))


RECOGNIZER_MAX_VERTICES = 40


@dataclass(frozen=True)
class CockadeRecognition:
    """A completion of a graph to a (K_9, 2)-cockade on the same vertices.

    ``blocks`` are the vertex sets of the K_9 copies, ``glue`` lists
    (block, block, (a, b)) for each gluing and ``added_edges`` the edges
    the completion needs beyond the input graph.
    """

    blocks: tuple[int, ...]
    glue: tuple[tuple[int, int, tuple[int, int]], ...]
    added_edges: tuple[tuple[int, int], ...]

    @property
    def defects(self) -> int:
        return len(self.added_edges)

    def spec(self) -> CockadeSpec:
        """Block structure as a spec rooted at block 0 (children in BFS order)."""
        k = len(self.blocks)
        adj: dict[int, list[int]] = {i: [] for i in range(k)}
        for i, j, _ in self.glue:
            adj[i].append(j)
            adj[j].append(i)
        order, index, parents = [0], {0: 0}, []
        for b in order:
            for c in sorted(adj[b]):
                if c not in index:
                    index[c] = len(order)
                    order.append(c)
                    parents.append(index[b])
        return CockadeSpec(k, tuple(parents))

    def completion(self, g: Graph) -> Graph:
        rows = list(g.rows)
        for u, v in self.added_edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(g.n, tuple(rows))


def recognize_cockade_spanning(g: Graph, missing_budget: int = 2) -> CockadeRecognition | None:
    """Complete ``g`` to a (K_9, 2)-cockade by adding at most ``missing_budget`` edges.

    A cockade on more than nine vertices has a glue pair {a, b} whose removal
    disconnects it; since g is a subgraph of its completion, {a, b} also
    disconnects g.  The search tries every such pair and every grouping of
    the components of g - {a, b} into two sides of sizes divisible by 7,
    makes ab an edge (paying for it once if missing) and recurses on both
    sides.  Nine-vertex pieces complete to K_9.  Among completions within
    budget the one with fewest added edges is returned.
    """
    if g.n > RECOGNIZER_MAX_VERTICES:
        raise CapacityError(f"cockade recognition is limited to {RECOGNIZER_MAX_VERTICES} vertices")
    if not 0 <= missing_budget <= 2:
        raise GraphError("missing_budget must be 0, 1 or 2")
    memo: dict[tuple, tuple | None] = {}
    found = _recognize(g.rows, g.vertex_mask, missing_budget, memo)
    if found is None:
        return None
    blocks, glue, added = found
    return CockadeRecognition(tuple(blocks), tuple(glue), tuple(sorted(added)))


def _recognize(rows: tuple[int, ...], s: int, budget: int, memo: dict) -> tuple | None:
    size = s.bit_count()
    if size < 9 or size % 7 != 2:
        return None
    local = tuple(rows[v] & s for v in bits(s))
    key = (s, local, budget)
    if key in memo:
        return memo[key]
    if size == 9:
        missing = [(u, v) for u, v in combinations(bits(s), 2) if not rows[u] >> v & 1]
        result = ([s], [], missing) if len(missing) <= budget else None
        memo[key] = result
        return result
    best = None
    verts = list(bits(s))
    for a, b in combinations(verts, 2):
        pair = (1 << a) | (1 << b)
        comps = _components_within(rows, s & ~pair)
        if len(comps) < 2:
            continue
        pay = 0 if rows[a] >> b & 1 else 1
        if pay > budget:
            continue
        linked = list(rows)
        linked[a] |= 1 << b
        linked[b] |= 1 << a
        linked_t = tuple(linked)
        first, rest = comps[0], comps[1:]
        # first component always on side X so each split is seen once
        for choice in product((0, 1), repeat=len(rest)):
            x = first
            y = 0
            for c, side in zip(rest, choice):
                if side:
                    y |= c
                else:
                    x |= c
            if not y or x.bit_count() % 7 or y.bit_count() % 7:
                continue
            left = _recognize(linked_t, x | pair, budget - pay, memo)
            if left is None:
                continue
            right = _recognize(linked_t, y | pair, budget - pay - len(left[2]), memo)
            if right is None:
                continue
            added = list(left[2]) + list(right[2]) + ([(a, b)] if pay else [])
            if best is not None and len(added) >= len(best[2]):
                continue
            lb, rb = left[0], right[0]
            i = next(k for k, blk in enumerate(lb) if blk & pair == pair)
            j = next(k for k, blk in enumerate(rb) if blk & pair == pair)
            shift = len(lb)
            glue = list(left[1]) + [(p + shift, q + shift, e) for p, q, e in right[1]]
            glue.append((i, j + shift, (a, b)))
            best = (lb + rb, glue, added)
            if not added:
                break
        if best is not None and not best[2]:
            break
    memo[key] = best
    return best


def _components_within(rows: tuple[int, ...], within: int) -> list[int]:
    out = []
    left = within
    while left:
        seen = left & -left
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= within & ~seen
            seen |= nxt
            frontier = nxt
        out.append(seen)
        left &= ~seen
    return out


def dominant_k5_family(k: int) -> Graph:
    """Triangle of three dominant vertices joined to k disjoint copies of K_5."""
    if k < 1:
        raise GraphError("need at least one K_5 component")
    rows = [0] * (3 + 5 * k)
    n = len(rows)
    full = (1 << n) - 1
    for s in range(3):
        rows[s] = full & ~(1 << s)
    for c in range(k):
        block = 0b11111 << (3 + 5 * c)
        for v in range(3 + 5 * c, 8 + 5 * c):
            rows[v] = (block | 0b111) & ~(1 << v)
    return Graph(n, tuple(rows))


def join_k5_empty(n: int) -> Graph:
    """K_5 joined to n - 5 independent vertices."""
    if n < 6:
        raise GraphError("join_k5_empty needs n >= 6")
    return join(Graph.complete(5), Graph.empty(n - 5))


def icosahedron() -> Graph:
    """Top 0, upper ring 1..5, lower ring 6..10, bottom 11."""
    edges = []
    for i in range(5):
        up, up_next = 1 + i, 1 + (i + 1) % 5
        low, low_next = 6 + i, 6 + (i + 1) % 5
        edges += [(0, up), (up, up_next), (low, low_next), (11, low), (up, low), (up, low_next)]
    return Graph.from_edges(12, edges)


def apex_icosahedron() -> Graph:
    """The icosahedron plus one dominant vertex (label 12)."""
    return join(icosahedron(), Graph.empty(1))


def wheel(spokes: int) -> Graph:
    """Hub 0 joined to the cycle 1..spokes."""
    return join(Graph.empty(1), Graph.cycle(spokes))


def complete_bipartite(a: int, b: int) -> Graph:
    return join(Graph.empty(a), Graph.empty(b))


def named(name: str, params: Sequence[int] = ()) -> Graph:
    """Family lookup used by the command line ``gen`` subcommand."""
    table = {
        "petersen": lambda: petersen(),
        "cockade": lambda k=2: cockade_blocks(k),
        "cockade-star": lambda k=2: cockade(CockadeSpec.star(k)),
        "dominant-k5": lambda k=1: dominant_k5_family(k),
        "join-k5": lambda n=12: join_k5_empty(n),
        "apex-icosahedron": lambda: apex_icosahedron(),
        "icosahedron": lambda: icosahedron(),
        "complete": lambda n: Graph.complete(n),
        "cycle": lambda n: Graph.cycle(n),
        "path": lambda n: Graph.path(n),
        "wheel": lambda k: wheel(k),
    }
    if name not in table:
        raise GraphError(f"unknown family {name!r}; choose from {', '.join(sorted(table))}")
    try:
        return table[name](*params)
    except TypeError as err:
        raise GraphError(f"bad parameters {list(params)} for {name}") from err


FAMILY_NAMES = (
    "petersen", "cockade", "cockade-star", "dominant-k5", "join-k5",
    "apex-icosahedron", "icosahedron", "complete", "cycle", "path", "wheel",
)
