"""Seeded random graphs.

All randomness goes through numpy's PCG64 bit generator, seeded explicitly.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def sample_slots(rng: np.random.Generator, total: int, k: int) -> list[int]:
    """First k positions of a Fisher-Yates shuffle of range(total)."""
    if not 0 <= k <= total:
        raise ValueError(f"cannot choose {k} of {total}")
    slots = list(range(total))
    for i in range(k):
        j = i + int(rng.integers(0, total - i))
        slots[i], slots[j] = slots[j], slots[i]
    return slots[:k]


def random_graph(rng: np.random.Generator, n: int, m: int) -> Graph:
    """Uniform graph on n labelled vertices with exactly m edges."""
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    return Graph.from_edges(n, [pairs[i] for i in sample_slots(rng, len(pairs), m)])


def random_edges(rng: np.random.Generator, g: Graph, k: int) -> list[tuple[int, int]]:
    """k distinct edges of g chosen uniformly."""
    edges = g.edges()
    return sorted(edges[i] for i in sample_slots(rng, len(edges), k))
