"""Claim checks with JSON reports.

Each claim returns a :class:`ClaimReport`.  Reports are deterministic for a
given configuration; the only varying field is ``wall_time``.  A failing
report carries a graph6 counterexample that :func:`revalidate` re-checks
from scratch.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from math import comb, factorial
from typing import Any, Callable, Iterable, Sequence

from . import families
from .census import automorphism_count, few_edge_classes, graphs_up_to_iso
from .coloring import (
    CliqueFound,
    ColoringError,
    minus_one_coloring,
    verify_coloring,
    verify_forest_partition,
    vertex_arboricity_partition,
)
from .graph import Graph, Separation, add_edge, complement, delete_edges, is_connected
from .graph6 import decode, encode
from .minors import BudgetExhausted, has_minor, has_subgraph, rooted_k3_minor
from .oracle import minor_oracle_bruteforce, rooted_k3_bruteforce
from .sampling import make_rng, random_edges, random_graph
from .structures import (
    StructureError,
    build_skeleton_two_branch,
    extract_table,
    four_connected_instances,
    skeleton_violations,
    table_violations,
)

PASS, FAIL, EXHAUSTED = "pass", "fail", "budget-exhausted"
DENSE10_LABELLED = sum(comb(45, k) for k in range(7))


class HarnessError(RuntimeError):
    """An internal audit failed; the run cannot be trusted."""


@dataclass
class ClaimReport:
    claim_id: str
    status: str
    instances_checked: int
    counterexample: str | None = None
    wall_time: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "ClaimReport":
        report = cls(
            claim_id=data["claim_id"],
            status=data["status"],
            instances_checked=int(data["instances_checked"]),
            counterexample=data.get("counterexample"),
            wall_time=float(data.get("wall_time", 0.0)),
            details=dict(data.get("details", {})),
        )
        if report.status not in (PASS, FAIL, EXHAUSTED):
            raise ValueError(f"unknown status {report.status!r}")
        if report.status == FAIL and report.counterexample is None:
            raise ValueError(f"failed claim {report.claim_id} has no counterexample")
        return report


@dataclass
class RunConfig:
    seed: int = 42
    only: Sequence[str] | None = None
    jobs: int = 1
    cockade_max_blocks: int = 5
    deletion_trials: int = 50
    threshold_n_min: int = 11
    threshold_n_max: int = 16
    threshold_trials: int = 100
    oracle_random_pairs: int = 500
    structure_instances: int = 30
    coloring_max_n: int = 100


PETERSEN = families.petersen()


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    """Ordered map, in worker processes when jobs > 1."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _finish(claim_id: str, outcomes: Iterable[tuple[str, str | None]], start: float,
            details: dict[str, Any] | None = None) -> ClaimReport:
    """Fold per-instance (status, graph6) outcomes: first failure wins over exhaustion."""
    count = 0
    status = PASS
    witness = None
    for st, g6 in outcomes:
        count += 1
        if st == FAIL and status != FAIL:
            status, witness = FAIL, g6
        elif st == EXHAUSTED and status == PASS:
            status = EXHAUSTED
    return ClaimReport(claim_id, status, count, witness, round(time.perf_counter() - start, 3), details or {})


# dense 10-vertex graphs


def _dense10_check(g6: str) -> tuple[str, str | None]:
    g = decode(g6)
    return (PASS, None) if has_subgraph(g, PETERSEN) is not None else (FAIL, g6)


def claim_dense10(jobs: int = 1) -> ClaimReport:
    """Petersen is a subgraph of every 10-vertex graph missing at most six edges.

    The missing edges form a graph with at most six edges; one representative
    per isomorphism class is checked.  The class list is audited: summing
    10!/|Aut| over the classes with k edges must give C(45, k).
    """
    start = time.perf_counter()
    classes = few_edge_classes(10, 6)
    audit = {}
    for k, reps in classes.items():
        labelled = sum(factorial(10) // automorphism_count(h) for h in reps)
        if labelled != comb(45, k):
            raise HarnessError(f"orbit audit failed for {k} missing edges: {labelled} != {comb(45, k)}")
        audit[str(k)] = labelled
    hosts = [encode(complement(h)) for k in sorted(classes) for h in classes[k]]
    outcomes = _map(_dense10_check, hosts, jobs)
    details = {
        "classes_per_missing_count": {str(k): len(v) for k, v in classes.items()},
        "class_count": len(hosts),
        "labelled_per_missing_count": audit,
        "labelled_count": sum(audit.values()),
        "labelled_count_formula": DENSE10_LABELLED,
    }
    return _finish("dense10", outcomes, start, details)


# cockade arithmetic


def claim_cockade_counts(max_blocks: int = 5) -> ClaimReport:
    """m = 5n - 9 and n = 2 (mod 7) for every glue-tree shape up to ``max_blocks``."""
    start = time.perf_counter()
    outcomes = []
    sizes: dict[str, list[int]] = {}
    for k in range(1, max_blocks + 1):
        for rule in families.GLUE_RULES:
            for spec in families.all_glue_trees(k, rule):
                g = families.cockade(spec)
                ok = g.m == 5 * g.n - 9 and g.n % 7 == 2 and g.n == 9 + 7 * (k - 1)
                sizes[str(k)] = [g.n, g.m]
                outcomes.append((PASS, None) if ok else (FAIL, encode(g)))
    return _finish("cockade_counts", outcomes, start, {"n_m_by_blocks": sizes})


# minor-free families


def _minor_free_check(g6: str) -> tuple[str, str | None]:
    g = decode(g6)
    try:
        found = has_minor(g, PETERSEN)
    except BudgetExhausted:
        return (EXHAUSTED, None)
    return (PASS, None) if found is None else (FAIL, g6)


def minor_free_instances(seed: int, deletion_trials: int = 50) -> list[tuple[str, Graph]]:
    out = []
    rng = make_rng(seed)
    # the two glue rules only differ from three blocks on
    specs = [spec for k in (1, 2, 3) for spec in families.all_glue_trees(k)]
    specs += list(families.all_glue_trees(3, "fresh"))
    for spec in specs:
        g = families.cockade(spec)
        name = f"cockade{list(spec.parents)}-{spec.rule}"
        out.append((name, g))
        for t in range(deletion_trials):
            drop = 1 + int(rng.integers(0, 2))
            out.append((f"{name}-minus{drop}#{t}", delete_edges(g, random_edges(rng, g, drop))))
    for k in (1, 2, 3):
        out.append((f"dominant_k5({k})", families.dominant_k5_family(k)))
    for n in range(6, 15):
        out.append((f"join_k5_empty({n})", families.join_k5_empty(n)))
    out.append(("apex_icosahedron", families.apex_icosahedron()))
    return out


def claim_minor_free_families(seed: int = 42, deletion_trials: int = 50, jobs: int = 1) -> ClaimReport:
    start = time.perf_counter()
    instances = minor_free_instances(seed, deletion_trials)
    outcomes = _map(_minor_free_check, [encode(g) for _, g in instances], jobs)
    failed = [name for (name, _), (st, _) in zip(instances, outcomes) if st != PASS]
    return _finish("minor_free_families", outcomes, start, {"not_passing": failed})


# tightness and threshold sampling


def _minor_present_check(g6: str) -> tuple[str, str | None]:
    g = decode(g6)
    try:
        found = has_minor(g, PETERSEN)
    except BudgetExhausted:
        return (EXHAUSTED, None)
    return (PASS, None) if found is not None else (FAIL, g6)


def claim_tightness_one_edge(jobs: int = 1) -> ClaimReport:
    """Every single-edge addition to the 16-vertex cockade has a Petersen minor."""
    start = time.perf_counter()
    base = families.cockade_blocks(2)
    non_edges = base.non_edges()
    if len(non_edges) != comb(16, 2) - 71:
        raise HarnessError("unexpected non-edge count for the 16-vertex cockade")
    hosts = [encode(add_edge(base, u, v)) for u, v in non_edges]
    outcomes = _map(_minor_present_check, hosts, jobs)
    base_status = _minor_free_check(encode(base))
    details = {"non_edges": len(non_edges), "base_minor_free": base_status[0] == PASS}
    outcomes.append(base_status)
    return _finish("tightness_one_edge", outcomes, start, details)


def threshold_samples(n_min: int, n_max: int, trials: int, seed: int) -> list[Graph]:
    if not 11 <= n_min <= n_max <= 20:
        raise ValueError("threshold sampling needs 11 <= n_min <= n_max <= 20")
    rng = make_rng(seed)
    return [random_graph(rng, n, 5 * n - 8) for n in range(n_min, n_max + 1) for _ in range(trials)]


def claim_threshold_sampling(n_min: int = 11, n_max: int = 16, trials: int = 100, seed: int = 42,
                             jobs: int = 1) -> ClaimReport:
    """Random graphs with exactly 5n - 8 edges all have a Petersen minor."""
    start = time.perf_counter()
    graphs = threshold_samples(n_min, n_max, trials, seed)
    outcomes = _map(_minor_present_check, [encode(g) for g in graphs], jobs)
    details = {"n_range": [n_min, n_max], "trials_per_n": trials, "seed": seed}
    return _finish("threshold_sampling", outcomes, start, details)


# colouring and arboricity


def coloring_instances(seed: int, max_n: int = 100) -> list[tuple[str, Graph]]:
    out = [(name, g) for name, g in minor_free_instances(seed, 0)]
    k = 1
    while 9 + 7 * k <= max_n:
        out.append((f"cockade_book({k + 1})", families.cockade_blocks(k + 1)))
        out.append((f"cockade_path_fresh({k + 1})", families.cockade(families.CockadeSpec.path(k + 1, "fresh"))))
        out.append((f"cockade_star_fresh({k + 1})", families.cockade(families.CockadeSpec.star(k + 1, "fresh"))))
        k += 1
    k = 4
    while 3 + 5 * k <= max_n:
        out.append((f"dominant_k5({k})", families.dominant_k5_family(k)))
        k += 1
    for n in range(15, max_n + 1):
        out.append((f"join_k5_empty({n})", families.join_k5_empty(n)))
    return out


def _coloring_check(g6: str) -> tuple[str, str | None]:
    g = decode(g6)
    try:
        col = minus_one_coloring(g, 5)
    except ColoringError:
        return (FAIL, g6)
    part = vertex_arboricity_partition(g)
    ok = (
        verify_coloring(g, col) and col.palette_size <= 9
        and verify_forest_partition(g, part) and part.part_count <= 5
    )
    return (PASS, None) if ok else (FAIL, g6)


def _k9_needs_five_forests() -> bool:
    """No assignment of K_9's vertices to four parts leaves every part a forest."""
    for labels in product(range(4), repeat=9):
        if max(labels.count(i) for i in range(4)) <= 2:
            return False
    return True


def _k9_check() -> bool:
    k9 = Graph.complete(9)
    col = minus_one_coloring(k9, 5)
    part = vertex_arboricity_partition(k9)
    return (
        verify_coloring(k9, col) and col.colors_used == 9
        and verify_forest_partition(k9, part) and part.part_count == 5
        and _k9_needs_five_forests()
    )


def _k10_check() -> bool:
    k10 = Graph.complete(10)
    try:
        minus_one_coloring(k10, 5)
    except CliqueFound as err:
        return err.size == 10 and all(s.bit_count() == 1 for s in err.branch_sets)
    return False


def claim_coloring_arboricity(seed: int = 42, max_n: int = 100, jobs: int = 1) -> ClaimReport:
    start = time.perf_counter()
    instances = coloring_instances(seed, max_n)
    outcomes = _map(_coloring_check, [encode(g) for _, g in instances], jobs)
    k9_ok = _k9_check()
    k10_ok = _k10_check()
    outcomes.append((PASS, None) if k9_ok else (FAIL, encode(Graph.complete(9))))
    outcomes.append((PASS, None) if k10_ok else (FAIL, encode(Graph.complete(10))))
    details = {"largest_n": max(g.n for _, g in instances), "k9_exact": k9_ok, "k10_witness": k10_ok}
    return _finish("coloring_arboricity", outcomes, start, details)


# oracle agreement

def _oracle_pair(item: tuple[str, str]) -> tuple[str, str | None]:
    host6, pat6 = item
    host, pattern = decode(host6), decode(pat6)
    fast = has_minor(host, pattern) is not None
    slow = minor_oracle_bruteforce(host, pattern)
    return (PASS, None) if fast == slow else (FAIL, host6 + " " + pat6)


def _rooted_host(g6: str) -> tuple[str, str | None]:
    g = decode(g6)
    for roots in combinations(range(g.n), 3):
        if rooted_k3_minor(g, roots) != rooted_k3_bruteforce(g, roots):
            return (FAIL, g6)
    return (PASS, None)


def oracle_pairs(seed: int, random_pairs: int) -> tuple[list[tuple[str, str]], list[str]]:
    """(host, pattern) graph6 pairs for the minor comparison and hosts for rooted K3."""
    small = [encode(g) for n in range(0, 7) for g in graphs_up_to_iso(n)]
    pats = [g6 for g6 in small if decode(g6).n <= 5]
    pairs = [(h, p) for h in small for p in pats]
    rng = make_rng(seed)
    for _ in range(random_pairs):
        n = 1 + int(rng.integers(0, 7))
        k = 1 + int(rng.integers(0, min(5, n)))
        host = random_graph(rng, n, int(rng.integers(0, n * (n - 1) // 2 + 1)))
        pattern = random_graph(rng, k, int(rng.integers(0, k * (k - 1) // 2 + 1)))
        pairs.append((encode(host), encode(pattern)))
    rooted = [g6 for g6 in small if decode(g6).n >= 3 and is_connected(decode(g6))]
    return pairs, rooted


def claim_oracle_equivalence(seed: int = 42, random_pairs: int = 500, jobs: int = 1) -> ClaimReport:
    start = time.perf_counter()
    pairs, rooted = oracle_pairs(seed, random_pairs)
    minor_out = _map(_oracle_pair, pairs, jobs)
    rooted_out = _map(_rooted_host, rooted, jobs)
    triples = sum(comb(decode(g6).n, 3) for g6 in rooted)
    details = {
        "minor_pairs": len(pairs),
        "exhaustive_pairs": len(pairs) - random_pairs,
        "random_pairs": random_pairs,
        "rooted_hosts": len(rooted),
        "rooted_triples": triples,
        "agreement": sum(st == PASS for st, _ in minor_out + rooted_out) / max(1, len(minor_out + rooted_out)),
    }
    return _finish("oracle_equivalence", minor_out + rooted_out, start, details)


# structures


def _structure_check(item: tuple[str, int, int]) -> tuple[str, str | None]:
    g6, a, b = item
    g = decode(g6)
    sep = Separation(a, b)
    try:
        skel = build_skeleton_two_branch(g, sep)
        table = extract_table(g, sep)
    except (StructureError, AssertionError):
        ok = False
    else:
        ok = (
            not skeleton_violations(g, skel)
            and len(skel.high_degree()) >= 2
            and not table_violations(g, table, sep.a)
        )
    return (PASS, None) if ok else (FAIL, f"{g6} {a} {b}")


def claim_structures(seed: int = 42, count: int = 30, jobs: int = 1) -> ClaimReport:
    """Two-branch skeletons and rooted tables on seeded 4-connected instances."""
    start = time.perf_counter()
    instances = four_connected_instances(count, seed)
    items = [(encode(g), sep.a, sep.b) for g, sep in instances]
    outcomes = _map(_structure_check, items, jobs)
    kinds: dict[str, int] = {}
    for g, sep in instances:
        kind = build_skeleton_two_branch(g, sep).construction
        kinds[kind] = kinds.get(kind, 0) + 1
    return _finish("structures", outcomes, start, {"constructions": dict(sorted(kinds.items()))})


# running everything

CLAIM_IDS = (
    "dense10",
    "cockade_counts",
    "minor_free_families",
    "tightness_one_edge",
    "threshold_sampling",
    "coloring_arboricity",
    "oracle_equivalence",
    "structures",
)


def run_claim(claim_id: str, cfg: RunConfig) -> ClaimReport:
    if claim_id == "dense10":
        return claim_dense10(cfg.jobs)
    if claim_id == "cockade_counts":
        return claim_cockade_counts(cfg.cockade_max_blocks)
    if claim_id == "minor_free_families":
        return claim_minor_free_families(cfg.seed, cfg.deletion_trials, cfg.jobs)
    if claim_id == "tightness_one_edge":
        return claim_tightness_one_edge(cfg.jobs)
    if claim_id == "threshold_sampling":
        return claim_threshold_sampling(cfg.threshold_n_min, cfg.threshold_n_max, cfg.threshold_trials,
                                        cfg.seed, cfg.jobs)
    if claim_id == "coloring_arboricity":
        return claim_coloring_arboricity(cfg.seed, cfg.coloring_max_n, cfg.jobs)
    if claim_id == "oracle_equivalence":
        return claim_oracle_equivalence(cfg.seed, cfg.oracle_random_pairs, cfg.jobs)
    if claim_id == "structures":
        return claim_structures(cfg.seed, cfg.structure_instances, cfg.jobs)
    raise ValueError(f"unknown claim {claim_id!r}; choose from {', '.join(CLAIM_IDS)}")


def run_all(cfg: RunConfig) -> list[ClaimReport]:
    ids = list(cfg.only) if cfg.only else list(CLAIM_IDS)
    for cid in ids:
        if cid not in CLAIM_IDS:
            raise ValueError(f"unknown claim {cid!r}; choose from {', '.join(CLAIM_IDS)}")
    return [run_claim(cid, cfg) for cid in ids]


def reports_to_json(reports: Sequence[ClaimReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True) + "\n"


def reports_from_json(text: str) -> list[ClaimReport]:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("a report is a JSON array of claim objects")
    return [ClaimReport.from_json(item) for item in data]


def exit_status(reports: Sequence[ClaimReport]) -> int:
    """0 all pass, 1 any failure, 4 budget exhausted without failures."""
    if any(r.status == FAIL for r in reports):
        return 1
    if any(r.status == EXHAUSTED for r in reports):
        return 4
    return 0


def revalidate(report: ClaimReport) -> bool:
    """Re-check a failed report's counterexample from scratch; True if it really fails."""
    if report.status != FAIL or report.counterexample is None:
        return False
    cid = report.claim_id
    text = report.counterexample
    if cid == "structures":
        g6, a, b = text.split()
        return _structure_check((g6, int(a), int(b)))[0] == FAIL
    if cid == "oracle_equivalence":
        parts = text.split()
        if len(parts) == 2:
            return _oracle_pair((parts[0], parts[1]))[0] == FAIL
        return _rooted_host(text)[0] == FAIL
    g = decode(text)
    if cid == "dense10":
        return g.n == 10 and len(g.non_edges()) <= 6 and has_subgraph(g, PETERSEN) is None
    if cid == "cockade_counts":
        return g.m != 5 * g.n - 9 or g.n % 7 != 2
    if cid == "minor_free_families":
        return has_minor(g, PETERSEN) is not None
    if cid in ("tightness_one_edge", "threshold_sampling"):
        return g.m >= 5 * g.n - 8 and has_minor(g, PETERSEN) is None
    if cid == "coloring_arboricity":
        if g == Graph.complete(10):
            return not _k10_check()
        if g == Graph.complete(9):
            return not _k9_check()
        return _coloring_check(text)[0] == FAIL
    raise ValueError(f"unknown claim {cid!r}")
