from __future__ import annotations

import json

import pytest

from petminor import claims, families
from petminor.graph import Graph, delete_edge
from petminor.graph6 import decode
from petminor.minors import BudgetExhausted


def drop_first_edge(spec):
    g = families.generic_cockade(Graph.complete(9), 2, spec)
    return delete_edge(g, *g.edges()[0])


def test_report_round_trip():
    r = claims.ClaimReport("x", claims.PASS, 3, None, 0.5, {"a": 1})
    assert claims.ClaimReport.from_json(json.loads(json.dumps(r.to_json()))) == r
    assert claims.reports_from_json(claims.reports_to_json([r, r])) == [r, r]


def test_report_rejects_bad_status_and_missing_counterexample():
    with pytest.raises(ValueError):
        claims.ClaimReport.from_json({"claim_id": "x", "status": "maybe", "instances_checked": 0})
    with pytest.raises(ValueError):
        claims.ClaimReport.from_json({"claim_id": "x", "status": "fail", "instances_checked": 1})


def test_exit_status():
    ok = claims.ClaimReport("a", claims.PASS, 1)
    bad = claims.ClaimReport("b", claims.FAIL, 1, "@")
    tired = claims.ClaimReport("c", claims.EXHAUSTED, 1)
    assert claims.exit_status([ok]) == 0
    assert claims.exit_status([ok, tired]) == 4
    assert claims.exit_status([tired, bad]) == 1


def test_dense10_details():
    r = claims.claim_dense10()
    assert r.status == claims.PASS
    assert r.details["labelled_count"] == r.details["labelled_count_formula"] == 9_531_040
    assert r.details["class_count"] == r.instances_checked == 112
    assert claims._dense10_check("I~~~~~~~w") == (claims.PASS, None)  # K_10


def test_cockade_counts_and_tightness():
    r = claims.claim_cockade_counts(5)
    assert r.status == claims.PASS
    assert r.details["n_m_by_blocks"]["4"] == [30, 141]
    t = claims.claim_tightness_one_edge()
    assert t.status == claims.PASS
    assert t.details == {"non_edges": 49, "base_minor_free": True}
    assert t.instances_checked == 50


def test_threshold_small_run_is_reproducible():
    a = claims.claim_threshold_sampling(12, 12, 100, 42)
    b = claims.claim_threshold_sampling(12, 12, 100, 42)
    assert a.status == claims.PASS and a.instances_checked == 100
    assert {**a.to_json(), "wall_time": 0} == {**b.to_json(), "wall_time": 0}
    assert all(g.m == 52 for g in claims.threshold_samples(12, 12, 5, 42))
    with pytest.raises(ValueError):
        claims.threshold_samples(10, 12, 5, 42)


def test_fault_injection_is_caught(monkeypatch):
    monkeypatch.setattr(families, "cockade", drop_first_edge)
    r = claims.claim_cockade_counts(3)
    assert r.status == claims.FAIL
    g = decode(r.counterexample)
    assert g.m == 5 * g.n - 10
    assert claims.revalidate(r)


def test_revalidate_rejects_bogus_counterexamples():
    fake = claims.ClaimReport("cockade_counts", claims.FAIL, 1, "H~~~~~~")  # K_9 is fine
    assert not claims.revalidate(fake)
    fake = claims.ClaimReport("minor_free_families", claims.FAIL, 1, "H~~~~~~")
    assert not claims.revalidate(fake)
    fake = claims.ClaimReport("coloring_arboricity", claims.FAIL, 1, "H~~~~~~")
    assert not claims.revalidate(fake)


def test_budget_exhaustion_is_reported(monkeypatch):
    def exhausted(host, pattern, budget=None, reduce=True):
        raise BudgetExhausted(1)

    monkeypatch.setattr(claims, "has_minor", exhausted)
    r = claims.claim_minor_free_families(deletion_trials=0)
    assert r.status == claims.EXHAUSTED and r.counterexample is None
    assert claims.exit_status([r]) == 4


def test_parallel_map_keeps_order():
    r1 = claims.claim_structures(42, 8, jobs=1)
    r2 = claims.claim_structures(42, 8, jobs=2)
    assert {**r1.to_json(), "wall_time": 0} == {**r2.to_json(), "wall_time": 0}


def test_unknown_claim():
    with pytest.raises(ValueError):
        claims.run_claim("nope", claims.RunConfig())
