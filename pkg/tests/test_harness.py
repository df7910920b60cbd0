"""Tests for the acceptance criteria, the harness nodes and the full validation graph."""

import pytest

from dunkl_deng_fan.cli.writers import render_report
from dunkl_deng_fan.validation.criteria import CATALOGUE, CRITERIA, criterion_result
from dunkl_deng_fan.validation.Harness import ValidationHarness
from dunkl_deng_fan.validation.HarnessComponents import (
    HarnessConfig,
    HarnessEdges,
    HarnessNodes,
)

CLAIMS = {
    "alpha9_closed_form_value",
    "paper_vs_self_consistent",
    "self_consistent_vs_oracle_pekeris",
    "closed_form_residual",
}


@pytest.fixture(scope="module")
def final_state():
    return ValidationHarness(HarnessConfig()).run()


def test_catalogue():
    assert len(CRITERIA) == len(CATALOGUE)
    assert {c.key for c in CATALOGUE if not c.hard} == CLAIMS
    result = criterion_result("node_count", True, "ok")
    assert result == {
        "key": "node_count",
        "title": CRITERIA["node_count"].title,
        "hard": True,
        "passed": True,
        "detail": "ok",
    }
    with pytest.raises(KeyError):
        criterion_result("unknown", True, "")


def test_edges():
    assert HarnessEdges.should_continue({"finalized_state": True}) == "accepted"
    assert HarnessEdges.should_continue({"finalized_state": False}) == "rejected"
    assert HarnessEdges.should_continue({}) == "rejected"


def test_judge_ignores_claims():
    nodes = HarnessNodes(HarnessConfig())
    criteria = [
        criterion_result("node_count", True, ""),
        criterion_result("paper_vs_self_consistent", False, ""),
    ]
    assert nodes.judge_node({"criteria": criteria}) == {"finalized_state": True}
    criteria.append(criterion_result("box_sanity", False, ""))
    assert nodes.judge_node({"criteria": criteria}) == {"finalized_state": False}
    assert nodes.judge_node({"criteria": []}) == {"finalized_state": False}


def test_alpha_node():
    nodes = HarnessNodes(HarnessConfig(draws=50))
    update = nodes.alpha_node({"criteria": []})
    outcome = {c["key"]: c["passed"] for c in update["criteria"]}
    assert outcome["alpha9_energy_independence"]
    independence = update["criteria"][0]
    assert "relative to 1 + |xi1| + |xi2| + |xi3|" in independence["title"]
    assert independence["detail"].startswith("max scaled drift")
    # the chain gives 1/4 - beta + gamma (C2 - C0), not 1/4 + beta
    assert not outcome["alpha9_closed_form_value"]


def test_limit_node():
    update = HarnessNodes(HarnessConfig()).limit_node({"criteria": []})
    assert all(c["passed"] for c in update["criteria"])


def test_render_report():
    criteria = [
        criterion_result("node_count", True, "3 states"),
        criterion_result("box_sanity", False, "max relative error 1e-3"),
        criterion_result("closed_form_residual", False, "max |residual| 1"),
    ]
    text = render_report(criteria, accepted=False)
    assert "[PASS] node_count" in text
    assert "[FAIL] box_sanity" in text
    assert "[CLAIM FAILS] closed_form_residual" in text
    assert "Hard criteria passed: 1/2" in text
    assert "Failing criteria: box_sanity" in text
    assert text.endswith("Result: REJECTED\n")


def test_full_run_is_accepted(final_state):
    failed = [c["key"] for c in final_state["criteria"] if c["hard"] and not c["passed"]]
    assert failed == []
    assert final_state["finalized_state"] is True
    assert {c["key"] for c in final_state["criteria"]} == set(CRITERIA)


def test_full_run_stages(final_state):
    assert final_state["stages"] == [
        "alpha_checks",
        "limit_checks",
        "spectra",
        "oracle",
        "wavefunctions",
        "compare",
        "judge",
        "accept",
    ]


def test_full_run_ledger(final_state):
    # 3 n x 3 ell x 3 mu grid points, 5 mode pairs each
    assert len(final_state["discrepancy_rows"]) == 27 * 5
    assert len(final_state["pekeris_rows"]) == 27
    assert len(final_state["convergence_rows"]) == 27 * 2
    for row in final_state["convergence_rows"]:
        assert 1.8 <= row["order"] <= 2.2
