import pytest

from sgx import (
    THEOREM_IDS,
    SuiteOptions,
    render_report,
    run_theorem_suite,
    summarize,
)


def test_full_suite_order_two_has_no_failures(corpus2):
    reports = run_theorem_suite(corpus2, enumeration_orders=(1, 2))
    assert all(r.verdict in ("pass", "fail", "skip") for r in reports)
    failures = [r for r in reports if r.verdict == "fail"]
    assert failures == []
    counts = summarize(reports)
    assert set(counts) <= set(THEOREM_IDS)
    # inapplicable instances are skipped, not passed
    assert counts["dual-pair-iso"][2] > 0
    assert counts["context-morphisms"][2] == 2  # the two null tables


def test_selected_theorems_only(corpus2):
    reports = run_theorem_suite(corpus2, theorems=["class-chain"])
    assert {r.theorem for r in reports} == {"class-chain"}
    assert len(reports) == len(corpus2)


def test_unknown_theorem_rejected(corpus2):
    with pytest.raises(ValueError):
        run_theorem_suite(corpus2, theorems=["no-such-theorem"])


def test_report_rendering_is_deterministic(corpus2):
    meta = {"command": "verify", "order": 2}
    options = SuiteOptions()
    one = render_report(run_theorem_suite(corpus2, options=options), meta)
    two = render_report(run_theorem_suite(corpus2, options=SuiteOptions()), meta)
    assert one == two
    assert one.startswith("sgx-report-v1\n")
    assert "total pass=" in one
    assert " witness=" in one


def test_skip_verdicts_carry_reasons(corpus2):
    reports = run_theorem_suite(corpus2, theorems=["dual-pair-iso"])
    for r in reports:
        if r.verdict == "skip":
            assert r.witness
