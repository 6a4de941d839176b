import pytest

from sameorder import (
    BadParameter,
    SuiteFailure,
    eval_expr,
    evaluate_group,
    parse_group_expr,
    run_suite,
)
from sameorder.suites import SuiteFinding, VerificationReport, _collect_failures


def build(text):
    return eval_expr(parse_group_expr(text))


def test_audit_suite_passes_at_64():
    report = run_suite("audit", 64)
    assert report.failures == []
    assert report.groups_checked == 179


def test_thm23_witnesses_are_all_order_six_nonabelian():
    report = run_suite("thm23", 128)
    witnesses = [
        f for f in report.findings if f.is_ap and len(f.tau) == 3 and f.statuses["thm23"] == "consistent"
    ]
    assert witnesses, "expected at least one three-term progression witness"
    assert all(f.order == 6 and f.tau == (1, 2, 3) for f in witnesses)
    exempt = [f for f in report.findings if f.statuses["thm23"] == "not-applicable" and len(f.tau) == 3]
    assert any(f.label == "Hol(8)" for f in exempt)


def test_thm11_two_type_groups_match_known_shapes():
    report = run_suite("thm11", 96)
    assert report.failures == []
    two_types = [f for f in report.findings if len(f.tau) == 2]
    assert {"C(6)", "Q(8)", "C(4)", "EA(2,3)", "EA(3,2)"} <= {f.label for f in two_types}
    assert all(f.statuses["thm11"] == "consistent" for f in two_types)


def test_remaining_suites_pass_at_96():
    for name in ("prop22", "prop25", "thm26", "search4"):
        report = run_suite(name, 96)
        assert report.failures == []


def test_all_suite_matches_union_of_checks():
    report = run_suite("all", 48)
    assert report.failures == []
    sample = report.findings[0]
    for key in ("lemma21", "thm11", "excluded-types", "prop22", "thm23", "open-problem"):
        assert key in sample.statuses


def test_reports_are_deterministic_modulo_wall_time():
    first = run_suite("audit", 48).as_dict()
    second = run_suite("audit", 48).as_dict()
    first.pop("wallTimeMs")
    second.pop("wallTimeMs")
    assert first == second


def test_report_shape():
    report = run_suite("prop22", 24)
    payload = report.as_dict()
    assert set(payload) == {"suite", "groupsChecked", "findings", "failures", "wallTimeMs"}
    finding = payload["findings"][0]
    assert set(finding) == {"group", "order", "tau", "ap", "ratio", "theorems"}
    assert payload["groupsChecked"] == len(payload["findings"])


def test_unknown_suite_and_bad_bounds_rejected():
    with pytest.raises(BadParameter):
        run_suite("bogus", 64)
    with pytest.raises(BadParameter):
        run_suite("audit", 0)
    with pytest.raises(BadParameter):
        run_suite("audit", 4096)


def test_evaluate_group_statuses_on_witness():
    finding = evaluate_group(build("C(2) x Hol(8)"))
    assert finding.tau == (1, 16, 31)
    assert finding.is_ap and finding.ratio == 15
    assert finding.statuses["thm23"] == "not-applicable"
    assert finding.statuses["lemma21"] == "consistent"
    assert finding.statuses["excluded-types"] == "consistent"
    assert finding.problems == []


def test_failure_collection_from_synthetic_finding():
    finding = SuiteFinding(
        label="X",
        order=10,
        tau=(1, 5, 9),
        is_ap=True,
        ratio=4,
        statuses={"thm23": "violated", "lemma21": "consistent"},
        problems=["thm23: synthetic"],
    )
    failures = _collect_failures([finding], ("thm23", "lemma21"))
    assert failures == [{"group": "X", "check": "thm23", "detail": "thm23: synthetic"}]
    report = VerificationReport("thm23", 1, [finding], failures, 0)
    error = SuiteFailure(report)
    assert error.report is report
    assert "1 failure" in str(error)
