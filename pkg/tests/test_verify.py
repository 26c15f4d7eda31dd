import json

import pytest

from jordan_atlas import invariants
from jordan_atlas import matrices as mx
from jordan_atlas.models import Family
from jordan_atlas.verify import LEVELS, SUITES, VerificationEngine, ambients, run_verification, type_labels

from conftest import full, symp

CHEAP_SUITES = ["clifford-dimension-table", "clifford-relations", "theta-machinery", "jordan-axioms"]


def test_cheap_suites_pass():
    report = run_verification("quick", seed=0, suites=CHEAP_SUITES)
    assert [s.name for s in report.suites] == CHEAP_SUITES
    assert report.passed, report.to_dict()
    assert all(s.cases_run for s in report.suites)


def test_class_counts_suite_reports_discrepancies():
    report = run_verification("quick", seed=0, suites=["class-counts"])
    assert report.passed, report.to_dict()
    found = {(d.ambient.label, d.type.label) for d in report.discrepancies}
    assert ("FullPlus(6)", "FullPlus(3)") in found
    assert ("FullPlus(7)", "SymmetricH(2)") not in found
    assert ("SymplecticH(6)", "FullPlus(3)") in found
    assert ("SymplecticH(8)", "FullPlus(2)") in {(c.ambient.label, c.type.label) for c in report.caveats}


def test_class_counts_fail_on_a_wrong_printed_count(monkeypatch):
    printed = invariants.count_classes_formula

    def off_by_one(ambient, t):
        count = printed(ambient, t)
        if ambient.family is Family.FULL and t.family is Family.SYM:
            return count + 1
        return count

    monkeypatch.setattr(invariants, "count_classes_formula", off_by_one)
    report = run_verification("quick", seed=0, suites=["class-counts"])
    assert not report.passed
    cases = {f["case"] for f in report.suites[0].failures}
    assert "classes of SymmetricH(3) in FullPlus(5)" in cases


def test_associative_product_is_caught():
    report = run_verification("quick", seed=0, product=mx.mat_mul, suites=["jordan-axioms"])
    assert not report.passed
    assert report.suites[0].failures


def test_report_is_json_ready():
    report = run_verification("quick", seed=3, product=mx.mat_mul, suites=["theta-machinery"])
    document = json.loads(json.dumps(report.to_dict()))
    assert document["level"] == "quick"
    assert document["suites"][0]["failures"]


def test_reports_are_deterministic():
    first = run_verification("quick", seed=5, suites=["jordan-axioms"]).to_dict()
    second = run_verification("quick", seed=5, suites=["jordan-axioms"]).to_dict()
    first.pop("wall_time")
    second.pop("wall_time")
    assert first == second


def test_full_level_dimension_table():
    report = run_verification("full", seed=0, suites=["clifford-dimension-table"])
    assert report.suites[0].cases_run == 4
    assert report.passed


def test_quick_level_case_counts():
    report = run_verification("quick", seed=0, suites=["theta-machinery", "jordan-axioms"])
    theta, axioms = report.suites
    assert theta.cases_run == 2 + 10
    assert axioms.cases_run == 3 * 20


def test_unknown_level():
    with pytest.raises(ValueError):
        VerificationEngine("exhaustive")


def test_levels():
    assert LEVELS["quick"].max_n == 8
    assert LEVELS["full"].max_n == 12
    assert LEVELS["full"].automorphisms == 25
    assert LEVELS["full"].specs_per_form is None
    assert LEVELS["full"].invariance_max_n == 10
    assert (LEVELS["full"].theta_pairs, LEVELS["full"].theta_max_half) == (100, 4)
    assert (LEVELS["full"].axiom_triples, LEVELS["full"].axiom_max_n) == (500, 8)


def test_ambients_and_types():
    listed = list(ambients(4))
    assert symp(4) in listed and full(3) in listed
    assert all(a.family is not Family.SYMP or a.order % 2 == 0 for a in listed)
    labels = {t.label for t in type_labels(full(4))}
    assert labels == {"FullPlus(3)", "SymmetricH(3)", "SymmetricH(4)", "Spin(2)", "Spin(3)", "Spin(4)", "Spin(5)"}


@pytest.mark.slow
def test_quick_level_passes():
    report = run_verification("quick", seed=0)
    assert [s.name for s in report.suites] == list(SUITES)
    assert report.passed, report.to_dict()


@pytest.mark.slow
def test_full_level_passes():
    assert run_verification("full", seed=1).passed
