import json
from pathlib import Path

import pytest

from semisep.harness import (
    CAPS,
    DEFAULTS,
    SCENARIOS,
    HarnessConfig,
    ScenarioReport,
    associative_tables,
    case_2a_formula,
    count_tables_naively,
    run_all,
    run_scenario,
    u_description_members,
)

FIXTURES = Path(__file__).parent / "fixtures"
ASSOC = json.loads((FIXTURES / "assoc_counts.json").read_text())["counts"]
NF_COUNTS = json.loads((FIXTURES / "normal_form_counts.json").read_text())

SMALL = {
    "lemma-positive": {"maxlen": 3},
    "embedding": {"maxlen": 2},
    "case-formulas": {"maxn": 3},
    "leftzero-counter": {"bound": 5},
    "eq1": {"max_size": 3},
    "eq10": {"maxexp": 5},
    "hom-trap": {"max_order": 2},
    "strong-no": {"max_size": 3},
}


def test_registry_is_consistent():
    assert set(SCENARIOS) == set(CAPS) == set(DEFAULTS)
    for name, bounds in DEFAULTS.items():
        for key, value in bounds.items():
            assert value <= CAPS[name][key]


@pytest.mark.parametrize("maxlen", [1, 2, 4, 6])
def test_lemma_positive_counts_every_normal_form(maxlen):
    rep = run_scenario("lemma-positive", maxlen=maxlen)
    assert rep.passed
    assert rep.checked == NF_COUNTS["cumulative"][maxlen - 1]


@pytest.mark.parametrize("name", sorted(SMALL))
def test_scenarios_pass_at_small_bounds(name):
    rep = run_scenario(name, **SMALL[name])
    assert rep.passed, rep.counterexample
    assert rep.checked > 0
    assert rep.counterexample is None
    assert rep.ms >= 0


@pytest.mark.parametrize("name", sorted(SMALL))
def test_reports_are_deterministic_modulo_time(name):
    a = run_scenario(name, **SMALL[name]).to_dict()
    b = run_scenario(name, **SMALL[name]).to_dict()
    a.pop("ms"), b.pop("ms")
    assert a == b


def test_report_json_schema_and_round_trip():
    rep = run_scenario("eq10", maxexp=4)
    d = json.loads(rep.to_json())
    assert set(d) == {"scenario", "params", "status", "checked", "counterexample", "ms"}
    assert ScenarioReport.from_dict(d) == rep


@pytest.mark.parametrize("name", sorted(CAPS))
def test_over_cap_is_reported_as_failure(name):
    (key, cap), = CAPS[name].items()
    rep = run_scenario(name, **{key: cap + 1})
    assert rep.status == "fail" and rep.checked == 0
    assert "error" in rep.counterexample
    assert run_scenario(name, **{key: 0}).status == "fail"


def test_unknown_scenario():
    with pytest.raises(KeyError):
        run_scenario("nosuch")


def test_hom_trap_counts_match_frozen_oracle():
    rep = run_scenario("hom-trap", max_order=3)
    assert rep.passed
    assert rep.params["table_counts"] == ASSOC


@pytest.mark.parametrize("n", [1, 2, 3])
def test_associative_tables_counts(n):
    assert len(associative_tables(n)) == ASSOC[str(n)]
    assert count_tables_naively(n) == ASSOC[str(n)]


def test_associative_tables_cache_is_reused():
    first = associative_tables(3)
    assert associative_tables(3) == first
    assert associative_tables(3, cache=False) == first


def test_case_2a_formula_examples():
    assert case_2a_formula(1) == "YYXy"
    assert case_2a_formula(2) == "YYXYXy"


def test_u_description_members_are_in_leftzero_context():
    members = list(u_description_members(3))
    assert members
    assert len(set(members)) == len(members)


def test_run_all_with_config():
    reports = run_all(HarnessConfig(bounds=SMALL, only=("eq10", "lemma-positive")))
    assert [r.scenario for r in reports] == ["eq10", "lemma-positive"]
    assert all(r.passed for r in reports)
