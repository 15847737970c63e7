import json

import pytest

from semisep.catalog import CATALOG, catalog
from semisep.core import left_zero, monogenic, null, right_zero
from semisep.deciders import (
    PreservationReport,
    classify,
    indecomposables,
    is_mss_preserving,
    is_sss_preserving,
    wss_preserving_status,
)
from semisep.green import lies_in_subgroup

CAT = catalog()


def test_indecomposables_examples():
    assert indecomposables(monogenic(4, 1)) == {0}
    assert indecomposables(left_zero()) == set()
    N = null()
    assert indecomposables(N) == {N.index("x")}


@pytest.mark.parametrize("S", [left_zero(3), right_zero(2), null(3), CATALOG["chain3"], CATALOG["S3"], CATALOG["rectband2x2"]])
def test_sss_preserving_families(S):
    assert is_sss_preserving(S)


def test_sss_witness_for_nilpotent_monogenic():
    d = is_sss_preserving(monogenic(4, 1))
    assert not d.holds
    assert d.witness.element == 1 and d.witness.factorization == (0, 0)
    assert not is_sss_preserving(monogenic(3, 1))


def test_mss_examples():
    assert is_mss_preserving(left_zero())
    N = null()
    d = is_mss_preserving(N)
    assert not d.holds and d.witness.element == N.index("x")
    assert is_mss_preserving(monogenic(1, 6))


def test_wss_status_examples():
    s = wss_preserving_status(monogenic(3, 1))
    assert (s.verdict, s.reason, s.k) == ("yes", "nilpotent", 3)
    assert wss_preserving_status(left_zero()).verdict == "no"
    assert wss_preserving_status(right_zero(3)).reason == "nontrivial right-zero"
    assert wss_preserving_status(monogenic(1, 2)).verdict == "unknown"


@pytest.mark.parametrize("name, S", CAT)
def test_decider_invariants(name, S):
    sss, mss = is_sss_preserving(S), is_mss_preserving(S)
    if mss.holds:
        assert sss.holds
    square = S.set_product(S.elements, S.elements)
    direct = all(s not in square or any(S.power(s, r + 1) == s for r in range(1, S.size + 1)) for s in S.elements)
    assert sss.holds == direct
    for w in sss.witnesses:
        t, u = w.factorization
        assert S.mul(t, u) == w.element and not lies_in_subgroup(S, w.element)
    for w in mss.witnesses:
        assert not lies_in_subgroup(S, w.element)
    status = wss_preserving_status(S)
    assert status.verdict in {"yes", "no", "unknown"}


def test_classify_examples():
    r = classify(null())
    assert (r.sss_preserving, r.mss_preserving, r.union_of_groups) == (True, False, False)
    assert (r.wss_status.verdict, r.wss_status.k) == ("yes", 2)
    r = classify(left_zero())
    assert (r.sss_preserving, r.mss_preserving, r.wss_status.verdict) == (True, True, "no")
    r = classify(monogenic(4, 1))
    assert (r.sss_preserving, r.mss_preserving, r.wss_status.k) == (False, False, 4)


@pytest.mark.parametrize("name, S", CAT)
def test_classify_pure_and_round_trips(name, S):
    a, b = classify(S), classify(S)
    assert a.to_json() == b.to_json()
    back = PreservationReport.from_dict(json.loads(a.to_json()))
    assert back == a
    assert back.to_json() == a.to_json()
    assert "sss_preserving" in a.render()
