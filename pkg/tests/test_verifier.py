from itertools import combinations

import pytest

from nakayama_sms.algebra import AlgebraParams, IndecModule
from nakayama_sms.families import SmsCandidate, build_family
from nakayama_sms.noncrossing import catalan
from nakayama_sms.stable_hom import is_orthogonal_system
from nakayama_sms.verifier import (
    ResourceGuardError,
    classify_all,
    count_formula_text,
    count_sms,
    count_sms_brauer_tree,
    enumerate_sms,
    is_sms,
    structure_violations,
)

A26, A44 = AlgebraParams(2, 6), AlgebraParams(4, 4)
EX46 = [IndecModule(4, 1), IndecModule(2, 4), IndecModule(3, 4), IndecModule(1, 3)]


def test_is_sms_examples():
    assert is_sms(A44, EX46) == (True, None)
    for n, d in [(2, 3), (3, 1), (4, 2)]:
        params = AlgebraParams(n, n * d)
        assert is_sms(params, [IndecModule(i, 1) for i in range(1, n + 1)])[0]
    ok, reason = is_sms(A26, [IndecModule(1, 1)])
    assert not ok and reason.startswith("(2)")
    ok, reason = is_sms(A26, [IndecModule(1, 4), IndecModule(2, 1)])
    assert not ok and reason.startswith("(1)")


def test_is_sms_requires_nu_stability():
    params = AlgebraParams(4, 6)
    reasons = set()
    for cand in combinations(params.modules(), 4):
        if is_orthogonal_system(params, cand):
            ok, reason = is_sms(params, cand)
            reasons.add(reason[:3] if reason else None)
    assert reasons == {None, "(3)"}


def test_enumerate_examples():
    assert len(enumerate_sms(A26)) == 6
    assert len(enumerate_sms(A44)) == 14
    for ell in range(2, 7):
        params = AlgebraParams(1, ell)
        got = {S.modules for S in enumerate_sms(params)}
        assert got == {frozenset([IndecModule(1, 1)]), frozenset([IndecModule(1, ell)])}


def test_enumerate_guard():
    with pytest.raises(ResourceGuardError):
        enumerate_sms(AlgebraParams(12, 12))
    assert len(enumerate_sms(AlgebraParams(7, 7), limit=48, force=True)) == catalan(7)


def test_classify_examples():
    report = classify_all(A26)
    assert report.complete and len(report.classes) == 6
    sizes = sorted(len(labels) for _, labels in report.classes)
    assert sizes == [1, 1, 1, 1, 2, 2]
    assert classify_all(AlgebraParams(4, 6)).count_enumerated == 6
    assert classify_all(AlgebraParams(2, 2)).count_enumerated == 2
    d = report.to_dict()
    assert d["complete"] and d["count_formula"] == 6 and len(d["classes"]) == 6


def test_count_examples():
    assert count_sms(A26) == 6
    assert count_sms(A44) == 14
    assert count_sms(AlgebraParams(3, 6)) == 20
    assert count_sms_brauer_tree(2, 3) == 6
    assert count_sms_brauer_tree(1, 1) == 1
    assert count_sms_brauer_tree(4, 1) == 14
    assert count_formula_text(A26) == "(2+1)*C_2"
    assert count_formula_text(A44) == "C_4"
    with pytest.raises(ValueError):
        count_sms_brauer_tree(0, 2)


def test_structure_violations_detects_breakage():
    fam = build_family(A26, "L", classify_all(A26).classes[0][1][0].p, 1)
    assert structure_violations(A26, fam) == []
    bad = SmsCandidate(A26, frozenset([IndecModule(1, 1), IndecModule(1, 2)]))
    assert "tops are not all simples" in structure_violations(A26, bad)
