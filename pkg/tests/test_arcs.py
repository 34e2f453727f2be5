import pytest

from nakayama_sms.algebra import AlgebraParams, IndecModule, from_symbol
from nakayama_sms.arcs import Arc, ArcCase, arc_of, classify_arcs, classify_pair, orthogonal_by_arcs
from nakayama_sms.certify import arc_sweep_algebra

A26, A44, A66 = AlgebraParams(2, 6), AlgebraParams(4, 4), AlgebraParams(6, 6)


def test_arc_of_examples():
    a = arc_of(A44, from_symbol(A44, 1, 3, 0))
    assert (a.start, a.end) == (1, 3) and a.carrier == {1, 2, 3}
    assert arc_of(A44, IndecModule(2, 1)).carrier == {2}
    b = arc_of(A44, from_symbol(A44, 2, 1, 0))
    assert b.vertices() == [2, 3, 4, 1]
    assert b.position(1) == 3


def test_classify_examples():
    assert classify_pair(A44, IndecModule(1, 3), IndecModule(3, 4)) is ArcCase.WRAP
    assert classify_pair(A26, IndecModule(1, 1), IndecModule(2, 1)) is ArcCase.DISJOINT
    assert classify_pair(A66, IndecModule(1, 6), IndecModule(2, 2)) is ArcCase.INNER
    assert classify_pair(A66, IndecModule(2, 2), IndecModule(1, 6)) is ArcCase.OUTER
    assert classify_pair(A66, IndecModule(1, 3), IndecModule(2, 3)) is ArcCase.CROSSING


def test_shared_endpoint_rejected():
    with pytest.raises(ValueError):
        classify_arcs(Arc(1, 3, 4), Arc(1, 2, 4))


def test_orthogonal_by_arcs_examples():
    assert orthogonal_by_arcs(A26, from_symbol(A26, 1, 2, 0), from_symbol(A26, 2, 1, 2))
    assert not orthogonal_by_arcs(A26, from_symbol(A26, 1, 2, 0), from_symbol(A26, 2, 1, 0))
    assert orthogonal_by_arcs(A44, from_symbol(A44, 1, 3, 0), from_symbol(A44, 3, 2, 0))
    with pytest.raises(ValueError):
        orthogonal_by_arcs(AlgebraParams(4, 6), IndecModule(1, 1), IndecModule(2, 1))


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 6) for d in range(1, 4)])
def test_arcs_agree_with_stable_hom(n, d):
    r = arc_sweep_algebra(AlgebraParams(n, d * n))
    assert r.ok, r.counterexample


def test_placements_symmetric():
    n = 6
    for s1 in range(1, n + 1):
        for e1 in range(1, n + 1):
            for s2 in range(1, n + 1):
                for e2 in range(1, n + 1):
                    if s1 == s2 or e1 == e2:
                        continue
                    c, c2 = classify_arcs(Arc(s1, e1, n), Arc(s2, e2, n)), classify_arcs(Arc(s2, e2, n), Arc(s1, e1, n))
                    swap = {ArcCase.INNER: ArcCase.OUTER, ArcCase.OUTER: ArcCase.INNER}
                    assert c2 is swap.get(c, c)
