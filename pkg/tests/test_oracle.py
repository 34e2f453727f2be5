import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nakayama_sms import gf, oracle, stable_hom
from nakayama_sms.algebra import (
    AlgebraParams,
    IndecModule,
    ProjectiveModuleError,
    ar_translate,
    dim_vector,
    from_symbol,
    radical_power,
    syzygy,
)
from nakayama_sms.certify import hom_sweep, oracle_check

A26, A44 = AlgebraParams(2, 6), AlgebraParams(4, 4)


def test_realize_examples():
    R = oracle.realize(A26, IndecModule(1, 1))
    assert R.dims == (1, 0) and not any(a.any() for a in R.arrows)
    R = oracle.realize(A44, from_symbol(A44, 1, 3, 0))
    assert R.dims == (1, 1, 1, 0)
    assert R.arrows[0].tolist() == [[1]] and R.arrows[1].tolist() == [[1]]
    assert R.arrows[2].size == 0 and R.arrows[3].size == 0
    assert oracle.realize(A26, from_symbol(A26, 2, 1, 2)).dims == (3, 3)


@pytest.mark.parametrize("n,ell", [(2, 6), (3, 4), (4, 4), (1, 5)])
def test_realize_invariants(n, ell):
    params = AlgebraParams(n, ell)
    for M in params.modules(projectives=True):
        R = oracle.realize(params, M)
        assert oracle.check_relations(params, R)
        assert list(R.dims) == dim_vector(params, M)
        assert oracle.identify_uniserial(params, R) == M


def test_hom_examples():
    S = oracle.realize(A26, IndecModule(2, 1))
    assert oracle.hom_dim(A26, S, S) == 1
    RM, RN = oracle.realize(A44, from_symbol(A44, 1, 3, 0)), oracle.realize(A44, from_symbol(A44, 2, 1, 0))
    assert oracle.hom_dim(A44, RM, RN) == 1
    for M in A26.modules():
        P = oracle.realize(A26, IndecModule(M.top, A26.ell + 1))
        assert oracle.hom_dim(A26, P, oracle.realize(A26, M)) >= 1
    with pytest.raises(ValueError):
        oracle.hom_dim(A44, S, S)


def test_stable_hom_examples():
    M = from_symbol(A26, 1, 1, 2)
    assert oracle.stable_hom_dim(A26, M, M) == 1
    N = from_symbol(A26, 1, 2, 1)
    assert oracle.stable_hom_dim(A26, N, N) == 2
    assert oracle.stable_hom_dim(A44, from_symbol(A44, 1, 3, 0), from_symbol(A44, 2, 1, 0)) == 0
    with pytest.raises(ProjectiveModuleError):
        oracle.stable_hom_dim(A26, IndecModule(1, 7), M)


@pytest.mark.parametrize("p", [2, 101])
def test_field_independence(p):
    r = hom_sweep(3, 4, p=p)
    assert r.ok, r.counterexample


@pytest.mark.parametrize("n,ell", [(2, 4), (3, 3), (3, 4), (2, 6)])
def test_syzygy_and_tau_match_oracle(n, ell):
    params = AlgebraParams(n, ell)
    for M in params.modules():
        assert oracle.syzygy(params, M) == syzygy(params, M)
        assert oracle.ar_translate(params, M) == ar_translate(params, M)


def test_ar_translate_ambiguous_on_one_vertex():
    params = AlgebraParams(1, 3)
    M = IndecModule(1, 1)
    assert ar_translate(params, M) in oracle.ar_translate_candidates(params, M)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 6), st.data())
def test_radical_consistency(n, ell, data):
    params = AlgebraParams(n, ell)
    M = data.draw(st.sampled_from(params.modules()))
    t = data.draw(st.integers(1, M.length - 1)) if M.length > 1 else 0
    R = radical_power(params, M, t)
    if R is not None:
        # rad^t M embeds in M
        assert oracle.hom_dim(params, oracle.realize(params, R), oracle.realize(params, M)) >= 1
        assert stable_hom.hom_dim(params, R, M) == oracle.hom_dim(
            params, oracle.realize(params, R), oracle.realize(params, M)
        )


def test_gf_basics():
    A = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert gf.rank(A, 101) == 2
    N = gf.nullspace(A, 101)
    assert N.shape == (3, 1) and not np.any((A @ N) % 101)
    X = gf.solve(np.array([[2, 0], [0, 3]]), np.array([[4], [9]]), 7)
    assert X.tolist() == [[2], [3]]
    assert gf.rank(np.array([[1, 1], [1, 1]]), 2) == 1


def test_oracle_check_trivial():
    assert all(r.ok for r in oracle_check(1, 1))


def test_oracle_check_detects_fault():
    def broken(params, M, N):
        return stable_hom.stable_hom_dim(params, M, N) + (M == N and M.length == 2)

    results = oracle_check(2, 3, stable=broken)
    assert not all(r.ok for r in results)
    assert "M(top=" in results[0].counterexample
