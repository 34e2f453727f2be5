import pytest
from hypothesis import given, strategies as st

from nakayama_sms.algebra import AlgebraParams, IndecModule, ProjectiveModuleError, from_symbol, nu_orbit
from nakayama_sms.stable_hom import (
    factors_through_projective,
    hom_dim,
    is_orthogonal_system,
    is_stable_brick,
    nu_orbit_orthogonal,
    orbit_is_orthogonal_direct,
    orthogonality_witness,
    stable_hom_dim,
    symmetric_brick_closed_form,
    top_socle_distinct,
)

A26, A44, A46 = AlgebraParams(2, 6), AlgebraParams(4, 4), AlgebraParams(4, 6)
EX46 = [IndecModule(4, 1), IndecModule(2, 4), IndecModule(3, 4), IndecModule(1, 3)]


def test_hom_dim_examples():
    assert hom_dim(A44, from_symbol(A44, 1, 3, 0), from_symbol(A44, 2, 1, 0)) == 1
    assert hom_dim(A26, from_symbol(A26, 1, 1, 2), from_symbol(A26, 2, 2, 0)) == 0
    assert hom_dim(A26, IndecModule(1, 1), IndecModule(1, 1)) == 1


def test_factors_through_projective_examples():
    assert factors_through_projective(A26, 5, 2)
    assert not factors_through_projective(A26, 5, 0)
    for t in range(A26.ell + 1):
        assert not factors_through_projective(A26, A26.ell - t, t)
        assert factors_through_projective(A26, A26.ell + 1 - t, t)


def test_stable_hom_examples():
    M = from_symbol(A26, 1, 1, 2)
    assert stable_hom_dim(A26, M, M) == 1
    assert stable_hom_dim(A44, from_symbol(A44, 1, 3, 0), from_symbol(A44, 2, 1, 0)) == 0
    N = from_symbol(A26, 1, 2, 1)
    assert stable_hom_dim(A26, N, N) == 2
    with pytest.raises(ProjectiveModuleError):
        stable_hom_dim(A26, IndecModule(1, 7), M)


def test_stable_brick_examples():
    assert not is_stable_brick(A26, from_symbol(A26, 1, 2, 1))
    assert is_stable_brick(A26, from_symbol(A26, 2, 1, 2))
    for i in (1, 2):
        assert is_stable_brick(A26, IndecModule(i, 1))


def test_orthogonal_system_examples():
    assert is_orthogonal_system(A44, EX46)
    assert is_orthogonal_system(A26, [IndecModule(2, 1)])
    pair = [from_symbol(A26, 1, 2, 0), from_symbol(A26, 1, 1, 2)]
    assert not is_orthogonal_system(A26, pair)
    assert orthogonality_witness(A26, pair)[0] == "hom"
    assert orthogonality_witness(A26, [from_symbol(A26, 1, 2, 1)]) == ("brick", IndecModule(1, 4))
    with pytest.raises(ValueError):
        orthogonality_witness(A26, pair + pair[:1])


def test_nu_orbit_orthogonal_examples():
    assert not nu_orbit_orthogonal(A46, IndecModule(1, 3))
    assert nu_orbit_orthogonal(A46, IndecModule(1, 5))
    for M in A26.modules():
        if is_stable_brick(A26, M):
            assert nu_orbit_orthogonal(A26, M)


@pytest.mark.parametrize("n,ell", [(n, ell) for n in range(1, 7) for ell in range(1, 10)])
def test_nu_orbit_closed_form_matches_direct(n, ell):
    params = AlgebraParams(n, ell)
    for M in params.modules():
        assert nu_orbit_orthogonal(params, M) == orbit_is_orthogonal_direct(params, M)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 6) for d in range(1, 4)])
def test_symmetric_brick_closed_form(n, d):
    params = AlgebraParams(n, d * n)
    for M in params.modules():
        assert symmetric_brick_closed_form(params, M) == is_stable_brick(params, M)


@st.composite
def pair(draw):
    params = AlgebraParams(draw(st.integers(1, 6)), draw(st.integers(1, 9)))
    mods = params.modules()
    return params, draw(st.sampled_from(mods)), draw(st.sampled_from(mods))


@given(pair())
def test_stable_hom_bounds(pmn):
    params, M, N = pmn
    s = stable_hom_dim(params, M, N)
    assert 0 <= s <= hom_dim(params, M, N)
    # nonzero stable Hom between distinct orthogonal candidates needs shared top or socle
    if M != N and is_stable_brick(params, M) and is_stable_brick(params, N):
        if not top_socle_distinct(params, M, N):
            assert s + stable_hom_dim(params, N, M) > 0


@given(pair())
def test_nu_is_a_stable_autoequivalence(pmn):
    from nakayama_sms.algebra import nakayama, syzygy

    params, M, N = pmn
    s = stable_hom_dim(params, M, N)
    assert stable_hom_dim(params, nakayama(params, M), nakayama(params, N)) == s
    assert stable_hom_dim(params, syzygy(params, M), syzygy(params, N)) == s


def test_nu_orbit_sizes():
    assert all(len(nu_orbit(A46, M)) == 2 for M in A46.modules())
