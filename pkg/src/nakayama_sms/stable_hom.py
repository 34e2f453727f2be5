"""Hom and stable Hom dimensions between indecomposable A_n^ell-modules.

Every nonzero map M -> N between uniserial modules has image rad^t(N) for
some t, and the maps with image inside rad^t(N) form a flag.  So dim Hom is
the number of layers t at which a quotient of M can land, and dim of the
stable Hom is the number of those layers whose map does not factor through
a projective (length(M) + t <= ell).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .algebra import AlgebraParams, IndecModule, _require_stable, check_module, nu_orbit, socle


def _layers(params: AlgebraParams, M: IndecModule, N: IndecModule):
    for t in range(N.length):
        if params.vertex(N.top + t) == M.top and N.length - t <= M.length:
            yield t


def hom_dim(params: AlgebraParams, M: IndecModule, N: IndecModule) -> int:
    check_module(params, M)
    check_module(params, N)
    return sum(1 for _ in _layers(params, M, N))


def factors_through_projective(params: AlgebraParams, length_M: int, t: int) -> bool:
    """Whether the map from a module of Loewy length ``length_M`` onto rad^t(N) is stably zero."""
    return length_M + t >= params.ell + 1


def stable_hom_dim(params: AlgebraParams, M: IndecModule, N: IndecModule) -> int:
    _require_stable(params, M)
    _require_stable(params, N)
    return sum(1 for t in _layers(params, M, N) if not factors_through_projective(params, M.length, t))


def is_stable_brick(params: AlgebraParams, M: IndecModule) -> bool:
    return stable_hom_dim(params, M, M) == 1


def orthogonality_witness(params: AlgebraParams, modules: Iterable[IndecModule]):
    """First obstruction to being an orthogonal system, or None.

    Returns ``("brick", M)`` for a member that is not a stable brick, or
    ``("hom", M, N)`` for distinct members with nonzero stable Hom M -> N.
    """
    mods = list(modules)
    if len(set(mods)) != len(mods):
        raise ValueError("orthogonal system candidates must be pairwise distinct")
    for M in mods:
        if not is_stable_brick(params, M):
            return ("brick", M)
    for M, N in combinations(mods, 2):
        if stable_hom_dim(params, M, N):
            return ("hom", M, N)
        if stable_hom_dim(params, N, M):
            return ("hom", N, M)
    return None


def is_orthogonal_system(params: AlgebraParams, modules: Iterable[IndecModule]) -> bool:
    return orthogonality_witness(params, modules) is None


def nu_orbit_orthogonal(params: AlgebraParams, M: IndecModule) -> bool:
    """Closed-form test that the nu-orbit of M is an orthogonal system."""
    _require_stable(params, M)
    e = params.e
    return M.length <= e or params.ell + 1 - e <= M.length <= params.ell


def symmetric_brick_closed_form(params: AlgebraParams, M: IndecModule) -> bool:
    """Brick test on A_n^{dn} via Loewy length: len <= n or len >= (d-1)n + 1."""
    d = params.d
    if d is None:
        raise ValueError(f"{params} is not symmetric")
    _require_stable(params, M)
    return M.length <= params.n or (d - 1) * params.n + 1 <= M.length <= d * params.n


def top_socle_distinct(params: AlgebraParams, M: IndecModule, N: IndecModule) -> bool:
    return M.top != N.top and socle(params, M) != socle(params, N)


def orbit_is_orthogonal_direct(params: AlgebraParams, M: IndecModule) -> bool:
    return is_orthogonal_system(params, nu_orbit(params, M))
