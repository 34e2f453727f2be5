"""Ground truth by linear algebra: modules as explicit quiver representations.

Nothing here uses the layer-counting formulas of ``stable_hom``.  Hom spaces
are solution spaces of the intertwining equations, stable Hom is Hom modulo
the maps factoring through the projective cover of the target, and
syzygies / Ext^1 / the AR translate come from kernels and ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf
from .algebra import AlgebraParams, IndecModule, _require_stable, check_module

DEFAULT_PRIME = 101


@dataclass(frozen=True, eq=False)
class MatrixRep:
    """A representation of the cyclic quiver: arrow v goes from vertex v to v+1.

    ``arrows[v-1]`` is the (dims[v+1] x dims[v]) matrix of the arrow leaving v.
    """

    n: int
    dims: tuple[int, ...]
    arrows: tuple[np.ndarray, ...]

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    def nxt(self, v: int) -> int:
        return v % self.n + 1


def realize(params: AlgebraParams, M: IndecModule) -> MatrixRep:
    """Uniserial representation with one basis vector per Loewy layer."""
    check_module(params, M)
    n = params.n
    layers: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for s in range(M.length):
        layers[params.vertex(M.top + s)].append(s)
    dims = tuple(len(layers[v]) for v in range(1, n + 1))
    arrows = []
    for v in range(1, n + 1):
        w = v % n + 1
        A = np.zeros((dims[w - 1], dims[v - 1]), dtype=np.int64)
        for col, s in enumerate(layers[v]):
            if s + 1 < M.length:
                A[layers[w].index(s + 1), col] = 1
        arrows.append(A)
    return MatrixRep(n, dims, tuple(arrows))


def check_relations(params: AlgebraParams, R: MatrixRep, p: int = DEFAULT_PRIME) -> bool:
    """Every path of ell+1 arrows acts as zero."""
    for v in range(1, params.n + 1):
        P = np.eye(R.dims[v - 1], dtype=np.int64)
        w = v
        for _ in range(params.ell + 1):
            P = (R.arrows[w - 1] @ P) % p
            w = R.nxt(w)
        if np.any(P):
            return False
    return True


def _offsets(A: MatrixRep, B: MatrixRep) -> list[int]:
    offs = [0]
    for v in range(A.n):
        offs.append(offs[-1] + B.dims[v] * A.dims[v])
    return offs


def hom_space(A: MatrixRep, B: MatrixRep, p: int = DEFAULT_PRIME) -> list[list[np.ndarray]]:
    """Basis of Hom(A, B); each element is a list of per-vertex matrices."""
    if A.n != B.n:
        raise ValueError("representations of different quivers")
    n = A.n
    offs = _offsets(A, B)
    nvars = offs[-1]
    rows = []
    for v in range(1, n + 1):
        w = A.nxt(v)
        a, b = A.dims[v - 1], A.dims[w - 1]
        c, d = B.dims[v - 1], B.dims[w - 1]
        Aa, Ba = A.arrows[v - 1], B.arrows[v - 1]
        # phi_w @ Aa - Ba @ phi_v = 0, entrywise (r, s) with r < d, s < a
        for r in range(d):
            for s in range(a):
                row = np.zeros(nvars, dtype=np.int64)
                for t in range(b):
                    if Aa[t, s]:
                        row[offs[w - 1] + r * b + t] += Aa[t, s]
                for t in range(c):
                    if Ba[r, t]:
                        row[offs[v - 1] + t * a + s] -= Ba[r, t]
                rows.append(row)
    eqs = np.array(rows, dtype=np.int64).reshape(len(rows), nvars)
    basis = gf.nullspace(eqs, p)
    maps = []
    for col in basis.T:
        maps.append([col[offs[v]:offs[v + 1]].reshape(B.dims[v], A.dims[v]) for v in range(n)])
    return maps


def _flatten(phi: list[np.ndarray]) -> np.ndarray:
    return np.concatenate([m.ravel() for m in phi]) if phi else np.zeros(0, dtype=np.int64)


def is_morphism(A: MatrixRep, B: MatrixRep, phi: list[np.ndarray], p: int = DEFAULT_PRIME) -> bool:
    for v in range(1, A.n + 1):
        w = A.nxt(v)
        if np.any((phi[w - 1] @ A.arrows[v - 1] - B.arrows[v - 1] @ phi[v - 1]) % p):
            return False
    return True


def compose(psi: list[np.ndarray], phi: list[np.ndarray], p: int = DEFAULT_PRIME) -> list[np.ndarray]:
    return [(b @ a) % p for a, b in zip(phi, psi)]


def hom_dim(params: AlgebraParams, A: MatrixRep, B: MatrixRep, p: int = DEFAULT_PRIME) -> int:
    if A.n != params.n or B.n != params.n:
        raise ValueError(f"representation does not live over {params}")
    return len(hom_space(A, B, p))


def _span_rank(maps: list[list[np.ndarray]], p: int) -> int:
    if not maps:
        return 0
    return gf.rank(np.array([_flatten(m) for m in maps]), p)


def cover_projection(params: AlgebraParams, N: IndecModule) -> list[np.ndarray]:
    """P_top(N) -> N, sending layer s to layer s (zero below the length of N)."""
    P = realize(params, IndecModule(N.top, params.ell + 1))
    RN = realize(params, N)
    maps = []
    for v in range(1, params.n + 1):
        src = [s for s in range(params.ell + 1) if params.vertex(N.top + s) == v]
        dst = [s for s in range(N.length) if params.vertex(N.top + s) == v]
        m = np.zeros((RN.dims[v - 1], P.dims[v - 1]), dtype=np.int64)
        for col, s in enumerate(src):
            if s < N.length:
                m[dst.index(s), col] = 1
        maps.append(m)
    assert is_morphism(P, RN, maps)
    return maps


def stable_hom_dim(params: AlgebraParams, M: IndecModule, N: IndecModule, p: int = DEFAULT_PRIME) -> int:
    """dim Hom(M, N) minus the rank of Hom(M, P_N) -> Hom(M, N)."""
    _require_stable(params, M)
    _require_stable(params, N)
    RM, RN = realize(params, M), realize(params, N)
    RP = realize(params, IndecModule(N.top, params.ell + 1))
    pi = cover_projection(params, N)
    total = len(hom_space(RM, RN, p))
    through = [compose(pi, phi, p) for phi in hom_space(RM, RP, p)]
    return total - _span_rank(through, p)


def _kernel(R: MatrixRep, phi: list[np.ndarray], p: int) -> tuple[MatrixRep, list[np.ndarray]]:
    """Kernel subrepresentation of phi and its inclusion into R."""
    bases = [gf.nullspace(phi[v], p) for v in range(R.n)]
    dims = tuple(b.shape[1] for b in bases)
    arrows = []
    for v in range(1, R.n + 1):
        w = R.nxt(v)
        image = (R.arrows[v - 1] @ bases[v - 1]) % p
        if dims[w - 1] == 0 or dims[v - 1] == 0:
            arrows.append(np.zeros((dims[w - 1], dims[v - 1]), dtype=np.int64))
        else:
            arrows.append(gf.solve(bases[w - 1], image, p))
    return MatrixRep(R.n, dims, tuple(arrows)), bases


def identify_uniserial(params: AlgebraParams, R: MatrixRep, p: int = DEFAULT_PRIME) -> IndecModule:
    """Read off (top, length) of an indecomposable uniserial representation."""
    tops = []
    for v in range(1, R.n + 1):
        u = (v - 2) % R.n + 1
        incoming = gf.rank(R.arrows[u - 1], p) if R.arrows[u - 1].size else 0
        tops += [v] * (R.dims[v - 1] - incoming)
    if len(tops) != 1:
        raise ValueError(f"representation is not uniserial (top vertices {tops})")
    return IndecModule(tops[0], R.dimension)


def syzygy(params: AlgebraParams, M: IndecModule, p: int = DEFAULT_PRIME) -> IndecModule:
    _require_stable(params, M)
    P = realize(params, IndecModule(M.top, params.ell + 1))
    K, _ = _kernel(P, cover_projection(params, M), p)
    return identify_uniserial(params, K, p)


def ext1_dim(params: AlgebraParams, M: IndecModule, N: IndecModule, p: int = DEFAULT_PRIME) -> int:
    """dim Ext^1(M, N) from 0 -> K -> P_M -> M -> 0: Hom(K, N) modulo restrictions from Hom(P_M, N)."""
    check_module(params, M)
    check_module(params, N)
    P = realize(params, IndecModule(M.top, params.ell + 1))
    K, incl = _kernel(P, cover_projection(params, M), p)
    RN = realize(params, N)
    total = len(hom_space(K, RN, p))
    restricted = [compose(psi, incl, p) for psi in hom_space(P, RN, p)]
    return total - _span_rank(restricted, p)


@lru_cache(maxsize=None)
def _stable_table(n: int, ell: int, p: int) -> dict:
    params = AlgebraParams(n, ell)
    mods = params.modules()
    return {(X, Y): stable_hom_dim(params, X, Y, p) for X in mods for Y in mods}


def ar_translate_candidates(params: AlgebraParams, M: IndecModule, p: int = DEFAULT_PRIME) -> list[IndecModule]:
    """Modules X whose dimensions satisfy both Auslander-Reiten formulas for X = tau(M).

    dim Ext^1(M, N) = dim stable Hom(N, X) and dim Ext^1(N, X) = dim stable
    Hom(M, N) for every non-projective N.  With n >= 2 this leaves exactly one
    module; on the one-vertex quiver it can leave two.
    """
    _require_stable(params, M)
    mods = params.modules()
    table = _stable_table(params.n, params.ell, p)
    ext_from = {N: ext1_dim(params, M, N, p) for N in mods}
    return [
        X
        for X in mods
        if all(ext_from[N] == table[(N, X)] for N in mods)
        and all(ext1_dim(params, N, X, p) == table[(M, N)] for N in mods)
    ]


def ar_translate(params: AlgebraParams, M: IndecModule, p: int = DEFAULT_PRIME) -> IndecModule:
    hits = ar_translate_candidates(params, M, p)
    if len(hits) != 1:
        raise ArithmeticError(f"AR formulas leave {len(hits)} candidates for tau({M})")
    return hits[0]
