"""Exhaustive agreement sweeps between the closed forms and their oracles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import oracle, stable_hom
from .algebra import AlgebraParams
from .arcs import crossing_pattern, orthogonal_by_arcs


@dataclass
class SweepResult:
    name: str
    checked: int
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


def hom_sweep(
    max_n: int,
    max_ell: int,
    p: int = oracle.DEFAULT_PRIME,
    hom: Callable = stable_hom.hom_dim,
    stable: Callable = stable_hom.stable_hom_dim,
) -> SweepResult:
    """Closed-form Hom / stable Hom vs linear algebra on every non-projective pair."""
    checked = 0
    for n in range(1, max_n + 1):
        for ell in range(1, max_ell + 1):
            params = AlgebraParams(n, ell)
            mods = params.modules()
            reps = {M: oracle.realize(params, M) for M in mods}
            for M in mods:
                for N in mods:
                    checked += 1
                    got = (hom(params, M, N), stable(params, M, N))
                    want = (
                        oracle.hom_dim(params, reps[M], reps[N], p),
                        oracle.stable_hom_dim(params, M, N, p),
                    )
                    if got != want:
                        return SweepResult(
                            "hom", checked, f"{params} {M} -> {N}: formula {got}, oracle {want}"
                        )
    return SweepResult("hom", checked)


def arc_sweep_algebra(params: AlgebraParams, stable: Callable = stable_hom.stable_hom_dim) -> SweepResult:
    """Arc criterion vs stable Hom orthogonality on one symmetric algebra.

    Also checks that the crossing pattern between two stable bricks forces a
    nonzero stable map from the second module to the first.
    """
    mods = params.modules()
    bricks = {M for M in mods if stable(params, M, M) == 1}
    checked = 0
    for M in mods:
        for N in mods:
            if M == N:
                continue
            checked += 1
            by_hom = M in bricks and N in bricks and stable(params, M, N) == 0 and stable(params, N, M) == 0
            if orthogonal_by_arcs(params, M, N) != by_hom:
                return SweepResult("arcs", checked, f"{params} {M}, {N}: arcs say {not by_hom}, Hom says {by_hom}")
            if M in bricks and N in bricks and crossing_pattern(params, M, N) and stable(params, N, M) < 1:
                return SweepResult("arcs", checked, f"{params} {M}, {N}: crossing but stable Hom(N, M) = 0")
    return SweepResult("arcs", checked)


def arc_sweep(pairs: list[tuple[int, int]], stable: Callable = stable_hom.stable_hom_dim) -> SweepResult:
    """arc_sweep_algebra over A_n^{dn} for every (n, d) given."""
    total = SweepResult("arcs", 0)
    for n, d in pairs:
        r = arc_sweep_algebra(AlgebraParams(n, d * n), stable)
        total.checked += r.checked
        if not r.ok:
            total.counterexample = r.counterexample
            break
    return total


def oracle_check(max_n: int, max_ell: int, stable: Callable = stable_hom.stable_hom_dim) -> list[SweepResult]:
    """Hom sweep up to (max_n, max_ell) and arc sweep on the symmetric algebras in range."""
    symmetric = [(n, d) for n in range(1, max_n + 1) for d in range(1, max_ell // n + 1)]
    return [hom_sweep(max_n, max_ell, stable=stable), arc_sweep(symmetric, stable)]
