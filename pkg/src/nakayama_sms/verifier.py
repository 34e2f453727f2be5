"""Deciding, enumerating, classifying and counting simple-minded systems.

A set of modules over a representation-finite self-injective algebra is an
sms iff it is an orthogonal system, has as many members as there are
non-projective simples (n here), and is permuted by the Nakayama functor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraParams, IndecModule, format_module, nakayama, nu_orbit, socle, to_symbol
from .families import (
    FamilyLabel,
    SmsCandidate,
    all_labels,
    build_family,
)
from .noncrossing import catalan, format_partition
from .stable_hom import is_orthogonal_system, nu_orbit_orthogonal, orthogonality_witness

ENUMERATION_LIMIT = 48


class ResourceGuardError(RuntimeError):
    """Exhaustive enumeration refused: n * ell exceeds the guard."""


def is_sms(params: AlgebraParams, S) -> tuple[bool, str | None]:
    """(True, None) or (False, reason) naming the failed condition and a witness."""
    mods = list(S.modules) if isinstance(S, SmsCandidate) else list(S)
    witness = orthogonality_witness(params, mods)
    if witness is not None:
        if witness[0] == "brick":
            return False, f"(1) {format_module(witness[1])} is not a stable brick"
        return False, f"(1) nonzero stable Hom {format_module(witness[1])} -> {format_module(witness[2])}"
    if len(mods) != params.n:
        return False, f"(2) {len(mods)} members, need {params.n}"
    members = set(mods)
    for M in mods:
        if nakayama(params, M) not in members:
            return False, f"(3) nu({format_module(M)}) = {format_module(nakayama(params, M))} is missing"
    return True, None


def count_sms(params: AlgebraParams) -> int:
    e = params.e
    return catalan(e) if params.ell == e else (e + 1) * catalan(e)


def count_sms_brauer_tree(n_edges: int, multiplicity: int) -> int:
    """sms count of a Brauer tree algebra; it is stably equivalent to A_n^{n m0}."""
    if n_edges < 1 or multiplicity < 1:
        raise ValueError("need n_edges >= 1 and multiplicity >= 1")
    return count_sms(AlgebraParams(n_edges, n_edges * multiplicity))


def count_formula_text(params: AlgebraParams) -> str:
    e = params.e
    return f"C_{e}" if params.ell == e else f"({e}+1)*C_{e}"


def _orbit_representatives(params: AlgebraParams) -> list[IndecModule]:
    # tops 1..e meet every nu-orbit exactly once
    return [IndecModule(t, L) for t in range(1, params.e + 1) for L in range(1, params.ell + 1)]


def enumerate_sms(params: AlgebraParams, limit: int = ENUMERATION_LIMIT, force: bool = False) -> list[SmsCandidate]:
    """Every sms, found by choosing e mutually orthogonal nu-orbits."""
    if params.n * params.ell > limit and not force:
        raise ResourceGuardError(f"n*ell = {params.n * params.ell} exceeds the limit {limit}; pass force=True (--force on the command line)")
    orbits = []
    for rep in _orbit_representatives(params):
        orb = sorted(nu_orbit(params, rep))
        if is_orthogonal_system(params, orb):
            orbits.append(orb)
    m = len(orbits)
    compatible = [[False] * m for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            ok = is_orthogonal_system(params, orbits[a] + orbits[b])
            compatible[a][b] = compatible[b][a] = ok

    found = []

    def extend(chosen: list[int], start: int) -> None:
        if len(chosen) == params.e:
            found.append(SmsCandidate(params, frozenset(M for c in chosen for M in orbits[c])))
            return
        for b in range(start, m):
            if all(compatible[a][b] for a in chosen):
                chosen.append(b)
                extend(chosen, b + 1)
                chosen.pop()

    extend([], 0)
    found.sort(key=SmsCandidate.key)
    return found


@dataclass
class ClassificationReport:
    algebra: AlgebraParams
    classes: list[tuple[SmsCandidate, list[FamilyLabel]]]
    unlabeled: list[SmsCandidate] = field(default_factory=list)
    unreal: list[tuple[SmsCandidate, list[FamilyLabel]]] = field(default_factory=list)

    @property
    def count_formula(self) -> int:
        return count_sms(self.algebra)

    @property
    def count_enumerated(self) -> int:
        return len(self.classes)

    @property
    def complete(self) -> bool:
        return not self.unlabeled and not self.unreal and self.count_enumerated == self.count_formula

    def to_dict(self) -> dict:
        return {
            "algebra": {"n": self.algebra.n, "ell": self.algebra.ell, "e": self.algebra.e},
            "count_formula": self.count_formula,
            "count_enumerated": self.count_enumerated,
            "complete": self.complete,
            "classes": [
                {
                    "modules": [format_module(M) for M in S.sorted()],
                    "labels": [[lab.kind, format_partition(lab.p), lab.k] for lab in labels],
                }
                for S, labels in self.classes
            ],
            "unlabeled": [[format_module(M) for M in S.sorted()] for S in self.unlabeled],
            "unreal": [[str(lab) for lab in labels] for _, labels in self.unreal],
        }


def constructed_families(params: AlgebraParams) -> dict[tuple, tuple[SmsCandidate, list[FamilyLabel]]]:
    """Every L'[p,k], S'[p,k], grouped by the module set they produce."""
    out: dict[tuple, tuple[SmsCandidate, list[FamilyLabel]]] = {}
    for label in all_labels(params.e):
        fam = build_family(params, label.kind, label.p, label.k)
        out.setdefault(fam.key(), (fam, []))[1].append(label)
    return out


def classify_all(params: AlgebraParams, limit: int = ENUMERATION_LIMIT, force: bool = False) -> ClassificationReport:
    enumerated = enumerate_sms(params, limit, force)
    constructed = constructed_families(params)
    keys = set()
    classes, unlabeled = [], []
    for S in enumerated:
        keys.add(S.key())
        labels = constructed.get(S.key(), (S, []))[1]
        if labels:
            classes.append((S, labels))
        else:
            classes.append((S, []))
            unlabeled.append(S)
    unreal = [v for k, v in constructed.items() if k not in keys]
    return ClassificationReport(params, classes, unlabeled, unreal)


def structure_violations(params: AlgebraParams, S: SmsCandidate) -> list[str]:
    """Structural facts every sms must satisfy; returns the ones that fail.

    Tops and socles each run over all simples once; S is a union of e
    nu-orbits, each passing the closed-form orbit test; and, over a symmetric
    algebra with d >= 2, every sigma-cycle holds at most one member of
    multiplicity index 0, and if some cycle has none then every other has one.
    """
    out = []
    mods = S.sorted()
    if sorted(M.top for M in mods) != list(range(1, params.n + 1)):
        out.append("tops are not all simples")
    if sorted(socle(params, M) for M in mods) != list(range(1, params.n + 1)):
        out.append("socles are not all simples")
    orbits = {frozenset(nu_orbit(params, M)) for M in mods}
    if len(orbits) != params.e or set().union(*orbits) != set(mods):
        out.append(f"not a union of {params.e} nu-orbits")
    if not all(nu_orbit_orthogonal(params, M) for M in mods):
        out.append("an orbit fails the closed-form orthogonality test")
    d = params.d
    if d is not None and d >= 2 and not out:
        sigma = {M.top: socle(params, M) for M in mods}
        l_of = {M.top: to_symbol(params, M)[2] for M in mods}
        zeros_per_cycle, seen = [], set()
        for start in sorted(sigma):
            if start in seen:
                continue
            zeros, x = 0, start
            while x not in seen:
                seen.add(x)
                zeros += l_of[x] == 0
                x = sigma[x]
            zeros_per_cycle.append(zeros)
        if any(z > 1 for z in zeros_per_cycle):
            out.append("a block has two members of multiplicity index 0")
        if 0 in zeros_per_cycle:
            others = list(zeros_per_cycle)
            others.remove(0)
            if any(z != 1 for z in others):
                out.append("a block without an index-0 member coexists with a block lacking exactly one")
    return out
