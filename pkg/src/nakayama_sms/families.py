"""Long- and short-type families of modules built from non-crossing partitions.

Over a symmetric algebra A_n^{dn} and a non-crossing partition p of {1..n},
both families contain one module per vertex i, with top i and socle sigma(i);
only the top multiplicity index differs:

    long  L[p,k]: 0 if hat(i) misses the block p(k), else d-1
    short S[p,k]: as long, except the module with top k gets 0

For a general A_n^ell the families are built over A_e^ell (e = gcd(n, ell))
and pulled back along the covering: every member is replaced by its
nu-orbit, i.e. the same length at tops congruent mod e.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .algebra import (
    AlgebraParams,
    IndecModule,
    check_module,
    cosyzygy,
    format_module,
    from_symbol,
    is_projective,
    parse_module,
    socle,
    syzygy,
    to_symbol,
)
from .noncrossing import (
    NonCrossingPartition,
    format_partition,
    hat,
    join_blocks,
    m1,
    m2,
    parse_partition,
)

LONG, SHORT = "L", "S"


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class SmsCandidate:
    algebra: AlgebraParams
    modules: frozenset[IndecModule]

    def __post_init__(self):
        object.__setattr__(self, "modules", frozenset(self.modules))
        for M in self.modules:
            check_module(self.algebra, M)
            if is_projective(self.algebra, M):
                raise FamilyError(f"{M} is projective")

    def sorted(self) -> list[IndecModule]:
        return sorted(self.modules)

    def key(self) -> tuple[IndecModule, ...]:
        return tuple(self.sorted())

    def __len__(self):
        return len(self.modules)

    def __iter__(self):
        return iter(self.sorted())


class FamilyLabel(NamedTuple):
    kind: str
    p: NonCrossingPartition
    k: int

    def __str__(self):
        return f"{self.kind}[p={format_partition(self.p)},k={self.k}]"


def _symmetric_d(params: AlgebraParams) -> int:
    if params.d is None:
        raise FamilyError(f"{params} is not symmetric")
    return params.d


def _build(params: AlgebraParams, p: NonCrossingPartition, k: int, short: bool) -> SmsCandidate:
    d = _symmetric_d(params)
    if p.size != params.n:
        raise FamilyError(f"partition of {{1..{p.size}}} used over {params}")
    if not 1 <= k <= params.n:
        raise FamilyError(f"k={k} out of range 1..{params.n}")
    block_k = set(p.block(k))
    mods = []
    for i in range(1, params.n + 1):
        if short and i == k:
            l = 0
        else:
            l = 0 if hat(p, i).isdisjoint(block_k) else d - 1
        mods.append(from_symbol(params, i, p.sigma[i], l))
    return SmsCandidate(params, frozenset(mods))


def build_long(params: AlgebraParams, p: NonCrossingPartition, k: int) -> SmsCandidate:
    return _build(params, p, k, short=False)


def build_short(params: AlgebraParams, p: NonCrossingPartition, k: int) -> SmsCandidate:
    return _build(params, p, k, short=True)


def base_algebra(params: AlgebraParams) -> AlgebraParams:
    """A_e^ell, the symmetric algebra the covering of A_n^ell lands on."""
    return AlgebraParams(params.e, params.ell)


def lift(params: AlgebraParams, family: SmsCandidate) -> SmsCandidate:
    e = params.e
    if family.algebra != base_algebra(params):
        raise FamilyError(f"family over {family.algebra}, expected {base_algebra(params)}")
    mods = [IndecModule(M.top + m * e, M.length) for M in family.modules for m in range(params.n // e)]
    return SmsCandidate(params, frozenset(mods))


def project(params: AlgebraParams, family: SmsCandidate) -> SmsCandidate:
    """Image under the covering A_n^ell -> A_e^ell: reduce tops mod e."""
    base = base_algebra(params)
    return SmsCandidate(base, frozenset(IndecModule(base.vertex(M.top), M.length) for M in family.modules))


def build_family(params: AlgebraParams, kind: str, p: NonCrossingPartition, k: int) -> SmsCandidate:
    """L'[p,k] or S'[p,k] over any A_n^ell (equal to L[p,k], S[p,k] when n | ell)."""
    base = base_algebra(params)
    if kind == LONG:
        fam = build_long(base, p, k)
    elif kind == SHORT:
        fam = build_short(base, p, k)
    else:
        raise FamilyError(f"unknown family type {kind!r}")
    return lift(params, fam)


def extract_partition(params: AlgebraParams, S: SmsCandidate) -> tuple[NonCrossingPartition, list[list[int]]]:
    """Non-crossing partition of an sms, with each block listed as its sigma-cycle.

    Over a non-symmetric algebra the sms is first pushed down to A_e^ell.
    """
    from .verifier import is_sms

    ok, reason = is_sms(params, S)
    if not ok:
        raise FamilyError(f"not an sms: {reason}")
    if not params.is_symmetric:
        params, S = base_algebra(params), project(params, S)
    sigma = {M.top: socle(params, M) for M in S.modules}
    cycles, seen = [], set()
    for start in sorted(sigma):
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = sigma[x]
        cycles.append(cyc)
    return NonCrossingPartition.from_blocks(cycles, params.n), cycles


def _multiplicity_ratio(params: AlgebraParams) -> int:
    return params.ell // params.e


def families_equal_long(params, p, k, p2, k2) -> bool:
    if p != p2:
        return False
    if _multiplicity_ratio(params) == 1:
        return True
    return p.block(k) == p.block(k2)


def families_equal_short(params, p, k, p2, k2) -> bool:
    if p != p2:
        return False
    if _multiplicity_ratio(params) == 1 or k == k2:
        return True
    return hat(p, k).isdisjoint(hat(p, k2)) and join_blocks(p, k, k2)[1]


def syzygy_family(params: AlgebraParams, S: SmsCandidate) -> SmsCandidate:
    return SmsCandidate(params, frozenset(syzygy(params, M) for M in S.modules))


def cosyzygy_family(params: AlgebraParams, S: SmsCandidate) -> SmsCandidate:
    return SmsCandidate(params, frozenset(cosyzygy(params, M) for M in S.modules))


def syzygy_label(label: FamilyLabel) -> FamilyLabel:
    """Label of Omega applied to the family with this label."""
    kind, p, k = label
    if kind == SHORT:
        return FamilyLabel(LONG, m1(p), k)
    return FamilyLabel(SHORT, m1(p), p.sigma[k] % p.size + 1)


def cosyzygy_label(label: FamilyLabel) -> FamilyLabel:
    kind, p, k = label
    if kind == LONG:
        return FamilyLabel(SHORT, m2(p), k)
    return FamilyLabel(LONG, m2(p), p.sigma[k])


def omega_power_label(label: FamilyLabel, w: int) -> FamilyLabel:
    step = syzygy_label if w > 0 else cosyzygy_label
    for _ in range(abs(w)):
        label = step(label)
    return label


def omega_power_family(params: AlgebraParams, S: SmsCandidate, w: int) -> SmsCandidate:
    step = syzygy_family if w > 0 else cosyzygy_family
    for _ in range(abs(w)):
        S = step(params, S)
    return S


def all_labels(e: int) -> list[FamilyLabel]:
    from .noncrossing import noncrossing_partitions

    return [FamilyLabel(kind, p, k) for kind in (LONG, SHORT) for p in noncrossing_partitions(e) for k in range(1, e + 1)]


def render_family(params: AlgebraParams, S: SmsCandidate, labels: Iterable[FamilyLabel] = ()) -> str:
    lines = [str(lab) for lab in labels]
    lines += ["  " + format_module(M) for M in S.sorted()]
    return "\n".join(lines)


def family_to_dict(params: AlgebraParams, S: SmsCandidate, labels: Iterable[FamilyLabel] = ()) -> dict:
    return {
        "algebra": {"n": params.n, "ell": params.ell},
        "labels": [{"type": lab.kind, "p": format_partition(lab.p), "k": lab.k} for lab in labels],
        "modules": [format_module(M) for M in S.sorted()],
    }


def family_from_dict(data: dict) -> tuple[AlgebraParams, SmsCandidate, list[FamilyLabel]]:
    params = AlgebraParams(data["algebra"]["n"], data["algebra"]["ell"])
    base = base_algebra(params)
    S = SmsCandidate(params, frozenset(parse_module(params, m) for m in data["modules"]))
    labels = [FamilyLabel(lab["type"], parse_partition(lab["p"], base.n), lab["k"]) for lab in data["labels"]]
    return params, S, labels


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def multiplicity_indices(params: AlgebraParams, S: SmsCandidate) -> dict[int, int]:
    """top vertex -> multiplicity index l of the member with that top."""
    return {M.top: to_symbol(params, M)[2] for M in S.modules}
