"""Self-injective Nakayama algebras A_n^ell and their indecomposable modules.

Conventions: the quiver has arrows i -> i+1 (mod n) and we work with left
modules, so the projective P_i is uniserial with radical layers
S_i, S_{i+1}, ..., S_{i+ell}.  An indecomposable module is stored as the pair
(top vertex, Loewy length); the symbol M^i_{j,k} (top i, socle j, top
multiplicity k+1) is only a view on that pair.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional


class InvalidModuleError(ValueError):
    """Raised for (top, length) pairs or symbols that name no module."""


class ProjectiveModuleError(ValueError):
    """Raised when a stable-category operation receives a projective module."""


@dataclass(frozen=True)
class AlgebraParams:
    """The algebra A_n^ell: n simples, projectives of Loewy length ell+1."""

    n: int
    ell: int

    def __post_init__(self):
        if self.n < 1 or self.ell < 1:
            raise ValueError(f"need n, ell >= 1, got n={self.n}, ell={self.ell}")

    @property
    def e(self) -> int:
        return math.gcd(self.n, self.ell)

    @property
    def d(self) -> Optional[int]:
        if self.ell % self.n:
            return None
        return self.ell // self.n

    @property
    def is_symmetric(self) -> bool:
        return self.ell % self.n == 0

    def vertex(self, i: int) -> int:
        """Normalize an integer to its representative in 1..n."""
        return (i - 1) % self.n + 1

    def modules(self, projectives: bool = False) -> list["IndecModule"]:
        """All indecomposables, sorted by (top, length)."""
        top_len = self.ell + 1 if projectives else self.ell
        return [IndecModule(t, L) for t in range(1, self.n + 1) for L in range(1, top_len + 1)]

    def __str__(self):
        return f"A_{self.n}^{self.ell}"


@dataclass(frozen=True, order=True)
class IndecModule:
    top: int
    length: int

    def __str__(self):
        return f"M(top={self.top},len={self.length})"


ZERO = None  # radical_power returns this past the bottom of the radical series


def check_module(params: AlgebraParams, M: IndecModule) -> None:
    if not (1 <= M.top <= params.n and 1 <= M.length <= params.ell + 1):
        raise InvalidModuleError(f"{M} is not a module over {params}")


def is_projective(params: AlgebraParams, M: IndecModule) -> bool:
    check_module(params, M)
    return M.length == params.ell + 1


def _require_stable(params: AlgebraParams, M: IndecModule) -> None:
    if is_projective(params, M):
        raise ProjectiveModuleError(f"{M} is projective over {params}")


def socle(params: AlgebraParams, M: IndecModule) -> int:
    return params.vertex(M.top + M.length - 1)


def forward_gap(params: AlgebraParams, i: int, j: int) -> int:
    """[j - i): the least non-negative residue of j - i mod n."""
    return (j - i) % params.n


def from_symbol(params: AlgebraParams, i: int, j: int, k: int) -> IndecModule:
    if not (1 <= i <= params.n and 1 <= j <= params.n) or k < 0:
        raise InvalidModuleError(f"bad symbol M^{i}_{j},{k} over {params}")
    length = params.n * k + forward_gap(params, i, j) + 1
    if length > params.ell + 1:
        raise InvalidModuleError(f"M^{i}_{j},{k} has length {length} > {params.ell + 1}")
    return IndecModule(i, length)


def to_symbol(params: AlgebraParams, M: IndecModule) -> tuple[int, int, int]:
    check_module(params, M)
    j = socle(params, M)
    k = (M.length - 1 - forward_gap(params, M.top, j)) // params.n
    return M.top, j, k


def dim_vector(params: AlgebraParams, M: IndecModule) -> list[int]:
    check_module(params, M)
    dims = [0] * params.n
    for s in range(M.length):
        dims[params.vertex(M.top + s) - 1] += 1
    return dims


def radical_power(params: AlgebraParams, M: IndecModule, t: int):
    """rad^t(M), or ZERO once t reaches the Loewy length."""
    check_module(params, M)
    if t < 0:
        raise ValueError("t must be non-negative")
    if t >= M.length:
        return ZERO
    return IndecModule(params.vertex(M.top + t), M.length - t)


def ar_translate(params: AlgebraParams, M: IndecModule) -> IndecModule:
    """tau: shifts the top one step along the arrows."""
    _require_stable(params, M)
    return IndecModule(params.vertex(M.top + 1), M.length)


def ar_translate_inverse(params: AlgebraParams, M: IndecModule) -> IndecModule:
    _require_stable(params, M)
    return IndecModule(params.vertex(M.top - 1), M.length)


def nakayama(params: AlgebraParams, M: IndecModule) -> IndecModule:
    """nu = tau^{-ell}; the identity on objects when n divides ell."""
    _require_stable(params, M)
    return IndecModule(params.vertex(M.top - params.ell), M.length)


def nu_orbit(params: AlgebraParams, M: IndecModule) -> frozenset[IndecModule]:
    _require_stable(params, M)
    e = params.e
    return frozenset(IndecModule(params.vertex(M.top + m * e), M.length) for m in range(params.n // e))


def syzygy(params: AlgebraParams, M: IndecModule) -> IndecModule:
    # kernel of P_top -> M is rad^len(P_top)
    _require_stable(params, M)
    return IndecModule(params.vertex(M.top + M.length), params.ell + 1 - M.length)


def cosyzygy(params: AlgebraParams, M: IndecModule) -> IndecModule:
    _require_stable(params, M)
    length = params.ell + 1 - M.length
    return IndecModule(params.vertex(M.top - length), length)


_MODULE_RE = re.compile(r"^M\(top=(\d+),len=(\d+)\)$")
_SYMBOL_RE = re.compile(r"^M\^\{?(\d+)\}?_\{?(\d+),(\d+)\}?$")


def format_module(M: IndecModule) -> str:
    return str(M)


def format_symbol(params: AlgebraParams, M: IndecModule) -> str:
    i, j, k = to_symbol(params, M)
    return f"M^{i}_{j},{k}"


def parse_module(params: AlgebraParams, text: str) -> IndecModule:
    """Parse ``M(top=i,len=L)`` or ``M^i_j,k`` (whitespace ignored)."""
    s = re.sub(r"\s+", "", text)
    m = _MODULE_RE.match(s)
    if m:
        M = IndecModule(int(m.group(1)), int(m.group(2)))
        check_module(params, M)
        return M
    m = _SYMBOL_RE.match(s)
    if m:
        return from_symbol(params, int(m.group(1)), int(m.group(2)), int(m.group(3)))
    raise InvalidModuleError(f"cannot parse module {text!r}")
