"""Non-crossing partitions of {1..e} and the combinatorics built on them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence


class PartitionError(ValueError):
    pass


def _canonical(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def _check_partition(blocks, e: int) -> None:
    seen = [x for b in blocks for x in b]
    if any(len(b) == 0 for b in blocks):
        raise PartitionError("empty block")
    if sorted(seen) != list(range(1, e + 1)):
        raise PartitionError(f"blocks {blocks} do not partition {{1..{e}}}")


def _blocks_cross(A: Sequence[int], B: Sequence[int]) -> bool:
    # a < x < b < y with a, b in one block and x, y in the other
    for a, b in combinations(sorted(A), 2):
        inside = [x for x in B if a < x < b]
        outside = [x for x in B if x < a or x > b]
        if inside and outside:
            return True
    return False


def is_noncrossing(blocks: Iterable[Iterable[int]], e: int | None = None) -> bool:
    blocks = _canonical(blocks)
    if e is None:
        e = sum(len(b) for b in blocks)
    _check_partition(blocks, e)
    return not any(_blocks_cross(A, B) for A, B in combinations(blocks, 2))


@dataclass(frozen=True)
class NonCrossingPartition:
    """A non-crossing partition, stored canonically: blocks sorted by minimum."""

    blocks: tuple[tuple[int, ...], ...]
    size: int

    def __post_init__(self):
        canon = _canonical(self.blocks)
        object.__setattr__(self, "blocks", canon)
        if not is_noncrossing(canon, self.size):
            raise PartitionError(f"{format_partition_blocks(canon)} is crossing")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], size: int | None = None) -> "NonCrossingPartition":
        blocks = _canonical(blocks)
        if size is None:
            size = sum(len(b) for b in blocks)
        return cls(blocks, size)

    @cached_property
    def _block_index(self) -> dict[int, tuple[int, ...]]:
        return {x: b for b in self.blocks for x in b}

    def block(self, i: int) -> tuple[int, ...]:
        return self._block_index[i]

    @cached_property
    def sigma(self) -> dict[int, int]:
        e = self.size
        out = {}
        for i in range(1, e + 1):
            mates = set(self.block(i))
            j = i
            while True:
                j = (j - 2) % e + 1
                if j in mates:
                    out[i] = j
                    break
        return out

    def __str__(self):
        return format_partition_blocks(self.blocks)


def format_partition_blocks(blocks) -> str:
    return "{" + "|".join(",".join(map(str, b)) for b in blocks) + "}"


def format_partition(p: NonCrossingPartition) -> str:
    return format_partition_blocks(p.blocks)


def parse_partition(text: str, size: int | None = None) -> NonCrossingPartition:
    """Parse ``{1,6,4|2,3|5}``.  Raises PartitionError if crossing or not a partition."""
    s = re.sub(r"\s+", "", text)
    if not (s.startswith("{") and s.endswith("}")):
        raise PartitionError(f"cannot parse partition {text!r}")
    try:
        blocks = [[int(x) for x in part.split(",")] for part in s[1:-1].split("|")]
    except ValueError as exc:
        raise PartitionError(f"cannot parse partition {text!r}") from exc
    return NonCrossingPartition.from_blocks(blocks, size)


def successor(p: NonCrossingPartition, i: int) -> int:
    """sigma(i): the nearest block-mate of i stepping backward cyclically."""
    return p.sigma[i]


def cyclic_interval(start: int, end: int, e: int) -> list[int]:
    """Forward cyclic interval start, start+1, ..., end in 1..e."""
    length = (end - start) % e + 1
    return [(start - 1 + s) % e + 1 for s in range(length)]


def hat(p: NonCrossingPartition, i: int) -> frozenset[int]:
    return frozenset(cyclic_interval(i, successor(p, i), p.size))


def _cycles(perm: dict[int, int]) -> list[list[int]]:
    seen, cycles = set(), []
    for start in sorted(perm):
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        cycles.append(cyc)
    return cycles


def m1(p: NonCrossingPartition) -> NonCrossingPartition:
    """Blocks are the orbits of i -> sigma(i) + 1."""
    e = p.size
    step = {i: p.sigma[i] % e + 1 for i in range(1, e + 1)}
    return NonCrossingPartition.from_blocks(_cycles(step), e)


def m2(p: NonCrossingPartition) -> NonCrossingPartition:
    """Blocks are the orbits of i -> sigma^{-1}(i) - 1."""
    e = p.size
    inv = {v: k for k, v in p.sigma.items()}
    step = {i: (inv[i] - 2) % e + 1 for i in range(1, e + 1)}
    return NonCrossingPartition.from_blocks(_cycles(step), e)


def join_blocks(p: NonCrossingPartition, k: int, k2: int) -> tuple[tuple[tuple[int, ...], ...], bool]:
    """Merge the blocks of k and k2; return (canonical blocks, is non-crossing)."""
    A, B = p.block(k), p.block(k2)
    if A == B:
        return p.blocks, True
    merged = [b for b in p.blocks if b not in (A, B)] + [A + B]
    canon = _canonical(merged)
    return canon, is_noncrossing(canon, p.size)


def noncrossing_partitions(e: int) -> list[NonCrossingPartition]:
    """All non-crossing partitions of {1..e}, sorted by canonical block tuple."""
    if e < 1:
        raise PartitionError("e must be positive")
    found: list[tuple[tuple[int, ...], ...]] = []

    def extend(blocks: list[list[int]], x: int) -> None:
        if x > e:
            found.append(_canonical(blocks))
            return
        for idx, B in enumerate(blocks):
            # x joins B unless a different block sits strictly inside (max B, x)
            # while also having an element before max B
            top = B[-1]
            ok = True
            for C in blocks:
                if C is B:
                    continue
                if any(top < c < x for c in C) and C[0] < top:
                    ok = False
                    break
            if ok:
                B.append(x)
                extend(blocks, x + 1)
                B.pop()
        blocks.append([x])
        extend(blocks, x + 1)
        blocks.pop()

    extend([], 1)
    found.sort()
    return [NonCrossingPartition(b, e) for b in found]


def all_partitions(e: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every set partition of {1..e} (crossing or not), canonical form."""
    out = []

    def rec(blocks, x):
        if x > e:
            out.append(_canonical(blocks))
            return
        for B in blocks:
            B.append(x)
            rec(blocks, x + 1)
            B.pop()
        blocks.append([x])
        rec(blocks, x + 1)
        blocks.pop()

    rec([], 1)
    return sorted(out)


def catalan(e: int) -> int:
    if e < 0:
        raise ValueError("e must be non-negative")
    return comb(2 * e, e) // (e + 1)


def narayana(e: int, k: int) -> int:
    if not 1 <= k <= e:
        raise ValueError(f"need 1 <= k <= e, got e={e}, k={k}")
    return comb(e, k) * comb(e, k - 1) // e
