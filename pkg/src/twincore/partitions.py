"""Integer partitions, hook lengths and beta-sets.

A partition is kept in canonical form: a weakly decreasing tuple of positive
integers (the empty tuple for the empty partition).  The beta-set of a
partition with parts l_1 >= ... >= l_m is {l_i + m - i}, which is also the
set of hook lengths of the first-column boxes.  Any finite set of distinct
positive integers h_1 > ... > h_m is the beta-set of exactly one partition,

    (h_1 - (m - 1), h_2 - (m - 2), ..., h_m),

whose size is sum(h_i) - C(m, 2).

Core membership has two readings that are cross-checked in the tests: the
hook grid contains no multiple of t, and the beta-set is closed under
subtracting t (whenever h >= t, h - t is again in the set).  Likewise for
distinct parts: no repeated part, equivalently no two beta elements that
differ by exactly 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """Canonical partition: weakly decreasing positive parts."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        normalized = tuple(int(p) for p in parts)
        while normalized and normalized[-1] == 0:
            normalized = normalized[:-1]
        if any(p < 0 for p in normalized):
            raise ValueError(f"negative part in {normalized}")
        if any(normalized[i] < normalized[i + 1] for i in range(len(normalized) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {normalized}")
        if any(p == 0 for p in normalized):
            raise ValueError(f"interior zero part in {normalized}")
        object.__setattr__(self, "parts", normalized)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def to_json_dict(self) -> dict:
        return {"parts": list(self.parts)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Partition":
        return cls(tuple(data["parts"]))


@dataclass(frozen=True)
class BetaSet:
    """A finite set of distinct positive integers (first-column hook lengths)."""

    hooks: frozenset[int] = frozenset()

    def __init__(self, hooks: Iterable[int] = ()):
        normalized = frozenset(int(h) for h in hooks)
        if any(h < 1 for h in normalized):
            raise ValueError(f"beta-set elements must be >= 1, got {sorted(normalized)}")
        object.__setattr__(self, "hooks", normalized)

    def sorted_desc(self) -> tuple[int, ...]:
        return tuple(sorted(self.hooks, reverse=True))

    def __len__(self) -> int:
        return len(self.hooks)

    def __contains__(self, value: int) -> bool:
        return value in self.hooks

    def to_json_dict(self) -> dict:
        return {"hooks": list(self.sorted_desc())}

    @classmethod
    def from_json_dict(cls, data: dict) -> "BetaSet":
        return cls(tuple(data["hooks"]))


def beta_set(p: Partition) -> BetaSet:
    """First-column hook lengths {l_i + m - i}."""
    m = len(p)
    return BetaSet(part + m - i for i, part in enumerate(p.parts, start=1))


def partition_of_beta(b: BetaSet) -> Partition:
    """The unique partition whose beta-set is ``b``."""
    hooks = b.sorted_desc()
    m = len(hooks)
    return Partition(h - (m - i) for i, h in enumerate(hooks, start=1))


def size_from_beta(b: BetaSet) -> int:
    """Partition size sum(h) - C(m, 2) read off the beta-set."""
    m = len(b)
    return sum(b.hooks) - m * (m - 1) // 2


def hook_length_grid(p: Partition) -> list[list[int]]:
    """Hook lengths of every box; row i has l_i entries.

    The box in row i, column j (1-based) has hook length
    l_i - j + #{r : l_r >= j} - i + 1.
    """
    parts = p.parts
    grid = []
    for i, row_len in enumerate(parts, start=1):
        row = []
        for j in range(1, row_len + 1):
            col_len = sum(1 for r in parts if r >= j)
            row.append(row_len - j + col_len - i + 1)
        grid.append(row)
    return grid


def is_t_core(p: Partition, t: int) -> bool:
    """Whether no hook length of ``p`` is a multiple of ``t``.

    Uses the beta-set closure criterion; ``is_t_core_via_hooks`` is the
    direct grid scan, and the two are cross-checked in the test suite.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    hooks = beta_set(p).hooks
    return all(h < t or (h - t) in hooks for h in hooks)


def is_t_core_via_hooks(p: Partition, t: int) -> bool:
    """Grid-scan reading of the t-core test."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return all(h % t != 0 for row in hook_length_grid(p) for h in row)


def is_simultaneous_core(p: Partition, s: int, t: int) -> bool:
    """Simultaneously an s-core and a t-core."""
    if s == t:
        raise ValueError("simultaneous core test needs s != t")
    return is_t_core(p, s) and is_t_core(p, t)


def has_distinct_parts(p: Partition) -> bool:
    """No repeated part.  Equivalent to the beta-set criterion below."""
    return len(set(p.parts)) == len(p.parts)


def has_distinct_parts_via_beta(p: Partition) -> bool:
    """No two beta-set elements differing by exactly 1."""
    hooks = beta_set(p).hooks
    return all(h + 1 not in hooks for h in hooks)


def brute_force_distinct_cores(s: int, t: int, size_cap: int) -> list[Partition]:
    """All (s,t)-core partitions with distinct parts and size <= size_cap.

    Partition-level oracle, independent of the poset machinery: iterates
    distinct-part partitions in lexicographic order, bounding parts by the
    Frobenius number s*t - s - t (no core can have a larger first-column
    hook, hence no larger part) and pruning on the remaining size budget.
    """
    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    if s == t or math.gcd(s, t) != 1:
        raise ValueError(f"({s},{t}) must be distinct and coprime for finiteness")
    if size_cap < 0:
        raise ValueError("size_cap must be nonnegative")
    frobenius = s * t - s - t
    max_part = max(min(frobenius, size_cap), 0)

    hits: list[Partition] = []
    prefix: list[int] = []

    def visit() -> None:
        candidate = Partition(tuple(prefix))
        if is_simultaneous_core(candidate, s, t):
            hits.append(candidate)

    def extend(limit: int, budget: int) -> None:
        for part in range(1, min(limit, budget) + 1):
            prefix.append(part)
            visit()
            extend(part - 1, budget - part)
            prefix.pop()

    visit()
    extend(max_part, size_cap)
    return hits


def iter_distinct_part_partitions(size_cap: int, max_part: int) -> Iterator[Partition]:
    """All partitions with distinct parts, size <= size_cap, parts <= max_part."""
    prefix: list[int] = []

    def extend(limit: int, budget: int) -> Iterator[Partition]:
        for part in range(1, min(limit, budget) + 1):
            prefix.append(part)
            yield Partition(tuple(prefix))
            yield from extend(part - 1, budget - part)
            prefix.pop()

    yield Partition(())
    yield from extend(max_part, size_cap)
