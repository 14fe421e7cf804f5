"""Lattice paths over up steps U = (1,1) and down steps D = (1,-1).

A free Dyck path of order n takes 2n steps with equal numbers of U and D,
so it ends back at height 0; a Dyck path additionally never dips below its
starting height.  Steps are packed into an integer bit field (U = 1, D = 0,
step i at bit i) so exhaustive generation at the guard ceiling stays cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import GuardError

MAX_ENUMERATION_ORDER = 14


@dataclass(frozen=True, order=True)
class LatticePath:
    """Immutable U/D step sequence, bit-packed."""

    length: int = 0
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if not 0 <= self.bits < (1 << self.length if self.length else 1):
            raise ValueError(f"bits {self.bits} out of range for length {self.length}")

    @classmethod
    def from_text(cls, text: str) -> "LatticePath":
        bits = 0
        for i, ch in enumerate(text):
            if ch == "U":
                bits |= 1 << i
            elif ch != "D":
                raise ValueError(f"step {i} is {ch!r}; expected 'U' or 'D'")
        return cls(len(text), bits)

    @property
    def text(self) -> str:
        return "".join("U" if self.bits >> i & 1 else "D" for i in range(self.length))

    def steps(self) -> Iterator[int]:
        """Step increments, +1 for U and -1 for D."""
        for i in range(self.length):
            yield 1 if self.bits >> i & 1 else -1

    def heights(self) -> list[int]:
        """Prefix heights h_0 = 0, h_1, ..., h_len."""
        out = [0]
        for step in self.steps():
            out.append(out[-1] + step)
        return out

    def __add__(self, other: "LatticePath") -> "LatticePath":
        return LatticePath(self.length + other.length, self.bits | other.bits << self.length)

    def __getitem__(self, key: slice) -> "LatticePath":
        start, stop, stride = key.indices(self.length)
        if stride != 1:
            raise ValueError("only contiguous slices are supported")
        width = max(stop - start, 0)
        return LatticePath(width, self.bits >> start & ((1 << width) - 1))

    def __len__(self) -> int:
        return self.length

    def __repr__(self) -> str:
        return f"LatticePath({self.text!r})"


EMPTY_PATH = LatticePath(0, 0)


def path(text: str) -> LatticePath:
    """Shorthand constructor from 'UDUD...' text."""
    return LatticePath.from_text(text)


def is_free_dyck(p: LatticePath) -> bool:
    """Even length with equally many up and down steps."""
    return p.length % 2 == 0 and p.heights()[-1] == 0


def is_dyck(p: LatticePath) -> bool:
    """Free Dyck path that never goes below its starting height."""
    heights = p.heights()
    return p.length % 2 == 0 and heights[-1] == 0 and min(heights) >= 0


def reverse_path(p: LatticePath) -> LatticePath:
    """Steps read right to left, symbols unchanged.

    The reverse of a Dyck path stays weakly below the axis.
    """
    bits = 0
    for i in range(p.length):
        if p.bits >> i & 1:
            bits |= 1 << (p.length - 1 - i)
    return LatticePath(p.length, bits)


def first_return_split(p: LatticePath) -> tuple[LatticePath, LatticePath]:
    """Unique factorization p = U . p1 . D . p2 at the first return to 0."""
    if p.length == 0:
        raise ValueError("the empty path has no first-return decomposition")
    if not is_dyck(p):
        raise ValueError(f"{p.text} is not a Dyck path")
    height = 0
    for i, step in enumerate(p.steps()):
        height += step
        if height == 0:
            return p[1:i], p[i + 1:]
    raise AssertionError("balanced path never returned to height 0")


def enumerate_dyck(n: int, max_order: int = MAX_ENUMERATION_ORDER) -> Iterator[LatticePath]:
    """All Dyck paths of order n, lexicographically with U before D."""
    yield from _enumerate(n, free=False, max_order=max_order)


def enumerate_free_dyck(n: int, max_order: int = MAX_ENUMERATION_ORDER) -> Iterator[LatticePath]:
    """All free Dyck paths of order n, lexicographically with U before D."""
    yield from _enumerate(n, free=True, max_order=max_order)


def _enumerate(n: int, free: bool, max_order: int) -> Iterator[LatticePath]:
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n > max_order:
        raise GuardError(f"path enumeration guard: order {n} exceeds {max_order}")

    def rec(pos: int, ups: int, height: int, bits: int) -> Iterator[LatticePath]:
        if pos == 2 * n:
            yield LatticePath(2 * n, bits)
            return
        if ups < n:
            yield from rec(pos + 1, ups + 1, height + 1, bits | 1 << pos)
        downs = pos - ups
        if downs < n and (free or height > 0):
            yield from rec(pos + 1, ups, height - 1, bits)

    yield from rec(0, 0, 0, 0)
