"""Gap posets of numerical semigroups, truncations, and their order ideals.

For coprime s < t the positive integers with no representation a*s + b*t
(a, b >= 0) form a finite set of (s-1)(t-1)/2 gaps, the largest being the
Frobenius number s*t - s - t.  Ordering the gaps by letting x cover y
whenever x - y is s or t makes the down-closed subsets (order ideals)
exactly the beta-sets of (s,t)-core partitions, so there are
C(s+t,s)/(s+t) of them.  An ideal is *nice* when no two members differ by
exactly 1; nice ideals are the beta-sets of cores with distinct parts.

For the twin odd pair s = 2k+1, t = 2k+3 the poset splits as the k odd
gaps 2i-1 plus the family 2i + (r-1)(2k+3).  Removing the upward closure
of the even element 2k+2 leaves the truncated poset: two disjoint
triangles of width k, one over the odd gaps 1, 3, ..., 2k-1 and one over
the even gaps 2, 4, ..., 2k, each climbing in steps of 2k+3.  Explicit
index formulas for both element sets are built here and checked against
the sieve construction.

Rank is the longest chain length from a minimal element.  The ladder
posets (t, t+1) and the truncated posets are graded (every cover drops the
rank by exactly one); a general gap poset need not be - in the (3,5) poset
the element 7 covers both 4 (rank 1) and 2 (rank 0) - so gradedness is
exposed as a predicate and asserted only where the recursions rely on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator, Union

from .errors import GuardError

MAX_IDEAL_ENUMERATION_ELEMENTS = 120


class _FinitePoset:
    """Shared machinery: cover maps, longest-path rank, dominance bitsets."""

    def __init__(self, elements: Iterable[int], step_small: int, step_large: int):
        self.elements: frozenset[int] = frozenset(elements)
        self.sorted_elements: tuple[int, ...] = tuple(sorted(self.elements))
        self.covers: dict[int, frozenset[int]] = {}
        self.covered_by: dict[int, frozenset[int]] = {}
        below: dict[int, set[int]] = {x: set() for x in self.sorted_elements}
        for x in self.sorted_elements:
            down = frozenset(
                y for y in (x - step_small, x - step_large) if y in self.elements
            )
            self.covers[x] = down
            for y in down:
                below[y].add(x)
        self.covered_by = {x: frozenset(above) for x, above in below.items()}

        # Numeric order is a topological order: covers point strictly downward.
        self.rank: dict[int, int] = {}
        for x in self.sorted_elements:
            down = self.covers[x]
            self.rank[x] = 1 + max(self.rank[y] for y in down) if down else 0

        self._index = {x: i for i, x in enumerate(self.sorted_elements)}
        self._down_mask: dict[int, int] = {}
        for x in self.sorted_elements:
            mask = 1 << self._index[x]
            for y in self.covers[x]:
                mask |= self._down_mask[y]
            self._down_mask[x] = mask

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, a: int, b: int) -> bool:
        """Reflexive-transitive closure of the cover relation."""
        return bool(self._down_mask[b] >> self._index[a] & 1)

    def downset(self, x: int) -> frozenset[int]:
        mask = self._down_mask[x]
        return frozenset(e for e in self.sorted_elements if mask >> self._index[e] & 1)

    def upward_closure(self, x: int) -> frozenset[int]:
        seen = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for z in self.covered_by[y]:
                if z not in seen:
                    seen.add(z)
                    frontier.append(z)
        return frozenset(seen)

    def minimal_elements(self) -> frozenset[int]:
        return frozenset(x for x in self.elements if not self.covers[x])

    def is_graded(self) -> bool:
        """Every cover drops rank by exactly one."""
        return all(
            self.rank[x] == self.rank[y] + 1 for x in self.elements for y in self.covers[x]
        )


class GapPoset(_FinitePoset):
    """Gaps of the numerical semigroup <s, t>, covers x -> x-s and x -> x-t."""

    def __init__(self, s: int, t: int):
        if s < 1 or t < 1 or s == t:
            raise ValueError(f"need distinct positive s, t, got ({s},{t})")
        if gcd(s, t) != 1:
            raise ValueError(f"({s},{t}) are not coprime; the gap set is infinite")
        self.s, self.t = s, t
        super().__init__(_sieve_gaps(s, t), s, t)

    def __repr__(self) -> str:
        return f"GapPoset(s={self.s}, t={self.t})"

    def __eq__(self, other) -> bool:
        return type(other) is GapPoset and (self.s, self.t) == (other.s, other.t)

    def __hash__(self) -> int:
        return hash(("GapPoset", self.s, self.t))


class TruncatedPoset(_FinitePoset):
    """The (2k+1, 2k+3) gap poset minus the upward closure of 2k+2."""

    def __init__(self, k: int):
        if k < 0:
            raise ValueError(f"need k >= 0, got {k}")
        self.k = k
        self.s, self.t = 2 * k + 1, 2 * k + 3
        odd_part, even_part = t_decomposition(k)
        formula_elements = odd_part | even_part
        if k == 0:
            survivors = frozenset()
        else:
            parent = gap_poset(self.s, self.t)
            survivors = parent.elements - parent.upward_closure(2 * k + 2)
        if k > 0 and formula_elements != survivors:
            raise AssertionError(
                f"truncated poset constructions disagree at k={k}: "
                f"{sorted(formula_elements ^ survivors)}"
            )
        super().__init__(formula_elements, self.s, self.t)

    def __repr__(self) -> str:
        return f"TruncatedPoset(k={self.k})"

    def __eq__(self, other) -> bool:
        return type(other) is TruncatedPoset and self.k == other.k

    def __hash__(self) -> int:
        return hash(("TruncatedPoset", self.k))


AnyPoset = Union[GapPoset, TruncatedPoset]


def _sieve_gaps(s: int, t: int) -> list[int]:
    frobenius = s * t - s - t
    if frobenius < 1:
        return []
    reachable = [False] * (frobenius + 1)
    reachable[0] = True
    for n in range(1, frobenius + 1):
        reachable[n] = (n >= s and reachable[n - s]) or (n >= t and reachable[n - t])
    return [n for n in range(1, frobenius + 1) if not reachable[n]]


@lru_cache(maxsize=None)
def gap_poset(s: int, t: int) -> GapPoset:
    """The gap poset of <s, t>; instances are cached and shared."""
    return GapPoset(s, t)


@lru_cache(maxsize=None)
def truncated_poset(k: int) -> TruncatedPoset:
    """Truncation of the (2k+1, 2k+3) gap poset; built two ways and compared."""
    return TruncatedPoset(k)


def q_decomposition(k: int) -> tuple[frozenset[int], frozenset[int]]:
    """Index-formula split of the (2k+1, 2k+3) gap set.

    Returns the k odd gaps {2i-1 : 1 <= i <= k} and the staircase family
    {2i + (r-1)(2k+3) : 1 <= r <= 2k, 1 <= i <= 2k+1-r}; their disjoint
    union equals the sieve-built element set.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    odds = frozenset(2 * i - 1 for i in range(1, k + 1))
    staircase = frozenset(
        2 * i + (r - 1) * (2 * k + 3)
        for r in range(1, 2 * k + 1)
        for i in range(1, 2 * k + 2 - r)
    )
    return odds, staircase


def t_decomposition(k: int) -> tuple[frozenset[int], frozenset[int]]:
    """The two width-k triangles forming the truncated poset.

    Odd-bottom triangle {2i-1 + (r-1)(2k+3)} and even-bottom triangle
    {2i + (r-1)(2k+3)}, both over 1 <= r <= k, 1 <= i <= k+1-r.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    period = 2 * k + 3
    odd = frozenset(
        2 * i - 1 + (r - 1) * period for r in range(1, k + 1) for i in range(1, k + 2 - r)
    )
    even = frozenset(
        2 * i + (r - 1) * period for r in range(1, k + 1) for i in range(1, k + 2 - r)
    )
    return odd, even


@dataclass(frozen=True)
class OrderIdeal:
    """A down-closed subset of a specific poset."""

    poset: AnyPoset
    members: frozenset[int]

    def __contains__(self, value: int) -> bool:
        return value in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def is_order_ideal(poset: AnyPoset, members: frozenset[int]) -> bool:
    """Down-closed and contained in the poset."""
    if not members <= poset.elements:
        return False
    return all(poset.covers[x] <= members for x in members)


def is_nice(members: frozenset[int]) -> bool:
    """No two members differing by exactly 1."""
    return all(x + 1 not in members for x in members)


def iter_ideal_members(
    poset: AnyPoset,
    nice: bool = False,
    max_elements: int = MAX_IDEAL_ENUMERATION_ELEMENTS,
) -> Iterator[frozenset[int]]:
    """Stream every (nice) order ideal exactly once, as a frozenset.

    Depth-first extension over elements in increasing numeric order; an
    element may join only once everything it covers is in, which yields
    each ideal once with no dedup storage.  With ``nice`` the branch that
    would place x next to a member x-1 is pruned eagerly, so the walk
    visits only prefixes of nice ideals.
    """
    if len(poset) > max_elements:
        raise GuardError(
            f"ideal enumeration guard: {len(poset)} elements exceeds {max_elements}"
        )
    order = poset.sorted_elements
    covers = poset.covers
    n = len(order)
    current: set[int] = set()

    def rec(i: int) -> Iterator[frozenset[int]]:
        if i == n:
            yield frozenset(current)
            return
        x = order[i]
        yield from rec(i + 1)
        if covers[x] <= current and not (nice and (x - 1 in current or x + 1 in current)):
            current.add(x)
            yield from rec(i + 1)
            current.remove(x)

    yield from rec(0)


def enumerate_ideals(
    poset: AnyPoset, max_elements: int = MAX_IDEAL_ENUMERATION_ELEMENTS
) -> Iterator[OrderIdeal]:
    """Every order ideal of the poset, streamed."""
    for members in iter_ideal_members(poset, nice=False, max_elements=max_elements):
        yield OrderIdeal(poset, members)


def enumerate_nice_ideals(
    poset: AnyPoset, max_elements: int = MAX_IDEAL_ENUMERATION_ELEMENTS
) -> Iterator[OrderIdeal]:
    """Every nice order ideal of the poset, streamed."""
    for members in iter_ideal_members(poset, nice=True, max_elements=max_elements):
        yield OrderIdeal(poset, members)


@dataclass(frozen=True)
class IdealClassification:
    """Class membership of a nice ideal of the (2k+1, 2k+3) poset family.

    ``odd_index`` is the i for which 2i+1 is the smallest odd number in
    {1, 3, ..., 2k+1} missing from the ideal.  For ideals containing the
    top even element 2k+2, ``even_offset`` is the l for which
    2*odd_index + 2l is the largest rank-0 even element missing from the
    ideal (l = 0 when every even >= 2*odd_index + 2 is present).
    """

    k: int
    in_truncated: bool
    in_truncated_without_1: bool
    in_truncated_without_1_or_2k: bool
    contains_top_even: bool
    odd_index: int
    even_offset: int | None


def classify_ideal(ideal: OrderIdeal, k: int) -> IdealClassification:
    """Classify a nice ideal of the (2k+1, 2k+3) poset or its truncation."""
    poset = ideal.poset
    if isinstance(poset, TruncatedPoset):
        if poset.k != k:
            raise ValueError(f"ideal lives in {poset!r}, not the k={k} family")
    elif isinstance(poset, GapPoset):
        if (poset.s, poset.t) != (2 * k + 1, 2 * k + 3):
            raise ValueError(f"ideal lives in {poset!r}, not the k={k} family")
    else:
        raise ValueError(f"foreign poset {poset!r}")
    members = ideal.members
    if not is_order_ideal(poset, members):
        raise ValueError("not an order ideal of its poset")
    if not is_nice(members):
        raise ValueError("ideal is not nice")

    top_even = 2 * k + 2
    contains_top = top_even in members
    in_truncated = not contains_top

    odd_index = next(i for i in range(0, k + 1) if 2 * i + 1 not in members)
    even_offset = None
    if contains_top:
        if odd_index < 1:
            raise AssertionError("an ideal containing 2k+2 must contain 1")
        missing_evens = [e for e in range(2, 2 * k + 1, 2) if e not in members]
        largest_missing = max(missing_evens)
        even_offset = (largest_missing - 2 * odd_index) // 2
        if not 0 <= even_offset <= k - odd_index:
            raise AssertionError(f"even offset {even_offset} out of range at k={k}")

    return IdealClassification(
        k=k,
        in_truncated=in_truncated,
        in_truncated_without_1=in_truncated and 1 not in members,
        in_truncated_without_1_or_2k=(
            in_truncated and 1 not in members and 2 * k not in members
        ),
        contains_top_even=contains_top,
        odd_index=odd_index,
        even_offset=even_offset,
    )


def poset_to_dot(poset: AnyPoset) -> str:
    """Hasse diagram in DOT form, higher rank drawn above lower.

    One node per element labeled with its integer, one edge per cover;
    elements of equal rank share a layer.
    """
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=circle];", "  edge [dir=none];"]
    by_rank: dict[int, list[int]] = {}
    for x in poset.sorted_elements:
        by_rank.setdefault(poset.rank[x], []).append(x)
    for r in sorted(by_rank):
        row = " ".join(f'"{x}";' for x in by_rank[r])
        lines.append(f"  {{ rank=same; {row} }}")
    for x in poset.sorted_elements:
        for y in sorted(poset.covers[x]):
            lines.append(f'  "{y}" -> "{x}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_json_dict(poset: AnyPoset) -> dict:
    """JSON encoding {"s","t","elements","covers"}; adds "k" for truncations."""
    data: dict = {"s": poset.s, "t": poset.t}
    if isinstance(poset, TruncatedPoset):
        data["k"] = poset.k
    data["elements"] = list(poset.sorted_elements)
    data["covers"] = {str(x): sorted(poset.covers[x]) for x in poset.sorted_elements}
    return data
