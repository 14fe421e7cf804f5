"""Recursive bijections between order ideals and lattice paths.

Ladder map (``phi``)
    Order ideals of the ladder poset on the gaps of <t, t+1> correspond to
    Dyck paths of order t.  Write every element as x = j + r*(t+1), where r
    is its rank and 1 <= j <= t-1-r; the element then dominates exactly the
    bottom elements j, ..., j+r.  Let i be the smallest bottom element
    missing from the ideal (i = t when none is missing).  Everything in the
    ideal is then either one of 1..i-1, an element of rank >= 1 dominating
    only bottoms < i, or an element dominating only bottoms > i, and the
    two side blocks are ladder ideals in their own right under the affine
    relabelings

        left  (j + r*(t+1), r >= 1, j+r <= i-1)  ->  j + (r-1)*i
        right (j + r*(t+1), j >= i+1)            ->  (j-i) + r*(t-i+1).

    Then phi(I) = U phi(left) D phi(right), with phi of the empty 0-ladder
    the empty path.  The inverse peels the first-return decomposition
    U P1 D P2 and undoes the relabelings.

Truncation map (``psi``)
    Nice ideals of the truncated poset (parameter k) avoiding the element 1
    correspond to free Dyck paths of order k.  Elements are x = b + r*(2k+3)
    with bottom value 1 <= b <= 2k; an element dominates the bottoms
    b, b+2, ..., b+2r of its own parity.  Two cases, split on the largest
    even bottom:

    * 2k in I: let 2l be the largest even bottom missing (l = 0 when all of
      2, 4, ..., 2k are present).  The evens 2l+2, ..., 2k are forced; the
      even-triangle part above them maps onto a ladder ideal of width
      k-l-1, and everything supported on bottoms <= 2l maps onto a smaller
      truncated instance:

          even block (b = 2i, r >= 1, i >= l+1)  ->  (i-l) + (r-1)*(k-l+1)
          low block  (b + 2r <= 2l)              ->  b + r*(2l+3)

      psi(I) = psi(low) . phi(even block).

    * 2k not in I: let 2l be the largest even bottom present (l = 0 when no
      even is present).  Niceness empties the odd bottom 2l+1, the odd
      triangle over 2l+3, ..., 2k-1 maps onto a width k-l-1 ladder, and the
      low block maps as before:

          odd block (b = 2i-1, i >= l+2)  ->  (i-l-1) + r*(k-l+1)

      psi(I) = psi(low) . reverse(phi(odd block)).

    The path ends with a down step exactly when 2k is in the ideal.  The
    inverse splits a down-ending path at the earliest return to height 0
    whose suffix stays weakly above the axis (that suffix is the Dyck image
    of the even block), and an up-ending path at the earliest return whose
    suffix stays weakly below (its reverse is the Dyck image of the odd
    block).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import GuardError
from .numbers import catalan
from .paths import (
    EMPTY_PATH,
    LatticePath,
    first_return_split,
    is_dyck,
    is_free_dyck,
    reverse_path,
)
from .posets import (
    GapPoset,
    OrderIdeal,
    TruncatedPoset,
    enumerate_ideals,
    gap_poset,
    is_nice,
    is_order_ideal,
    truncated_poset,
)

MAX_MARKED_ENUMERATION = 7

_UP = LatticePath(1, 1)
_DOWN = LatticePath(1, 0)


# ---------------------------------------------------------------------------
# Ladder ideals <-> Dyck paths
# ---------------------------------------------------------------------------

def _ladder_coords(t: int, x: int) -> tuple[int, int]:
    """Rank r and offset j with x = j + r*(t+1), 1 <= j <= t-1-r."""
    r, j = divmod(x - 1, t + 1)
    return r, j + 1


def smallest_missing_bottom(t: int, members: frozenset[int]) -> int:
    """Smallest of 1..t-1 not in the ideal, or t when all are present."""
    return next((i for i in range(1, t) if i not in members), t)


def decompose_ladder_ideal(
    t: int, members: frozenset[int]
) -> tuple[int, frozenset[int], frozenset[int]]:
    """Split a width t-1 ladder ideal into (i, left, right) blocks.

    ``left`` is an ideal of the (i-1)-ladder, ``right`` of the (t-i)-ladder.
    """
    i = smallest_missing_bottom(t, members)
    left, right = set(), set()
    fixed = 0
    for x in members:
        r, j = _ladder_coords(t, x)
        if r == 0 and j < i:
            fixed += 1
        elif r >= 1 and j + r <= i - 1:
            left.add(j + (r - 1) * i)
        elif j >= i + 1:
            right.add((j - i) + r * (t - i + 1))
        else:
            raise AssertionError(f"element {x} dominates the missing bottom {i}")
    if fixed != i - 1:
        raise AssertionError(f"ideal misses a bottom below {i}")
    return i, frozenset(left), frozenset(right)


def recompose_ladder_ideal(
    t: int, i: int, left: frozenset[int], right: frozenset[int]
) -> frozenset[int]:
    """Inverse of ``decompose_ladder_ideal``."""
    members = set(range(1, i))
    for y in left:
        r, j = _ladder_coords(i - 1, y)
        members.add(j + (r + 1) * (t + 1))
    for y in right:
        r, j = _ladder_coords(t - i, y)
        members.add((j + i) + r * (t + 1))
    return frozenset(members)


def _phi(t: int, members: frozenset[int]) -> LatticePath:
    if t == 0:
        return EMPTY_PATH
    i, left, right = decompose_ladder_ideal(t, members)
    return _UP + _phi(i - 1, left) + _DOWN + _phi(t - i, right)


def _phi_inverse(t: int, p: LatticePath) -> frozenset[int]:
    if t == 0:
        return frozenset()
    p1, p2 = first_return_split(p)
    i = len(p1) // 2 + 1
    return recompose_ladder_ideal(t, i, _phi_inverse(i - 1, p1), _phi_inverse(t - i, p2))


def phi(ideal: OrderIdeal) -> LatticePath:
    """Dyck path of order t attached to an ideal of the (t, t+1) gap poset."""
    poset = ideal.poset
    if not isinstance(poset, GapPoset) or poset.t != poset.s + 1:
        raise ValueError(f"phi needs an ideal of a (t, t+1) gap poset, got {poset!r}")
    if not is_order_ideal(poset, ideal.members):
        raise ValueError("not an order ideal of its poset")
    return _phi(poset.s, ideal.members)


def phi_inverse(p: LatticePath) -> OrderIdeal:
    """The ideal mapping to a given nonempty Dyck path."""
    if len(p) == 0:
        raise ValueError("the empty path has no ladder of its own; use order >= 1")
    if not is_dyck(p):
        raise ValueError(f"{p.text} is not a Dyck path")
    t = len(p) // 2
    return OrderIdeal(gap_poset(t, t + 1), _phi_inverse(t, p))


# ---------------------------------------------------------------------------
# Truncated-poset ideals <-> free Dyck paths
# ---------------------------------------------------------------------------

def _truncated_coords(k: int, x: int) -> tuple[int, int]:
    """Rank r and bottom value b with x = b + r*(2k+3), 1 <= b <= 2k."""
    r, b = divmod(x, 2 * k + 3)
    return r, b


def decompose_truncated_ideal(
    k: int, members: frozenset[int]
) -> tuple[bool, int, frozenset[int], frozenset[int]]:
    """Split a nice 1-avoiding truncated ideal into (ends_down, l, block, low).

    ``block`` is a ladder ideal of width k-l-1 (the even triangle above the
    forced evens when 2k is present, the odd triangle over 2l+3.. when not);
    ``low`` is a nice 1-avoiding ideal of the l-truncation.
    """
    ends_down = 2 * k in members
    if ends_down:
        missing = [j for j in range(1, k + 1) if 2 * j not in members]
        low_limit = missing[-1] if missing else 0
    else:
        present = [j for j in range(1, k + 1) if 2 * j in members]
        low_limit = present[-1] if present else 0
    l = low_limit
    ladder_width = k - l + 1
    block, low = set(), set()
    fixed = 0
    for x in members:
        r, b = _truncated_coords(k, x)
        if b + 2 * r <= 2 * l:
            low.add(b + r * (2 * l + 3))
        elif ends_down and b % 2 == 0 and r == 0 and b >= 2 * l + 2:
            fixed += 1
        elif ends_down and b % 2 == 0 and r >= 1 and b // 2 >= l + 1:
            block.add((b // 2 - l) + (r - 1) * ladder_width)
        elif not ends_down and b % 2 == 1 and (b + 1) // 2 >= l + 2:
            block.add(((b + 1) // 2 - l - 1) + r * ladder_width)
        else:
            raise AssertionError(f"element {x} falls outside every block (k={k}, l={l})")
    if ends_down and fixed != k - l:
        raise AssertionError(f"forced evens 2l+2..2k incomplete (k={k}, l={l})")
    return ends_down, l, frozenset(block), frozenset(low)


def recompose_truncated_ideal(
    k: int, ends_down: bool, l: int, block: frozenset[int], low: frozenset[int]
) -> frozenset[int]:
    """Inverse of ``decompose_truncated_ideal``."""
    period = 2 * k + 3
    ladder_width = k - l + 1
    members: set[int] = set()
    for y in low:
        r, b = divmod(y, 2 * l + 3)
        members.add(b + r * period)
    if ends_down:
        members.update(range(2 * l + 2, 2 * k + 1, 2))
        for y in block:
            r, j = _ladder_coords(k - l, y)
            members.add(2 * (j + l) + (r + 1) * period)
    else:
        for y in block:
            r, j = _ladder_coords(k - l, y)
            members.add(2 * (j + l) + 1 + r * period)
    return frozenset(members)


def _psi(k: int, members: frozenset[int]) -> LatticePath:
    if k == 0:
        return EMPTY_PATH
    ends_down, l, block, low = decompose_truncated_ideal(k, members)
    tail = _phi(k - l, block)
    if not ends_down:
        tail = reverse_path(tail)
    return _psi(l, low) + tail


def _split_suffix(p: LatticePath, below: bool) -> int:
    """Earliest even split m: height 0 there and the suffix stays on one side."""
    heights = p.heights()
    suffix_extreme = [0] * (len(p) + 1)
    acc = heights[-1]
    for idx in range(len(p), -1, -1):
        acc = max(acc, heights[idx]) if below else min(acc, heights[idx])
        suffix_extreme[idx] = acc
    for m in range(0, len(p), 2):
        if heights[m] == 0:
            rel = suffix_extreme[m] - heights[m]
            if (below and rel <= 0) or (not below and rel >= 0):
                return m
    raise AssertionError("no valid split found for a balanced path")


def _psi_inverse(k: int, p: LatticePath) -> frozenset[int]:
    if k == 0:
        return frozenset()
    last_is_up = bool(p.bits >> (len(p) - 1) & 1)
    ends_down = not last_is_up
    if ends_down:
        m = _split_suffix(p, below=False)
        suffix = p[m:]
    else:
        m = _split_suffix(p, below=True)
        suffix = reverse_path(p[m:])
    if m > 0:
        prefix_last_up = bool(p.bits >> (m - 1) & 1)
        assert prefix_last_up is ends_down, "split prefix ends with the wrong step"
    block = _phi_inverse(len(suffix) // 2, suffix)
    l = m // 2
    low = _psi_inverse(l, p[:m])
    return recompose_truncated_ideal(k, ends_down, l, block, low)


def psi(ideal: OrderIdeal) -> LatticePath:
    """Free Dyck path of order k attached to a nice 1-avoiding ideal.

    Ends with a down step exactly when the ideal contains 2k.
    """
    poset = ideal.poset
    if not isinstance(poset, TruncatedPoset):
        raise ValueError(f"psi needs an ideal of a truncated poset, got {poset!r}")
    members = ideal.members
    if 1 in members:
        raise ValueError("psi is defined only for ideals avoiding the element 1")
    if not is_nice(members):
        raise ValueError("psi needs a nice ideal")
    if not is_order_ideal(poset, members):
        raise ValueError("not an order ideal of its poset")
    return _psi(poset.k, members)


def psi_inverse(p: LatticePath) -> OrderIdeal:
    """The nice 1-avoiding truncated ideal mapping to a free Dyck path."""
    if not is_free_dyck(p):
        raise ValueError(f"{p.text} is not balanced (a free Dyck path)")
    k = len(p) // 2
    return OrderIdeal(truncated_poset(k), _psi_inverse(k, p))


# ---------------------------------------------------------------------------
# Marked ideals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MarkedIdeal:
    """A ladder ideal whose smallest missing bottom is i >= 2, with one
    marked value strictly below i."""

    ideal: OrderIdeal
    mark: int

    def __post_init__(self):
        poset = self.ideal.poset
        if not isinstance(poset, GapPoset) or poset.t != poset.s + 1:
            raise ValueError("marked ideals live in (t, t+1) gap posets")
        i = smallest_missing_bottom(poset.s, self.ideal.members)
        if i < 2:
            raise ValueError("the smallest missing bottom must be at least 2")
        if not 1 <= self.mark <= i - 1:
            raise ValueError(f"mark {self.mark} must lie in 1..{i - 1}")


def enumerate_marked_ideals(t: int) -> Iterator[MarkedIdeal]:
    """All marked ideals of the (t, t+1) gap poset."""
    poset = gap_poset(t, t + 1)
    for ideal in enumerate_ideals(poset):
        i = smallest_missing_bottom(t, ideal.members)
        for mark in range(1, i):
            yield MarkedIdeal(ideal, mark)


def marked_ideal_count(t: int, max_t: int = MAX_MARKED_ENUMERATION) -> int:
    """Number of marked ideals of the (t+1, t+2) gap poset.

    Enumerates them and checks the count against sum_{i=1..t} i c_i c_{t-i};
    a mismatch is an internal error.
    """
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    if t > max_t:
        raise GuardError(f"marked-ideal enumeration guard: t={t} exceeds {max_t}")
    enumerated = sum(1 for _ in enumerate_marked_ideals(t + 1))
    formula = sum(i * catalan(i) * catalan(t - i) for i in range(1, t + 1))
    if enumerated != formula:
        raise AssertionError(
            f"marked-ideal count mismatch at t={t}: {enumerated} != {formula}"
        )
    return enumerated
