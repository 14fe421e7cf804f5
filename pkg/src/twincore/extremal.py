"""Largest-size constructions among distinct-part simultaneous cores.

For the (2k+1, 2k+3) family the maximum-size core with distinct parts
comes from an explicit beta-set.  Two families of nice ideals are built,
indexed from a bottom element i and a chain length:

* ``beta_ideal(k, i, j)``: the triangular block
  {i + 2c + r(2k+3) : c >= 1, r >= 0, c + r <= K} with K = k - floor((i+1)/2),
  which is the full cone in the truncated poset over the bottoms
  i+2, ..., i+2K, together with the chain i, i + (2k+3), ...,
  i + (j-1)(2k+3).  The block alone (j = 0) has C(K+1, 2) elements and is
  the unique nice ideal of its isomorphism type over those bottoms.

* ``gamma_ideal(k, j)``: the full odd triangle (the i = 1 block with its
  maximal chain) together with the chain 2k+2, 2k+2 + (2k+3), ...,
  2k+2 + (j-1)(2k+3) grafted above the element 1.

Sizes obey closed forms anchored at the chainless block: with
B = C(K+1, 2) the block's cardinality,

    size(k, i, j) = size(k, i, 0) + i*j + C(j,2)*(2k+2) - j*B

and for the gamma family, with A the size at (i=1, j=k),

    size(k, i) = A + (2k+2)*C(i+1,2) - i*C(k+1,2).

The global maximum over all nice ideals is gamma_ideal(k, k), of size
k(k+1)(k+2)(5k+11)/24, which for odd s = 2k+1 equals
(s^2-1)(s+3)(5s+17)/384.  Both denominators always divide exactly, and the
division is checked, never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numbers import binomial, exact_div
from .partitions import BetaSet, Partition, partition_of_beta, size_from_beta
from .posets import OrderIdeal, gap_poset, is_nice, is_order_ideal, truncated_poset


def chainless_width(k: int, i: int) -> int:
    """K = k - floor((i+1)/2), the block width parameter for bottom i."""
    return k - (i + 1) // 2


@dataclass(frozen=True)
class ExtremalSpec:
    """Index bundle for the two extremal families, with bounds checking."""

    k: int
    family: str  # "beta" or "gamma"
    i: int | None
    j: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"need k >= 1, got k={self.k}")
        if self.family == "beta":
            if self.i is None or not 1 <= self.i <= 2 * self.k:
                raise ValueError(f"beta family needs 1 <= i <= 2k, got i={self.i}")
            top = chainless_width(self.k, self.i) + 1
            if not 0 <= self.j <= top:
                raise ValueError(
                    f"beta family needs 0 <= j <= {top} at (k={self.k}, i={self.i}), "
                    f"got j={self.j}"
                )
        elif self.family == "gamma":
            if self.i is not None:
                raise ValueError("gamma family takes no i index")
            if not 1 <= self.j <= self.k:
                raise ValueError(f"gamma family needs 1 <= j <= k, got j={self.j}")
        else:
            raise ValueError(f"unknown family {self.family!r}")


def beta_block(k: int, i: int) -> frozenset[int]:
    """The chainless block {i + 2c + r(2k+3) : c >= 1, r >= 0, c + r <= K}."""
    ExtremalSpec(k, "beta", i, 0)
    width = chainless_width(k, i)
    period = 2 * k + 3
    return frozenset(
        i + 2 * c + r * period
        for c in range(1, width + 1)
        for r in range(0, width - c + 1)
    )


def beta_ideal(k: int, i: int, j: int) -> OrderIdeal:
    """Block plus length-j chain over bottom i; a nice ideal of the truncation."""
    ExtremalSpec(k, "beta", i, j)
    period = 2 * k + 3
    members = beta_block(k, i) | frozenset(i + p * period for p in range(j))
    home = truncated_poset(k)
    if not (is_order_ideal(home, members) and is_nice(members)):
        raise AssertionError(f"beta ideal construction failed validation at {(k, i, j)}")
    return OrderIdeal(home, members)


def gamma_ideal(k: int, j: int) -> OrderIdeal:
    """Full odd triangle plus length-j chain over 2k+2; a nice ideal of the gap poset."""
    ExtremalSpec(k, "gamma", None, j)
    period = 2 * k + 3
    members = beta_ideal(k, 1, k).members | frozenset(
        2 * k + 2 + p * period for p in range(j)
    )
    home = gap_poset(2 * k + 1, 2 * k + 3)
    if not (is_order_ideal(home, members) and is_nice(members)):
        raise AssertionError(f"gamma ideal construction failed validation at {(k, j)}")
    return OrderIdeal(home, members)


def lambda_size(k: int, i: int, j: int) -> int:
    """Closed-form size of the beta-family partition, anchored at the block."""
    ExtremalSpec(k, "beta", i, j)
    width = chainless_width(k, i)
    anchor = size_from_beta(BetaSet(beta_block(k, i)))
    return (
        anchor
        + i * j
        + binomial(j, 2) * (2 * k + 2)
        - j * binomial(width + 1, 2)
    )


def mu_size(k: int, i: int) -> int:
    """Closed-form size of the gamma-family partition."""
    ExtremalSpec(k, "gamma", None, i)
    anchor = lambda_size(k, 1, k)
    return anchor + (2 * k + 2) * binomial(i + 1, 2) - i * binomial(k + 1, 2)


def max_partition(k: int) -> Partition:
    """The unique largest (2k+1, 2k+3)-core partition with distinct parts."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if k == 0:
        return Partition(())
    return partition_of_beta(BetaSet(gamma_ideal(k, k).members))


def largest_size(k: int) -> int:
    """k(k+1)(k+2)(5k+11)/24, the largest size in the (2k+1, 2k+3) family."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    return exact_div(k * (k + 1) * (k + 2) * (5 * k + 11), 24, "largest size")


def largest_size_from_s(s: int) -> int:
    """(s^2-1)(s+3)(5s+17)/384 for odd s; equals largest_size((s-1)/2)."""
    if s < 1 or s % 2 == 0:
        raise ValueError(f"need odd s >= 1, got {s}")
    return exact_div((s * s - 1) * (s + 3) * (5 * s + 17), 384, "largest size by s")
