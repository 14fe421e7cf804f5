import pytest

from twincore.extremal import (
    ExtremalSpec,
    beta_block,
    beta_ideal,
    chainless_width,
    gamma_ideal,
    lambda_size,
    largest_size,
    largest_size_from_s,
    max_partition,
    mu_size,
)
from twincore.partitions import BetaSet, Partition, size_from_beta
from twincore.posets import (
    gap_poset,
    is_nice,
    is_order_ideal,
    iter_ideal_members,
    truncated_poset,
)


def nice_ideal_sizes(k):
    poset = gap_poset(2 * k + 1, 2 * k + 3)
    return {m: size_from_beta(BetaSet(m)) for m in iter_ideal_members(poset, nice=True)}


def test_beta_ideal_examples():
    assert beta_ideal(1, 1, 1).members == {1}
    assert beta_ideal(2, 1, 2).members == {1, 3, 8}
    assert beta_ideal(1, 1, 0).members == frozenset()  # width-0 block is empty


def test_beta_ideal_matches_filled_dots_diagram():
    # k=6, bottom 4, chain length 3: block over evens 6..12 plus chain 4, 19, 34
    expected = {4, 6, 8, 10, 12, 19, 21, 23, 25, 34, 36, 38, 51}
    assert beta_ideal(6, 4, 3).members == expected


def test_gamma_ideal_examples():
    assert gamma_ideal(1, 1).members == {1, 4}
    assert gamma_ideal(2, 2).members == {1, 3, 6, 8, 13}
    assert gamma_ideal(2, 1).members == {1, 3, 6, 8}


def test_constructions_validate_for_all_legal_indices():
    for k in range(1, 7):
        trunc = truncated_poset(k)
        full = gap_poset(2 * k + 1, 2 * k + 3)
        for i in range(1, 2 * k + 1):
            for j in range(0, chainless_width(k, i) + 2):
                ideal = beta_ideal(k, i, j)
                assert is_order_ideal(trunc, ideal.members)
                assert is_nice(ideal.members)
        for j in range(1, k + 1):
            ideal = gamma_ideal(k, j)
            assert is_order_ideal(full, ideal.members)
            assert is_nice(ideal.members)
            assert 2 * k + 2 in ideal.members


def test_index_bounds_are_enforced():
    with pytest.raises(ValueError):
        beta_ideal(2, 0, 1)
    with pytest.raises(ValueError):
        beta_ideal(2, 5, 1)
    with pytest.raises(ValueError):
        beta_ideal(2, 1, 3)  # j max is chainless_width(2,1)+1 = 2
    with pytest.raises(ValueError):
        gamma_ideal(2, 0)
    with pytest.raises(ValueError):
        gamma_ideal(2, 3)
    with pytest.raises(ValueError):
        ExtremalSpec(2, "delta", 1, 1)
    with pytest.raises(ValueError):
        ExtremalSpec(2, "gamma", 1, 1)  # gamma takes no i


def test_lambda_size_examples():
    assert lambda_size(1, 1, 1) == 1 == Partition((1,)).size
    assert lambda_size(1, 2, 1) == 2 == Partition((2,)).size
    assert lambda_size(2, 2, 2) - lambda_size(2, 1, 2) == 2 * 3 // 2  # k(k+1)/2
    assert lambda_size(2, 1, 2) == size_from_beta(BetaSet({1, 3, 8})) == 9


def test_mu_size_examples():
    assert mu_size(1, 1) == 4 == Partition((3, 1)).size
    assert mu_size(2, 2) == 21 == Partition((9, 5, 4, 2, 1)).size
    assert mu_size(2, 1) == size_from_beta(BetaSet({1, 3, 6, 8})) == 12


def test_closed_forms_match_direct_evaluation():
    for k in range(1, 7):
        for i in range(1, 2 * k + 1):
            for j in range(0, chainless_width(k, i) + 2):
                direct = size_from_beta(BetaSet(beta_ideal(k, i, j).members))
                assert lambda_size(k, i, j) == direct, (k, i, j)
        for i in range(1, k + 1):
            direct = size_from_beta(BetaSet(gamma_ideal(k, i).members))
            assert mu_size(k, i) == direct, (k, i)


def test_chain_maximum_dominates_strictly():
    for k in range(1, 7):
        for i in range(1, 2 * k + 1):
            jmax = chainless_width(k, i) + 1
            for j in range(1, jmax + 1):
                assert lambda_size(k, i, j) <= lambda_size(k, i, jmax)
                if j < jmax:
                    assert lambda_size(k, i, j) < lambda_size(k, i, jmax)
        for i in range(1, k + 1):
            assert mu_size(k, i) <= mu_size(k, k)
            if i < k:
                assert mu_size(k, i) < mu_size(k, k)
        assert mu_size(k, k) > lambda_size(k, 2, k)


def test_gap_between_families():
    for k in range(1, 11):
        assert mu_size(k, k) - lambda_size(k, 1, k) == k * (k + 1) * (k + 2) // 2


def test_shift_identity():
    # maxing out the chain at bottom i reproduces the chainless block at i-2
    for k in range(1, 7):
        for i in range(3, 2 * k + 1):
            jmax = chainless_width(k, i) + 1
            assert beta_ideal(k, i, jmax).members == beta_block(k, i - 2), (k, i)


def test_cross_bottom_strict_inequality():
    # |lambda(i, jmax)| > |lambda(i+2, jmax')| holds from k=2 on; k=1 has no
    # valid bottom i <= 2k-2 so the statement is vacuous there.
    assert [i for i in range(1, 2 * 1 - 1)] == []
    for k in range(2, 7):
        for i in range(1, 2 * k - 1):
            jmax = chainless_width(k, i) + 1
            assert lambda_size(k, i, jmax) > lambda_size(k, i + 2, jmax - 1), (k, i)


def test_max_partition_small():
    assert max_partition(0) == Partition(())
    assert max_partition(1) == Partition((3, 1))
    assert max_partition(2) == Partition((9, 5, 4, 2, 1))


def test_max_partition_is_unique_argmax():
    for k in range(5):
        sizes = nice_ideal_sizes(k)
        best = max(sizes.values())
        argmax = [m for m, v in sizes.items() if v == best]
        assert best == largest_size(k)
        assert len(argmax) == 1
        if k >= 1:
            assert argmax[0] == gamma_ideal(k, k).members
        else:
            assert argmax[0] == frozenset()


def test_largest_size_values():
    assert [largest_size(k) for k in range(5)] == [0, 4, 21, 65, 155]
    assert largest_size_from_s(3) == 4
    assert largest_size_from_s(5) == 21
    assert largest_size_from_s(1) == 0


def test_largest_size_forms_agree():
    for k in range(31):
        assert largest_size(k) == largest_size_from_s(2 * k + 1)


def test_largest_size_rejects_even_s():
    with pytest.raises(ValueError):
        largest_size_from_s(4)
    with pytest.raises(ValueError):
        largest_size(-1)
