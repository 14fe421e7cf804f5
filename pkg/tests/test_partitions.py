from collections import Counter

import pytest
from hypothesis import given, strategies as st

from twincore.partitions import (
    BetaSet,
    Partition,
    beta_set,
    brute_force_distinct_cores,
    has_distinct_parts,
    has_distinct_parts_via_beta,
    hook_length_grid,
    is_simultaneous_core,
    is_t_core,
    is_t_core_via_hooks,
    partition_of_beta,
    size_from_beta,
)


@st.composite
def partitions(draw, max_parts=12, max_part=30):
    m = draw(st.integers(min_value=0, max_value=max_parts))
    parts = draw(st.lists(st.integers(1, max_part), min_size=m, max_size=m))
    return Partition(tuple(sorted(parts, reverse=True)))


@st.composite
def beta_sets(draw, max_value=60, max_size=12):
    hooks = draw(st.sets(st.integers(1, max_value), max_size=max_size))
    return BetaSet(hooks)


def test_partition_canonical_form():
    assert Partition((3, 2, 0, 0)).parts == (3, 2)
    assert Partition(()).parts == ()
    assert Partition((5, 5, 1)).size == 11
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    with pytest.raises(ValueError):
        Partition((2, 0, 1))


def test_beta_set_examples():
    assert beta_set(Partition((5, 3, 3, 1))).hooks == {8, 5, 4, 1}
    assert beta_set(Partition(())).hooks == frozenset()
    assert beta_set(Partition((9, 5, 4, 2, 1))).hooks == {13, 8, 6, 3, 1}


def test_beta_set_is_first_hook_column():
    for parts in [(5, 3, 3, 1), (9, 5, 4, 2, 1), (2, 1), (7,)]:
        p = Partition(parts)
        first_column = [row[0] for row in hook_length_grid(p)]
        assert sorted(beta_set(p).hooks, reverse=True) == first_column


def test_partition_of_beta_examples():
    assert partition_of_beta(BetaSet({8, 5, 4, 1})) == Partition((5, 3, 3, 1))
    assert partition_of_beta(BetaSet()) == Partition(())
    assert partition_of_beta(BetaSet({1, 4})) == Partition((3, 1))
    assert beta_set(Partition((3, 1))).hooks == {1, 4}


def test_size_from_beta_examples():
    assert size_from_beta(BetaSet({8, 5, 4, 1})) == 12 == Partition((5, 3, 3, 1)).size
    assert size_from_beta(BetaSet()) == 0
    assert size_from_beta(BetaSet({1, 3, 6, 8, 13})) == 21 == Partition((9, 5, 4, 2, 1)).size


def test_hook_length_grid_examples():
    assert hook_length_grid(Partition((5, 3, 3, 1))) == [
        [8, 6, 5, 2, 1],
        [5, 3, 2],
        [4, 2, 1],
        [1],
    ]
    assert hook_length_grid(Partition((1,))) == [[1]]
    assert hook_length_grid(Partition((2, 1))) == [[3, 1], [1]]


def test_core_examples():
    assert is_t_core(Partition((2, 1)), 3) is False
    assert is_t_core(Partition(()), 7) is True
    assert is_t_core(Partition((3, 1)), 3) is True
    assert is_t_core(Partition((3, 1)), 5) is True
    assert is_simultaneous_core(Partition((3, 1)), 3, 5) is True
    assert is_simultaneous_core(Partition((2, 1)), 3, 5) is False
    assert is_simultaneous_core(Partition(()), 13, 15) is True
    with pytest.raises(ValueError):
        is_t_core(Partition((1,)), 0)
    with pytest.raises(ValueError):
        is_simultaneous_core(Partition(()), 4, 4)


def test_distinct_parts_examples():
    assert has_distinct_parts(Partition((5, 3, 3, 1))) is False
    assert has_distinct_parts(Partition(())) is True
    assert has_distinct_parts(Partition((9, 5, 4, 2, 1))) is True


@given(partitions())
def test_beta_round_trip(p):
    assert partition_of_beta(beta_set(p)) == p


@given(beta_sets())
def test_beta_round_trip_from_sets(b):
    assert beta_set(partition_of_beta(b)) == b


@given(partitions())
def test_size_identity(p):
    assert size_from_beta(beta_set(p)) == p.size


@given(partitions(), st.integers(2, 9))
def test_core_test_agreement(p, t):
    assert is_t_core(p, t) == is_t_core_via_hooks(p, t)


@given(partitions())
def test_distinct_parts_agreement(p):
    assert has_distinct_parts(p) == has_distinct_parts_via_beta(p)


def test_brute_force_small():
    assert brute_force_distinct_cores(3, 5, 10) == [
        Partition(()),
        Partition((1,)),
        Partition((2,)),
        Partition((3, 1)),
    ]
    assert brute_force_distinct_cores(3, 5, 0) == [Partition(())]


def test_brute_force_five_seven():
    cores = brute_force_distinct_cores(5, 7, 21)
    assert len(cores) == 16
    assert max(p.size for p in cores) == 21
    assert all(has_distinct_parts(p) and is_simultaneous_core(p, 5, 7) for p in cores)
    assert cores == sorted(cores)  # lexicographic order


def test_brute_force_rejects_non_coprime():
    with pytest.raises(ValueError):
        brute_force_distinct_cores(4, 6, 5)
    with pytest.raises(ValueError):
        brute_force_distinct_cores(3, 3, 5)


def test_json_encodings():
    p = Partition((5, 3, 3, 1))
    assert p.to_json_dict() == {"parts": [5, 3, 3, 1]}
    assert Partition.from_json_dict(p.to_json_dict()) == p
    b = beta_set(p)
    assert b.to_json_dict() == {"hooks": [8, 5, 4, 1]}
    assert BetaSet.from_json_dict(b.to_json_dict()) == b


def test_brute_force_respects_cap():
    sizes = Counter(p.size for p in brute_force_distinct_cores(3, 5, 3))
    assert set(sizes) <= {0, 1, 2, 3}
