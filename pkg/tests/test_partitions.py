from itertools import product

import pytest
from hypothesis import given, strategies as st

from multisym.errors import InvalidMultiPartition, LengthExceedsUniverse, ShapeMismatch
from multisym.indexing import Context, flat_index, q
from multisym.partitions import (
    MultiPartition,
    Partition,
    count_partitions_at_most,
    enumerate_multipartitions,
    parse_levels,
    require_valid,
    shift_by_staircase,
    staircase,
    staircase_closed_form,
    unshift,
    validate_multipartition,
)


def brute_count(r, parts):
    """Count weakly decreasing tuples of length `parts` summing to r."""
    if parts == 0:
        return int(r == 0)
    return sum(
        1
        for t in product(range(r + 1), repeat=parts)
        if sum(t) == r and all(a >= b for a, b in zip(t, t[1:]))
    )


def test_partition_normalises_trailing_zeros():
    assert Partition((1, 2 - 1, 0, 0)) == Partition((1, 1))
    assert Partition((3, 1)).weight == 4
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_validate_examples():
    ctx = Context(1, 2, 1)
    assert validate_multipartition(MultiPartition.from_levels(ctx, [[3], [2, 1]]), strict=True)
    assert not validate_multipartition(MultiPartition.from_levels(ctx, [[1], [2, 1]]))
    ex2 = MultiPartition.from_levels(Context(2, 2, 1), [[3, 2], [2, 1, 1, 1]])
    assert validate_multipartition(ex2)
    assert not validate_multipartition(ex2, strict=True)


def test_require_valid_names_position():
    mp = MultiPartition.from_levels(Context(1, 2, 1), [[1], [2, 1]])
    with pytest.raises(InvalidMultiPartition) as info:
        require_valid(mp)
    assert info.value.position == 2
    assert "a[1;1]" in str(info.value)


def test_shape_errors():
    with pytest.raises(ShapeMismatch):
        MultiPartition.from_levels(Context(1, 2, 1), [[3, 1], [1]])
    with pytest.raises(ShapeMismatch):
        MultiPartition.from_levels(Context(1, 2, 1), [[3], [1], [1]])
    with pytest.raises(LengthExceedsUniverse):
        MultiPartition.from_flat(Context(1, 2, 1), (3, 2, 1, 1))


def test_levels_view_and_text():
    mp = MultiPartition.from_levels(Context(1, 2, 2), [[3], [2, 1], [1, 1, 1, 1]])
    assert mp.levels == [(3,), (2, 1), (1, 1, 1, 1)]
    assert mp.to_text() == "[[3],[2,1],[1,1,1,1]]"
    assert parse_levels(mp.to_text()) == [[3], [2, 1], [1, 1, 1, 1]]
    assert mp.weight == 10 and mp.length == 7


@pytest.mark.parametrize(
    "ctx,expected",
    [(Context(1, 2, 1), (2, 1, 0)), (Context(2, 2, 1), (5, 4, 3, 2, 1, 0)), (Context(1, 1, 0), (0,))],
)
def test_staircase_examples(ctx, expected):
    assert staircase(ctx).values == expected


@pytest.mark.parametrize("m,n,k", list(product(range(1, 5), range(1, 5), range(0, 5))))
def test_staircase_closed_form_matches_flat_rule(m, n, k):
    ctx = Context(m, n, k)
    values = staircase(ctx).values
    assert sorted(values) == list(range(ctx.size))
    for lab in ctx.labels:
        assert staircase_closed_form(ctx, lab) == m * q(n, k) - flat_index(ctx, lab)
        assert values[flat_index(ctx, lab) - 1] == staircase_closed_form(ctx, lab)


def test_shift_examples():
    lam = shift_by_staircase(MultiPartition.from_flat(Context(1, 2, 1), (3, 2, 1)))
    assert lam.values == (5, 3, 1)
    lam = shift_by_staircase(MultiPartition.from_flat(Context(2, 2, 1), (3, 2, 2, 1, 1, 1)))
    assert lam.values == (8, 6, 5, 3, 2, 1)
    ctx = Context(1, 2, 2)
    assert shift_by_staircase(MultiPartition.zero(ctx)).values == staircase(ctx).values


@given(st.lists(st.integers(0, 9), min_size=0, max_size=7))
def test_shift_is_strict_and_invertible(raw):
    ctx = Context(1, 2, 2)
    ell = MultiPartition.from_flat(ctx, sorted(raw, reverse=True))
    lam = shift_by_staircase(ell)
    assert all(a > b for a, b in zip(lam.values, lam.values[1:]))
    assert unshift(lam) == ell


def test_count_partitions_examples():
    assert count_partitions_at_most(4, 2) == 3
    assert count_partitions_at_most(0, 7) == 1
    assert count_partitions_at_most(3, 3) == count_partitions_at_most(3, 5) == 3


@pytest.mark.parametrize("r,parts", [(r, p) for r in range(0, 9) for p in range(0, 6)])
def test_count_matches_brute_force(r, parts):
    assert count_partitions_at_most(r, parts) == brute_count(r, parts)


def test_enumerate_examples():
    items = enumerate_multipartitions(Context(1, 2, 1), 2)
    assert [mp.values for mp in items] == [(2, 0, 0), (1, 1, 0)]
    assert [mp.values for mp in enumerate_multipartitions(Context(2, 2, 1), 0)] == [(0,) * 6]
    assert [mp.values for mp in enumerate_multipartitions(Context(1, 1, 0), 5)] == [(5,)]


@pytest.mark.parametrize("ctx", [Context(1, 1, 0), Context(1, 2, 1), Context(2, 1, 1), Context(1, 1, 7), Context(2, 3, 1)])
def test_enumeration_count(ctx):
    for r in range(11):
        items = enumerate_multipartitions(ctx, r)
        assert len(items) == count_partitions_at_most(r, ctx.size)
        assert len(set(items)) == len(items)
        assert all(validate_multipartition(mp) and mp.weight == r for mp in items)
