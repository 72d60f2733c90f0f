from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from riordan.faadibruno import (
    composition_sum,
    compositions,
    multinomial,
    partition_sum,
    partitions_by_parts,
)

small = st.lists(st.integers(min_value=-2, max_value=2).map(Fraction), min_size=9, max_size=9)


def test_composition_listing_order():
    assert list(compositions(4, 4)) == [
        (4,),
        (1, 3), (2, 2), (3, 1),
        (1, 1, 2), (1, 2, 1), (2, 1, 1),
        (1, 1, 1, 1),
    ]
    assert list(compositions(4, 1)) == [(4,)]
    assert (2, 2) in compositions(4, 2)
    assert (1, 1, 2) not in compositions(4, 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_composition_counts(n):
    assert len(compositions(n, n)) == 2 ** (n - 1)
    for m in range(1, n + 1):
        assert len(compositions(n, m)) == sum(comb(n - 1, k - 1) for k in range(1, m + 1))


def test_composition_argument_checks():
    with pytest.raises(ValueError):
        compositions(0, 1)
    with pytest.raises(ValueError):
        compositions(3, 0)


def test_empty_index_set_sums_to_zero():
    assert composition_sum([1, 1, 1], [0, 1, 1], 2, 0) == 0


def test_partitions_frequency_form():
    assert sorted(partitions_by_parts(4, 2)) == [(0, 2, 0, 0), (1, 0, 1, 0)]
    assert partitions_by_parts(5, 5) == [(5, 0, 0, 0, 0)]
    assert multinomial(3, (1, 2)) == 3


@given(small, small, st.integers(min_value=1, max_value=8))
def test_composition_and_partition_sums_agree(outer, inner, n):
    inner[0] = Fraction(0)
    assert composition_sum(outer, inner, n) == partition_sum(outer, inner, n)


@given(small, st.integers(min_value=2, max_value=5))
def test_pigeonhole_reduction(outer, l):
    # with inner_1 = 0 every part is >= 2, so at most l parts fit in 2l + 1
    inner = [Fraction(0), Fraction(0)] + [Fraction(j % 3 - 1) for j in range(2, 2 * l + 2)]
    n = 2 * l + 1
    assert composition_sum(outer, inner, n) == composition_sum(outer, inner, n, l)
    assert composition_sum(outer, inner, 2 * l) == composition_sum(outer, inner, 2 * l, l)
