from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from riordan.arrays import (
    RiordanPair,
    Triangle,
    apply_to_series,
    expand_triangle,
    identity_pair,
    invert_pair,
    make_pair,
    multiply_pairs,
)
from riordan.catalog import named_pair
from riordan.errors import NotProperPairError, StructuralError, TruncationError
from riordan.series import Series, shift, t_series
from strategies import pairs, series


def pascal(n=10):
    return named_pair("pascal", (), n)


def test_make_pair_and_flags():
    p = pascal()
    assert p.proper_normalized
    assert make_pair(Series.of([2, 1]), t_series(1)).proper_normalized is False
    assert expand_triangle(identity_pair(4), 5).rows == tuple(
        tuple(Fraction(int(i == j)) for j in range(i + 1)) for i in range(5)
    )


@pytest.mark.parametrize(
    "g, f, needle",
    [
        ([0, 1], [0, 1], "g(0) = 0"),
        ([1, 1], [1, 1], "f(0)"),
        ([1, 1], [0, 0, 1], "order exactly 1"),
        ([1], [0, 1], "order >= 1"),
    ],
)
def test_improper_pairs_rejected(g, f, needle):
    with pytest.raises(NotProperPairError, match="not a proper Riordan pair") as e:
        make_pair(Series.of(g), Series.of(f))
    assert needle in str(e.value)


def test_pascal_rows():
    tri = expand_triangle(pascal(), 5)
    assert [list(r) for r in tri.rows] == [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1]]


def test_truncation_too_short():
    with pytest.raises(TruncationError, match="truncation too short"):
        expand_triangle(pascal(4), 6)


def test_triangle_validation_and_access():
    with pytest.raises(StructuralError):
        Triangle.of([[1], [1]])
    tri = Triangle.of([[1], [2, 3]])
    assert tri[1, 1] == 3 and tri[0, 1] == 0 and tri[-1, 0] == 0
    assert tri.column(0) == [1, 2]
    assert str(tri) == "1\n2 3"


def test_apply_examples():
    p = pascal(8)
    assert apply_to_series(p, Series.constant(1, 8)) == p.g
    h = Series.of([3, 1, 4, 1, 5], 8)
    assert apply_to_series(identity_pair(8), h) == h
    assert apply_to_series(p, t_series(8)).coeffs == tuple(range(9))


def test_inverse_examples():
    assert invert_pair(identity_pair(6)) == identity_pair(6)
    c0 = named_pair("catalan_C0", (), 10)
    ci = invert_pair(c0)
    g = Series.of([1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1])
    assert ci.g == g and ci.f == shift(g, 1).truncate(10)
    a0 = named_pair("appell_A0", (), 6)
    assert invert_pair(a0) == RiordanPair(Series.of([1, -1], 6), t_series(6))


def test_conjugation_identities():
    n = 12
    p, c0, a0 = pascal(n), named_pair("catalan_C0", (), n), named_pair("appell_A0", (), n)
    rstar = named_pair("rna_Rstar", (), n)
    assert invert_pair(c0) @ p @ c0 == rstar
    assert invert_pair(a0) @ rstar @ a0 == named_pair("rna_R", (), n)


@given(pairs(), pairs(), pairs())
def test_group_axioms(p1, p2, p3):
    lhs = (p1 @ p2) @ p3
    rhs = p1 @ (p2 @ p3)
    n = min(lhs.valid_to, rhs.valid_to)
    assert lhs.truncate(n) == rhs.truncate(n)
    e = identity_pair(p1.valid_to)
    assert p1 @ e == p1 and e @ p1 == p1
    assert p1 @ invert_pair(p1) == e
    assert invert_pair(p1) @ p1 == e


@given(pairs(normalized=False), pairs(normalized=False))
def test_product_is_matrix_product(p1, p2):
    p3 = multiply_pairs(p1, p2)
    rows = p3.valid_to + 1
    assert expand_triangle(p3, rows) == expand_triangle(p1, rows) @ expand_triangle(p2, rows)


@given(pairs(), series(min_vt=3, max_vt=8))
def test_apply_matches_matrix_vector(p, h):
    r = apply_to_series(p, h)
    tri = expand_triangle(p, r.valid_to + 1)
    assert list(r.coeffs) == tri.apply(list(h.coeffs))
