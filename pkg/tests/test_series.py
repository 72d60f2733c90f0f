from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from riordan.errors import (
    CompositionUndefinedError,
    NoCompositionalInverseError,
    NotDivisibleError,
    NotInvertibleError,
    SqrtUnsupportedError,
    StructuralError,
    TruncationError,
)
from riordan.faadibruno import compose_by_compositions, compose_by_partitions
from riordan.series import (
    INFINITE,
    Series,
    add,
    agree,
    comp_inverse,
    compose,
    make_series,
    mul,
    power,
    reciprocal,
    shift,
    sqrt_one,
    t_series,
)
from strategies import order_one, series, units

F = Fraction


def test_make_series_basic():
    s = make_series([1], 0)
    assert s.coeffs == (1,) and s.valid_to == 0
    assert make_series([0, 1], 1) == t_series(1)
    s = make_series([1, "2/4"], 1)
    assert s[1] == F(1, 2)
    assert s[1].denominator == 2


def test_make_series_length_mismatch():
    with pytest.raises(StructuralError):
        make_series([1, 2], 2)
    with pytest.raises(StructuralError):
        make_series([1], -1)


def test_coefficient_access():
    s = Series.of([1, 2, 3])
    assert s[-1] == 0
    with pytest.raises(TruncationError):
        s[3]
    assert Series.of([0, 0], 3).order() == INFINITE
    assert Series.of([0, 0, 5]).order() == 2


def test_ring_examples():
    assert add(Series.of([1, 1]), Series.of([1, -1])) == Series.of([2, 0])
    assert mul(Series.of([1, 1], 2), Series.of([1, 1], 2)) == Series.of([1, 2, 1])
    t = t_series(3)
    assert mul(t, t) == Series.of([0, 0, 1, 0])
    assert add(Series.of([1, 2, 3]), Series.of([1])).valid_to == 0


def test_reciprocal_examples():
    assert reciprocal(Series.of([1, -1], 6)) == Series.of([1] * 7)
    assert reciprocal(Series.constant(1, 4)) == Series.constant(1, 4)
    a1, a3 = F(3), F(-2)
    c = reciprocal(Series.of([1, a1, 0, a3], 3))
    assert c.coeffs == (1, -a1, a1**2, -(a1**3 + a3))
    with pytest.raises(NotInvertibleError):
        reciprocal(Series.of([0, 1]))


def test_compose_examples():
    geo = Series.geometric(1, 8)
    assert compose(geo, t_series(8)) == geo
    t2 = Series.monomial(1, 2, 8)
    assert compose(geo, t2) == Series.of([1, 0, 1, 0, 1, 0, 1, 0, 1])
    with pytest.raises(CompositionUndefinedError):
        compose(geo, Series.of([1, 1], 8))


def test_compose_validity_is_sharper_for_higher_order_inner():
    # outer known to t^2, inner = t^2: result is known to t^5
    r = compose(Series.of([1, 1, 1]), Series.monomial(1, 2, 10))
    assert r.valid_to == 5
    assert r.coeffs == (1, 0, 1, 0, 1, 0)


def test_comp_inverse_examples():
    f = shift(Series.geometric(1, 7), 1).truncate(8)
    assert comp_inverse(f).coeffs == (0, 1, -1, 1, -1, 1, -1, 1, -1)
    assert comp_inverse(t_series(5)) == t_series(5)
    catalan_like = comp_inverse(Series.of([0, 1, -1], 7))
    assert catalan_like.coeffs[:6] == (0, 1, 1, 2, 5, 14)
    for bad in (Series.of([0, 0, 1]), Series.of([1, 1, 0]), Series.of([0])):
        with pytest.raises(NoCompositionalInverseError):
            comp_inverse(bad)


def test_sqrt_examples():
    assert sqrt_one(Series.constant(1, 3)) == Series.constant(1, 3)
    assert sqrt_one(Series.of([1, -2, 1], 5)) == Series.of([1, -1], 5)
    assert sqrt_one(Series.of([1, -4], 4)).coeffs == (1, -2, -2, -4, -10)
    with pytest.raises(SqrtUnsupportedError):
        sqrt_one(Series.of([4, 1]))


def test_shift_examples():
    assert shift(Series.monomial(1, 2, 4), -1) == Series.of([0, 1, 0, 0])
    assert shift(Series.constant(1, 2), 2) == Series.of([0, 0, 1, 0, 0])
    with pytest.raises(NotDivisibleError):
        shift(Series.of([1, 1]), -1)
    with pytest.raises(TruncationError):
        shift(Series.of([0, 0]), -2)


def test_operators_match_functions():
    a, b = Series.of([1, 2, 3]), Series.of([2, 0, 1])
    assert a + b == add(a, b)
    assert a * b == mul(a, b)
    assert a / b == mul(a, reciprocal(b))
    assert 1 - a == Series.of([0, -2, -3])
    assert a(Series.of([0, 1, 1])) == compose(a, Series.of([0, 1, 1]))
    assert power(b, -2) == reciprocal(mul(b, b))
    assert str(Series.of([1, F(1, 2)])) == "1, 1/2"


def test_derivative():
    assert Series.of([5, 1, 1, 1]).derivative() == Series.of([1, 2, 3])


# -- properties ----------------------------------------------------------------


@given(series(max_vt=12), series(max_vt=12), series(max_vt=12))
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(units(max_vt=12))
def test_reciprocal_inverts(a):
    assert mul(a, reciprocal(a)) == Series.constant(1, a.valid_to)


@given(order_one())
def test_comp_inverse_two_sided_and_involution(f):
    h = comp_inverse(f)
    assert h.valid_to == f.valid_to
    t = t_series(f.valid_to)
    assert compose(f, h) == t
    assert compose(h, f) == t
    assert comp_inverse(h) == f


@given(series(max_vt=8), order_one(max_vt=8))
def test_compose_three_ways(outer, inner):
    r = compose(outer, inner)
    n = r.valid_to
    assert list(r.coeffs) == compose_by_compositions(outer.coeffs, inner.coeffs, n)
    assert list(r.coeffs) == compose_by_partitions(outer.coeffs, inner.coeffs, n)


@given(series(max_vt=10, head=(1,)))
def test_sqrt_squares_back(a):
    r = sqrt_one(a)
    assert r[0] == 1
    assert mul(r, r) == a


@given(series(max_vt=8), st.integers(min_value=0, max_value=4))
def test_shift_round_trip(a, k):
    assert shift(shift(a, k), -k) == a
    assert agree(shift(a, k), mul(Series.monomial(1, k, a.valid_to + k), Series.of(a.coeffs, a.valid_to + k)))
