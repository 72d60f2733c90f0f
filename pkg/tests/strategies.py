from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from riordan.arrays import RiordanPair
from riordan.series import Series

small = st.builds(
    Fraction,
    st.integers(min_value=-5, max_value=5),
    st.sampled_from([1, 1, 1, 2, 3]),
)
nonzero = small.filter(bool)


@st.composite
def series(draw, min_vt=0, max_vt=8, head=()):
    vt = draw(st.integers(min_value=max(min_vt, len(head) - 1), max_value=max_vt))
    tail = draw(st.lists(small, min_size=vt + 1 - len(head), max_size=vt + 1 - len(head)))
    return Series.of(list(head) + tail, vt)


@st.composite
def units(draw, max_vt=8):
    """Series with nonzero constant term."""
    c0 = draw(nonzero)
    return draw(series(min_vt=0, max_vt=max_vt, head=(c0,)))


@st.composite
def order_one(draw, max_vt=8):
    f1 = draw(nonzero)
    return draw(series(min_vt=1, max_vt=max_vt, head=(0, f1)))


@st.composite
def pairs(draw, max_vt=8, normalized=True):
    vt = draw(st.integers(min_value=3, max_value=max_vt))
    g0 = Fraction(1) if normalized else draw(nonzero)
    g = Series.of([g0] + draw(st.lists(small, min_size=vt, max_size=vt)), vt)
    f = Series.of([0, draw(nonzero)] + draw(st.lists(small, min_size=vt - 1, max_size=vt - 1)), vt)
    return RiordanPair(g, f)
