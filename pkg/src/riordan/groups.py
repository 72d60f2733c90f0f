"""Sequence-level group law and subgroup membership.

The product ``D3 = D1 D2`` and inverse ``D*`` of Riordan pairs can be
computed entirely from A- and Z-sequences:

    A3(t) = A2(t) A1(t/A2(t))
    Z3(t) = (1 - t Z2(t)/A2(t)) Z1(t/A2(t)) + A1(t/A2(t)) Z2(t)
    A*(t/A(t)) = 1/A(t)
    Z*(t/A(t)) = Z(t) / (t Z(t) - A(t))
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .arrays import RiordanPair, multiply_pairs
from .errors import HypothesisUnmetError, TruncationError, StructuralError
from .series import (
    Series,
    comp_inverse,
    compose,
    first_difference,
    mul,
    reciprocal,
    shift,
)
from .sequences import (
    BSeqVerdict,
    a_sequence,
    pair_from_a_z,
    require_normalized,
    type1_b_functional,
    z_sequence,
)


def _t_over(a: Series) -> Series:
    """``t / A(t)``."""
    return shift(reciprocal(a), 1)


def product_a(a1: Series, a2: Series) -> Series:
    return mul(a2, compose(a1, _t_over(a2)))


def product_z(a1: Series, z1: Series, a2: Series, z2: Series) -> Series:
    w = _t_over(a2)
    return mul(1 - mul(w, z2), compose(z1, w)) + mul(compose(a1, w), z2)


def inverse_a(a: Series) -> Series:
    """Solve ``A*(t/A) = 1/A`` by substituting the inverse of ``t/A``."""
    return compose(reciprocal(a), comp_inverse(_t_over(a)))


def inverse_z(a: Series, z: Series) -> Series:
    rhs = mul(z, reciprocal(shift(z, 1) - a))
    return compose(rhs, comp_inverse(_t_over(a)))


# -- Prop: B-sequence of a product -------------------------------------------------


@dataclass(frozen=True)
class ProductBReport:
    """Both sides of the product identity for type-I B-sequences.

    ``lhs = B3(t^2/A3)``; ``rhs`` is assembled from ``B1``, ``B2``, ``A2``
    and ``A3``.  ``agree_to`` is the last power of ``t`` where they match
    (``None`` if they differ already at ``t^0``).  ``b3`` is the product's
    own type-I verdict.
    """

    lhs: Series
    rhs: Series
    agree_to: int | None
    b3: BSeqVerdict

    @property
    def holds(self) -> bool:
        return self.agree_to == min(self.lhs.valid_to, self.rhs.valid_to)


def _b_of_t2_over(b: Series, a: Series) -> Series:
    """``B(t^2/A)``."""
    return compose(b, shift(reciprocal(a), 2).truncate(a.valid_to))


def product_b_identity_check(p1: RiordanPair, p2: RiordanPair) -> ProductBReport:
    """Evaluate ``B3(t^2/A3) = B2(t^2/A2) + B1(v)/A2 + t B2(t^2/A2) B1(v)/A2``
    with ``v = t^2/(A2 A3)``.

    Raises :class:`HypothesisUnmetError` if either factor lacks a type-I
    B-sequence to the order it is known.
    """
    a1, a2 = a_sequence(p1), a_sequence(p2)
    v1, v2 = type1_b_functional(a1), type1_b_functional(a2)
    for name, v in (("first", v1), ("second", v2)):
        if not v.exists:
            raise HypothesisUnmetError(f"hypothesis unmet: {name} factor has no type-I B-sequence ({v})")
    a3 = a_sequence(multiply_pairs(p1, p2))
    b3 = type1_b_functional(a3)
    b1, b2 = v1.b_seq, v2.b_seq
    n = min(a1.valid_to, a2.valid_to, a3.valid_to)
    a2n, a3n = a2.truncate(n), a3.truncate(n)

    inv_a2 = reciprocal(a2n)
    b2_term = _b_of_t2_over(b2, a2n)
    b1_term = _b_of_t2_over(b1, mul(a2n, a3n))
    rhs = b2_term + mul(inv_a2, b1_term) + mul(shift(inv_a2, 1), mul(b2_term, b1_term))
    if b3.exists:
        lhs = _b_of_t2_over(b3.b_seq, a3n)
    else:
        # B3(t^2/A3) is (A3 - 1)/t whether or not it is a series in t^2/A3
        lhs = shift(a3n - 1, -1)
    diff = first_difference(lhs, rhs)
    agree_to = min(lhs.valid_to, rhs.valid_to) if diff is None else diff - 1
    return ProductBReport(lhs, rhs, agree_to if agree_to >= 0 else None, b3)


# -- subgroups ---------------------------------------------------------------------


class SubgroupId(enum.Enum):
    APPELL = "Appell"
    LAGRANGE = "Lagrange"
    BELL = "Bell"
    HITTING_TIME = "HittingTime"
    DERIVATIVE = "Derivative"
    CHECKERBOARD = "Checkerboard"
    R02 = "R02"
    R111 = "R111"

    @classmethod
    def parse(cls, name: str) -> SubgroupId:
        for s in cls:
            if s.value.lower() == name.lower() or s.name.lower() == name.lower():
                return s
        raise StructuralError(
            f"unknown subgroup {name!r}; valid: {', '.join(s.value for s in cls)}"
        )


@dataclass(frozen=True)
class Membership:
    """``witness`` is the index of the first violated coefficient."""

    member: bool
    order: int
    witness: int | None = None
    condition: str = ""

    def __bool__(self) -> bool:
        return self.member

    def __str__(self) -> str:
        if self.member:
            return f"MEMBER to order {self.order}"
        return f"NOT MEMBER, witness index {self.witness} ({self.condition})"


def _equal_series(lhs: Series, rhs: Series, order: int, condition: str) -> Membership:
    j = first_difference(lhs, rhs)
    if j is None:
        return Membership(True, order)
    return Membership(False, order, j, condition)


def is_member(p: RiordanPair, s: SubgroupId) -> Membership:
    g, f = p.g, p.f
    N = p.valid_to
    if s is SubgroupId.APPELL:
        return _equal_series(f, Series.monomial(1, 1, f.valid_to), N, "f = t")
    if s is SubgroupId.LAGRANGE:
        return _equal_series(g, Series.constant(1, g.valid_to), N, "g = 1")
    if s is SubgroupId.BELL:
        return _equal_series(f, shift(g, 1), N, "f = t g")
    if s is SubgroupId.HITTING_TIME:
        fp = f.derivative()
        # t f'/f = f' / (f/t)
        return _equal_series(g, mul(fp, reciprocal(shift(f, -1))), N, "g = t f'/f")
    if s is SubgroupId.DERIVATIVE:
        return _equal_series(g, f.derivative(), N, "g = f'")
    if s is SubgroupId.CHECKERBOARD:
        for j in range(max(g.valid_to, f.valid_to) + 1):
            if j % 2 and j <= g.valid_to and g[j]:
                return Membership(False, N, j, "g even")
            if not j % 2 and j <= f.valid_to and f[j]:
                return Membership(False, N, j, "f odd")
        return Membership(True, N)
    if s is SubgroupId.R02:
        a = a_sequence(p)
        if a.valid_to < 2:
            raise TruncationError("R02 membership needs the A-sequence to order 2")
        if a[0] != 1:
            return Membership(False, N, 0, "a_0 = 1")
        if a[2]:
            return Membership(False, N, 2, "a_2 = 0")
        return Membership(True, N)
    if s is SubgroupId.R111:
        require_normalized(p, "R111 membership")
        if N < 2:
            raise TruncationError("R111 membership needs order 2")
        if f[1] != 1:
            return Membership(False, N, 1, "f_1 = 1")
        if f[2] != g[1]:
            return Membership(False, N, 2, "f_2 = g_1")
        if g[2] != g[1] ** 2:
            return Membership(False, N, 2, "g_2 = g_1^2")
        return Membership(True, N)
    raise StructuralError(f"unknown subgroup {s!r}")


def r111_by_sequences(p: RiordanPair) -> Membership:
    """R111 through its defining A/Z form: ``a_0 = 1``, ``z_0 = a_1``, ``z_1 = 0``."""
    a, z = a_sequence(p), z_sequence(p)
    if a[0] != 1:
        return Membership(False, p.valid_to, 0, "a_0 = 1")
    if z[0] != a[1]:
        return Membership(False, p.valid_to, 0, "z_0 = a_1")
    if z[1]:
        return Membership(False, p.valid_to, 1, "z_1 = 0")
    return Membership(True, p.valid_to)


# -- random members ----------------------------------------------------------------

_GENERATED = (
    SubgroupId.R02,
    SubgroupId.R111,
    SubgroupId.BELL,
    SubgroupId.APPELL,
    SubgroupId.LAGRANGE,
    SubgroupId.CHECKERBOARD,
)


def _small(rng: random.Random) -> Fraction:
    num = rng.randint(-3, 3)
    return Fraction(num, rng.choice((1, 1, 1, 2)))


def _nonzero(rng: random.Random) -> Fraction:
    x = _small(rng)
    while not x:
        x = _small(rng)
    return x


def _random_series(rng: random.Random, valid_to: int, head: list[Fraction] | None = None) -> Series:
    head = list(head or [])
    return Series.of(head + [_small(rng) for _ in range(valid_to + 1 - len(head))], valid_to)


def random_member(s: SubgroupId, seed: int, order: int) -> RiordanPair:
    """Deterministic pseudo-random member of ``s``, valid to ``order``.

    Normalized (``g(0) = 1``) in every case.
    """
    if s not in _GENERATED:
        raise StructuralError(
            f"cannot generate members of {s.value}; supported: "
            + ", ".join(x.value for x in _GENERATED)
        )
    if order < 3:
        raise StructuralError("order must be at least 3")
    rng = random.Random(f"{s.value}:{seed}:{order}")
    one = Fraction(1)
    if s is SubgroupId.R02:
        a = _random_series(rng, order - 1, [one, _small(rng), Fraction(0)])
        z = _random_series(rng, order - 1)
        return pair_from_a_z(a, z)
    if s is SubgroupId.R111:
        a1 = _small(rng)
        a = _random_series(rng, order - 1, [one, a1])
        z = _random_series(rng, order - 1, [a1, Fraction(0)])
        return pair_from_a_z(a, z)
    if s is SubgroupId.BELL:
        g = _random_series(rng, order, [one])
        return RiordanPair(g, shift(g, 1))
    if s is SubgroupId.APPELL:
        return RiordanPair(_random_series(rng, order, [one]), Series.monomial(1, 1, order))
    if s is SubgroupId.LAGRANGE:
        f = _random_series(rng, order, [Fraction(0), _nonzero(rng)])
        return RiordanPair(Series.constant(1, order), f)
    # checkerboard
    g = Series.of([one] + [_small(rng) if j % 2 == 0 else 0 for j in range(1, order + 1)], order)
    f = Series.of([0, _nonzero(rng)] + [_small(rng) if j % 2 else 0 for j in range(2, order + 1)], order)
    return RiordanPair(g, f)
