"""Truncated formal power series with exact rational coefficients.

A :class:`Series` stores ``coeffs[0..valid_to]`` and nothing else.  The
``valid_to`` field is the highest power of ``t`` whose coefficient is
trustworthy; every operation computes the order to which its result is
determined by its inputs and truncates there.  Binary ring operations take
the minimum of the operand orders; composition is sharper when the inner
series has order above one (see :func:`compose`).

Coefficients are :class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import (
    CompositionUndefinedError,
    NoCompositionalInverseError,
    NotDivisibleError,
    NotInvertibleError,
    SqrtUnsupportedError,
    StructuralError,
    TruncationError,
)

Coefficient = Union[int, Fraction, str]

INFINITE = math.inf
"""Order of the zero series."""


def to_fraction(value: Coefficient) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise StructuralError("booleans are not coefficients")
    if isinstance(value, (int, Rational, str)):
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise StructuralError(f"zero denominator in {value!r}") from None
        except ValueError as exc:
            raise StructuralError(str(exc)) from None
    raise StructuralError(f"not an exact rational: {value!r}")


# -- list kernels ------------------------------------------------------------
# These work on plain lists and always return exactly n + 1 coefficients.


def _mul(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: n + 1 - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def _horner(outer: Sequence[Fraction], inner: Sequence[Fraction], n: int) -> list[Fraction]:
    """sum outer[k] * inner**k, truncated to degree n, by Horner's rule."""
    acc = [Fraction(0)] * (n + 1)
    for c in reversed(outer):
        acc = _mul(acc, inner, n)
        acc[0] += c
    return acc


@dataclass(frozen=True)
class Series:
    """``coeffs[j]`` is the coefficient of ``t**j`` for ``0 <= j <= valid_to``."""

    coeffs: tuple[Fraction, ...]
    valid_to: int

    def __post_init__(self):
        if self.valid_to < 0:
            raise StructuralError("valid_to must be non-negative")
        if len(self.coeffs) != self.valid_to + 1:
            raise StructuralError(
                f"expected {self.valid_to + 1} coefficients, got {len(self.coeffs)}"
            )

    # -- constructors ------------------------------------------------------

    @classmethod
    def of(cls, coeffs: Iterable[Coefficient], valid_to: int | None = None) -> Series:
        """Build from any coefficient iterable, zero-padding up to ``valid_to``.

        Without ``valid_to`` the last given coefficient fixes the order.
        """
        cs = [to_fraction(c) for c in coeffs]
        if valid_to is None:
            valid_to = len(cs) - 1
        if len(cs) > valid_to + 1:
            cs = cs[: valid_to + 1]
        cs.extend([Fraction(0)] * (valid_to + 1 - len(cs)))
        return cls(tuple(cs), valid_to)

    @classmethod
    def constant(cls, c: Coefficient, valid_to: int) -> Series:
        return cls.of([c], valid_to)

    @classmethod
    def monomial(cls, c: Coefficient, power: int, valid_to: int) -> Series:
        cs = [0] * (valid_to + 1)
        if power <= valid_to:
            cs[power] = c
        return cls.of(cs, valid_to)

    @classmethod
    def geometric(cls, ratio: Coefficient, valid_to: int) -> Series:
        """``1/(1 - ratio*t)``."""
        r = to_fraction(ratio)
        return cls(tuple(r**j for j in range(valid_to + 1)), valid_to)

    # -- access ------------------------------------------------------------

    def __getitem__(self, j: int) -> Fraction:
        if j < 0:
            return Fraction(0)
        if j > self.valid_to:
            raise TruncationError(f"coefficient {j} is beyond valid_to={self.valid_to}")
        return self.coeffs[j]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def order(self) -> int | float:
        """Index of the first nonzero coefficient, or ``INFINITE`` if none is known."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return INFINITE

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, valid_to: int) -> Series:
        if valid_to > self.valid_to:
            raise TruncationError(f"cannot extend valid_to {self.valid_to} to {valid_to}")
        return Series(self.coeffs[: valid_to + 1], valid_to)

    def derivative(self) -> Series:
        if self.valid_to == 0:
            raise TruncationError("derivative of a series known only to order 0")
        return Series(
            tuple((j + 1) * self.coeffs[j + 1] for j in range(self.valid_to)),
            self.valid_to - 1,
        )

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other, self.valid_to)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series(tuple(-c for c in self.coeffs), self.valid_to)

    def __sub__(self, other):
        other = _coerce(other, self.valid_to)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other, self.valid_to)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            return Series(tuple(c * x for x in self.coeffs), self.valid_to)
        if isinstance(other, Series):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self * (1 / Fraction(other))
        if isinstance(other, Series):
            return mul(self, reciprocal(other))
        return NotImplemented

    def __rtruediv__(self, other):
        other = _coerce(other, self.valid_to)
        if other is NotImplemented:
            return other
        return mul(other, reciprocal(self))

    def __call__(self, inner: Series) -> Series:
        return compose(self, inner)

    def __str__(self) -> str:
        return format_series(self)


def _coerce(value, valid_to: int):
    if isinstance(value, Series):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Series.constant(value, valid_to)
    return NotImplemented


def make_series(coeffs: Sequence[Coefficient], valid_to: int) -> Series:
    """Strict constructor: exactly ``valid_to + 1`` coefficients are required."""
    if valid_to < 0:
        raise StructuralError("valid_to must be non-negative")
    if len(coeffs) != valid_to + 1:
        raise StructuralError(f"expected {valid_to + 1} coefficients, got {len(coeffs)}")
    return Series(tuple(to_fraction(c) for c in coeffs), valid_to)


def format_series(s: Series) -> str:
    return ", ".join(str(c) for c in s.coeffs)


# -- ring operations -----------------------------------------------------------


def add(a: Series, b: Series) -> Series:
    n = min(a.valid_to, b.valid_to)
    return Series(tuple(a.coeffs[j] + b.coeffs[j] for j in range(n + 1)), n)


def mul(a: Series, b: Series) -> Series:
    n = min(a.valid_to, b.valid_to)
    return Series(tuple(_mul(a.coeffs, b.coeffs, n)), n)


def power(a: Series, k: int) -> Series:
    if k < 0:
        return power(reciprocal(a), -k)
    result = Series.constant(1, a.valid_to)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def reciprocal(a: Series) -> Series:
    """Multiplicative inverse via ``c_j = -(1/a_0) * sum_{k>=1} a_k c_{j-k}``."""
    a0 = a.coeffs[0]
    if not a0:
        raise NotInvertibleError("series with zero constant term is not invertible")
    inv0 = 1 / a0
    c = [inv0]
    for j in range(1, a.valid_to + 1):
        s = sum((a.coeffs[k] * c[j - k] for k in range(1, j + 1)), Fraction(0))
        c.append(-s * inv0)
    return Series(tuple(c), a.valid_to)


def shift(a: Series, k: int) -> Series:
    """Multiply by ``t**k`` (``k >= 0``) or divide by ``t**-k`` (``k < 0``)."""
    if k >= 0:
        return Series((Fraction(0),) * k + a.coeffs, a.valid_to + k)
    k = -k
    if k > a.valid_to:
        raise TruncationError(f"dividing by t^{k} leaves nothing of a series valid to {a.valid_to}")
    for j in range(k):
        if a.coeffs[j]:
            raise NotDivisibleError(f"not divisible by t^{k}: coefficient {j} is {a.coeffs[j]}")
    return Series(a.coeffs[k:], a.valid_to - k)


# -- composition ---------------------------------------------------------------


def composition_valid_to(outer: Series, inner: Series) -> int:
    """Order to which ``outer(inner)`` is determined.

    With ``inner = t**r * (unit)`` the first unknown outer coefficient,
    ``outer[valid_to + 1]``, first shows up at ``t**((outer.valid_to + 1) * r)``.
    For ``r = 1`` this is ``min(outer.valid_to, inner.valid_to)``.
    """
    r = inner.order()
    if r == INFINITE:
        r = inner.valid_to + 1
    return min(inner.valid_to, (outer.valid_to + 1) * int(r) - 1)


def compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(t))``; ``inner`` must have zero constant term."""
    if inner.coeffs[0]:
        raise CompositionUndefinedError(
            f"composition undefined: inner constant term is {inner.coeffs[0]}"
        )
    n = composition_valid_to(outer, inner)
    r = inner.order()
    kmax = outer.valid_to if r == INFINITE else min(outer.valid_to, n // int(r))
    return Series(tuple(_horner(outer.coeffs[: kmax + 1], inner.coeffs, n)), n)


def comp_inverse(f: Series) -> Series:
    """Compositional inverse of a series of order exactly one.

    Solves ``f(h) = t`` one coefficient at a time.  ``powers[k][m]`` holds
    ``[t^m] h^k``; at step ``n`` every ``[t^n] h^k`` with ``k >= 2`` only
    involves ``h_1..h_{n-1}``, so ``h_n`` falls out of a linear equation
    with pivot ``f_1``.
    """
    if f.valid_to < 1 or f.coeffs[0] or not f.coeffs[1]:
        raise NoCompositionalInverseError("no compositional inverse: order of f is not 1")
    n_max = f.valid_to
    f1 = f.coeffs[1]
    zero = Fraction(0)
    h = [zero, 1 / f1]
    # powers[k] is the coefficient list of h^k, filled column by column
    powers: list[list[Fraction]] = [[Fraction(1)] + [zero] * n_max]
    powers.append([zero, h[1]] + [zero] * (n_max - 1))
    for k in range(2, n_max + 1):
        powers.append([zero] * (n_max + 1))
        powers[k][k] = h[1] ** k
    for n in range(2, n_max + 1):
        acc = zero
        for k in range(2, n + 1):
            prev = powers[k - 1]
            if k < n:
                powers[k][n] = sum(
                    (h[i] * prev[n - i] for i in range(1, n - k + 2)), zero
                )
            if f.coeffs[k]:
                acc += f.coeffs[k] * powers[k][n]
        h.append(-acc / f1)
        powers[1][n] = h[n]
    return Series(tuple(h), n_max)


def sqrt_one(a: Series) -> Series:
    """Square root with constant term ``+1`` of a series with constant term 1."""
    if a.coeffs[0] != 1:
        raise SqrtUnsupportedError(
            f"sqrt unsupported: constant term is {a.coeffs[0]}, expected 1"
        )
    r = [Fraction(1)]
    for n in range(1, a.valid_to + 1):
        s = sum((r[i] * r[n - i] for i in range(1, n)), Fraction(0))
        r.append((a.coeffs[n] - s) / 2)
    return Series(tuple(r), a.valid_to)


# -- comparison ----------------------------------------------------------------


def first_difference(a: Series, b: Series) -> int | None:
    """First index ``<= min(valid_to)`` where ``a`` and ``b`` differ, else None."""
    for j in range(min(a.valid_to, b.valid_to) + 1):
        if a.coeffs[j] != b.coeffs[j]:
            return j
    return None


def agree(a: Series, b: Series) -> bool:
    """Equality on the jointly valid prefix."""
    return first_difference(a, b) is None


def t_series(valid_to: int) -> Series:
    return Series.monomial(1, 1, valid_to)
