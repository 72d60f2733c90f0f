"""Proper Riordan pairs, their triangles, and the group law.

A pair ``(g, f)`` with ``g(0) != 0`` and ``f = f_1 t + ...``, ``f_1 != 0``,
stands for the lower-triangular matrix whose column ``k`` has generating
function ``g * f**k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotProperPairError, StructuralError, TruncationError
from .series import (
    Coefficient,
    Series,
    _mul,
    comp_inverse,
    compose,
    mul,
    reciprocal,
    to_fraction,
)


@dataclass(frozen=True)
class RiordanPair:
    g: Series
    f: Series

    def __post_init__(self):
        _check_proper(self.g, self.f)

    @property
    def proper_normalized(self) -> bool:
        return self.g.coeffs[0] == 1

    @property
    def valid_to(self) -> int:
        return min(self.g.valid_to, self.f.valid_to)

    def truncate(self, valid_to: int) -> RiordanPair:
        return RiordanPair(
            self.g.truncate(min(valid_to, self.g.valid_to)),
            self.f.truncate(min(valid_to, self.f.valid_to)),
        )

    def __matmul__(self, other: RiordanPair) -> RiordanPair:
        return multiply_pairs(self, other)


def _check_proper(g: Series, f: Series) -> None:
    if g.valid_to < 1 or f.valid_to < 1:
        raise NotProperPairError("not a proper Riordan pair: g and f must be known to order >= 1")
    if not g.coeffs[0]:
        raise NotProperPairError("not a proper Riordan pair: g(0) = 0 (g must have order 0)")
    if f.coeffs[0]:
        raise NotProperPairError("not a proper Riordan pair: f(0) != 0 (f must have order 1)")
    if not f.coeffs[1]:
        raise NotProperPairError("not a proper Riordan pair: f'(0) = 0 (f must have order exactly 1)")


def make_pair(g: Series, f: Series) -> RiordanPair:
    return RiordanPair(g, f)


def identity_pair(valid_to: int) -> RiordanPair:
    return RiordanPair(Series.constant(1, valid_to), Series.monomial(1, 1, valid_to))


@dataclass(frozen=True)
class Triangle:
    """Row ``n`` holds ``d_{n,0} .. d_{n,n}``."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise StructuralError(f"row {n} has {len(row)} entries, expected {n + 1}")

    @classmethod
    def of(cls, rows: Iterable[Iterable[Coefficient]]) -> Triangle:
        return cls(tuple(tuple(to_fraction(x) for x in row) for row in rows))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, nk: tuple[int, int]) -> Fraction:
        """``d_{n,k}``, zero above the diagonal and for negative indices."""
        n, k = nk
        if n < 0 or k < 0 or k > n:
            return Fraction(0)
        return self.rows[n][k]

    def column(self, k: int) -> list[Fraction]:
        return [row[k] for row in self.rows[k:]]

    def truncate(self, n_rows: int) -> Triangle:
        return Triangle(self.rows[:n_rows])

    def __matmul__(self, other: Triangle) -> Triangle:
        n = min(self.n_rows, other.n_rows)
        rows = []
        for i in range(n):
            rows.append(
                tuple(
                    sum((self[i, j] * other[j, k] for j in range(k, i + 1)), Fraction(0))
                    for k in range(i + 1)
                )
            )
        return Triangle(tuple(rows))

    def apply(self, h: Sequence[Fraction]) -> list[Fraction]:
        """Matrix times column vector, rows ``0..n_rows-1``."""
        return [
            sum((row[k] * h[k] for k in range(len(row)) if k < len(h)), Fraction(0))
            for row in self.rows
        ]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def expand_triangle(p: RiordanPair, n_rows: int) -> Triangle:
    """Rows ``0..n_rows-1`` of ``d_{n,k} = [t^n] g f^k``."""
    if n_rows < 1:
        raise StructuralError("n_rows must be positive")
    n = n_rows - 1
    if n > p.valid_to:
        raise TruncationError(
            f"truncation too short: {n_rows} rows need order {n}, pair is valid to {p.valid_to}"
        )
    columns = []
    col = list(p.g.coeffs[: n + 1])
    for _ in range(n_rows):
        columns.append(col)
        col = _mul(col, p.f.coeffs, n)
    return Triangle(tuple(tuple(columns[k][r] for k in range(r + 1)) for r in range(n_rows)))


def apply_to_series(p: RiordanPair, h: Series) -> Series:
    """``(g, f) h = g * h(f)``."""
    return mul(p.g, compose(h, p.f))


def multiply_pairs(p1: RiordanPair, p2: RiordanPair) -> RiordanPair:
    """``(g1, f1)(g2, f2) = (g1 * g2(f1), f2(f1))``."""
    return RiordanPair(mul(p1.g, compose(p2.g, p1.f)), compose(p2.f, p1.f))


def invert_pair(p: RiordanPair) -> RiordanPair:
    """``(g, f)^-1 = (1 / g(fbar), fbar)``."""
    fbar = comp_inverse(p.f)
    return RiordanPair(reciprocal(compose(p.g, fbar)), fbar)
