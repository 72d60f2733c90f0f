"""Named Riordan pairs with exact constructors.

Each constructor returns a pair valid to the requested order.  Closed forms
with square roots are evaluated with :func:`sqrt_one` at a slightly higher
order and divided down by ``shift``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .arrays import RiordanPair, Triangle, expand_triangle
from .errors import StructuralError
from .series import Series, first_difference, mul, reciprocal, shift, sqrt_one, to_fraction


def _rna_g_recurrence(order: int) -> Series:
    # (1 - t + t^2) g = 1 + t^2 g^2, solved for g_n
    g: list[Fraction] = []
    for n in range(order + 1):
        x = Fraction(int(n == 0))
        if n >= 1:
            x += g[n - 1]
        if n >= 2:
            x -= g[n - 2]
            x += sum((g[i] * g[n - 2 - i] for i in range(n - 1)), Fraction(0))
        g.append(x)
    return Series.of(g, order)


def _rna_g_closed(order: int) -> Series:
    n = order + 2
    root = sqrt_one(Series.of([1, -2, -1, -2, 1], n))
    return shift(Series.of([1, -1, 1], n) - root, -2) / 2


def rna_g(order: int) -> Series:
    """``g = (1 - t + t^2 - sqrt(1 - 2t - t^2 - 2t^3 + t^4)) / (2t^2)``.

    Built from the quadratic ``(1 - t + t^2) g = 1 + t^2 g^2`` and from the
    closed form; the two must agree.
    """
    if order < 2:
        raise StructuralError("rna_g needs order >= 2")
    rec = _rna_g_recurrence(order)
    closed = _rna_g_closed(order)
    j = first_difference(rec, closed)
    if j is not None:
        raise AssertionError(f"rna_g routes disagree at t^{j}")
    return rec


def rna_quadratic_residual(g: Series) -> Series:
    """``(1 - t + t^2) g - 1 - t^2 g^2``; zero to ``g.valid_to`` for the RNA series."""
    n = g.valid_to
    return mul(Series.of([1, -1, 1], n), g) - 1 - shift(mul(g, g), 2).truncate(n)


def catalan(order: int) -> Series:
    """``C(t) = (1 - sqrt(1 - 4t)) / (2t)``."""
    n = order + 1
    return shift(1 - sqrt_one(Series.of([1, -4], n)), -1) / 2


def _even(s: Series, order: int) -> Series:
    """``s(t^2)`` valid to ``order``."""
    out = [Fraction(0)] * (order + 1)
    for j in range(order // 2 + 1):
        out[2 * j] = s[j]
    return Series.of(out, order)


def ex31_b_f(order: int) -> Series:
    """``f = (1 - t - sqrt(1 - 2t + t^2 - 4t^3)) / (2t^2)``, checked against
    ``(1 - t) f = t + t^2 f^2``."""
    n = order + 2
    f = shift(Series.of([1, -1], n) - sqrt_one(Series.of([1, -2, 1, -4], n)), -2) / 2
    resid = mul(Series.of([1, -1], order), f) - Series.monomial(1, 1, order) - shift(mul(f, f), 2).truncate(order)
    if not resid.is_zero():
        raise AssertionError("ex31_b f fails its quadratic")
    return f


def _t(order: int) -> Series:
    return Series.monomial(1, 1, order)


def _gen_pascal(k, order: int) -> RiordanPair:
    g = Series.geometric(k, order)
    return RiordanPair(g, shift(g, 1).truncate(order))


def _rna_R(order: int) -> RiordanPair:
    g = rna_g(order)
    h = shift(g, 1).truncate(order)
    return RiordanPair(mul(Series.of([1, -1], order), g) * reciprocal(1 - h), h)


def _rna_Rstar(order: int) -> RiordanPair:
    g = rna_g(order)
    return RiordanPair(g, shift(g, 1).truncate(order))


def _rna_Rstarstar(order: int) -> RiordanPair:
    g = rna_g(order + 1)
    return RiordanPair(shift(g - 1, -1), shift(g, 1).truncate(order))


def _catalan_C0(order: int) -> RiordanPair:
    c2 = _even(catalan(order // 2 + 1), order)
    return RiordanPair(c2, shift(c2, 1).truncate(order))


def _ex31_b(order: int) -> RiordanPair:
    f = ex31_b_f(order)
    # see the ledger: this g is the variant whose B-sequences are (1,1,0,...) and (2,1,0,...)
    g = reciprocal(1 - 2 * _t(order) - shift(f, 2).truncate(order))
    return RiordanPair(g, f)


def ex31_b_literal(order: int) -> RiordanPair:
    """``(1/(1 - 2f - t^2 f), f)`` read literally."""
    f = ex31_b_f(order)
    return RiordanPair(reciprocal(1 - 2 * f - shift(f, 2).truncate(order)), f)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple[str, ...]
    description: str
    build: Callable[..., RiordanPair]


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in (
        CatalogEntry("identity", (), "(1, t)", lambda n: RiordanPair(Series.constant(1, n), _t(n))),
        CatalogEntry("negation_M", (), "(1, -t)", lambda n: RiordanPair(Series.constant(1, n), -_t(n))),
        CatalogEntry("pascal", (), "(1/(1-t), t/(1-t))", lambda n: _gen_pascal(1, n)),
        CatalogEntry("gen_pascal", ("k",), "(1/(1-kt), t/(1-kt))", lambda n, k: _gen_pascal(k, n)),
        CatalogEntry("rna_R", (), "((1-t)g/(1-tg), tg), g the RNA series", _rna_R),
        CatalogEntry("rna_Rstar", (), "(g, tg), g the RNA series", _rna_Rstar),
        CatalogEntry("rna_Rstarstar", (), "((g-1)/t, tg), g the RNA series", _rna_Rstarstar),
        CatalogEntry("catalan_C0", (), "(C(t^2), tC(t^2)), C(t) = (1-sqrt(1-4t))/(2t)", _catalan_C0),
        CatalogEntry("appell_A0", (), "(1/(1-t), t)", lambda n: RiordanPair(Series.geometric(1, n), _t(n))),
        CatalogEntry("ex31_a", (), "(1/(1-2t), t/(1-t))",
                     lambda n: RiordanPair(Series.geometric(2, n), shift(Series.geometric(1, n), 1).truncate(n))),
        CatalogEntry("ex31_b", (), "(1/(1-2t-t^2 f), f), f = (1-t-sqrt(1-2t+t^2-4t^3))/(2t^2)", _ex31_b),
    )
}

RNA_NOTE = "g = (1-t+t^2-sqrt(1-2t-t^2-2t^3+t^4))/(2t^2)"


def catalog_names() -> list[str]:
    return list(CATALOG)


def named_pair(name: str, params: Sequence = (), order: int = 16) -> RiordanPair:
    entry = CATALOG.get(name)
    if entry is None:
        raise StructuralError(f"unknown catalog name {name!r}; valid names: {', '.join(CATALOG)}")
    if len(params) != len(entry.params):
        want = ", ".join(entry.params) or "none"
        raise StructuralError(f"{name} takes parameters ({want}), got {len(params)}")
    if order < 1:
        raise StructuralError("order must be at least 1")
    return entry.build(order, *(to_fraction(x) for x in params))


def catalog_listing() -> str:
    lines = []
    for e in CATALOG.values():
        params = f"({', '.join(e.params)})" if e.params else ""
        lines.append(f"{e.name}{params}: {e.description}")
    lines.append(f"where {RNA_NOTE}")
    return "\n".join(lines)


@dataclass(frozen=True)
class ColumnLawReport:
    depth: int
    recurrence_ok: bool
    recurrence_witness: int | None
    convolution_ok: bool
    convolution_witness: int | None

    @property
    def holds(self) -> bool:
        return self.recurrence_ok and self.convolution_ok


def rna_first_column_law(order: int) -> ColumnLawReport:
    """Check two laws on rows ``0..order`` of the ``(g-1)/t`` RNA matrix:

    * ``d_{n+1,0} = d_{n,0} + d_{n,1}``;
    * ``d_{n,1} = d_{n-1,0} + sum_{k=0}^{n-2} d_{k,0} d_{n-2-k,0}``, i.e.
      column 1 is column 0 convolved with ``g``.
    """
    if order < 3:
        raise StructuralError("order must be at least 3")
    tri: Triangle = expand_triangle(_rna_Rstarstar(order), order + 1)
    rec_bad = next((n for n in range(order) if tri[n + 1, 0] != tri[n, 0] + tri[n, 1]), None)

    def conv(n: int) -> Fraction:
        return tri[n - 1, 0] + sum((tri[k, 0] * tri[n - 2 - k, 0] for k in range(n - 1)), Fraction(0))

    conv_bad = next((n for n in range(1, order + 1) if tri[n, 1] != conv(n)), None)
    return ColumnLawReport(order, rec_bad is None, rec_bad, conv_bad is None, conv_bad)
