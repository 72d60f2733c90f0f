"""A-, Z- and B-sequences of Riordan pairs.

The A-sequence ``A(t)`` and Z-sequence ``Z(t)`` of ``(g, f)`` satisfy

    f = t A(f),        g = 1 / (1 - t Z(f))      (the second needs g(0) = 1)

A type-I B-sequence ``B`` describes every entry off the first column,

    d_{n+1,k} = d_{n,k-1} + sum_j b_j d_{n-j,k+j}          (k >= 1)

which at the series level reads ``f = t + t f B(t f)``, or equivalently
``A(t) = 1 + t B(t^2 / A(t))``.  A type-II B-sequence ``Bh`` describes the
first column,

    d_{n+1,0} = sum_j bh_j d_{n-j,j}

equivalently ``g = 1 + t g Bh(t f)`` or ``Z(t) = Bh(t fbar(t))``.

Existence is only ever decided to a finite order.  A negative verdict names
the coefficient at which the defining identity breaks and is final; a
positive one means "consistent through t^N".  Type-I verdicts count powers
of ``t`` in ``f = t + t f B(t f)``, type-II verdicts powers of ``t`` in
``g = 1 + t g Bh(t f)``.  Those are also the triangle rows at which the
entry-level recurrences first fail, so the series and entry routes can be
compared directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from .arrays import RiordanPair, Triangle
from .errors import (
    NotNormalizedError,
    NotRiordanError,
    StructuralError,
    TruncationError,
)
from .faadibruno import CompositionSet, composition_sum, compositions
from .series import (
    Series,
    agree,
    comp_inverse,
    compose,
    first_difference,
    mul,
    reciprocal,
    shift,
    t_series,
)

__all__ = [
    "BKind",
    "BSeqVerdict",
    "BellReport",
    "CharSeqReport",
    "CompositionSet",
    "RecurrenceCheck",
    "a_sequence",
    "a_z_from_triangle",
    "bell_b_equivalence",
    "compositions",
    "f_from_type1_b",
    "g_from_type2_b",
    "pair_from_a_z",
    "pair_from_b_sequences",
    "require_normalized",
    "solve_b_from_triangle",
    "type1_b",
    "type1_b_from_a",
    "type1_b_from_f",
    "type1_b_functional",
    "type2_b",
    "type2_b_from_z",
    "verify_b_recurrence",
    "z_sequence",
]


def require_normalized(p: RiordanPair, what: str) -> None:
    if not p.proper_normalized:
        raise NotNormalizedError(f"{what} requires g(0)=1, got g(0)={p.g.coeffs[0]}")


# -- A and Z ---------------------------------------------------------------------


def a_sequence(p: RiordanPair) -> Series:
    """``A = t / fbar``; valid to ``f.valid_to - 1``."""
    return reciprocal(shift(comp_inverse(p.f), -1))


def z_sequence(p: RiordanPair) -> Series:
    """``Z = (g(fbar) - 1) / (fbar g(fbar))``; valid to ``pair.valid_to - 1``."""
    require_normalized(p, "Z-sequence")
    fbar = comp_inverse(p.f)
    gf = compose(p.g, fbar)
    return mul(shift(gf - 1, -1), reciprocal(mul(shift(fbar, -1), gf)))


@dataclass(frozen=True)
class CharSeqReport:
    a_seq: Series
    z_seq: Series
    certified_to: int


def a_z_from_triangle(tri: Triangle) -> CharSeqReport:
    """Read the A- and Z-sequences off a triangle and check every other entry.

    ``a_n`` comes from entry ``(n+1, 1)``, ``z_n`` from ``(n+1, 0)``; all
    remaining entries must then satisfy the A-recurrence.  Raises
    :class:`NotRiordanError` with the first offending ``(n, k)``.
    """
    N = tri.n_rows
    if N < 3:
        raise StructuralError("need at least 3 rows")
    for n in range(N):
        if not tri[n, n]:
            raise StructuralError(f"diagonal entry d_{n},{n} is zero")
    a: list[Fraction] = []
    z: list[Fraction] = []
    for n in range(N - 1):
        row = tri.rows[n]
        s = sum((a[j] * row[j] for j in range(n)), Fraction(0))
        a.append((tri[n + 1, 1] - s) / row[n])
        s = sum((z[j] * row[j] for j in range(n)), Fraction(0))
        z.append((tri[n + 1, 0] - s) / row[n])
        for k in range(1, n + 1):
            expected = sum((a[j] * row[k + j] for j in range(n - k + 1)), Fraction(0))
            if tri[n + 1, k + 1] != expected:
                raise NotRiordanError(
                    f"not Riordan to depth {n + 1}: entry ({n + 1},{k + 1}) is "
                    f"{tri[n + 1, k + 1]}, A-recurrence gives {expected}",
                    (n + 1, k + 1),
                )
    return CharSeqReport(Series.of(a), Series.of(z), N - 1)


def pair_from_a_z(a: Series, z: Series) -> RiordanPair:
    """Inverse of (a_sequence, z_sequence): ``fbar = t/A``, ``g = 1/(1 - t Z(f))``."""
    f = comp_inverse(shift(reciprocal(a), 1))
    g = reciprocal(1 - shift(compose(z, f), 1))
    return RiordanPair(g, f)


# -- verdicts --------------------------------------------------------------------


class BKind(enum.Enum):
    TYPE_I = 1
    TYPE_II = 2


@dataclass(frozen=True)
class BSeqVerdict:
    """Outcome of a B-sequence existence test.

    ``order``: if ``exists``, the power of ``t`` through which the defining
    identity is verified; otherwise the power at which it first fails.
    ``witness``: index of the offending coefficient of the sequence the
    method reads (``a_j``, ``f_j`` or ``z_j``).
    """

    kind: BKind
    exists: bool
    order: int
    b_seq: Series | None = None
    witness: int | None = None
    method: str = ""

    def same_verdict(self, other: BSeqVerdict) -> bool:
        if (self.kind, self.exists, self.order) != (other.kind, other.exists, other.order):
            return False
        if self.exists:
            return self.b_seq == other.b_seq
        return True

    def __str__(self) -> str:
        if self.exists:
            return f"EXISTS to order {self.order}"
        return f"NO at index {self.witness}"


def _no(kind: BKind, order: int, witness: int, method: str) -> BSeqVerdict:
    return BSeqVerdict(kind, False, order, None, witness, method)


# -- type I ----------------------------------------------------------------------


def type1_b_from_a(a: Series) -> BSeqVerdict:
    """Type-I B-sequence from the A-sequence by composition sums.

    With ``c = 1/A`` and ``ct_j = c_{j-2}`` (``ct_0 = ct_1 = 0``):
    ``b_0 = a_1``, ``b_l = a_{2l+1} - sum_{D(2l, l-1)} b_k ct_{i_1}..ct_{i_k}``,
    subject to ``a_0 = 1``, ``a_2 = 0`` and
    ``a_{2l} = sum_{D(2l-1, l-1)} b_k ct_{i_1}..ct_{i_k}`` for ``l >= 2``.
    """
    M = a.valid_to
    if M < 1:
        raise TruncationError("type-I B needs the A-sequence to order >= 1")
    kind, method = BKind.TYPE_I, "composition sums over A"
    if a[0] != 1:
        return _no(kind, 1, 0, method)
    ct = [Fraction(0), Fraction(0)] + list(reciprocal(a).coeffs)
    b = [a[1]]
    for j in range(2, M + 1):
        l, odd = divmod(j, 2)
        if odd:
            b.append(a[j] - composition_sum(b, ct, 2 * l, l - 1))
        else:
            expected = composition_sum(b, ct, 2 * l - 1, l - 1)
            if a[j] != expected:
                return _no(kind, j + 1, j, method)
    return BSeqVerdict(kind, True, M + 1, Series.of(b), None, method)


def type1_b_from_f(f: Series) -> BSeqVerdict:
    """Type-I B-sequence straight from ``f`` by composition sums.

    With ``ft_j = f_{j-1}`` and ``bt_j = b_{j-1}`` (``bt_0 = 0``):
    ``b_{l-1} = f_{2l} - sum_{D(2l, l-1)} bt_k ft_{i_1}..ft_{i_k}``, subject
    to ``f_1 = 1`` and ``f_{2l+1} = f_2 f_{2l} + sum_{D'(2l+1, l)} ...``,
    where ``D'`` keeps only compositions with at least two parts.
    """
    N = f.valid_to
    kind, method = BKind.TYPE_I, "composition sums over f"
    if N < 2:
        raise TruncationError("type-I B needs f to order >= 2")
    if f[1] != 1:
        return _no(kind, 1, 1, method)
    ft = [Fraction(0)] + list(f.coeffs)
    bt = [Fraction(0)]
    for j in range(2, N + 1):
        l, odd = divmod(j, 2)
        if not odd:
            bt.append(f[j] - composition_sum(bt, ft, 2 * l, l - 1))
        else:
            expected = f[2] * f[2 * l] + _sum_min_two_parts(bt, ft, 2 * l + 1, l)
            if f[j] != expected:
                return _no(kind, j, j, method)
    return BSeqVerdict(kind, True, N, Series.of(bt[1:]), None, method)


def _sum_min_two_parts(outer, inner, n: int, max_parts: int) -> Fraction:
    total = Fraction(0)
    if max_parts < 2:
        return total
    for parts in compositions(n, max_parts):
        if len(parts) < 2 or len(parts) >= len(outer):
            continue
        term = outer[len(parts)]
        for i in parts:
            term *= inner[i] if i < len(inner) else 0
        total += term
    return total


def type1_b_functional(a: Series) -> BSeqVerdict:
    """Type-I B-sequence by solving ``A = 1 + t B(u)``, ``u = t^2/A``, directly.

    ``u`` has order 2, so ``b_l`` first enters at ``t^{2l+1}`` with pivot
    ``u_2^l``; every coefficient of the residual below that index is final.
    """
    M = a.valid_to
    if M < 1:
        raise TruncationError("type-I B needs the A-sequence to order >= 1")
    kind, method = BKind.TYPE_I, "functional equation"
    u = shift(reciprocal(a), 2).truncate(M)
    u2 = u[2] if M >= 2 else Fraction(1) / a[0]
    residual = list((a - 1).coeffs)
    u_pow = Series.constant(1, M)
    b = []
    for l in range((M - 1) // 2 + 1):
        bl = residual[2 * l + 1] / u2**l
        b.append(bl)
        term = shift(u_pow, 1).truncate(M)
        for j in range(M + 1):
            residual[j] -= bl * term[j]
        u_pow = mul(u_pow, u)
    for j, r in enumerate(residual):
        if r:
            return _no(kind, j + 1, j, method)
    return BSeqVerdict(kind, True, M + 1, Series.of(b), None, method)


def type1_b(p: RiordanPair, method: str = "functional") -> BSeqVerdict:
    if method == "functional":
        return type1_b_functional(a_sequence(p))
    if method == "a":
        return type1_b_from_a(a_sequence(p))
    if method == "f":
        return type1_b_from_f(p.f)
    raise ValueError(f"unknown method {method!r}; use functional, a or f")


# -- type II ---------------------------------------------------------------------


def type2_b_from_z(z: Series, f: Series) -> BSeqVerdict:
    """Type-II B-sequence from ``Z`` and ``f`` by composition sums.

    ``bh_0 = z_0``, ``z_1 = 0``,
    ``bh_l = f_1^l (z_{2l} - sum_{D(2l, l-1)} bh_k fbar_{i_1-1}..fbar_{i_k-1})``
    and ``z_{2l+1} = sum_{D(2l+1, l)} bh_k fbar_{i_1-1}..fbar_{i_k-1}``.
    """
    M = z.valid_to
    kind, method = BKind.TYPE_II, "composition sums over Z"
    if f.valid_to < M:
        raise TruncationError(f"f must be known to order {M}")
    fbar = comp_inverse(f)
    w = [Fraction(0)] + list(fbar.coeffs)  # w_i = fbar_{i-1}
    f1 = f[1]
    bh = [z[0]]
    for j in range(1, M + 1):
        l, odd = divmod(j, 2)
        if odd:
            expected = composition_sum(bh, w, j, l)
            if z[j] != expected:
                return _no(kind, j + 1, j, method)
        else:
            bh.append(f1**l * (z[j] - composition_sum(bh, w, j, l - 1)))
    return BSeqVerdict(kind, True, M + 1, Series.of(bh), None, method)


def _type2_functional(z: Series, fbar: Series) -> BSeqVerdict:
    M = z.valid_to
    kind, method = BKind.TYPE_II, "functional equation"
    if fbar.valid_to + 1 < M:
        raise TruncationError("fbar too short for the Z-sequence")
    v = shift(fbar, 1).truncate(M)
    v2 = v[2] if M >= 2 else fbar[1]
    residual = list(z.coeffs)
    v_pow = Series.constant(1, M)
    bh = []
    for l in range(M // 2 + 1):
        bl = residual[2 * l] / v2**l
        bh.append(bl)
        for j in range(M + 1):
            residual[j] -= bl * v_pow[j]
        v_pow = mul(v_pow, v)
    for j, r in enumerate(residual):
        if r:
            return _no(kind, j + 1, j, method)
    return BSeqVerdict(kind, True, M + 1, Series.of(bh), None, method)


def type2_b(p: RiordanPair) -> BSeqVerdict:
    """Type-II B-sequence by solving ``Z(t) = Bh(t fbar(t))``.

    The answer is cross-checked against :func:`type2_b_from_z`; a
    disagreement is an internal error.
    """
    require_normalized(p, "type-II B-sequence")
    z = z_sequence(p)
    verdict = _type2_functional(z, comp_inverse(p.f))
    check = type2_b_from_z(z, p.f)
    if not verdict.same_verdict(check):
        raise AssertionError(f"type-II routes disagree: {verdict} vs {check}")
    return verdict


# -- constructing pairs from B-sequences ---------------------------------------


def f_from_type1_b(b: Series, valid_to: int) -> Series:
    """The ``f`` solving ``f = t + t f B(t f)`` to order ``valid_to``.

    Fixed-point iteration; each pass fixes one more coefficient.
    """
    b = _pad(b, valid_to)
    t = t_series(valid_to)
    f = t
    for _ in range(valid_to):
        tf = shift(f, 1).truncate(valid_to)
        f = t + mul(tf, compose(b, tf))
    return f


def g_from_type2_b(bh: Series, f: Series, valid_to: int) -> Series:
    """The ``g`` solving ``g = 1 + t g Bh(t f)``, i.e. ``g = 1/(1 - t Bh(t f))``."""
    if f.valid_to < valid_to - 2:
        raise TruncationError(f"f must be known to order {valid_to - 2}")
    tf = shift(f, 1).truncate(valid_to - 1)
    inner = compose(_pad(bh, valid_to - 1), tf)
    return reciprocal(1 - shift(inner, 1))


def _pad(s: Series, valid_to: int) -> Series:
    """Treat coefficients past ``s.valid_to`` as zero (for finite B-sequences)."""
    if s.valid_to >= valid_to:
        return s.truncate(valid_to)
    return Series.of(s.coeffs, valid_to)


def pair_from_b_sequences(b: Series, bh: Series, valid_to: int) -> RiordanPair:
    """Pair with type-I sequence ``b`` and type-II sequence ``bh``.

    Both sequences are taken as polynomials (zero past their ``valid_to``).
    """
    f = f_from_type1_b(b, valid_to)
    return RiordanPair(g_from_type2_b(bh, f, valid_to), f)


# -- entry-level recurrences ---------------------------------------------------


@dataclass(frozen=True)
class RecurrenceCheck:
    """``depth`` is the deepest row all of whose checked entries passed."""

    ok: bool
    depth: int
    witness: tuple[int, int] | None = None

    def __str__(self) -> str:
        if self.ok:
            return f"VERIFIED to row {self.depth}"
        return f"FAILS at ({self.witness[0]},{self.witness[1]})"


def _equations(tri: Triangle, kind: BKind):
    """Yield ``(m, n, k, base, J)`` for every entry ``(m, k) = (n+1, k)`` the
    recurrence covers; ``base`` is ``d_{n,k-1}`` (type I) or 0 and ``J`` the
    largest ``j`` in the sum."""
    for m in range(1, tri.n_rows):
        n = m - 1
        if kind is BKind.TYPE_I:
            for k in range(1, m + 1):
                yield m, n, k, tri[n, k - 1], (n - k) // 2
        else:
            yield m, n, 0, Fraction(0), n // 2


def verify_b_recurrence(tri: Triangle, b: Series, kind: BKind) -> RecurrenceCheck:
    """Check the B recurrence entry by entry.

    Rows whose recurrence would need ``b_j`` past ``b.valid_to`` are not
    checked; ``depth`` reports how far the check got.
    """
    depth = 0
    for m, n, k, base, J in _equations(tri, kind):
        if J > b.valid_to:
            return RecurrenceCheck(True, depth)
        rhs = base + sum((b[j] * tri[n - j, k + j] for j in range(J + 1)), Fraction(0))
        if tri[m, k] != rhs:
            return RecurrenceCheck(False, m - 1, (m, k))
        depth = m
    return RecurrenceCheck(True, depth)


def solve_b_from_triangle(tri: Triangle, kind: BKind) -> tuple[Series | None, RecurrenceCheck]:
    """Entry-level existence test: solve ``b_j`` from the entries that first
    involve it and verify all the others.

    Independent of the generating-function machinery.  Returns the solved
    prefix (None on failure) and the check result.
    """
    b: list[Fraction] = []
    depth = 0
    for m, n, k, base, J in _equations(tri, kind):
        known = sum((b[j] * tri[n - j, k + j] for j in range(min(J + 1, len(b)))), Fraction(0))
        if J == len(b):
            pivot = tri[n - J, k + J]
            if not pivot:
                raise StructuralError(f"zero pivot at ({n - J},{k + J})")
            b.append((tri[m, k] - base - known) / pivot)
        elif tri[m, k] != base + known:
            return None, RecurrenceCheck(False, m - 1, (m, k))
        depth = m
    return (Series.of(b) if b else None), RecurrenceCheck(True, depth)


# -- Bell pairs ------------------------------------------------------------------


@dataclass(frozen=True)
class BellReport:
    is_bell: bool
    bell_witness: int | None
    type1: BSeqVerdict
    type2: BSeqVerdict
    consistent: bool

    @property
    def same_sequences(self) -> bool:
        return (
            self.type1.exists
            and self.type2.exists
            and agree(self.type1.b_seq, self.type2.b_seq)
        )


def _bell_witness(p: RiordanPair) -> int | None:
    """First ``j`` with ``f_j != g_{j-1}``, or None if ``f = t g`` as far as known."""
    return first_difference(p.f, shift(p.g, 1))


def bell_b_equivalence(p: RiordanPair) -> BellReport:
    """Test: ``f = t g`` iff (both B-sequences exist and coincide, or neither exists).

    The pair is first truncated so that ``f`` is known one order beyond
    ``g``; then both verdicts decide the same identity for ``g`` to the
    same power of ``t``.
    """
    require_normalized(p, "Bell B-sequence comparison")
    gv = min(p.g.valid_to, p.f.valid_to - 1)
    q = RiordanPair(p.g.truncate(gv), p.f.truncate(gv + 1))
    witness = _bell_witness(q)
    is_bell = witness is None
    v1 = type1_b_functional(a_sequence(q))
    v2 = type2_b(q)
    both_equal = v1.exists and v2.exists and agree(v1.b_seq, v2.b_seq)
    if is_bell:
        consistent = both_equal or (not v1.exists and not v2.exists)
    else:
        consistent = not both_equal
    return BellReport(is_bell, witness, v1, v2, consistent)
