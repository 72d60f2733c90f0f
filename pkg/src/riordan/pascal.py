"""Pascal-like Riordan matrices: palindromic rows with unit borders.

For such a matrix with A-sequence ``(1, a_1, a_2, ...)``:

* the sub-diagonal is ``p_{n,n-1} = 1 + (n-1) a_1``;
* ``a_2 = a_1 (1 - a_1)``;
* for ``j >= 2``, ``a_j = (j-1) a_1 (1-a_1) - sum_{i=2}^{j-1} a_i p_{j,i}``,
  which comes from equating ``p_{j,1}`` and ``p_{j,j-1}``;
* over the integers, ``a_2`` divides every ``a_j`` with ``j >= 2``.

Only ``a_1 in {0, 1}`` gives a type-I B-sequence: ``(1/(1-t), t)`` and the
Pascal matrix itself.  Every Pascal-like Riordan pair has ``g = 1/(1-t)``,
so its type-II B-sequence is always ``(1, 0, 0, ...)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arrays import RiordanPair, Triangle, expand_triangle
from .errors import NotApplicableError, StructuralError
from .series import Series, to_fraction
from .sequences import BSeqVerdict, a_sequence, pair_from_a_z, type1_b_from_a, type2_b


def is_pascal_like(tri: Triangle) -> tuple[bool, tuple[int, int] | None]:
    """``(True, None)`` or ``(False, (n, k))`` for the first bad entry."""
    if tri.n_rows < 1:
        raise StructuralError("empty triangle")
    for n, row in enumerate(tri.rows):
        if row[0] != 1:
            return False, (n, 0)
        if row[n] != 1:
            return False, (n, n)
        for k in range(1, n // 2 + 1):
            if row[k] != row[n - k]:
                return False, (n, k)
    return True, None


@dataclass(frozen=True)
class ConstraintCheck:
    name: str
    passed: bool
    witness: int | None = None


@dataclass(frozen=True)
class PascalLikeReport:
    is_pascal_like: bool
    depth: int
    a1: Fraction
    a_seq: Series
    constraint_checks: tuple[ConstraintCheck, ...] = field(default_factory=tuple)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.constraint_checks)

    def check(self, name: str) -> ConstraintCheck:
        for c in self.constraint_checks:
            if c.name == name:
                return c
        raise KeyError(name)


def a_recursion(a: Series, tri: Triangle, j: int) -> Fraction:
    """Right-hand side of the recursion giving ``a_j`` from ``a_1..a_{j-1}`` and row ``j``."""
    a1 = a[1]
    return (j - 1) * a1 * (1 - a1) - sum((a[i] * tri[j, i] for i in range(2, j)), Fraction(0))


def _is_integral(a: Series, upto: int) -> bool:
    return all(a[j].denominator == 1 for j in range(upto + 1))


def pascal_like_a_constraints(p: RiordanPair, depth: int) -> PascalLikeReport:
    """Check the A-sequence structure of a Pascal-like Riordan pair.

    ``depth`` is the last row examined (rows ``0..depth``).
    """
    tri = expand_triangle(p, depth + 1)
    ok, bad = is_pascal_like(tri)
    if not ok:
        raise NotApplicableError(
            f"constraints not applicable: triangle is not Pascal-like at {bad}"
        )
    a = a_sequence(p)
    if a.valid_to < min(depth, 2):
        raise StructuralError("pair is not known deeply enough for its A-sequence")
    top = min(depth, a.valid_to)
    a1 = a[1]
    checks = [ConstraintCheck("a0 = 1", a[0] == 1, None if a[0] == 1 else 0)]

    a2_ok = top < 2 or a[2] == a1 * (1 - a1)
    checks.append(ConstraintCheck("a2 = a1(1-a1)", a2_ok, None if a2_ok else 2))

    bad_row = next((n for n in range(1, depth + 1) if tri[n, n - 1] != 1 + (n - 1) * a1), None)
    checks.append(ConstraintCheck("sub-diagonal 1+(n-1)a1", bad_row is None, bad_row))

    bad_j = next((j for j in range(2, top + 1) if a[j] != a_recursion(a, tri, j)), None)
    checks.append(ConstraintCheck("a_j recursion", bad_j is None, bad_j))

    if top >= 2:
        if _is_integral(a, top) and a[2]:
            a2 = int(a[2])
            bad_div = next((j for j in range(2, top + 1) if int(a[j]) % a2), None)
            name = "a2 | a_j (integers)"
        else:
            # over a field divisibility only says something when a2 = 0
            bad_div = None
            if not a[2]:
                bad_div = next((j for j in range(2, top + 1) if a[j]), None)
            name = "a2 = 0 => a_j = 0"
        checks.append(ConstraintCheck(name, bad_div is None, bad_div))
    return PascalLikeReport(True, depth, a1, a, tuple(checks))


def pascal_like_pair(a1, order: int) -> RiordanPair:
    """Pascal-like Riordan pair with prescribed ``a_1``, valid to ``order``.

    Builds the triangle row by row from the A-recurrence with a unit first
    column, choosing each new ``a_{n-1}`` so that ``p_{n,1} = p_{n,n-1}``;
    the Z-sequence is then solved row by row so the first column stays 1.
    """
    a1 = to_fraction(a1)
    a = [Fraction(1), a1]
    rows: list[list[Fraction]] = [[Fraction(1)], [Fraction(1), Fraction(1)]]
    for n in range(2, order + 1):
        prev = rows[n - 1]
        row = [Fraction(1)] + [Fraction(0)] * n
        for k in range(2, n + 1):
            row[k] = sum((a[j] * prev[k - 1 + j] for j in range(n - k + 1)), Fraction(0))
        if n == 2:
            row[1] = 1 + a1
        else:
            # p_{n,1} = sum_{j<n-1} a_j p_{n-1,j} + a_{n-1} p_{n-1,n-1} must equal p_{n,n-1}
            partial = sum((a[j] * prev[j] for j in range(n - 1)), Fraction(0))
            a.append((row[n - 1] - partial) / prev[n - 1])
            row[1] = row[n - 1]
        rows.append(row)
    z: list[Fraction] = []
    for n in range(order):
        s = sum((z[j] * rows[n][j] for j in range(n)), Fraction(0))
        z.append((1 - s) / rows[n][n])
    return pair_from_a_z(Series.of(a[:order]), Series.of(z))


@dataclass(frozen=True)
class PascalLikeClassification:
    a1: Fraction
    identified: str | None
    type1: BSeqVerdict
    type2: BSeqVerdict
    agrees: bool

    def __str__(self) -> str:
        if self.identified:
            return (
                f"{self.identified}: type-I B = {self.type1.b_seq}, "
                f"type-II B = {self.type2.b_seq}"
            )
        return (
            f"a1 = {self.a1}: no type-I B-sequence ({self.type1}); "
            f"type-II B = {self.type2.b_seq}"
        )


def classify_pascal_like_b(p: RiordanPair) -> PascalLikeClassification:
    """Place a Pascal-like pair in the B-sequence dichotomy and confirm it.

    ``agrees`` is True when the computed verdicts match what the
    classification predicts.
    """
    tri = expand_triangle(p, p.valid_to + 1)
    ok, bad = is_pascal_like(tri)
    if not ok:
        raise NotApplicableError(f"not Pascal-like at {bad}")
    a = a_sequence(p)
    v1 = type1_b_from_a(a)
    v2 = type2_b(p)
    a1 = a[1]

    def zeros_but(head):
        return lambda s: s is not None and all(
            s[j] == (head[j] if j < len(head) else 0) for j in range(s.valid_to + 1)
        )

    if a1 == 0:
        name = "(1/(1-t), t)"
        agrees = v1.exists and v2.exists and zeros_but([])(v1.b_seq) and zeros_but([1])(v2.b_seq)
    elif a1 == 1:
        name = "Pascal"
        agrees = v1.exists and v2.exists and zeros_but([1])(v1.b_seq) and zeros_but([1])(v2.b_seq)
    else:
        name = None
        # the first column is all ones, so g = 1/(1-t) and type-II always exists
        agrees = not v1.exists and v1.witness == 2 and v2.exists and zeros_but([1])(v2.b_seq)
    return PascalLikeClassification(a1, name, v1, v2, agrees)
