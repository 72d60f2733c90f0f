"""Composition coefficients as explicit sums over compositions and partitions.

For ``C(t) = sum_{j>=1} c_j t^j`` and ``B(t) = sum_k b_k t^k`` the
coefficient of ``t^n`` (``n >= 1``) in ``B(C(t))`` is

    sum over compositions (i_1, ..., i_k) of n:  b_k * c_{i_1} * ... * c_{i_k}

or, collecting like terms,

    sum_{k=1}^{n} b_k * sum over partitions of n into k parts (frequency form
    pi):  multinomial(k; pi) * prod_j c_j ** pi_j.

Both sums are exponential in ``n``.  They are the independent route the
B-sequence formulas are stated in, and an oracle for
:func:`riordan.series.compose`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence


@lru_cache(maxsize=None)
def _compositions_with_parts(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Compositions of n into exactly k positive parts, lexicographic."""
    if k == 1:
        return ((n,),) if n >= 1 else ()
    out = []
    for first in range(1, n - k + 2):
        for rest in _compositions_with_parts(n - first, k - 1):
            out.append((first,) + rest)
    return tuple(out)


@dataclass(frozen=True)
class CompositionSet:
    """All compositions of ``n`` with between 1 and ``max_parts`` parts.

    Ordered by number of parts, then lexicographically.
    """

    n: int
    max_parts: int
    tuples: tuple[tuple[int, ...], ...]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.tuples)

    def __len__(self) -> int:
        return len(self.tuples)

    def __contains__(self, item) -> bool:
        return tuple(item) in self.tuples


def compositions(n: int, max_parts: int) -> CompositionSet:
    if n < 1 or max_parts < 1:
        raise ValueError("compositions need n >= 1 and max_parts >= 1")
    tuples = []
    for k in range(1, min(n, max_parts) + 1):
        tuples.extend(_compositions_with_parts(n, k))
    return CompositionSet(n, max_parts, tuple(tuples))


def _get(seq: Sequence[Fraction], j: int) -> Fraction:
    return seq[j] if 0 <= j < len(seq) else Fraction(0)


def composition_sum(
    outer: Sequence[Fraction],
    inner: Sequence[Fraction],
    n: int,
    max_parts: int | None = None,
) -> Fraction:
    """``sum_{i in D_{n,m}} outer[k] * inner[i_1] * ... * inner[i_k]``.

    ``inner[0]`` is ignored (parts are positive).  ``max_parts`` defaults
    to ``n``; an index set with ``max_parts < 1`` is empty and sums to zero.
    Coefficients past the end of either sequence count as zero.
    """
    if max_parts is None:
        max_parts = n
    if n < 1 or max_parts < 1:
        return Fraction(0)
    total = Fraction(0)
    for parts in compositions(n, max_parts):
        b = _get(outer, len(parts))
        if not b:
            continue
        term = b
        for i in parts:
            term *= _get(inner, i)
            if not term:
                break
        total += term
    return total


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of n into parts <= largest, parts in non-increasing order."""
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_by_parts(n: int, k: int) -> list[tuple[int, ...]]:
    """Partitions of n into exactly k parts, frequency form ``(pi_1, ..., pi_n)``."""
    out = []
    for p in _partitions(n, n):
        if len(p) != k:
            continue
        freq = [0] * n
        for part in p:
            freq[part - 1] += 1
        out.append(tuple(freq))
    return out


def multinomial(k: int, counts: Sequence[int]) -> int:
    return factorial(k) // prod(factorial(c) for c in counts)


def partition_sum(outer: Sequence[Fraction], inner: Sequence[Fraction], n: int) -> Fraction:
    """The same coefficient as :func:`composition_sum` (full index set), by partitions."""
    if n < 1:
        return _get(outer, 0)
    total = Fraction(0)
    for k in range(1, n + 1):
        b = _get(outer, k)
        if not b:
            continue
        inner_sum = Fraction(0)
        for freq in partitions_by_parts(n, k):
            term = Fraction(multinomial(k, freq))
            for j, e in enumerate(freq, start=1):
                if e:
                    term *= _get(inner, j) ** e
            inner_sum += term
        total += b * inner_sum
    return total


def compose_by_compositions(outer: Sequence[Fraction], inner: Sequence[Fraction], n: int) -> list[Fraction]:
    """Coefficients 0..n of ``outer(inner)`` via :func:`composition_sum`."""
    return [_get(outer, 0)] + [composition_sum(outer, inner, m) for m in range(1, n + 1)]


def compose_by_partitions(outer: Sequence[Fraction], inner: Sequence[Fraction], n: int) -> list[Fraction]:
    return [_get(outer, 0)] + [partition_sum(outer, inner, m) for m in range(1, n + 1)]
