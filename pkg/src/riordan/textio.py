"""Plain-text grammars for series, pairs and triangles.

* series:   ``1, 1/2, -3`` (comma separated, whitespace ignored)
* pair:     two lines ``g: <series>`` and ``f: <series>``
* triangle: one row per line, entries separated by spaces

A series is valid to the last listed coefficient.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .arrays import RiordanPair, Triangle
from .errors import NotProperPairError, ParseError
from .series import Series

_RATIONAL = re.compile(r"^[+-]?\d+(?:/[+-]?\d+)?$")


def _rational(token: str, line: int, column: int) -> Fraction:
    if not _RATIONAL.match(token):
        raise ParseError(f"malformed rational {token!r}", line, column)
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {token!r}", line, column)
    return Fraction(int(num), int(den) if den else 1)


def parse_rational(token: str) -> Fraction:
    return _rational(token.strip(), 1, 1)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _series_from_line(text: str, line: int, offset: int) -> Series:
    coeffs = []
    col = offset
    for piece in text.split(","):
        token = piece.strip()
        start = col + (len(piece) - len(piece.lstrip()))
        if not token:
            raise ParseError("empty coefficient", line, start + 1)
        coeffs.append(_rational(token, line, start + 1))
        col += len(piece) + 1
    return Series.of(coeffs)


def parse_series(text: str) -> Series:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ParseError("a series is a single line of comma-separated rationals", 1, 1)
    line_no = text.splitlines().index(lines[0]) + 1
    return _series_from_line(lines[0], line_no, 0)


def serialize_series(s: Series) -> str:
    return ", ".join(format_rational(c) for c in s.coeffs)


def parse_pair(text: str) -> RiordanPair:
    found: dict[str, Series] = {}
    for i, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        label, sep, rest = raw.partition(":")
        key = label.strip()
        if not sep or key not in ("g", "f"):
            raise ParseError("expected a 'g:' or 'f:' label", i, 1)
        if key in found:
            raise ParseError(f"duplicate {key}: line", i, 1)
        found[key] = _series_from_line(rest, i, len(label) + 1)
    for key in ("g", "f"):
        if key not in found:
            raise ParseError(f"missing {key}: label", max(1, len(text.splitlines())), 1)
    try:
        return RiordanPair(found["g"], found["f"])
    except NotProperPairError as e:
        raise ParseError(str(e), 1, 1) from e


def serialize_pair(p: RiordanPair) -> str:
    return f"g: {serialize_series(p.g)}\nf: {serialize_series(p.f)}"


def parse_triangle(text: str) -> Triangle:
    rows = []
    for i, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        row = []
        for m in re.finditer(r"\S+", raw):
            row.append(_rational(m.group(), i, m.start() + 1))
        n = len(rows)
        if len(row) != n + 1:
            raise ParseError(f"ragged triangle: row {n} has {len(row)} entries, expected {n + 1}", i, 1)
        rows.append(tuple(row))
    if not rows:
        raise ParseError("empty triangle", 1, 1)
    return Triangle(tuple(rows))


def serialize_triangle(t: Triangle) -> str:
    return "\n".join(" ".join(format_rational(x) for x in row) for row in t.rows)


def parse_input(text: str) -> Series | RiordanPair | Triangle:
    """Guess the grammar: labels mean a pair, commas a series, else a triangle."""
    body = text.strip()
    if not body:
        raise ParseError("empty input", 1, 1)
    if re.match(r"^\s*[gf]\s*:", text, re.MULTILINE):
        return parse_pair(text)
    if "," in body or len(body.splitlines()) == 1 and " " not in body:
        return parse_series(text)
    return parse_triangle(text)
