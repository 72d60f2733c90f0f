"""Command-line front end.

Exit status: 0 on success, 1 on a negative mathematical verdict (the
witness is printed), 2 on malformed input or unusable options.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Sequence

from . import catalog
from .arrays import RiordanPair, Triangle, expand_triangle, invert_pair, multiply_pairs
from .errors import RiordanError
from .groups import (
    SubgroupId,
    inverse_a,
    inverse_z,
    is_member,
    product_a,
    product_z,
    random_member,
)
from .pascal import classify_pascal_like_b, is_pascal_like
from .sequences import (
    BKind,
    a_sequence,
    a_z_from_triangle,
    pair_from_a_z,
    solve_b_from_triangle,
    type1_b,
    type2_b,
    verify_b_recurrence,
    z_sequence,
)
from .series import Series, first_difference
from .textio import (
    format_rational,
    parse_input,
    parse_rational,
    parse_series,
    serialize_pair,
    serialize_triangle,
)

EXIT_OK, EXIT_NO, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _compact(s: Series) -> str:
    return ",".join(format_rational(c) for c in s.coeffs)


class Report:
    """Collects ``key: value`` fields; plain output prints a summary line."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.fields: list[tuple[str, str]] = []
        self.plain: list[str] = []

    def add(self, key: str, value, plain: str | None = None) -> None:
        self.fields.append((key, str(value)))
        if plain is not None:
            self.plain.append(plain)

    def text(self) -> str:
        if self.fmt == "structured":
            return "\n".join(f"{k}: {v}" for k, v in self.fields)
        return "\n".join(self.plain)


_NAME = re.compile(r"^(\w+)(?:[(:]([^)]*)\)?)?$")


def _named(ref: str, order: int) -> RiordanPair:
    m = _NAME.match(ref.strip())
    if not m:
        raise InputError(f"bad catalog reference {ref!r}")
    params = [p for p in (m.group(2) or "").replace(":", ",").split(",") if p.strip()]
    try:
        values = [parse_rational(p) for p in params]
    except RiordanError as e:
        raise InputError(str(e)) from e
    return catalog.named_pair(m.group(1), values, order)


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if path.exists():
        return path.read_text()
    # inline text, with literal \n accepted for convenience
    return source.replace("\\n", "\n")


def _inputs(args) -> list[RiordanPair | Triangle | Series]:
    items: list = []
    for ref in args.name or []:
        items.append(_named(ref, args.order))
    if args.random:
        sub = SubgroupId.parse(args.random)
        items.append(random_member(sub, args.seed, args.order))
    for src in args.inputs:
        items.append(parse_input(_read(src)))
    return items


def _pairs(args, count: int) -> list[RiordanPair]:
    items = _inputs(args)
    pairs = [x for x in items if isinstance(x, RiordanPair)]
    if len(pairs) != count or len(items) != count:
        raise InputError(f"{args.verb} needs exactly {count} pair(s) (use --name or a g:/f: input)")
    return [p.truncate(args.order) for p in pairs]


def _one(args) -> RiordanPair | Triangle:
    items = _inputs(args)
    if len(items) != 1 or isinstance(items[0], Series):
        raise InputError(f"{args.verb} needs exactly one pair or triangle")
    x = items[0]
    return x.truncate(args.order) if isinstance(x, RiordanPair) else x


# -- verbs -------------------------------------------------------------------------


def cmd_expand(args, rep: Report) -> int:
    p = _pairs(args, 1)[0]
    rows = args.rows if args.rows else p.valid_to + 1
    tri = expand_triangle(p, rows)
    rep.add("rows", rows)
    rep.add("triangle", serialize_triangle(tri).replace("\n", " / "), serialize_triangle(tri))
    return EXIT_OK


def _a_z(args) -> tuple[Series, Series, str]:
    x = _one(args)
    if isinstance(x, Triangle):
        r = a_z_from_triangle(x)
        return r.a_seq, r.z_seq, f"certified to row {r.certified_to}"
    return a_sequence(x), z_sequence(x), f"valid to order {x.valid_to}"


def cmd_aseq(args, rep: Report) -> int:
    a, _, note = _a_z(args)
    rep.add("A", _compact(a), f"A = {_compact(a)} ({note})")
    rep.add("valid_to", a.valid_to)
    return EXIT_OK


def cmd_zseq(args, rep: Report) -> int:
    _, z, note = _a_z(args)
    rep.add("Z", _compact(z), f"Z = {_compact(z)} ({note})")
    rep.add("valid_to", z.valid_to)
    return EXIT_OK


def _no_reason(kind: BKind, witness: int, x: Series) -> str:
    name = "a" if kind is BKind.TYPE_I else "z"
    if kind is BKind.TYPE_II and witness == 1:
        return f"z_1 = {format_rational(x[1])} != 0"
    return f"constraint on {name}_{witness} violated"


def cmd_bseq(args, rep: Report) -> int:
    p = _pairs(args, 1)[0]
    kind = BKind.TYPE_I if args.type == 1 else BKind.TYPE_II
    v = type1_b(p, args.method) if kind is BKind.TYPE_I else type2_b(p)
    rep.add("type", args.type)
    rep.add("exists", "yes" if v.exists else "no")
    rep.add("order", v.order)
    if v.exists:
        rep.add("B", _compact(v.b_seq), f"B = {_compact(v.b_seq)} ({v})")
        return EXIT_OK
    seq = a_sequence(p) if kind is BKind.TYPE_I else z_sequence(p)
    reason = _no_reason(kind, v.witness, seq)
    rep.add("witness", v.witness)
    rep.add("reason", reason, f"NO: {reason} ({v})")
    return EXIT_NO


def cmd_mul(args, rep: Report) -> int:
    p1, p2 = _pairs(args, 2)
    p3 = multiply_pairs(p1, p2)
    a1, z1, a2, z2 = a_sequence(p1), z_sequence(p1), a_sequence(p2), z_sequence(p2)
    ok = first_difference(product_a(a1, a2), a_sequence(p3)) is None and (
        first_difference(product_z(a1, z1, a2, z2), z_sequence(p3)) is None
    )
    rep.add("product", serialize_pair(p3).replace("\n", " / "), serialize_pair(p3))
    rep.add("formula_check", "agree" if ok else "DISAGREE", f"A/Z product formulas: {'agree' if ok else 'DISAGREE'}")
    return EXIT_OK if ok else EXIT_NO


def cmd_inv(args, rep: Report) -> int:
    p = _pairs(args, 1)[0]
    q = invert_pair(p)
    a, z = a_sequence(p), z_sequence(p)
    ok = first_difference(inverse_a(a), a_sequence(q)) is None and (
        first_difference(inverse_z(a, z), z_sequence(q)) is None
    )
    rep.add("inverse", serialize_pair(q).replace("\n", " / "), serialize_pair(q))
    rep.add("formula_check", "agree" if ok else "DISAGREE", f"A/Z inverse formulas: {'agree' if ok else 'DISAGREE'}")
    return EXIT_OK if ok else EXIT_NO


def cmd_check(args, rep: Report) -> int:
    if not args.subgroup:
        raise InputError("check needs --subgroup (a subgroup id or PascalLike)")
    x = _one(args)
    if args.subgroup.lower() in ("pascallike", "pascal-like", "pascal_like"):
        tri = x if isinstance(x, Triangle) else expand_triangle(x, x.valid_to + 1)
        ok, bad = is_pascal_like(tri)
        if not ok:
            rep.add("pascal_like", "no", f"NOT PASCAL-LIKE, witness {bad}")
            rep.add("witness", bad)
            return EXIT_NO
        rep.add("pascal_like", "yes", f"PASCAL-LIKE to row {tri.n_rows - 1}")
        if isinstance(x, RiordanPair):
            c = classify_pascal_like_b(x)
            rep.add("classification", c, str(c))
        return EXIT_OK
    if isinstance(x, Triangle):
        raise InputError("subgroup checks need a pair")
    m = is_member(x, SubgroupId.parse(args.subgroup))
    rep.add("member", "yes" if m else "no", str(m))
    rep.add("order", m.order)
    if not m:
        rep.add("witness", m.witness)
        rep.add("condition", m.condition)
        return EXIT_NO
    return EXIT_OK


def cmd_catalog(args, rep: Report) -> int:
    if args.name:
        p = _pairs(args, 1)[0]
        rep.add("pair", serialize_pair(p).replace("\n", " / "), serialize_pair(p))
        return EXIT_OK
    for name in catalog.catalog_names():
        e = catalog.CATALOG[name]
        rep.add(name, e.description)
    listing = catalog.catalog_listing()
    rep.plain.append(listing)
    return EXIT_OK


def cmd_verify(args, rep: Report) -> int:
    x = _one(args)
    kind = BKind.TYPE_I if args.type == 1 else BKind.TYPE_II
    tri = x if isinstance(x, Triangle) else expand_triangle(x, x.valid_to + 1)
    if args.b:
        b = parse_series(args.b)
        check = verify_b_recurrence(tri, b, kind)
    else:
        b, check = solve_b_from_triangle(tri, kind)
        if b is not None:
            rep.add("B", _compact(b), f"B = {_compact(b)}")
    rep.add("result", check, str(check))
    if not check.ok:
        rep.add("witness", check.witness)
        return EXIT_NO
    return EXIT_OK


def cmd_roundtrip(args, rep: Report) -> int:
    p = _pairs(args, 1)[0]
    q = pair_from_a_z(a_sequence(p), z_sequence(p))
    n = min(p.valid_to, q.valid_to)
    dg = first_difference(p.g.truncate(n), q.g.truncate(n))
    df = first_difference(p.f.truncate(n), q.f.truncate(n))
    ok = dg is None and df is None
    rep.add("roundtrip", "ok" if ok else "FAILED", f"round trip through A/Z: {'ok' if ok else 'FAILED'} to order {n}")
    rep.add("order", n)
    return EXIT_OK if ok else EXIT_NO


VERBS = {
    "expand": (cmd_expand, "expand a pair into its triangle"),
    "aseq": (cmd_aseq, "A-sequence of a pair or triangle"),
    "zseq": (cmd_zseq, "Z-sequence of a pair or triangle"),
    "bseq": (cmd_bseq, "type-I or type-II B-sequence of a pair"),
    "mul": (cmd_mul, "product of two pairs, with the A/Z product formulas checked"),
    "inv": (cmd_inv, "inverse of a pair, with the A/Z inverse formulas checked"),
    "check": (cmd_check, "subgroup membership or Pascal-like test"),
    "catalog": (cmd_catalog, "list built-in matrices or print one"),
    "verify": (cmd_verify, "check a B-recurrence entry by entry"),
    "roundtrip": (cmd_roundtrip, "rebuild a pair from its A- and Z-sequences"),
}


def _order(text: str) -> int:
    n = int(text)
    if n < 4:
        raise argparse.ArgumentTypeError("order must be at least 4")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("inputs", nargs="*", help="files, '-' for stdin, or inline text")
    common.add_argument("--order", type=_order, default=16)
    common.add_argument("--format", choices=("plain", "structured"), default="plain")
    common.add_argument("--name", action="append", help="catalog entry, e.g. pascal or gen_pascal(2)")
    common.add_argument("--random", metavar="SUBGROUP", help="random member of a subgroup")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="riordan", description="Exact Riordan array calculus.")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, (_, help_text) in VERBS.items():
        sp = sub.add_parser(verb, parents=[common], help=help_text)
        if verb == "expand":
            sp.add_argument("--rows", type=int)
        if verb in ("bseq", "verify"):
            sp.add_argument("--type", type=int, choices=(1, 2), default=1)
        if verb == "bseq":
            sp.add_argument("--method", choices=("functional", "a", "f"), default="functional")
        if verb == "verify":
            sp.add_argument("--b", help="candidate B-sequence, comma separated")
        if verb == "check":
            sp.add_argument("--subgroup")
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    rep = Report(args.format)
    handler = VERBS[args.verb][0]
    try:
        code = handler(args, rep)
    except (InputError, RiordanError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    print(rep.text(), file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
