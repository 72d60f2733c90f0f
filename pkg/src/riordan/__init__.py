"""Exact Riordan array calculus over the rationals."""

from __future__ import annotations

from .arrays import (
    RiordanPair,
    Triangle,
    apply_to_series,
    expand_triangle,
    identity_pair,
    invert_pair,
    make_pair,
    multiply_pairs,
)
from .catalog import catalog_listing, catalog_names, ex31_b_literal, named_pair, rna_first_column_law, rna_g
from .errors import (
    NotRiordanError,
    ParseError,
    RiordanError,
    StructuralError,
    TruncationError,
)
from .groups import (
    SubgroupId,
    inverse_a,
    inverse_z,
    is_member,
    product_a,
    product_b_identity_check,
    product_z,
    random_member,
)
from .pascal import classify_pascal_like_b, is_pascal_like, pascal_like_a_constraints, pascal_like_pair
from .sequences import (
    BKind,
    BSeqVerdict,
    a_sequence,
    a_z_from_triangle,
    bell_b_equivalence,
    pair_from_a_z,
    pair_from_b_sequences,
    solve_b_from_triangle,
    type1_b,
    type1_b_from_a,
    type1_b_from_f,
    type2_b,
    verify_b_recurrence,
    z_sequence,
)
from .series import Series, comp_inverse, compose, make_series, mul, reciprocal, shift, sqrt_one
from .textio import (
    parse_input,
    parse_pair,
    parse_series,
    parse_triangle,
    serialize_pair,
    serialize_series,
    serialize_triangle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
