"""Exact structure-constant engine for the Lie algebras Iu_n and gl_{n+}^eps.

Thin Python surface over the C++ core: builders, verification predicates,
series dimensions, symmetry enumeration and the sc-v1 table format.
"""

from lieforge._core import (  # noqa: F401
    LieAlgebra,
    LieforgeError,
    build_un,
    build_ln_eps,
    build_gln,
    build_Iu,
    build_glpluseps,
    coadjoint_semidirect,
    manin_double,
    sl_restrict,
    diamond,
    derived_series_dims,
    layer_series_dims,
    center_dim,
    is_solvable,
    is_automorphism,
    enumerate_symmetries,
    length_of,
    layer_of,
    psi_preserves_length,
    verify_layer_table,
    verify_metric_layers,
    emit_sc,
    parse_sc,
)

__all__ = [
    "LieAlgebra",
    "LieforgeError",
    "build_un",
    "build_ln_eps",
    "build_gln",
    "build_Iu",
    "build_glpluseps",
    "coadjoint_semidirect",
    "manin_double",
    "sl_restrict",
    "diamond",
    "derived_series_dims",
    "layer_series_dims",
    "center_dim",
    "is_solvable",
    "is_automorphism",
    "enumerate_symmetries",
    "length_of",
    "layer_of",
    "psi_preserves_length",
    "verify_layer_table",
    "verify_metric_layers",
    "emit_sc",
    "parse_sc",
]
