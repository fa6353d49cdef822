"""Exact minimal projective resolutions for a two-vertex quiver algebra.

The package computes, entirely in exact arithmetic, the minimal projective
resolutions (one-sided and bimodule) of a fixed 11-dimensional quiver algebra
with one loop and a pair of opposite arrows, and from the bimodule resolution
the dimensions of its Hochschild cohomology in every characteristic. A slow
structure-agnostic resolution builder over the enveloping algebra is included
for cross-checking.
"""

from .exact_linalg import Field, LinearMap, SpanTracker
from .path_algebra import (
    AlgebraTable,
    BuildError,
    ParseError,
    PRESETS,
    build_algebra,
    parse_presentation,
    preset_presentation,
)
from .one_sided import (
    GszComplex,
    OneSided,
    PresetShape,
    ext_dim_formula,
    free_expansion,
    gsz_sets,
    verify_gsz,
)
from .bimodule import (
    BimoduleResolution,
    hh_dim_formula,
    hom_dim_formula,
    hom_omega_formula,
    term_counts_formula,
    term_labels,
)
from .oracle import EnvelopingAlgebra, OracleResolution, generic_minimal_resolution
from .cli import main

__all__ = [
    "Field",
    "LinearMap",
    "SpanTracker",
    "AlgebraTable",
    "BuildError",
    "ParseError",
    "PRESETS",
    "build_algebra",
    "parse_presentation",
    "preset_presentation",
    "GszComplex",
    "OneSided",
    "PresetShape",
    "ext_dim_formula",
    "free_expansion",
    "gsz_sets",
    "verify_gsz",
    "BimoduleResolution",
    "hh_dim_formula",
    "hom_dim_formula",
    "hom_omega_formula",
    "term_counts_formula",
    "term_labels",
    "EnvelopingAlgebra",
    "OracleResolution",
    "generic_minimal_resolution",
    "main",
]
