"""Standard subalgebras of simple and affine Lie algebras, with exact
closed-form appui subspaces checked against a brute-force oracle."""

from .affine import (
    AffineElement,
    LoopSubspace,
    affine_bracket,
    affine_normalizer,
    build_tau_bar,
    classify_graded,
    verify_standard,
)
from .chevalley import ChevalleyAlgebra, HStableSubspace, chevalley_algebra, structure_constants
from .oracle import appui_oracle, normalizer_oracle
from .rootsys import LieType, RootSystem, build_root_system
from .standard import appui_formula, build_standard, derived_sets, normalizer_finite

__all__ = [
    "AffineElement",
    "ChevalleyAlgebra",
    "HStableSubspace",
    "LieType",
    "LoopSubspace",
    "RootSystem",
    "affine_bracket",
    "affine_normalizer",
    "appui_formula",
    "appui_oracle",
    "build_root_system",
    "build_standard",
    "build_tau_bar",
    "chevalley_algebra",
    "classify_graded",
    "derived_sets",
    "normalizer_finite",
    "normalizer_oracle",
    "structure_constants",
    "verify_standard",
]
