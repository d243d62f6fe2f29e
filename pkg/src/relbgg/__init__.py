"""Exact integer toolkit for nested parabolic pairs in semisimple Lie algebras.

Given a diagram type and two nested crossed-node sets, the package computes
the induced bigrading and its filtration modules, tangent-bundle subquotient
ranks, algebraic torsion-admissibility verdicts, and the shapes of relative
BGG sequences, all in exact integer arithmetic, with an elementary-matrix
realization of sl(m) as an independent cross-check.
"""

from .bgg import (
    BGGEntry,
    BGGSequence,
    HasseDiagram,
    InternalCheckError,
    WeylWord,
    affine_act,
    operator_order,
    relative_bgg_sequence,
    relative_hasse,
)
from .dynkin import DynkinLabel, LabelVerdict, parse_label, print_label, validate_label
from .grading import (
    AdditivityReport,
    Bidegree,
    BigradedComponent,
    Bigrading,
    FiltrationReport,
    ModuleDescriptor,
    ParabolicPair,
    RankReport,
    SubalgebraInfo,
    bigrade,
    bidegree_of_root,
    filtration,
    sigma_height,
    subalgebra_profile,
    tangent_ranks,
    verify_bracket_additivity,
)
from .oracle import (
    BlockStructure,
    OracleReport,
    block_structure_from_pair,
    commutator_audit,
    p_plus_action_audit,
)
from .roots import (
    Root,
    RootSystem,
    Weight,
    build_root_system,
    pairing,
    reflect,
    root_to_weight,
)
from .torsion import (
    Corollary33Verdict,
    Geometry,
    TorsionComponent,
    TorsionSupport,
    TorsionVerdict,
    catalog,
    corollary_33_check,
    involutivity_check,
    legendrean_catalog,
    path_geometry_catalog,
    theorem_322_check,
)

__version__ = "0.1.0"

__all__ = [
    "AdditivityReport",
    "BGGEntry",
    "BGGSequence",
    "Bidegree",
    "BigradedComponent",
    "Bigrading",
    "BlockStructure",
    "Corollary33Verdict",
    "DynkinLabel",
    "FiltrationReport",
    "Geometry",
    "HasseDiagram",
    "InternalCheckError",
    "LabelVerdict",
    "ModuleDescriptor",
    "OracleReport",
    "ParabolicPair",
    "RankReport",
    "Root",
    "RootSystem",
    "SubalgebraInfo",
    "TorsionComponent",
    "TorsionSupport",
    "TorsionVerdict",
    "WeylWord",
    "Weight",
    "affine_act",
    "bigrade",
    "bidegree_of_root",
    "block_structure_from_pair",
    "build_root_system",
    "catalog",
    "commutator_audit",
    "corollary_33_check",
    "filtration",
    "involutivity_check",
    "legendrean_catalog",
    "operator_order",
    "p_plus_action_audit",
    "pairing",
    "parse_label",
    "path_geometry_catalog",
    "print_label",
    "reflect",
    "relative_bgg_sequence",
    "relative_hasse",
    "root_to_weight",
    "sigma_height",
    "subalgebra_profile",
    "tangent_ranks",
    "theorem_322_check",
    "validate_label",
    "verify_bracket_additivity",
]
