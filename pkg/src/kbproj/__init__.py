"""Calculator for the bounded homotopy category of the one-cycle gentle
algebras: path combinatorics, an exact chain-level oracle, the indexed
family of indecomposable complexes, closed-form hom spaces with explicit
basis maps, the two-coefficient model category with its comparison
functor, and the rigidity toolkit (conjugation construction, standard
triangles, connecting-isomorphism normal forms).
"""

from __future__ import annotations

from .algebra import AlgebraSpec, Path, PathCombination
from .basismaps import hom_dim, in_phi, in_psi, irr_targets_quadruple, phi_map, psi_map
from .complexes import (
    ChainMap,
    ProjComplex,
    SCHEMA_VERSION,
    clear_caches,
    hom_space,
    hom_space_dimension,
    homotopy_rank,
    is_isomorphic_K,
    is_null_homotopic,
    mapping_cone,
    shift,
    validate_chain_map,
)
from .gamma import (
    GammaHom,
    GammaVertex,
    gamma_compose,
    gamma_hom_dim,
    in_F,
    in_G,
    irreducible_targets,
    is_shifted_projective,
    suspend_vertex,
    theta_hom,
    theta_vertex,
)
from .quadruples import (
    Quadruple,
    build_complex,
    enumerate_quadruples,
    enumerate_strings,
    in_calC,
    string_to_quadruple,
    suspend_quadruple,
)
from .rigidity import (
    AutomorphismFamily,
    ConnectingIsoData,
    InvalidPseudoIdentity,
    PseudoIdentityData,
    StandardTriangle,
    TriangleCertificationError,
    build_eta,
    coniso_normal_form,
    construct_conjugation,
    random_pseudo_identity,
    standard_triangle,
    validate_pseudo_identity,
    verify_naturality,
)

__all__ = [
    "AlgebraSpec",
    "AutomorphismFamily",
    "ChainMap",
    "ConnectingIsoData",
    "GammaHom",
    "GammaVertex",
    "InvalidPseudoIdentity",
    "Path",
    "PathCombination",
    "ProjComplex",
    "PseudoIdentityData",
    "Quadruple",
    "SCHEMA_VERSION",
    "StandardTriangle",
    "TriangleCertificationError",
    "build_complex",
    "build_eta",
    "clear_caches",
    "coniso_normal_form",
    "construct_conjugation",
    "enumerate_quadruples",
    "enumerate_strings",
    "gamma_compose",
    "gamma_hom_dim",
    "hom_dim",
    "hom_space",
    "hom_space_dimension",
    "homotopy_rank",
    "in_F",
    "in_G",
    "in_calC",
    "in_phi",
    "in_psi",
    "irr_targets_quadruple",
    "irreducible_targets",
    "is_isomorphic_K",
    "is_null_homotopic",
    "is_shifted_projective",
    "mapping_cone",
    "phi_map",
    "psi_map",
    "random_pseudo_identity",
    "shift",
    "standard_triangle",
    "string_to_quadruple",
    "suspend_quadruple",
    "suspend_vertex",
    "theta_hom",
    "theta_vertex",
    "validate_chain_map",
    "validate_pseudo_identity",
    "verify_naturality",
]

__version__ = "0.1.0"
