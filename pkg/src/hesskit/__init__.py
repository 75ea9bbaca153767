"""Combinatorics of Hessenberg and Springer varieties.

Enumerate permissible diagram fillings and their dimension pairs, map
fillings to monomials and back, build the four branching-tree constructions,
and verify the counting identities against exact polynomial algebra.
"""

from .core import (
    ConstraintViolation,
    DimensionPairSet,
    Filling,
    HessenbergDiagram,
    HessenbergFunction,
    HesskitError,
    Monomial,
    NotInBasis,
    NotPermissible,
    PartialFilling,
    SizeLimitExceeded,
    betti_numbers,
    degree_tuple,
    dimension_ordering,
    dimension_pairs,
    dimension_pairs_partial,
    enumerate_fillings,
    has_subfilling_property,
    hessenberg_diagram,
    hessenberg_functions,
    is_partition,
    is_permissible,
    is_row_strict,
    make_hessenberg,
    nu_tuple,
    phi,
    subfilling,
)
from .polyalg import (
    LEX,
    InfiniteStaircase,
    MonomialOrder,
    Polynomial,
    ZeroPolynomial,
    is_groebner,
    jh_generators,
    leading_term,
    modified_complete_symmetric,
    reduce,
    s_polynomial,
    standard_monomials,
)
from .regnilp import (
    b_h_basis,
    build_h_tableau_tree,
    build_h_tree,
    h_permissible_positions,
    psi_h,
    verify_counts,
)
from .springer import (
    build_gp_tree,
    build_modified_gp_tree,
    enumerate_row_strict,
    garsia_procesi_basis,
    psi,
)
from .trees import LabeledTree, TreeNode

__version__ = "0.1.0"

__all__ = [
    "ConstraintViolation",
    "DimensionPairSet",
    "Filling",
    "HessenbergDiagram",
    "HessenbergFunction",
    "HesskitError",
    "InfiniteStaircase",
    "LEX",
    "LabeledTree",
    "Monomial",
    "MonomialOrder",
    "NotInBasis",
    "NotPermissible",
    "PartialFilling",
    "Polynomial",
    "SizeLimitExceeded",
    "TreeNode",
    "ZeroPolynomial",
    "b_h_basis",
    "betti_numbers",
    "build_gp_tree",
    "build_h_tableau_tree",
    "build_h_tree",
    "build_modified_gp_tree",
    "degree_tuple",
    "dimension_ordering",
    "dimension_pairs",
    "dimension_pairs_partial",
    "enumerate_fillings",
    "enumerate_row_strict",
    "garsia_procesi_basis",
    "h_permissible_positions",
    "has_subfilling_property",
    "hessenberg_diagram",
    "hessenberg_functions",
    "is_groebner",
    "is_partition",
    "is_permissible",
    "is_row_strict",
    "jh_generators",
    "leading_term",
    "make_hessenberg",
    "modified_complete_symmetric",
    "nu_tuple",
    "phi",
    "psi",
    "psi_h",
    "reduce",
    "s_polynomial",
    "standard_monomials",
    "subfilling",
    "verify_counts",
]
