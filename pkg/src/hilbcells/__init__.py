"""Cell bases for Hilbert schemes of points in the plane.

Staircase combinatorics, dominance and weight orders, the duality
involution on cell triples, and the necessary-condition mask for
non-vanishing products of cell classes.
"""

from .bb import FixedPointTable, LatticePolygon, intersection_allowed, toric_cell_signs, toric_phi
from .cup import PairingMask, check_upper_triangular, may_be_nonzero, pairing_mask
from .generic_ideals import generic_punctual, generic_staircase, generic_staircase_explicit
from .orders import (
    CoverSet,
    OrderResult,
    cover_relations,
    dominance_compare,
    is_generic_lambda,
    lambda_compare,
    mu_compare,
    nu_compare,
    refinement_extra_edges,
    xi_compare,
)
from .staircases import StandardSet, enumerate_staircases, shape_stats
from .triples import (
    Triple,
    UniversalCmp,
    basis,
    betti,
    enumerate_triples,
    iota,
    triple_compare,
    triple_leq_universal,
)
from .weights import Weight3, asymptotic_sign, embed, phi, validate_w, validate_wprime

__all__ = [
    "CoverSet",
    "FixedPointTable",
    "LatticePolygon",
    "OrderResult",
    "PairingMask",
    "StandardSet",
    "Triple",
    "UniversalCmp",
    "Weight3",
    "asymptotic_sign",
    "basis",
    "betti",
    "check_upper_triangular",
    "cover_relations",
    "dominance_compare",
    "embed",
    "enumerate_staircases",
    "enumerate_triples",
    "generic_punctual",
    "generic_staircase",
    "generic_staircase_explicit",
    "intersection_allowed",
    "iota",
    "is_generic_lambda",
    "lambda_compare",
    "may_be_nonzero",
    "mu_compare",
    "nu_compare",
    "pairing_mask",
    "phi",
    "refinement_extra_edges",
    "shape_stats",
    "toric_cell_signs",
    "toric_phi",
    "triple_compare",
    "triple_leq_universal",
    "validate_w",
    "validate_wprime",
    "xi_compare",
]
