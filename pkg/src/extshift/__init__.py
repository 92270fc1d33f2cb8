"""Exterior algebraic shifting of uniform hypergraphs and simplicial complexes."""

from .estimators import CombinatorialShift, ExteriorShift, check_field, check_hypergraph, check_permutation
from .fields import GF, QQ, ExtensionField, FieldError, PrimeField, RationalField, parse_field
from .hypergraphs import (
    SimplicialComplex,
    UniformHypergraph,
    combinatorial_shift,
    dominates_leq,
    f_vector,
    family_lex_compare,
    is_shifted,
    lex_compare,
    skeleton,
)
from .permutations import Permutation, inversions, longest_element, parse_permutation, permutation_matrix
from .shifting import (
    FieldTooSmallError,
    ShiftError,
    ShiftResult,
    delta_full,
    delta_las_vegas,
    delta_matrix,
    delta_monte_carlo,
    delta_partial,
    scan_assignments,
    shift,
    shift_complex,
    verify_claimed,
    verify_shift,
)

__version__ = "0.1.0"
