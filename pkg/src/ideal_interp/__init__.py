"""Ideal projectors with good error formulas, in exact rational arithmetic."""
from .conditions import (
    ConditionSet,
    HermiteFunctional,
    RationalMatrix,
    apply_functional,
    collocation_matrix,
    is_poised,
    moller_vanishing_gb,
    rank_and_det,
    validate_conditions,
    vanishing_lex_family,
)
from .errors import (
    DependentConditions,
    DimensionMismatch,
    IdealInterpError,
    NotAGroebnerBasis,
    NotInUniversalClass,
    NotLowerSet,
    NotPoised,
    NotZeroDimensional,
    ParseError,
    SchemaError,
)
from .groebner import (
    GroebnerBasis,
    ReductionResult,
    buchberger_reduced,
    classify_universal,
    escalier,
    lex_escalier_family,
    reduce,
    s_polynomial,
)
from .mindegree import MinimalDegreeReport, is_degree_reducing, minimal_degree_check, projector_minimal_degree
from .order_ideal import CornerSet, OrderIdeal, corner_set, escalier_from_corners, is_lower_set
from .parser import parse_polynomial
from .poly import (
    MonomialOrder,
    Polynomial,
    apply_diff_operator,
    compare_monomials,
    evaluate,
    exponent_leq,
    leading_term,
    poly_arith,
    total_degree,
)
from .problem import ProblemSpec, load_problem
from .projector import (
    ErrorDecomposition,
    GoodFormulaCertificate,
    IdealProjector,
    certify_good_formula,
    check_ideal_projector_laws,
    error_decompose,
    project,
    projector_from_conditions,
    projector_from_corner_images,
)

__version__ = "0.1.0"
