"""Exact Groebner basis conversion by the generic Groebner walk."""

from .errors import (
    ArityError,
    DegenerateCrossing,
    EmptyIdeal,
    GroebnerError,
    InvalidInputBasis,
    InvalidOrder,
    NonMonomialNormalForm,
    NotATermOrder,
    ParseError,
    StepCapExceeded,
    W0NotInCone,
)
from .groebner import (
    MarkedBasis,
    autoreduce,
    buchberger,
    cone_contains,
    is_groebner_basis,
    is_reduced,
    s_polynomial,
)
from .orders import (
    MatrixOrder,
    compare,
    degrevlex,
    is_term_order,
    knapsack_source,
    knapsack_target,
    lex,
    named_order,
    parse_order,
    sign,
    weight_refine,
)
from .poly import (
    MarkedPolynomial,
    Polynomial,
    bounding_vectors,
    format_marked,
    format_polynomial,
    initial_form,
    normal_form,
    parse_marked,
    parse_polynomial,
    support,
)
from .toric import (
    FeasibilityResult,
    KnapsackInstance,
    compute_test_set,
    knapsack_ideal,
    sigma_tau_orders,
    solve_feasibility,
)
from .walk import (
    NEG_INF,
    POS_INF,
    WalkOptions,
    WalkTrace,
    classic_walk,
    compute_last_w,
    cone_interior_point,
    facet_cmp,
    facet_initial_forms,
    generic_walk,
    in_crossing_cone,
    lift,
)

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "DegenerateCrossing",
    "EmptyIdeal",
    "GroebnerError",
    "InvalidInputBasis",
    "InvalidOrder",
    "NonMonomialNormalForm",
    "NotATermOrder",
    "ParseError",
    "StepCapExceeded",
    "W0NotInCone",
    "MarkedBasis",
    "autoreduce",
    "buchberger",
    "cone_contains",
    "is_groebner_basis",
    "is_reduced",
    "s_polynomial",
    "MatrixOrder",
    "compare",
    "degrevlex",
    "is_term_order",
    "knapsack_source",
    "knapsack_target",
    "lex",
    "named_order",
    "parse_order",
    "sign",
    "weight_refine",
    "MarkedPolynomial",
    "Polynomial",
    "bounding_vectors",
    "format_marked",
    "format_polynomial",
    "initial_form",
    "normal_form",
    "parse_marked",
    "parse_polynomial",
    "support",
    "FeasibilityResult",
    "KnapsackInstance",
    "compute_test_set",
    "knapsack_ideal",
    "sigma_tau_orders",
    "solve_feasibility",
    "NEG_INF",
    "POS_INF",
    "WalkOptions",
    "WalkTrace",
    "classic_walk",
    "compute_last_w",
    "cone_interior_point",
    "facet_cmp",
    "facet_initial_forms",
    "generic_walk",
    "in_crossing_cone",
    "lift",
]
