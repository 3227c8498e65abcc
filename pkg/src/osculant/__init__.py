"""Osculating (Hermite-type) polynomial interpolation.

Builds the unique polynomial matching prescribed values and derivatives up
to a uniform order m at every node, and evaluates it through either the
direct basis form or the barycentric quotient form, with derivative
evaluation via jet arithmetic and an independent extended-precision
reference solver for verification.
"""

from .core import (
    BarycentricWeights,
    BasisDerivativeTable,
    CoefficientTable,
    DenominatorTable,
    Interpolant,
    NodeSet,
    OsculatoryData,
    basis_derivatives,
    build_data,
    build_interpolant,
    build_nodeset,
    closed_form_m1,
    closed_form_m2,
    compute_weights,
    power_sums,
    solve_denominator,
    solve_numerator,
)
from .errors import (
    DuplicateNodeError,
    GridSpecError,
    NonFiniteInputError,
    OrderTooLargeError,
    OsculantError,
    ParseError,
    ProblemFileError,
    SchemaError,
    ShapeMismatchError,
    SingularSystemError,
    SizeLimitError,
    ValidationError,
    WeightOverflowError,
    WrongOrderError,
)
from .evaluate import (
    EvalMethod,
    eval_barycentric,
    eval_derivative,
    eval_direct,
    eval_grid,
)
from .jets import Jet
from .oracle import (
    MonomialPolynomial,
    confluent_vandermonde_fit,
    finite_difference,
    poly_eval_deriv,
)
from .problems import (
    ProblemFile,
    load_problem,
    problem_to_interpolant,
    random_problem,
    save_problem,
)

__version__ = "0.1.0"

__all__ = [
    "BarycentricWeights",
    "BasisDerivativeTable",
    "CoefficientTable",
    "DenominatorTable",
    "DuplicateNodeError",
    "EvalMethod",
    "GridSpecError",
    "Interpolant",
    "Jet",
    "MonomialPolynomial",
    "NodeSet",
    "NonFiniteInputError",
    "OrderTooLargeError",
    "OsculantError",
    "OsculatoryData",
    "ParseError",
    "ProblemFile",
    "ProblemFileError",
    "SchemaError",
    "ShapeMismatchError",
    "SingularSystemError",
    "SizeLimitError",
    "ValidationError",
    "WeightOverflowError",
    "WrongOrderError",
    "basis_derivatives",
    "build_data",
    "build_interpolant",
    "build_nodeset",
    "closed_form_m1",
    "closed_form_m2",
    "compute_weights",
    "confluent_vandermonde_fit",
    "eval_barycentric",
    "eval_derivative",
    "eval_direct",
    "eval_grid",
    "finite_difference",
    "load_problem",
    "poly_eval_deriv",
    "power_sums",
    "problem_to_interpolant",
    "random_problem",
    "save_problem",
    "solve_denominator",
    "solve_numerator",
]
