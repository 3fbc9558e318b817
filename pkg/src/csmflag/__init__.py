"""csmflag: exact equivariant CSM classes of Schubert cells in partial flag
manifolds, computed via symmetrized weight functions and verified against
the interpolation axioms that characterize them."""

from .errors import (BudgetExceeded, CsmflagError, DistinctnessViolation,
                     NotDivisibleError, NotPolynomialError, ParseError)
from .flags import (IndexTuple, Shape, ambient_chern, bruhat_leq,
                    cell_dimension, enumerate_index_tuples, full_euler,
                    local_chern, local_euler, normal_weights, tangent_weights)
from .linear import LinearForm
from .polynomial import (Polynomial, poly_from_json, poly_from_text,
                         poly_to_json, poly_to_latex, poly_to_text)
from .ratfun import FactoredRational
from .verify import (AxiomReport, check_degree, check_diagonal,
                     check_divisibility, check_euler_top, check_sum_rule,
                     check_vanishing, compute_restrictions, verify_all)
from .weights import (DEFAULT_TERM_BUDGET, RestrictionTuple, class_of,
                      e_lambda, modified_weight_function, restriction,
                      weight_function)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport", "BudgetExceeded", "CsmflagError", "DEFAULT_TERM_BUDGET",
    "DistinctnessViolation", "FactoredRational", "IndexTuple", "LinearForm",
    "NotDivisibleError", "NotPolynomialError", "ParseError", "Polynomial",
    "RestrictionTuple", "Shape", "ambient_chern", "bruhat_leq",
    "cell_dimension", "check_degree", "check_diagonal", "check_divisibility",
    "check_euler_top", "check_sum_rule", "check_vanishing", "class_of",
    "compute_restrictions", "e_lambda", "enumerate_index_tuples",
    "full_euler", "local_chern", "local_euler", "modified_weight_function",
    "normal_weights", "poly_from_json", "poly_from_text", "poly_to_json",
    "poly_to_latex", "poly_to_text", "restriction", "tangent_weights",
    "verify_all", "weight_function",
]
