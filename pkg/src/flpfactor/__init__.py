"""Factor-left-prime factorizations of multivariate polynomial matrices."""

from .divisors import (
    DivisorLattice,
    FactorizationIncomplete,
    divisor_lattice,
    enumerate_divisors,
    irreducible_factors,
    multiples_of,
)
from .engine import (
    FlpFactorization,
    PreconditionError,
    factorize_wrt,
    flp_factorize,
    flp_run,
    frp_factorize,
)
from .grobner import (
    SubmoduleGB,
    buchberger_certify,
    ideal_reduced_gb,
    lift,
    module_intersect,
    module_reduced_gb,
    normal_form,
)
from .matpoly import PolyMatrix, column_reduced_minors, d_i, det, mat_mul, minors, rank
from .modquot import (
    ExtractionExhausted,
    free_basis,
    freeness_check,
    module_equal,
    module_subset,
    quotient_by_ideal,
    quotient_by_poly,
    solve_left_factor,
)
from .parsing import ParseError, parse_polynomial
from .polyring import DEGREVLEX, LEX, MonomialOrder, Polynomial, PolyRing, gcd, is_squarefree

__version__ = "0.1.0"

__all__ = [
    "buchberger_certify",
    "column_reduced_minors",
    "d_i",
    "DEGREVLEX",
    "det",
    "divisor_lattice",
    "DivisorLattice",
    "enumerate_divisors",
    "ExtractionExhausted",
    "FactorizationIncomplete",
    "factorize_wrt",
    "flp_factorize",
    "flp_run",
    "FlpFactorization",
    "free_basis",
    "freeness_check",
    "frp_factorize",
    "gcd",
    "ideal_reduced_gb",
    "irreducible_factors",
    "is_squarefree",
    "LEX",
    "lift",
    "mat_mul",
    "minors",
    "module_equal",
    "module_intersect",
    "module_reduced_gb",
    "module_subset",
    "MonomialOrder",
    "multiples_of",
    "normal_form",
    "parse_polynomial",
    "ParseError",
    "PolyMatrix",
    "Polynomial",
    "PolyRing",
    "PreconditionError",
    "quotient_by_ideal",
    "quotient_by_poly",
    "rank",
    "solve_left_factor",
    "SubmoduleGB",
]
