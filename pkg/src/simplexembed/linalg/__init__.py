"""Exact integer, rational and GF(2) linear algebra."""

from simplexembed.linalg.gf2 import rank_gf2_array, rank_mod2, solve_mod2
from simplexembed.linalg.matrices import (
    DimensionMismatchError,
    IntMatrix,
    IntVector,
    LinalgError,
    SnfIdentityError,
)
from simplexembed.linalg.rational import determinant, rank_rational, solve_rational
from simplexembed.linalg.smith import (
    IntegerSolution,
    SnfDecomposition,
    has_integer_solution,
    smith_normal_form,
)

__all__ = [
    "DimensionMismatchError",
    "IntMatrix",
    "IntVector",
    "IntegerSolution",
    "LinalgError",
    "SnfDecomposition",
    "SnfIdentityError",
    "determinant",
    "has_integer_solution",
    "rank_gf2_array",
    "rank_mod2",
    "rank_rational",
    "smith_normal_form",
    "solve_mod2",
    "solve_rational",
]
