"""Exact rational solving for the small square systems of the geometry module."""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from simplexembed.linalg.matrices import DimensionMismatchError

Rational = Union[int, Fraction]


def _to_domain(rows: Sequence[Sequence[Rational]]) -> DomainMatrix:
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    elements = []
    for row in rows:
        if len(row) != n_cols:
            raise DimensionMismatchError("Rows have different lengths")
        elements.append([QQ(Fraction(v).numerator, Fraction(v).denominator) for v in row])
    return DomainMatrix(elements, (n_rows, n_cols), QQ)


def _from_domain_element(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _require_square(A: Sequence[Sequence[Rational]]) -> None:
    if any(len(row) != len(A) for row in A):
        raise DimensionMismatchError(f"Expected a square matrix, got {len(A)} rows")


def determinant(A: Sequence[Sequence[Rational]]) -> Fraction:
    """
    Exact determinant of a square rational matrix.

    Raises:
        DimensionMismatchError: If A is not square.
    """
    _require_square(A)
    if not A:
        return Fraction(1)
    return _from_domain_element(_to_domain(A).det())


def rank_rational(A: Sequence[Sequence[Rational]]) -> int:
    """Exact rank over Q."""
    if not A or not A[0]:
        return 0
    return _to_domain(A).rank()


def solve_rational(
    A: Sequence[Sequence[Rational]], b: Sequence[Rational]
) -> Optional[Tuple[Fraction, ...]]:
    """
    Solve a square rational system exactly.

    Args:
        A: Square matrix with int or Fraction entries.
        b: Right-hand side.

    Returns:
        The unique solution, or None when A is singular.

    Raises:
        DimensionMismatchError: If A is not square or b has the wrong length.
    """
    _require_square(A)
    if len(b) != len(A):
        raise DimensionMismatchError(
            f"Right-hand side of length {len(b)} does not match {len(A)} rows"
        )
    if not A:
        return ()
    M = _to_domain(A)
    if M.det() == QQ.zero:
        return None
    rhs = _to_domain([[v] for v in b])
    solution = M.lu_solve(rhs)
    column: List[Fraction] = [
        Fraction(int(entry.p), int(entry.q)) for entry in solution.to_Matrix()
    ]
    return tuple(column)
