"""Unit tests for the Smith normal form and integer solvability."""

from math import gcd, prod

import numpy as np
import pytest

from simplexembed.linalg.matrices import DimensionMismatchError, IntMatrix
from simplexembed.linalg.rational import determinant
from simplexembed.linalg.smith import has_integer_solution, smith_normal_form


def _random_matrices(count: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        m, n = (int(x) for x in rng.integers(1, 9, size=2))
        yield IntMatrix.from_rows(rng.integers(-9, 10, size=(m, n)).tolist())


class TestSmithNormalForm:
    """Tests for smith_normal_form."""

    def test_known_example(self):
        """The classic 3x3 example has invariant factors 2 | 6 | 12."""
        A = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        decomposition = smith_normal_form(A)
        assert decomposition.diagonal == (2, 6, 12)
        assert decomposition.rank == 3

    def test_zero_matrix(self):
        """The zero matrix has rank 0."""
        decomposition = smith_normal_form(IntMatrix.zeros(2, 3))
        assert decomposition.diagonal == (0, 0)
        assert decomposition.invariant_factors == ()

    def test_coprime_entries(self):
        """[[2, 3]] reduces to the unit invariant factor."""
        assert smith_normal_form(IntMatrix.from_rows([[2, 3]])).diagonal == (1,)

    def test_random_matrices_satisfy_identity(self):
        """S = U·A·V, unimodularity and the divisibility chain hold on random input."""
        for A in _random_matrices(200, seed=2024):
            decomposition = smith_normal_form(A)
            S, U, V = decomposition.S, decomposition.U, decomposition.V
            assert U @ A @ V == S
            assert S.is_diagonal()
            assert abs(determinant(U.to_rows())) == 1
            assert abs(determinant(V.to_rows())) == 1
            factors = decomposition.invariant_factors
            assert all(d > 0 for d in factors)
            assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
            assert all(d == 0 for d in decomposition.diagonal[len(factors) :])

    def test_random_matrices_gcd_and_determinant(self):
        """d_1 is the gcd of the entries and Π d_i = |det A| for square nonsingular A."""
        for A in _random_matrices(200, seed=7):
            entries = [v for row in A.to_rows() for v in row]
            decomposition = smith_normal_form(A)
            content = 0
            for v in entries:
                content = gcd(content, v)
            if content:
                assert decomposition.diagonal[0] == content
            if A.rows == A.cols:
                det = determinant(A.to_rows())
                if det != 0:
                    assert prod(decomposition.diagonal) == abs(det)


class TestHasIntegerSolution:
    """Tests for has_integer_solution."""

    def test_solvable_with_witness(self):
        """x = (1, -1) solves [[2, 3]]·x = -1."""
        A = IntMatrix.from_rows([[2, 3]])
        solution = has_integer_solution(A, [-1])
        assert solution
        assert solution.witness is not None
        assert A.matvec(solution.witness) == (-1,)

    def test_rationally_but_not_integrally_solvable(self):
        """2x = 1 has no integer solution."""
        assert not has_integer_solution(IntMatrix.from_rows([[2]]), [1])

    def test_inconsistent_system(self):
        """A zero row with a nonzero right-hand side is unsolvable."""
        A = IntMatrix.from_rows([[1, 0], [0, 0]])
        assert not has_integer_solution(A, [3, 1])

    def test_zero_rhs(self):
        """The zero vector is always reachable."""
        solution = has_integer_solution(IntMatrix.from_rows([[4, 6], [2, 8]]), [0, 0])
        assert solution.witness == (0, 0)

    def test_needs_dense_core(self):
        """Systems without unit entries fall through to the SNF core."""
        A = IntMatrix.from_rows([[2, 0], [0, 3], [2, 3]])
        solution = has_integer_solution(A, [4, 9, 13])
        assert solution
        assert solution.eliminated == 0
        assert solution.core_shape == (3, 2)
        assert solution.witness == (2, 3)
        assert not has_integer_solution(A, [4, 9, 12])

    def test_unit_pivots_eliminated(self):
        """Unit entries are eliminated sparsely."""
        A = IntMatrix.from_rows([[1, 1, 0], [0, 1, 1], [0, 0, 2]])
        solution = has_integer_solution(A, [1, 2, 2])
        assert solution
        assert solution.eliminated >= 2
        assert A.matvec(solution.witness) == (1, 2, 2)

    def test_without_witness(self):
        """want_witness=False only decides."""
        solution = has_integer_solution(IntMatrix.identity(2), [5, 7], want_witness=False)
        assert solution.solvable
        assert solution.witness is None

    def test_length_mismatch(self):
        """The right-hand side must match the row count."""
        with pytest.raises(DimensionMismatchError):
            has_integer_solution(IntMatrix.identity(2), [1])

    def test_agrees_with_snf_on_random_systems(self):
        """Sparse elimination agrees with solvability read off the SNF."""
        rng = np.random.default_rng(11)
        for A in _random_matrices(60, seed=5):
            b = rng.integers(-5, 6, size=A.rows).tolist()
            decomposition = smith_normal_form(A)
            c = decomposition.U.matvec(b)
            diagonal = decomposition.diagonal
            expected = all(
                (value % diagonal[i] == 0) if i < len(diagonal) and diagonal[i] else value == 0
                for i, value in enumerate(c)
            )
            solution = has_integer_solution(A, b)
            assert solution.solvable == expected
            if expected:
                assert A.matvec(solution.witness) == tuple(b)
