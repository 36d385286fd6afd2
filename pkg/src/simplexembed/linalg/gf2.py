"""Linear algebra over GF(2).

Two representations are used: dense numpy ``uint8`` arrays for the small
boundary matrices of the homology module, and Python-int bitsets for the
large sparse obstruction systems, where a column is a single integer whose
set bits are its odd rows.
"""

from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from simplexembed.linalg.matrices import IntMatrix, IntVector, check_vector_length


def rank_gf2_array(matrix: np.ndarray) -> int:
    """
    Rank over GF(2) of a dense 0/1 array.

    Gaussian elimination with XOR row updates; the input is not modified.
    """
    A = (np.asarray(matrix) % 2).astype(np.uint8)
    if A.size == 0:
        return 0
    n_rows, n_cols = A.shape
    rank = 0
    for col in range(n_cols):
        candidates = np.nonzero(A[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot_row = rank + int(candidates[0])
        if pivot_row != rank:
            A[[rank, pivot_row]] = A[[pivot_row, rank]]
        others = np.nonzero(A[:, col])[0]
        others = others[others != rank]
        if others.size:
            A[others, :] ^= A[rank, :]
        rank += 1
        if rank == n_rows:
            break
    return rank


def _column_bits(A: IntMatrix) -> Tuple[int, ...]:
    bits = []
    for column in A.mod2().iter_columns():
        word = 0
        for i in column:
            word |= 1 << i
        bits.append(word)
    return tuple(bits)


def _vector_bits(b: Sequence[int]) -> int:
    word = 0
    for i, value in enumerate(b):
        if value % 2:
            word |= 1 << i
    return word


def _reduce(
    basis: Dict[int, Tuple[int, int]], word: int, combo: int
) -> Tuple[int, int]:
    while word:
        top = word.bit_length() - 1
        entry = basis.get(top)
        if entry is None:
            break
        word ^= entry[0]
        combo ^= entry[1]
    return word, combo


def _basis(columns: Sequence[int]) -> Dict[int, Tuple[int, int]]:
    """Echelon basis keyed by leading bit; values carry the column combination."""
    basis: Dict[int, Tuple[int, int]] = {}
    for j, word in enumerate(columns):
        reduced, combo = _reduce(basis, word, 1 << j)
        if reduced:
            basis[reduced.bit_length() - 1] = (reduced, combo)
    return basis


def rank_mod2(A: IntMatrix) -> int:
    """Rank of A reduced modulo 2."""
    return len(_basis(_column_bits(A)))


def solve_mod2(A: IntMatrix, b: Sequence[int]) -> Optional[IntVector]:
    """
    Solve A·x ≡ b (mod 2).

    Args:
        A: Integer matrix, read modulo 2.
        b: Right-hand side of length A.rows, read modulo 2.

    Returns:
        A 0/1 witness x with A·x ≡ b (mod 2), or None when no solution exists.

    Raises:
        DimensionMismatchError: If b does not match the rows of A.
    """
    check_vector_length(A, b)
    basis = _basis(_column_bits(A))
    residual, combo = _reduce(basis, _vector_bits(b), 0)
    if residual:
        return None
    return tuple((combo >> j) & 1 for j in range(A.cols))
