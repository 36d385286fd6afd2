"""Boundary matrices and Betti numbers over GF(2)."""

from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from simplexembed.complex.models import Simplex, SimplicialComplex, facet_omitting
from simplexembed.linalg.gf2 import rank_gf2_array


class HomologyError(Exception):
    """Raised when a chain-complex request is out of range."""

    pass


@dataclass(frozen=True, eq=False)
class BoundaryMatrix:
    """The GF(2) boundary map from i-chains to (i-1)-chains."""

    dimension: int
    rows: Tuple[Simplex, ...]
    columns: Tuple[Simplex, ...]
    matrix: np.ndarray

    @property
    def rank(self) -> int:
        return rank_gf2_array(self.matrix)


def boundary_matrix(K: SimplicialComplex, i: int) -> BoundaryMatrix:
    """
    Build the GF(2) boundary matrix of K in degree i.

    Rows are the (i-1)-simplices and columns the i-simplices, both in
    lexicographic order; the column of a simplex has a 1 at each facet.

    Raises:
        HomologyError: If i is not between 1 and dim K.
    """
    if not 1 <= i <= K.dimension:
        raise HomologyError(
            f"Boundary degree {i} outside 1..{K.dimension}"
        )
    rows = K.simplices_of_dim(i - 1)
    columns = K.simplices_of_dim(i)
    row_index: Dict[Simplex, int] = {s: r for r, s in enumerate(rows)}
    matrix = np.zeros((len(rows), len(columns)), dtype=np.uint8)
    for c, simplex in enumerate(columns):
        for omit in range(len(simplex)):
            matrix[row_index[facet_omitting(simplex, omit)], c] = 1
    return BoundaryMatrix(dimension=i, rows=rows, columns=columns, matrix=matrix)


def betti_mod2(K: SimplicialComplex) -> Tuple[int, ...]:
    """Betti numbers b_0..b_dim of K over GF(2)."""
    top = K.dimension
    if top < 0:
        return ()
    ranks = [0] * (top + 2)
    for i in range(1, top + 1):
        ranks[i] = boundary_matrix(K, i).rank
    return tuple(
        len(K.simplices_of_dim(i)) - ranks[i] - ranks[i + 1] for i in range(top + 1)
    )
