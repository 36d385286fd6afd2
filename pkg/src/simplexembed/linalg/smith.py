"""Smith normal form and integer solvability of linear systems."""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from simplexembed.linalg.matrices import (
    IntMatrix,
    IntVector,
    SnfIdentityError,
    check_vector_length,
)

Dense = List[List[int]]


@dataclass(frozen=True)
class SnfDecomposition:
    """S = U·A·V with S diagonal and U, V unimodular."""

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> IntVector:
        return self.S.diagonal()

    @property
    def invariant_factors(self) -> IntVector:
        """Nonzero diagonal entries d_1 | d_2 | ... of S."""
        return tuple(d for d in self.diagonal if d)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _identity(n: int) -> Dense:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _smith_dense(a: Dense, m: int, n: int) -> Tuple[Dense, Dense, Dense]:
    """Diagonalize a dense m x n matrix, tracking the row and column transforms.

    Pivots are always the smallest nonzero entry by absolute value, which
    keeps intermediate coefficients small.
    """
    S = [row[:] for row in a]
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i: int, j: int) -> None:
        if i != j:
            S[i], S[j] = S[j], S[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        if i != j:
            for row in S:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def sub_row(target: int, source: int, q: int) -> None:
        s_t, s_s = S[target], S[source]
        u_t, u_s = U[target], U[source]
        for c in range(n):
            s_t[c] -= q * s_s[c]
        for c in range(m):
            u_t[c] -= q * u_s[c]

    def sub_col(target: int, source: int, q: int) -> None:
        for row in S:
            row[target] -= q * row[source]
        for row in V:
            row[target] -= q * row[source]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = S[i]
            for j in range(t, n):
                if row[j] and (best is None or abs(row[j]) < best[0]):
                    best = (abs(row[j]), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])

        while True:
            pivot = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    sub_row(i, t, S[i][t] // pivot)
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, n):
                if S[t][j]:
                    sub_col(j, t, S[t][j] // pivot)
                    dirty = dirty or S[t][j] != 0
            if dirty:
                smallest = (abs(S[t][t]), t, t)
                for i in range(t + 1, m):
                    if S[i][t] and abs(S[i][t]) < smallest[0]:
                        smallest = (abs(S[i][t]), i, t)
                for j in range(t + 1, n):
                    if S[t][j] and abs(S[t][j]) < smallest[0]:
                        smallest = (abs(S[t][j]), t, j)
                swap_rows(t, smallest[1])
                swap_cols(t, smallest[2])
                continue
            # row and column t are clear; the pivot must divide the rest
            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % pivot),
                None,
            )
            if offender is None:
                break
            sub_row(t, offender, -1)

        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return S, U, V


def _verify(A: IntMatrix, decomposition: SnfDecomposition) -> None:
    S = decomposition.S
    if decomposition.U.matmul(A).matmul(decomposition.V) != S:
        raise SnfIdentityError("Smith normal form identity S = U·A·V does not hold")
    if not S.is_diagonal():
        raise SnfIdentityError("Smith normal form is not diagonal")
    diagonal = S.diagonal()
    for d, e in zip(diagonal, diagonal[1:]):
        if d < 0 or (d == 0 and e != 0) or (d and e % d):
            raise SnfIdentityError(f"Divisibility chain broken at {d}, {e}")


def smith_normal_form(A: IntMatrix) -> SnfDecomposition:
    """
    Compute the Smith normal form of an integer matrix.

    Args:
        A: Matrix to diagonalize.

    Returns:
        SnfDecomposition with S = U·A·V, S diagonal with nonnegative entries
        forming a divisibility chain, and U, V unimodular.

    Raises:
        SnfIdentityError: If the computed factors fail verification.
    """
    m, n = A.shape
    S, U, V = _smith_dense(A.to_rows(), m, n)
    decomposition = SnfDecomposition(
        S=IntMatrix.from_rows(S, cols=n),
        U=IntMatrix.from_rows(U, cols=m),
        V=IntMatrix.from_rows(V, cols=n),
    )
    _verify(A, decomposition)
    return decomposition


@dataclass(frozen=True)
class IntegerSolution:
    """Outcome of an integer solvability test for A·x = b."""

    solvable: bool
    witness: Optional[IntVector] = None
    eliminated: int = 0
    core_shape: Tuple[int, int] = (0, 0)

    def __bool__(self) -> bool:
        return self.solvable


class _LatticeReducer:
    """Sparse column-lattice elimination on unit pivots.

    Column operations preserve the lattice spanned by the columns, so
    b lies in span_Z(A) iff the reduced b lies in the span of the reduced
    columns. A ±1 entry at (i, j) lets column j clear row i everywhere
    else; afterwards row i and column j can be dropped.
    """

    def __init__(self, A: IntMatrix, b: Sequence[int], track: bool):
        self.columns: Dict[int, Dict[int, int]] = {}
        self.row_index: Dict[int, Set[int]] = {}
        for j, column in enumerate(A.iter_columns()):
            if column:
                self.columns[j] = dict(column)
                for i in column:
                    self.row_index.setdefault(i, set()).add(j)
        self.b: Dict[int, int] = {i: v for i, v in enumerate(b) if v}
        self.track = track
        self.representation: Dict[int, Dict[int, int]] = (
            {j: {j: 1} for j in self.columns} if track else {}
        )
        self.partial: Dict[int, int] = {}
        self.eliminated = 0

    def _axpy(self, target: Dict[int, int], factor: int, source: Dict[int, int], col: Optional[int]) -> None:
        # target -= factor * source, keeping the row index in sync for columns
        for r, value in source.items():
            updated = target.get(r, 0) - factor * value
            if updated:
                if col is not None and r not in target:
                    self.row_index.setdefault(r, set()).add(col)
                target[r] = updated
            elif r in target:
                del target[r]
                if col is not None:
                    self.row_index[r].discard(col)

    @staticmethod
    def _combine(target: Dict[int, int], factor: int, source: Dict[int, int]) -> None:
        for key, value in source.items():
            updated = target.get(key, 0) + factor * value
            if updated:
                target[key] = updated
            else:
                target.pop(key, None)

    def _eliminate(self, i: int, j: int) -> None:
        pivot_column = self.columns[j]
        s = pivot_column[i]
        for c in sorted(self.row_index[i] - {j}):
            factor = self.columns[c][i] * s
            self._axpy(self.columns[c], factor, pivot_column, c)
            if self.track:
                self._combine(self.representation[c], -factor, self.representation[j])
        if self.b.get(i):
            factor = self.b[i] * s
            self._axpy(self.b, factor, pivot_column, None)
            if self.track:
                self._combine(self.partial, factor, self.representation[j])
        for r in pivot_column:
            self.row_index[r].discard(j)
        del self.columns[j]
        self.representation.pop(j, None)
        self.eliminated += 1

    def run(self) -> None:
        progress = True
        while progress:
            progress = False
            for j in sorted(self.columns, key=lambda c: (len(self.columns[c]), c)):
                column = self.columns.get(j)
                if column is None:
                    continue
                if not column:
                    del self.columns[j]
                    self.representation.pop(j, None)
                    continue
                units = [r for r, v in column.items() if v in (1, -1)]
                if not units:
                    continue
                i = min(units, key=lambda r: (len(self.row_index[r]), r))
                self._eliminate(i, j)
                progress = True


def has_integer_solution(
    A: IntMatrix, b: Sequence[int], want_witness: bool = True
) -> IntegerSolution:
    """
    Decide whether A·x = b has an integer solution.

    Unit pivots are eliminated sparsely first; the remaining core is solved
    through its Smith normal form.

    Args:
        A: Coefficient matrix.
        b: Right-hand side of length A.rows.
        want_witness: Reconstruct x when the system is solvable.

    Returns:
        IntegerSolution; its witness satisfies A·x = b exactly.

    Raises:
        DimensionMismatchError: If b does not match the rows of A.
        SnfIdentityError: If an internal verification fails.
    """
    check_vector_length(A, b)
    reducer = _LatticeReducer(A, b, want_witness)
    reducer.run()

    core_rows = sorted({r for r, cols in reducer.row_index.items() if cols} | set(reducer.b))
    if any(not reducer.row_index.get(r) for r in reducer.b):
        return IntegerSolution(
            solvable=False,
            eliminated=reducer.eliminated,
            core_shape=(len(core_rows), len(reducer.columns)),
        )
    core_cols = sorted(reducer.columns)
    core_shape = (len(core_rows), len(core_cols))
    position = {r: p for p, r in enumerate(core_rows)}
    core = IntMatrix(
        len(core_rows),
        len(core_cols),
        [{position[r]: v for r, v in reducer.columns[c].items()} for c in core_cols],
    )
    rhs = [0] * len(core_rows)
    for r, v in reducer.b.items():
        rhs[position[r]] = v

    y = _solve_with_snf(core, rhs)
    if y is None:
        return IntegerSolution(False, eliminated=reducer.eliminated, core_shape=core_shape)
    if not want_witness:
        return IntegerSolution(True, eliminated=reducer.eliminated, core_shape=core_shape)

    x = dict(reducer.partial)
    for c, coefficient in zip(core_cols, y):
        if coefficient:
            _LatticeReducer._combine(x, coefficient, reducer.representation[c])
    witness = tuple(x.get(j, 0) for j in range(A.cols))
    if A.matvec(witness) != tuple(b):
        raise SnfIdentityError("Integer witness does not satisfy A·x = b")
    return IntegerSolution(True, witness, reducer.eliminated, core_shape)


def _solve_with_snf(A: IntMatrix, b: Sequence[int]) -> Optional[IntVector]:
    """Integer solution of A·x = b via S = U·A·V, or None."""
    if A.rows == 0:
        return tuple(0 for _ in range(A.cols))
    decomposition = smith_normal_form(A)
    c = decomposition.U.matvec(b)
    diagonal = decomposition.diagonal
    y = [0] * A.cols
    for i, value in enumerate(c):
        d = diagonal[i] if i < len(diagonal) else 0
        if d == 0:
            if value:
                return None
        elif value % d:
            return None
        else:
            y[i] = value // d
    return decomposition.V.matvec(y)
