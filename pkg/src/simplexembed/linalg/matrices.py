"""Arbitrary-precision integer matrices and vectors.

Entries are Python ints, so no fixed-width overflow can occur. Matrices are
stored sparsely by column because the obstruction systems built downstream
have a handful of nonzeros per column.
"""

from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

IntVector = Tuple[int, ...]
"""An integer vector; the index set is fixed by whoever produced it."""


class LinalgError(Exception):
    """Base class for exact linear algebra errors."""

    pass


class DimensionMismatchError(LinalgError):
    """Raised when operand shapes are incompatible."""

    pass


class SnfIdentityError(LinalgError):
    """Raised when a computed decomposition fails its own verification."""

    pass


class IntMatrix:
    """
    Immutable sparse integer matrix, stored column by column.

    Each column is a mapping from row index to a nonzero entry.
    """

    __slots__ = ("_rows", "_cols", "_columns")

    def __init__(
        self,
        rows: int,
        cols: int,
        columns: Optional[Sequence[Mapping[int, int]]] = None,
    ):
        if rows < 0 or cols < 0:
            raise DimensionMismatchError(f"Invalid shape {rows}x{cols}")
        if columns is None:
            columns = [{} for _ in range(cols)]
        if len(columns) != cols:
            raise DimensionMismatchError(
                f"Expected {cols} columns, got {len(columns)}"
            )
        stored: List[Dict[int, int]] = []
        for j, column in enumerate(columns):
            entries = {}
            for i, value in column.items():
                if not 0 <= i < rows:
                    raise DimensionMismatchError(
                        f"Row index {i} out of range in column {j}"
                    )
                if value:
                    entries[i] = int(value)
            stored.append(entries)
        self._rows = rows
        self._cols = cols
        self._columns: Tuple[Dict[int, int], ...] = tuple(stored)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        """Build a matrix from a dense list of rows."""
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else (cols or 0)
        columns: List[Dict[int, int]] = [{} for _ in range(n_cols)]
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionMismatchError("Rows have different lengths")
            for j, value in enumerate(row):
                if value:
                    columns[j][i] = value
        return cls(n_rows, n_cols, columns)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [{j: 1} for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self._rows, self._cols

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    def column(self, j: int) -> Dict[int, int]:
        """Copy of the nonzero entries of column j."""
        return dict(self._columns[j])

    def iter_columns(self) -> Iterator[Mapping[int, int]]:
        return iter(self._columns)

    def entry(self, i: int, j: int) -> int:
        return self._columns[j].get(i, 0)

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self._columns)

    def to_rows(self) -> List[List[int]]:
        """Dense list-of-rows copy."""
        dense = [[0] * self._cols for _ in range(self._rows)]
        for j, column in enumerate(self._columns):
            for i, value in column.items():
                dense[i][j] = value
        return dense

    def matvec(self, x: Sequence[int]) -> IntVector:
        """
        Multiply by a vector.

        Raises:
            DimensionMismatchError: If len(x) differs from the column count.
        """
        if len(x) != self._cols:
            raise DimensionMismatchError(
                f"Vector of length {len(x)} does not match {self._cols} columns"
            )
        result = [0] * self._rows
        for j, column in enumerate(self._columns):
            coefficient = x[j]
            if coefficient:
                for i, value in column.items():
                    result[i] += coefficient * value
        return tuple(result)

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        """Matrix product self @ other."""
        if self._cols != other._rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.shape} by {other.shape}"
            )
        columns = []
        for other_column in other._columns:
            accumulated: Dict[int, int] = {}
            for k, coefficient in other_column.items():
                for i, value in self._columns[k].items():
                    accumulated[i] = accumulated.get(i, 0) + coefficient * value
            columns.append(accumulated)
        return IntMatrix(self._rows, other._cols, columns)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return self.matmul(other)

    def mod2(self) -> "IntMatrix":
        """Entrywise reduction modulo 2 (entries in {0, 1})."""
        return IntMatrix(
            self._rows,
            self._cols,
            [{i: 1 for i, v in c.items() if v % 2} for c in self._columns],
        )

    def is_diagonal(self) -> bool:
        return all(set(c) <= {j} for j, c in enumerate(self._columns))

    def diagonal(self) -> IntVector:
        return tuple(self.entry(i, i) for i in range(min(self._rows, self._cols)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._columns == other._columns

    def __hash__(self) -> int:
        return hash((self.shape, tuple(tuple(sorted(c.items())) for c in self._columns)))

    def __repr__(self) -> str:
        return f"IntMatrix(shape={self.shape}, nnz={self.nnz})"


def check_vector_length(A: IntMatrix, b: Sequence[int]) -> None:
    """
    Raise if b cannot be a right-hand side for A.

    Raises:
        DimensionMismatchError: If len(b) differs from the row count of A.
    """
    if len(b) != A.rows:
        raise DimensionMismatchError(
            f"Right-hand side of length {len(b)} does not match {A.rows} rows"
        )
