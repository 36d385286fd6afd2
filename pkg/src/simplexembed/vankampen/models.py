"""Models for the Van Kampen obstruction system."""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from simplexembed.complex.models import Simplex
from simplexembed.global_models import Verdict
from simplexembed.linalg.matrices import IntMatrix, IntVector

SimplexPair = Tuple[Simplex, Simplex]


class ObstructionError(Exception):
    """Raised when an obstruction system cannot be built for the input."""

    pass


class ObstructionSymmetryError(ObstructionError):
    """Raised when a constructed vector violates (v)_{τ,σ} = (-1)^k (v)_{σ,τ}."""

    pass


class PairIndex:
    """Ordered disjoint k-simplex pairs with position lookup."""

    __slots__ = ("_pairs", "_positions")

    def __init__(self, pairs: Sequence[SimplexPair]):
        self._pairs: Tuple[SimplexPair, ...] = tuple(pairs)
        self._positions: Dict[SimplexPair, int] = {
            pair: position for position, pair in enumerate(self._pairs)
        }

    @property
    def pairs(self) -> Tuple[SimplexPair, ...]:
        return self._pairs

    def position(self, pair: SimplexPair) -> int:
        return self._positions[pair]

    def get(self, pair: SimplexPair) -> Optional[int]:
        return self._positions.get(pair)

    def swapped(self, position: int) -> int:
        """Position of (τ, σ) given the position of (σ, τ)."""
        sigma, tau = self._pairs[position]
        return self._positions[(tau, sigma)]

    def __len__(self) -> int:
        return len(self._pairs)

    def __iter__(self) -> Iterator[SimplexPair]:
        return iter(self._pairs)

    def __getitem__(self, position: int) -> SimplexPair:
        return self._pairs[position]


@dataclass(frozen=True)
class ObstructionSystem:
    """o_γ and the finger-move matrix Φ for a complex and dimension k.

    The obstruction vanishes iff Φ·x = o_γ has an integer solution.
    """

    k: int
    index: PairIndex
    o_gamma: IntVector
    phi: IntMatrix
    columns: Tuple[SimplexPair, ...]

    @property
    def pair_count(self) -> int:
        return len(self.index)

    @property
    def column_count(self) -> int:
        return len(self.columns)


class VanKampenReport(BaseModel):
    """Result of deciding EMBED(k, 2k) through the Van Kampen obstruction."""

    k: int = Field(..., description="Dimension parameter; the target is R^{2k}")
    verdict: Verdict = Field(..., description="Decision derived from vanishing")
    vanishes: bool = Field(..., description="Whether the tested obstruction vanishes")
    mod2: bool = Field(False, description="True when the test ran over GF(2)")
    pair_count: int = Field(..., description="|P|, ordered disjoint k-simplex pairs")
    column_count: int = Field(..., description="|Q|, finger-move vectors")
    eliminated_pivots: int = Field(0, description="Unit pivots removed sparsely")
    core_rows: int = Field(0, description="Rows of the residual dense core")
    core_columns: int = Field(0, description="Columns of the residual dense core")


class DumpColumn(BaseModel):
    """One finger-move vector, sparse."""

    omega: List[int] = Field(..., description="Vertices of ω")
    nu: List[int] = Field(..., description="Vertices of ν")
    entries: List[Tuple[int, int]] = Field(
        ..., description="(pair position, value) for each nonzero entry"
    )


class ObstructionDump(BaseModel):
    """Audit dump of an obstruction system."""

    k: int = Field(..., description="Dimension parameter")
    pairs: List[Tuple[List[int], List[int]]] = Field(
        ..., description="P in index order, each as (σ, τ)"
    )
    o_gamma: List[int] = Field(..., description="o_γ entries aligned with pairs")
    columns: List[DumpColumn] = Field(..., description="Φ columns in Q order")

    @classmethod
    def from_system(cls, system: ObstructionSystem) -> "ObstructionDump":
        columns = []
        for (omega, nu), column in zip(system.columns, system.phi.iter_columns()):
            columns.append(
                DumpColumn(
                    omega=list(omega),
                    nu=list(nu),
                    entries=sorted(column.items()),
                )
            )
        return cls(
            k=system.k,
            pairs=[(list(sigma), list(tau)) for sigma, tau in system.index],
            o_gamma=list(system.o_gamma),
            columns=columns,
        )
