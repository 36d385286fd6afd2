"""Models for exact linear maps of complexes into R^{2k}."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from simplexembed.complex.models import Simplex
from simplexembed.global_models import Parity

Point = Tuple[Fraction, ...]
SimplexPair = Tuple[Simplex, Simplex]


class NonGenericMapError(Exception):
    """Raised when a map is not in general position on some vertex set."""

    def __init__(self, message: str, vertices: Sequence[int] = ()):
        super().__init__(message)
        self.vertices = tuple(vertices)


class GenericMapExhaustedError(Exception):
    """Raised when random drawing found no generic map within the attempt budget."""

    pass


@dataclass(frozen=True)
class LinearMap:
    """A map of the vertices of a complex into Q^{2k}, extended linearly."""

    k: int
    points: Mapping[int, Point] = field(default_factory=dict)

    def __post_init__(self) -> None:
        normalized: Dict[int, Point] = {}
        for vertex, point in self.points.items():
            if len(point) != 2 * self.k:
                raise NonGenericMapError(
                    f"Image of vertex {vertex} has {len(point)} coordinates, "
                    f"expected {2 * self.k}",
                    (vertex,),
                )
            normalized[vertex] = tuple(Fraction(c) for c in point)
        seen: Dict[Point, int] = {}
        for vertex, point in normalized.items():
            if point in seen:
                raise NonGenericMapError(
                    f"Vertices {seen[point]} and {vertex} have the same image",
                    (seen[point], vertex),
                )
            seen[point] = vertex
        object.__setattr__(self, "points", normalized)

    @property
    def ambient_dimension(self) -> int:
        return 2 * self.k

    def image(self, vertex: int) -> Point:
        return self.points[vertex]

    def to_coordinates(self) -> Dict[int, List[str]]:
        """Coordinates as strings, for reports."""
        return {v: [str(c) for c in p] for v, p in sorted(self.points.items())}


@dataclass(frozen=True)
class IntersectionRecord:
    """Signed intersection number of f(σ) and f(τ) with its witness."""

    pair: SimplexPair
    value: int
    lambdas: Optional[Tuple[Fraction, ...]] = None
    mus: Optional[Tuple[Fraction, ...]] = None


class VerificationReport(BaseModel):
    """Outcome of a geometric verification run."""

    check: str = Field(..., description="Name of the verified property")
    k: int = Field(..., description="Dimension parameter")
    passed: bool = Field(..., description="True when no counterexample was found")
    checked: int = Field(..., description="Number of pairs or maps examined")
    seed: Optional[int] = Field(None, description="Random seed, for randomized checks")
    sign: Optional[int] = Field(None, description="Sign s relating o_f and o_γ")
    counterexample: Optional[Tuple[List[int], List[int]]] = Field(
        None, description="First failing pair (σ, τ)"
    )
    trial: Optional[int] = Field(None, description="First failing trial, if any")
    expected: Optional[int] = Field(None, description="Expected value at the counterexample")
    actual: Optional[int] = Field(None, description="Computed value at the counterexample")


class ParityReport(BaseModel):
    """Total intersection count of a map over unordered disjoint pairs."""

    k: int = Field(..., description="Dimension parameter")
    total: int = Field(..., description="Sum of |f(σ)·f(τ)| over unordered pairs")
    parity: Parity = Field(..., description="Parity of the total")
