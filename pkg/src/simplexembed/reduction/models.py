"""Models for the formula-to-complex reduction."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, Field

from simplexembed.complex.models import Simplex, SimplicialComplex
from simplexembed.complex.serialization import ComplexDocument

Clause = Tuple[int, int, int]


class DimacsError(Exception):
    """Raised when DIMACS input is malformed or violates the 3-CNF contract."""

    pass


class GadgetParameterError(Exception):
    """Raised when gadget parameters fall outside the supported range."""

    pass


class ReductionError(Exception):
    """Raised when an assembled complex misses a structure the construction guarantees."""

    pass


@dataclass(frozen=True)
class CnfFormula:
    """A 3-CNF formula; literals are signed 1-based variable indices."""

    variable_count: int
    clauses: Tuple[Clause, ...]


class Opening(BaseModel):
    """A removed central simplex of a subdivided simplex in a clause gadget."""

    id: str = Field(..., description="Opening identifier, e.g. opening:1:3")
    gadget: str = Field(..., description="Tag of the clause gadget holding it")
    subdivided: List[int] = Field(..., description="Vertices of the subdivided simplex")
    removed: List[int] = Field(..., description="Vertices of the removed inner simplex")
    complementary_sphere: List[List[int]] = Field(
        ..., description="Facets of the sphere disjoint from the subdivided simplex"
    )
    disk: List[List[int]] = Field(
        ..., description="Facets of a disk in the gadget bounded by the opening boundary"
    )

    @property
    def boundary(self) -> List[List[int]]:
        """Facets of the boundary of the removed simplex."""
        removed = self.removed
        return [removed[:i] + removed[i + 1 :] for i in range(len(removed))]


class ConflictPair(BaseModel):
    """Two openings whose literals use one variable with opposite signs."""

    first: str = Field(..., description="Opening id of the earlier literal occurrence")
    second: str = Field(..., description="Opening id of the later literal occurrence")
    variable: int = Field(..., description="The shared variable")
    tag: str = Field(..., description="Provenance tag of the conflict gadget")


@dataclass
class GadgetComplex:
    """A complex together with its labeled substructures."""

    complex: SimplicialComplex
    openings: Dict[str, Opening] = field(default_factory=dict)
    provenance: Dict[Simplex, str] = field(default_factory=dict)
    loops: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    conflicts: List[ConflictPair] = field(default_factory=list)

    @property
    def complementary_spheres(self) -> Dict[str, SimplicialComplex]:
        """Complementary sphere of each opening, keyed by opening id."""
        return {
            key: SimplicialComplex.from_maximal_faces(opening.complementary_sphere)
            for key, opening in sorted(self.openings.items())
        }

    def to_document(self) -> ComplexDocument:
        """Serialize with openings, loops, conflicts and per-simplex provenance."""
        metadata: Dict[str, Any] = {
            "openings": {
                key: self.openings[key].model_dump() for key in sorted(self.openings)
            },
            "provenance": {
                " ".join(map(str, simplex)): self.provenance[simplex]
                for simplex in sorted(self.provenance, key=lambda s: (len(s), s))
            },
        }
        if self.loops:
            metadata["loops"] = {key: list(value) for key, value in sorted(self.loops.items())}
        if self.conflicts:
            metadata["conflicts"] = [pair.model_dump() for pair in self.conflicts]
        return ComplexDocument.from_complex(self.complex, metadata)
