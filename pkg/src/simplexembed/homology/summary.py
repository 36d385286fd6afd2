"""Counts and mod-2 homology of a complex, for the info verb."""

from typing import List

from pydantic import BaseModel, Field

from simplexembed.complex.models import SimplicialComplex
from simplexembed.complex.operations import euler_characteristic
from simplexembed.homology.chains import betti_mod2


class ComplexSummary(BaseModel):
    """Face counts, Euler characteristic and Betti numbers of a complex."""

    dimension: int = Field(..., description="Largest simplex dimension, -1 if empty")
    f_vector: List[int] = Field(..., description="Simplex counts by dimension")
    euler_characteristic: int = Field(..., description="Alternating sum of f_vector")
    betti_mod2: List[int] = Field(..., description="Betti numbers over GF(2)")


def summarize(K: SimplicialComplex) -> ComplexSummary:
    return ComplexSummary(
        dimension=K.dimension,
        f_vector=list(K.f_vector),
        euler_characteristic=euler_characteristic(K),
        betti_mod2=list(betti_mod2(K)),
    )


class SummaryTextFormatter:
    """Format a ComplexSummary as key/value lines."""

    NAMES = ("vertices", "edges", "triangles", "tetrahedra")

    @staticmethod
    def format(summary: ComplexSummary) -> str:
        lines = [f"dimension: {summary.dimension}"]
        for d, count in enumerate(summary.f_vector):
            name = (
                SummaryTextFormatter.NAMES[d]
                if d < len(SummaryTextFormatter.NAMES)
                else f"{d}-simplices"
            )
            lines.append(f"{name}: {count}")
        lines.append(f"euler_characteristic: {summary.euler_characteristic}")
        lines.append(f"betti_mod2: {' '.join(map(str, summary.betti_mod2))}")
        return "\n".join(lines)
