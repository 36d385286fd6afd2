"""Simplicial homology with Z/2 coefficients."""

from simplexembed.homology.chains import (
    BoundaryMatrix,
    HomologyError,
    betti_mod2,
    boundary_matrix,
)
from simplexembed.homology.summary import (
    ComplexSummary,
    SummaryTextFormatter,
    summarize,
)

__all__ = [
    "BoundaryMatrix",
    "ComplexSummary",
    "HomologyError",
    "SummaryTextFormatter",
    "betti_mod2",
    "boundary_matrix",
    "summarize",
]
