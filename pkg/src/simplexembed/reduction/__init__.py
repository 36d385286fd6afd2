"""Reduction from 3-SAT to embeddability of 2-complexes in R^4.

Example:
    >>> from simplexembed.reduction import CnfFormula, reduce
    >>> formula = CnfFormula(variable_count=3, clauses=((1, 2, 3), (-1, 2, 3)))
    >>> reduce(formula).complex.f_vector
    (49, 161, 148)
"""

from simplexembed.reduction.assembly import conflicts, reduce
from simplexembed.reduction.dimacs import format_dimacs, parse_dimacs
from simplexembed.reduction.formatters import GadgetTextFormatter
from simplexembed.reduction.gadgets import (
    clause_gadget_2_4,
    clause_gadget_general,
    conflict_gadget_l1,
    opening_disk,
    staircase_annulus,
)
from simplexembed.reduction.models import (
    CnfFormula,
    ConflictPair,
    DimacsError,
    GadgetComplex,
    GadgetParameterError,
    Opening,
    ReductionError,
)

__all__ = [
    "CnfFormula",
    "ConflictPair",
    "DimacsError",
    "GadgetComplex",
    "GadgetParameterError",
    "GadgetTextFormatter",
    "Opening",
    "ReductionError",
    "clause_gadget_2_4",
    "clause_gadget_general",
    "conflict_gadget_l1",
    "conflicts",
    "format_dimacs",
    "opening_disk",
    "parse_dimacs",
    "reduce",
    "staircase_annulus",
]
