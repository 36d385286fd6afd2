"""Compiling a 3-CNF formula into a 2-complex whose embeddability in R^4 it controls."""

from typing import Dict, List, Mapping, Set

from simplexembed.complex.models import Simplex, SimplicialComplex, make_simplex
from simplexembed.reduction.gadgets import (
    CONNECTING_EDGE,
    SIGMA_A,
    SIGMA_B,
    clause_gadget_2_4,
    conflict_gadget_l1,
)
from simplexembed.reduction.models import (
    CnfFormula,
    ConflictPair,
    GadgetComplex,
    Opening,
    ReductionError,
)


def _occurrence(clause: int, position: int) -> int:
    """Global 1-based index of a literal occurrence."""
    return 3 * (clause - 1) + position


def conflicts(formula: CnfFormula) -> List[ConflictPair]:
    """
    Pairs of literal occurrences in different clauses that use one variable with opposite signs.

    Occurrence (i, p), the p-th literal of clause i, corresponds to opening
    ``opening:<i>:<p>``. Pairs are ordered by their occurrence indices.

    Example:
        >>> formula = CnfFormula(variable_count=3, clauses=((1, 2, 3), (-1, 2, 3)))
        >>> [pair.tag for pair in conflicts(formula)]
        ['conflict:1:4']
    """
    occurrences = [
        (clause, position, literal)
        for clause, literals in enumerate(formula.clauses, start=1)
        for position, literal in enumerate(literals, start=1)
    ]
    pairs = []
    for index, (c1, p1, lit1) in enumerate(occurrences):
        for c2, p2, lit2 in occurrences[index + 1 :]:
            if c1 != c2 and lit1 == -lit2:
                pairs.append(
                    ConflictPair(
                        first=f"opening:{c1}:{p1}",
                        second=f"opening:{c2}:{p2}",
                        variable=abs(lit1),
                        tag=f"conflict:{_occurrence(c1, p1)}:{_occurrence(c2, p2)}",
                    )
                )
    return pairs


def _relabel_opening(opening: Opening, mapping: Mapping[int, int]) -> Opening:
    return Opening(
        id=opening.id,
        gadget=opening.gadget,
        subdivided=[mapping[v] for v in opening.subdivided],
        removed=[mapping[v] for v in opening.removed],
        complementary_sphere=[[mapping[v] for v in f] for f in opening.complementary_sphere],
        disk=[[mapping[v] for v in s] for s in opening.disk],
    )


def _glue(
    gadget: GadgetComplex,
    mapping: Mapping[int, int],
    simplices: Set[Simplex],
    provenance: Dict[Simplex, str],
) -> None:
    """Add a relabeled gadget; simplices already present keep their tag."""
    for simplex in gadget.complex:
        image = make_simplex(mapping[v] for v in simplex)
        simplices.add(image)
        provenance.setdefault(image, gadget.provenance[simplex])


def reduce(formula: CnfFormula) -> GadgetComplex:
    """
    Build the complex of a formula: one clause gadget per clause and one conflict gadget per conflict.

    Clause i takes a fresh copy of ``clause_gadget_2_4`` with its openings
    ω_1, ω_2, ω_3 standing for the literals in positions 1, 2, 3. Each conflict
    adds a fresh conflict gadget whose loops Σ_a and Σ_b are identified with
    the boundaries of the two openings by sorted vertex order, so that the
    edge c joins their smallest vertices. Labels are allocated in order, so
    the result depends only on the formula.

    Raises:
        ReductionError: If an opening disk is missing from the result.
    """
    simplices: Set[Simplex] = set()
    provenance: Dict[Simplex, str] = {}
    openings: Dict[str, Opening] = {}
    loops: Dict[str, tuple] = {}
    next_label = 0

    for clause in range(1, len(formula.clauses) + 1):
        gadget = clause_gadget_2_4(clause)
        mapping = {v: next_label + i for i, v in enumerate(gadget.complex.vertices)}
        next_label += len(mapping)
        _glue(gadget, mapping, simplices, provenance)
        for key, opening in gadget.openings.items():
            openings[key] = _relabel_opening(opening, mapping)

    pairs = conflicts(formula)
    for pair in pairs:
        gadget = conflict_gadget_l1(pair.tag)
        sigma_a, sigma_b = gadget.loops[SIGMA_A], gadget.loops[SIGMA_B]
        mapping = dict(zip(sigma_a, openings[pair.first].removed))
        mapping.update(zip(sigma_b, openings[pair.second].removed))
        for v in gadget.complex.vertices:
            if v not in mapping:
                mapping[v] = next_label
                next_label += 1
        _glue(gadget, mapping, simplices, provenance)
        for name in (SIGMA_A, SIGMA_B, CONNECTING_EDGE):
            loops[f"{pair.tag}:{name}"] = tuple(mapping[v] for v in gadget.loops[name])

    for opening in openings.values():
        missing = [s for s in opening.disk if tuple(s) not in simplices]
        if missing:
            raise ReductionError(f"Disk of {opening.id} is missing {missing[0]}")

    return GadgetComplex(
        complex=SimplicialComplex(simplices),
        openings=openings,
        provenance=provenance,
        loops=loops,
        conflicts=pairs,
    )
