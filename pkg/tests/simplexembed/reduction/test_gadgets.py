"""Unit tests for the clause and conflict gadgets."""

from itertools import combinations

import pytest

from simplexembed.complex.models import SimplicialComplex
from simplexembed.complex.operations import euler_characteristic
from simplexembed.homology.chains import betti_mod2
from simplexembed.reduction.gadgets import (
    CONNECTING_EDGE,
    SIGMA_A,
    SIGMA_B,
    clause_gadget_2_4,
    clause_gadget_general,
    conflict_gadget_l1,
    opening_disk,
    staircase_annulus,
)
from simplexembed.reduction.models import GadgetParameterError
from simplexembed.vankampen import obstruction_vanishes


class TestStaircaseAnnulus:
    """Tests for staircase_annulus and opening_disk."""

    def test_triangle(self):
        """A triangle's annulus has two triangles per side."""
        annulus = staircase_annulus((0, 1, 2), (3, 4, 5))
        assert len(annulus) == 6
        assert (0, 3, 4) in annulus
        assert (0, 1, 4) in annulus

    def test_annulus_is_a_cylinder(self):
        """The annulus has the homology of a circle."""
        K = SimplicialComplex.from_maximal_faces(staircase_annulus((0, 1, 2), (3, 4, 5)))
        assert betti_mod2(K) == (1, 1, 0)

    def test_opening_disk_is_contractible(self):
        """Cone plus annulus is a disk."""
        K = SimplicialComplex.from_maximal_faces(opening_disk((0, 1, 2), (3, 4, 5), 9))
        assert betti_mod2(K) == (1, 0, 0)
        assert euler_characteristic(K) == 1


class TestClauseGadget24:
    """Tests for clause_gadget_2_4."""

    @pytest.fixture
    def gadget(self):
        return clause_gadget_2_4()

    def test_counts(self, gadget):
        """Three opened triangles in the 2-skeleton of Δ⁶."""
        assert gadget.complex.f_vector == (16, 48, 50)
        assert euler_characteristic(gadget.complex) == 18

    def test_openings(self, gadget):
        """Openings are numbered in position order with fresh inner labels."""
        assert sorted(gadget.openings) == ["opening:1:1", "opening:1:2", "opening:1:3"]
        first = gadget.openings["opening:1:1"]
        assert first.subdivided == [0, 2, 3]
        assert first.removed == [7, 8, 9]
        assert gadget.openings["opening:1:3"].removed == [13, 14, 15]
        assert first.gadget == "clause:1"

    def test_removed_simplices_are_absent(self, gadget):
        """Subdivided and removed triangles are gone while their edges stay."""
        K = gadget.complex
        for opening in gadget.openings.values():
            assert opening.subdivided not in K
            assert opening.removed not in K
            assert all(edge in K for edge in opening.boundary)

    def test_complementary_spheres(self, gadget):
        """Each complementary sphere is a 2-sphere disjoint from its simplex."""
        for key, sphere in gadget.complementary_spheres.items():
            assert betti_mod2(sphere) == (1, 0, 1)
            assert set(sphere.vertices).isdisjoint(gadget.openings[key].subdivided)
        sphere = gadget.complementary_spheres["opening:1:1"]
        assert sphere.vertices == (1, 4, 5, 6)

    def test_disks_in_gadget(self, gadget):
        """Every opening disk lies in the gadget."""
        for opening in gadget.openings.values():
            assert all(simplex in gadget.complex for simplex in opening.disk)

    def test_provenance(self, gadget):
        """Every simplex is tagged; annulus simplices carry their opening."""
        assert set(gadget.provenance) == set(gadget.complex.simplices)
        assert gadget.provenance[(0,)] == "clause:1"
        assert gadget.provenance[(7,)] == "opening:1:1"
        assert gadget.provenance[(0, 2)] == "clause:1"

    def test_clause_index(self):
        """The clause index flows into the tags."""
        assert "opening:4:2" in clause_gadget_2_4(4).openings

    @pytest.mark.slow
    def test_obstruction_vanishes(self, gadget):
        """A single clause gadget has vanishing obstruction in R^4."""
        assert obstruction_vanishes(gadget.complex, 2)


class TestClauseGadgetGeneral:
    """Tests for clause_gadget_general."""

    def test_two_one_counts(self):
        """k = 2, l = 1 has the same counts as the R^4 gadget."""
        assert clause_gadget_general(2, 1).complex.f_vector == (16, 48, 50)

    def test_three_one(self):
        """k = 3, l = 1 opens three triangles with 3-sphere complements."""
        gadget = clause_gadget_general(3, 1)
        assert gadget.complex.dimension == 3
        assert len(gadget.complex.vertices) == 8 + 9
        for key, sphere in gadget.complementary_spheres.items():
            assert betti_mod2(sphere) == (1, 0, 0, 1)
            assert set(sphere.vertices).isdisjoint(gadget.openings[key].subdivided)
        for opening in gadget.openings.values():
            assert all(simplex in gadget.complex for simplex in opening.disk)

    @pytest.mark.parametrize("k,l", [(2, 2), (2, 0), (1, 1), (3, 4)])
    def test_invalid_parameters(self, k, l):
        """Only 1 <= l < k is supported."""
        with pytest.raises(GadgetParameterError):
            clause_gadget_general(k, l)


class TestConflictGadget:
    """Tests for conflict_gadget_l1."""

    @pytest.fixture
    def gadget(self):
        return conflict_gadget_l1()

    def test_counts(self, gadget):
        """The 16-gon ring gives (23, 71, 48) and χ = 0."""
        assert gadget.complex.f_vector == (23, 71, 48)
        assert euler_characteristic(gadget.complex) == 0

    def test_loops(self, gadget):
        """Loop triangles are hollow; their edges and the connecting edge are present."""
        K = gadget.complex
        assert gadget.loops[SIGMA_A] == (0, 1, 2)
        assert gadget.loops[SIGMA_B] == (3, 4, 5)
        assert gadget.loops[CONNECTING_EDGE] == (0, 3)
        assert (0, 1, 2) not in K
        assert (3, 4, 5) not in K
        assert (0, 3) in K
        assert (1, 2) in K

    def test_triangles_form_a_mod2_cycle(self, gadget):
        """Every edge lies on an even number of triangles."""
        counts = {}
        for triangle in gadget.complex.triangles:
            for edge in combinations(triangle, 2):
                counts[edge] = counts.get(edge, 0) + 1
        assert all(count % 2 == 0 for count in counts.values())

    def test_tag(self):
        """All simplices carry the given tag."""
        gadget = conflict_gadget_l1("conflict:1:4")
        assert set(gadget.provenance.values()) == {"conflict:1:4"}
