"""Unit tests for combinatorial operations on complexes."""

import pytest

from simplexembed.complex.models import ComplexError, SimplicialComplex
from simplexembed.complex.operations import (
    barycentric_subdivision,
    boundary_of_simplex,
    complete_bipartite_graph,
    complete_graph,
    cone,
    disjoint_pairs,
    disjoint_union,
    dual_triangle_graph,
    euler_characteristic,
    link,
    one_skeleton_graph,
    relabel,
    simplex_closure,
    skeleton,
    star,
    subcomplex_from_faces,
    union,
)


class TestSkeleton:
    """Tests for skeleton."""

    def test_one_skeleton_of_four_simplex_is_k5(self):
        """The 1-skeleton of the 4-simplex is K5."""
        K = skeleton(simplex_closure(range(5)), 1)
        assert K.f_vector == (5, 10)
        assert K == complete_graph(range(5))

    def test_two_skeleton_of_six_simplex(self):
        """The 2-skeleton of the 6-simplex has 35 triangles."""
        assert skeleton(simplex_closure(range(7)), 2).f_vector == (7, 21, 35)

    def test_high_dimension_returns_same_complex(self):
        """Asking for at least dim K leaves K unchanged."""
        K = simplex_closure(range(3))
        assert skeleton(K, 5) == K

    def test_negative_dimension_raises(self):
        """Negative skeleton dimensions are rejected."""
        with pytest.raises(ComplexError):
            skeleton(simplex_closure(range(3)), -1)


class TestLinkAndStar:
    """Tests for link, star and cone."""

    @pytest.fixture
    def tetrahedron_boundary(self):
        return boundary_of_simplex(range(4))

    def test_link_in_sphere_is_cycle(self, tetrahedron_boundary):
        """The link of a vertex of ∂Δ³ is a triangle boundary."""
        L = link(tetrahedron_boundary, 0)
        assert L == boundary_of_simplex([1, 2, 3])

    def test_link_of_isolated_vertex_is_empty(self):
        """An isolated vertex has the void link."""
        K = SimplicialComplex.from_maximal_faces([[0, 1], [5]])
        assert link(K, 5) == SimplicialComplex.empty()

    def test_link_missing_vertex_raises(self, tetrahedron_boundary):
        """Links are only defined at vertices of K."""
        with pytest.raises(ComplexError, match="not in the complex"):
            link(tetrahedron_boundary, 9)

    def test_star(self, tetrahedron_boundary):
        """The closed star of a vertex of ∂Δ³ is a disk of three triangles."""
        S = star(tetrahedron_boundary, 0)
        assert S.f_vector == (4, 6, 3)

    def test_cone(self):
        """The cone over an edge is a triangle."""
        K = cone(simplex_closure([0, 1]), 5)
        assert K.facets == ((0, 1, 5),)

    def test_cone_apex_must_be_fresh(self):
        """The apex may not already be a vertex."""
        with pytest.raises(ComplexError):
            cone(simplex_closure([0, 1]), 1)


class TestEulerCharacteristic:
    """Tests for euler_characteristic."""

    @pytest.mark.parametrize(
        "complex_factory,expected",
        [
            (lambda: boundary_of_simplex(range(4)), 2),
            (lambda: boundary_of_simplex(range(3)), 0),
            (lambda: simplex_closure(range(5)), 1),
            (lambda: skeleton(simplex_closure(range(7)), 2), 21),
        ],
    )
    def test_known_values(self, complex_factory, expected):
        """Spheres, disks and skeleta have the expected χ."""
        assert euler_characteristic(complex_factory()) == expected


class TestBarycentricSubdivision:
    """Tests for barycentric_subdivision."""

    def test_triangle_counts(self):
        """A triangle subdivides into 7 vertices, 12 edges and 6 triangles."""
        sd = barycentric_subdivision(simplex_closure(range(3)))
        assert sd.f_vector == (7, 12, 6)

    def test_labels_follow_face_order(self):
        """Faces of dimension >= 1 get fresh labels in lexicographic order."""
        sd = barycentric_subdivision(simplex_closure(range(3)))
        # (0,1) -> 3, (0,1,2) -> 4, (0,2) -> 5, (1,2) -> 6
        assert (0, 3, 4) in sd
        assert (1, 4, 6) in sd
        assert (2, 4, 5) in sd

    def test_edge_subdivision(self):
        """An edge splits at its midpoint."""
        sd = barycentric_subdivision(simplex_closure([0, 1]))
        assert sd.facets == ((0, 2), (1, 2))

    def test_preserves_euler_characteristic(self):
        """Subdivision does not change χ."""
        K = boundary_of_simplex(range(4))
        assert euler_characteristic(barycentric_subdivision(K)) == 2

    def test_empty(self):
        """The void complex subdivides to itself."""
        assert barycentric_subdivision(SimplicialComplex.empty()).dimension == -1


class TestDisjointPairs:
    """Tests for disjoint_pairs."""

    def test_k4_edge_pairs(self):
        """K4 has three perfect matchings, so six ordered disjoint edge pairs."""
        pairs = disjoint_pairs(complete_graph(range(4)), (1, 1))
        assert len(pairs) == 6
        assert pairs[0] == ((0, 1), (2, 3))
        assert ((2, 3), (0, 1)) in pairs

    def test_mixed_dimensions(self):
        """Vertex-edge pairs of a triangle pair each vertex with its opposite edge."""
        pairs = disjoint_pairs(simplex_closure(range(3)), (0, 1))
        assert pairs == [((0,), (1, 2)), ((1,), (0, 2)), ((2,), (0, 1))]


class TestGraphs:
    """Tests for graph views and graph constructors."""

    def test_one_skeleton_graph(self):
        """The 1-skeleton graph of a triangle is a 3-cycle."""
        graph = one_skeleton_graph(simplex_closure(range(3)))
        assert graph.vertices == frozenset({0, 1, 2})
        assert graph.sorted_edges() == [(0, 1), (0, 2), (1, 2)]

    def test_dual_triangle_graph(self):
        """Two triangles sharing an edge are adjacent in the dual graph."""
        K = SimplicialComplex.from_maximal_faces([[0, 1, 2], [1, 2, 3], [4, 5, 6]])
        dual = dual_triangle_graph(K)
        assert dual.vertices == frozenset({0, 1, 2})
        assert dual.edges == frozenset({(0, 1)})

    def test_dual_graph_rejects_high_dimension(self):
        """The dual graph is only built for complexes of dimension at most 2."""
        with pytest.raises(ComplexError):
            dual_triangle_graph(simplex_closure(range(4)))

    def test_complete_bipartite(self):
        """K_{3,3} has 6 vertices and 9 edges."""
        assert complete_bipartite_graph([0, 1, 2], [3, 4, 5]).f_vector == (6, 9)

    def test_complete_bipartite_overlap_raises(self):
        """The classes must be disjoint."""
        with pytest.raises(ComplexError):
            complete_bipartite_graph([0, 1], [1, 2])

    def test_boundary_of_vertex_raises(self):
        """A single vertex has no boundary complex."""
        with pytest.raises(ComplexError):
            boundary_of_simplex([3])


class TestRelabelAndUnion:
    """Tests for relabel, disjoint_union, union and subcomplex_from_faces."""

    def test_relabel(self):
        """Labels are mapped simplexwise."""
        K = relabel(simplex_closure([0, 1]), {0: 10, 1: 4})
        assert K.facets == ((4, 10),)

    def test_relabel_not_injective(self):
        """Collapsing labels is rejected."""
        with pytest.raises(ComplexError, match="injective"):
            relabel(simplex_closure([0, 1]), {0: 3, 1: 3})

    def test_relabel_missing_vertex(self):
        """Every vertex needs an image."""
        with pytest.raises(ComplexError, match="misses"):
            relabel(simplex_closure([0, 1]), {0: 3})

    def test_disjoint_union(self):
        """Disjoint complexes combine their simplices."""
        K = disjoint_union(simplex_closure([0, 1, 2]), simplex_closure([3, 4, 5]))
        assert K.f_vector == (6, 6, 2)

    def test_disjoint_union_shared_vertex(self):
        """Shared labels are rejected."""
        with pytest.raises(ComplexError):
            disjoint_union(simplex_closure([0, 1]), simplex_closure([1, 2]))

    def test_union_glues_along_shared_faces(self):
        """Two triangles on a common edge share it once."""
        K = union(simplex_closure([0, 1, 2]), simplex_closure([1, 2, 3]))
        assert K.f_vector == (4, 5, 2)

    def test_subcomplex_from_faces(self):
        """The closure of a face list is face closed."""
        K = subcomplex_from_faces([(0, 1, 2), (2, 3)])
        assert K.f_vector == (4, 4, 1)
