"""Unit tests for the Van Kampen obstruction system and its decision."""

import json
from itertools import combinations

import numpy as np
import pytest
import rustworkx as rx

from simplexembed.complex.models import SimplicialComplex
from simplexembed.complex.operations import (
    boundary_of_simplex,
    complete_bipartite_graph,
    complete_graph,
    relabel,
    simplex_closure,
    skeleton,
)
from simplexembed.embed22 import decide_embed22
from simplexembed.global_models import Embed22Verdict, Verdict
from simplexembed.vankampen import (
    ObstructionError,
    VanKampenTextFormatter,
    alternation,
    analyze,
    build_obstruction_system,
    decide_embed_k_2k,
    finger_move_columns,
    o_gamma,
    obstruction_vanishes,
    obstruction_vanishes_mod2,
    pair_index,
    save_obstruction_dump,
)


def _graph_complex(n_vertices, edges):
    faces = [list(e) for e in edges] + [[v] for v in range(n_vertices)]
    return SimplicialComplex.from_maximal_faces(faces)


class TestAlternation:
    """Tests for alternation."""

    @pytest.mark.parametrize(
        "sigma,tau,expected",
        [
            ((0, 2), (1, 3), 1),
            ((1, 3), (0, 2), -1),
            ((0, 1), (2, 3), 0),
            ((0, 3), (1, 2), 0),
            ((0, 2, 4), (1, 3, 5), 1),
            ((1, 3, 5), (0, 2, 4), -1),
            ((0, 2, 4), (1, 3, 6), 1),
            ((0, 2, 5), (1, 3, 4), 0),
        ],
    )
    def test_classification(self, sigma, tau, expected):
        """Only strictly interleaved labels alternate."""
        assert alternation(sigma, tau) == expected


class TestObstructionSystem:
    """Tests for P, o_γ and the finger-move matrix."""

    def test_k4_pairs(self):
        """K4 has six ordered pairs of disjoint edges."""
        assert len(pair_index(complete_graph(range(4)), 1)) == 6

    def test_o_gamma_k1(self):
        """For k = 1, alternation starting with τ gives -1."""
        K = complete_graph(range(4))
        index = pair_index(K, 1)
        values = dict(zip(index, o_gamma(K, 1, index)))
        assert values[((0, 2), (1, 3))] == 1
        assert values[((1, 3), (0, 2))] == -1
        assert values[((0, 1), (2, 3))] == 0

    def test_o_gamma_k2_is_symmetric(self):
        """For k = 2, both orders of an alternating pair get +1."""
        K = skeleton(simplex_closure(range(6)), 2)
        index = pair_index(K, 2)
        values = dict(zip(index, o_gamma(K, 2, index)))
        assert values[((0, 2, 4), (1, 3, 5))] == 1
        assert values[((1, 3, 5), (0, 2, 4))] == 1

    def test_finger_move_column_shape(self):
        """Q orders (ω, ν) lexicographically and Φ has |P| rows."""
        K = complete_graph(range(4))
        columns, phi = finger_move_columns(K, 1)
        assert phi.shape == (6, len(columns))
        assert columns == tuple(sorted(columns))
        assert all(len(omega) + len(nu) == 3 for omega, nu in columns)

    def test_vertex_edge_finger_move_entries(self):
        """Moving vertex 0 across edge 23 in K4 only touches the pairs of 01 and 23."""
        K = complete_graph(range(4))
        index = pair_index(K, 1)
        columns, phi = finger_move_columns(K, 1, index)
        column = phi.column(columns.index(((0,), (2, 3))))
        entries = {index[p]: v for p, v in column.items()}
        assert entries == {
            ((0, 1), (2, 3)): -1,
            ((2, 3), (0, 1)): 1,
        }

    def test_system_is_symmetric(self):
        """build_obstruction_system checks (v)_{τ,σ} = (-1)^k (v)_{σ,τ}."""
        for K, k in [
            (complete_graph(range(5)), 1),
            (skeleton(simplex_closure(range(6)), 2), 2),
        ]:
            system = build_obstruction_system(K, k)
            sign = (-1) ** k
            for p, value in enumerate(system.o_gamma):
                assert system.o_gamma[system.index.swapped(p)] == sign * value

    def test_no_pairs(self):
        """A single triangle has an empty system that vanishes."""
        system = build_obstruction_system(simplex_closure(range(3)), 2)
        assert system.pair_count == 0
        assert obstruction_vanishes(simplex_closure(range(3)), 2)

    @pytest.mark.parametrize("k", [0, -1])
    def test_k_below_one(self, k):
        """k must be at least 1."""
        with pytest.raises(ObstructionError):
            o_gamma(complete_graph(range(3)), k)

    def test_dimension_above_k(self):
        """The complex may not exceed dimension k."""
        with pytest.raises(ObstructionError, match="exceeds"):
            build_obstruction_system(simplex_closure(range(3)), 1)


class TestDecision:
    """Tests for decide_embed_k_2k and analyze."""

    @pytest.mark.parametrize(
        "complex_factory,expected",
        [
            (lambda: complete_graph(range(4)), Verdict.EMBEDDABLE),
            (lambda: complete_graph(range(5)), Verdict.NOT_EMBEDDABLE),
            (lambda: complete_bipartite_graph([0, 1, 2], [3, 4, 5]), Verdict.NOT_EMBEDDABLE),
            (lambda: complete_graph(range(1, 6)), Verdict.NOT_EMBEDDABLE),
            (lambda: boundary_of_simplex(range(3)), Verdict.EMBEDDABLE),
        ],
    )
    def test_graphs_in_the_plane(self, complex_factory, expected):
        """K4 embeds in the plane while K5 and K3,3 do not."""
        assert decide_embed_k_2k(complex_factory(), 1) == expected

    def test_six_simplex_two_skeleton(self):
        """The 2-skeleton of Δ⁶ does not embed in R^4."""
        assert (
            decide_embed_k_2k(skeleton(simplex_closure(range(7)), 2), 2)
            == Verdict.NOT_EMBEDDABLE
        )

    def test_vanishing_at_k2_is_inconclusive(self):
        """Vanishing for k = 2 does not decide embeddability."""
        K = skeleton(simplex_closure(range(6)), 2)
        assert decide_embed_k_2k(K, 2) == Verdict.INCONCLUSIVE_VANISHING

    def test_graph_with_k3(self):
        """Any graph embeds in R^6."""
        assert decide_embed_k_2k(complete_graph(range(6)), 3) == Verdict.EMBEDDABLE

    @pytest.mark.slow
    def test_eight_simplex_three_skeleton(self):
        """The 3-skeleton of Δ⁸ does not embed in R^6."""
        assert (
            decide_embed_k_2k(skeleton(simplex_closure(range(9)), 3), 3)
            == Verdict.NOT_EMBEDDABLE
        )

    def test_report_statistics(self):
        """analyze reports the system size."""
        report = analyze(complete_graph(range(5)), 1)
        assert report.pair_count == 30
        assert report.column_count == 60
        assert not report.vanishes
        assert not report.mod2


class TestModTwo:
    """Tests for the GF(2) variant."""

    def test_k5_nonvanishing(self):
        """K5 is detected over GF(2)."""
        assert not obstruction_vanishes_mod2(complete_graph(range(5)), 1)

    def test_k1_vanishing_is_decisive(self):
        """For k = 1 mod-2 vanishing proves planarity."""
        report = analyze(complete_graph(range(4)), 1, mod2=True)
        assert report.vanishes
        assert report.verdict == Verdict.EMBEDDABLE

    def test_k3_vanishing_is_inconclusive(self):
        """For k >= 2 mod-2 vanishing is only necessary."""
        report = analyze(simplex_closure(range(4)), 3, mod2=True)
        assert report.verdict == Verdict.INCONCLUSIVE_VANISHING
        assert "only necessary" in VanKampenTextFormatter.format(report)


class TestFormattingAndDump:
    """Tests for the text formatter and the obstruction dump."""

    def test_text_format(self):
        """The report lists the verdict first."""
        text = VanKampenTextFormatter.format(analyze(complete_graph(range(5)), 1))
        assert text.splitlines()[:4] == [
            "verdict: NotEmbeddable",
            "k: 1",
            "coefficients: Z",
            "vanishes: false",
        ]

    def test_dump(self, tmp_path):
        """The dump lists P, o_γ and Φ columns in order."""
        system = build_obstruction_system(complete_graph(range(4)), 1)
        path = tmp_path / "dump.json"
        save_obstruction_dump(system, path)
        data = json.loads(path.read_text())
        assert data["k"] == 1
        assert len(data["pairs"]) == 6
        assert len(data["o_gamma"]) == 6
        assert len(data["columns"]) == system.column_count
        assert data["pairs"][0] == [[0, 1], [2, 3]]


@pytest.mark.slow
class TestPlanarityAgreement:
    """The k = 1 test agrees with rustworkx planarity on small graphs."""

    def _check(self, n_vertices, edges):
        graph = rx.PyGraph()
        graph.add_nodes_from(range(n_vertices))
        graph.add_edges_from_no_data(list(edges))
        K = _graph_complex(n_vertices, edges)
        assert obstruction_vanishes(K, 1) == rx.is_planar(graph), edges

    def test_all_graphs_on_five_vertices(self):
        """Every labelled graph on five vertices."""
        all_edges = list(combinations(range(5), 2))
        for mask in range(1 << len(all_edges)):
            edges = [e for i, e in enumerate(all_edges) if mask >> i & 1]
            self._check(5, edges)

    def test_all_graphs_on_six_vertices(self):
        """Every isomorphism class on six vertices, under both deciders."""
        all_edges = list(combinations(range(6), 2))
        buckets = {}
        classes = []
        for mask in range(1 << len(all_edges)):
            edges = [e for i, e in enumerate(all_edges) if mask >> i & 1]
            graph = rx.PyGraph()
            graph.add_nodes_from(range(6))
            graph.add_edges_from_no_data(edges)
            key = (len(edges), tuple(sorted(graph.degree(v) for v in range(6))))
            bucket = buckets.setdefault(key, [])
            if any(rx.is_isomorphic(graph, other) for other in bucket):
                continue
            bucket.append(graph)
            classes.append(edges)
        assert len(classes) == 156
        for edges in classes:
            self._check(6, edges)
            K = _graph_complex(6, edges)
            embeds = decide_embed22(K).verdict == Embed22Verdict.YES
            assert embeds == obstruction_vanishes(K, 1), edges


class TestRelabelingInvariance:
    """Vanishing does not depend on vertex labels."""

    @staticmethod
    def _relabelings(K, count, seed):
        rng = np.random.default_rng(seed)
        for _ in range(count):
            labels = rng.choice(1000, size=len(K.vertices), replace=False)
            yield relabel(K, {v: int(label) for v, label in zip(K.vertices, labels)})

    @pytest.mark.parametrize(
        "factory,expected",
        [
            (lambda: complete_graph(range(4)), True),
            (lambda: complete_graph(range(5)), False),
            (lambda: complete_bipartite_graph([0, 1, 2], [3, 4, 5]), False),
            (lambda: boundary_of_simplex(range(3)), True),
        ],
    )
    def test_graphs(self, factory, expected):
        """Random injective relabelings keep the k = 1 answer."""
        K = factory()
        assert obstruction_vanishes(K, 1) is expected
        for relabeled in self._relabelings(K, 10, seed=42):
            assert obstruction_vanishes(relabeled, 1) is expected

    def test_reversed_labels(self):
        """Reversing the vertex order of K5 flips no verdict."""
        K = complete_graph(range(5))
        reversed_K = relabel(K, {v: 4 - v for v in K.vertices})
        assert decide_embed_k_2k(reversed_K, 1) == Verdict.NOT_EMBEDDABLE

    def test_two_complexes(self):
        """Relabeled 2-skeleta keep their k = 2 answer."""
        for relabeled in self._relabelings(skeleton(simplex_closure(range(6)), 2), 2, seed=1):
            assert obstruction_vanishes(relabeled, 2)
        for relabeled in self._relabelings(skeleton(simplex_closure(range(7)), 2), 1, seed=2):
            assert not obstruction_vanishes(relabeled, 2)
