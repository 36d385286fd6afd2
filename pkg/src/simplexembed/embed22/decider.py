"""Decision procedure for embedding 2-dimensional complexes in the plane.

Three stages run in order: planarity of the 1-skeleton of the first
barycentric subdivision, the vertex-link condition, and a scan of the
dual graph for triangle components without free edges. A complex passing
all three embeds in the plane.
"""

from itertools import combinations
from typing import Dict, List, Optional, Tuple

import rustworkx as rx

from simplexembed.complex.models import Graph, Simplex, SimplicialComplex
from simplexembed.complex.operations import (
    barycentric_subdivision,
    dual_triangle_graph,
    link,
    one_skeleton_graph,
)
from simplexembed.complex.serialization import to_rustworkx
from simplexembed.embed22.models import Embed22Error, Embed22Report, LinkWitness
from simplexembed.global_models import Embed22Reason, Embed22Verdict


def _require_dim2(K: SimplicialComplex) -> None:
    if K.dimension > 2:
        raise Embed22Error(f"Expected a complex of dimension at most 2, got {K.dimension}")


def is_planar(G: Graph) -> bool:
    """True iff the simple graph G is planar."""
    rx_graph, _ = to_rustworkx(G)
    return rx.is_planar(rx_graph)


def _link_is_acceptable(L: SimplicialComplex) -> bool:
    graph, _ = to_rustworkx(one_skeleton_graph(L))
    n_vertices = graph.num_nodes()
    n_edges = graph.num_edges()
    if n_vertices == 0:
        return True
    components = rx.number_connected_components(graph)
    if n_edges == n_vertices - components:
        return True
    return (
        components == 1
        and n_edges == n_vertices
        and all(graph.degree(node) == 2 for node in graph.node_indices())
    )


def link_condition(K: SimplicialComplex) -> Optional[int]:
    """
    Find the first vertex whose link is neither a forest nor exactly one cycle.

    Returns:
        The failing vertex, or None when every link passes.

    Raises:
        Embed22Error: If dim K > 2.
    """
    _require_dim2(K)
    for v in K.vertices:
        if not _link_is_acceptable(link(K, v)):
            return v
    return None


def _edge_incidence(K: SimplicialComplex) -> Dict[Simplex, List[int]]:
    incidence: Dict[Simplex, List[int]] = {}
    for index, triangle in enumerate(K.triangles):
        for edge in combinations(triangle, 2):
            incidence.setdefault(edge, []).append(index)
    return incidence


def homological_cycle_scan(K: SimplicialComplex) -> Optional[Tuple[Simplex, ...]]:
    """
    Look for a dual-graph component in which no triangle has a free edge.

    Components are visited in order of their smallest triangle; a surviving
    component is a Z/2 2-cycle in which every edge lies on exactly two of
    its triangles.

    Returns:
        The triangles of the first surviving component, or None.

    Raises:
        Embed22Error: If dim K > 2 or an edge lies on three or more triangles.
    """
    _require_dim2(K)
    incidence = _edge_incidence(K)
    for edge, triangles in sorted(incidence.items()):
        if len(triangles) > 2:
            raise Embed22Error(
                f"Edge {list(edge)} lies on {len(triangles)} triangles"
            )
    dual, _ = to_rustworkx(dual_triangle_graph(K))
    components = sorted(
        (sorted(dual[node] for node in component) for component in rx.connected_components(dual)),
        key=lambda members: members[0],
    )
    for members in components:
        triangles = [K.triangles[i] for i in members]
        has_free_edge = any(
            len(incidence[edge]) == 1
            for triangle in triangles
            for edge in combinations(triangle, 2)
        )
        if not has_free_edge:
            return tuple(triangles)
    return None


def decide_embed22(K: SimplicialComplex) -> Embed22Report:
    """
    Decide whether a complex of dimension at most 2 embeds in the plane.

    Raises:
        Embed22Error: If dim K > 2.
    """
    _require_dim2(K)
    skeleton_graph = one_skeleton_graph(barycentric_subdivision(K))
    if not is_planar(skeleton_graph):
        return Embed22Report(
            verdict=Embed22Verdict.NO,
            reason=Embed22Reason.PLANARITY_FAILURE,
            subdivision_vertices=len(skeleton_graph.vertices),
            subdivision_edges=len(skeleton_graph.edges),
        )
    failing = link_condition(K)
    if failing is not None:
        L = link(K, failing)
        return Embed22Report(
            verdict=Embed22Verdict.NO,
            reason=Embed22Reason.LINK_FAILURE,
            link=LinkWitness(
                vertex=failing,
                link_vertices=list(L.vertices),
                link_edges=[list(e) for e in L.edges],
            ),
        )
    cycle = homological_cycle_scan(K)
    if cycle is not None:
        return Embed22Report(
            verdict=Embed22Verdict.NO,
            reason=Embed22Reason.HOMOLOGICAL_CYCLE,
            triangles=[list(t) for t in cycle],
        )
    return Embed22Report(verdict=Embed22Verdict.YES)
