"""Combinatorial operations on simplicial complexes."""

from itertools import combinations, permutations
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from simplexembed.complex.models import (
    ComplexError,
    Graph,
    Simplex,
    SimplicialComplex,
    dim_of,
    faces,
    make_simplex,
)


def skeleton(K: SimplicialComplex, j: int) -> SimplicialComplex:
    """
    Return the j-skeleton of K.

    Args:
        K: Complex to truncate.
        j: Largest dimension kept.

    Returns:
        The subcomplex of all simplices of dimension at most j.

    Raises:
        ComplexError: If j is negative.
    """
    if j < 0:
        raise ComplexError(f"Skeleton dimension must be nonnegative, got {j}")
    if j >= K.dimension:
        return K
    return SimplicialComplex(s for s in K if dim_of(s) <= j)


def link(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """
    Return the link of vertex v in K.

    Raises:
        ComplexError: If v is not a vertex of K.
    """
    if (v,) not in K.simplices:
        raise ComplexError(f"Vertex {v} is not in the complex")
    result = []
    for simplex in K:
        if v in simplex and len(simplex) > 1:
            result.append(tuple(u for u in simplex if u != v))
    return SimplicialComplex(result)


def star(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """Closed star of vertex v: every simplex containing v, with its faces."""
    if (v,) not in K.simplices:
        raise ComplexError(f"Vertex {v} is not in the complex")
    return SimplicialComplex.from_maximal_faces([s for s in K if v in s])


def cone(K: SimplicialComplex, apex: int) -> SimplicialComplex:
    """Cone over K with a new apex vertex."""
    if apex in K.vertices:
        raise ComplexError(f"Apex {apex} is already a vertex of the complex")
    return SimplicialComplex.from_maximal_faces(
        [(apex,)] + [s + (apex,) for s in K.facets]
    )


def euler_characteristic(K: SimplicialComplex) -> int:
    """Alternating sum of simplex counts by dimension."""
    return sum((-1) ** d * count for d, count in enumerate(K.f_vector))


def _flag_labels(K: SimplicialComplex) -> Dict[Simplex, int]:
    """Label every face of K by a vertex of its barycentric subdivision.

    Vertices keep their labels; higher faces get fresh labels above the
    largest existing one, allocated in lexicographic order of the faces.
    """
    labels: Dict[Simplex, int] = {(v,): v for v in K.vertices}
    next_label = max(K.vertices, default=-1) + 1
    for simplex in sorted(s for s in K if len(s) > 1):
        labels[simplex] = next_label
        next_label += 1
    return labels


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """
    First barycentric subdivision of K.

    The result is the flag complex of the face poset: its simplices are the
    chains of faces ordered by inclusion. Labels follow ``_flag_labels``.
    """
    if K.dimension < 0:
        return K
    labels = _flag_labels(K)
    chains = []
    for facet in K.facets:
        for order in permutations(facet):
            chain = [labels[tuple(sorted(order[: i + 1]))] for i in range(len(order))]
            chains.append(chain)
    return SimplicialComplex.from_maximal_faces(chains)


def disjoint_pairs(
    K: SimplicialComplex, dims: Tuple[int, int]
) -> List[Tuple[Simplex, Simplex]]:
    """
    Enumerate ordered pairs of vertex-disjoint simplices.

    Args:
        K: Complex to scan.
        dims: Dimensions (a, b) of the first and second member.

    Returns:
        Pairs (sigma, tau) with dim sigma = a, dim tau = b and no shared
        vertex, in lexicographic order.
    """
    a, b = dims
    firsts = K.simplices_of_dim(a)
    seconds = K.simplices_of_dim(b)
    pairs = []
    for sigma in firsts:
        vs = set(sigma)
        for tau in seconds:
            if vs.isdisjoint(tau):
                pairs.append((sigma, tau))
    return pairs


def one_skeleton_graph(K: SimplicialComplex) -> Graph:
    """Graph formed by the vertices and edges of K."""
    return Graph(
        vertices=frozenset(K.vertices),
        edges=frozenset((u, v) for u, v in K.edges),
    )


def dual_triangle_graph(K: SimplicialComplex) -> Graph:
    """
    Dual graph of the triangles of a complex of dimension at most 2.

    Graph vertex i stands for ``K.triangles[i]``; two triangles are adjacent
    when they share an edge.

    Raises:
        ComplexError: If K has simplices of dimension above 2.
    """
    if K.dimension > 2:
        raise ComplexError(
            f"Dual graph requires dimension at most 2, got {K.dimension}"
        )
    by_edge: Dict[Simplex, List[int]] = {}
    for index, triangle in enumerate(K.triangles):
        for edge in combinations(triangle, 2):
            by_edge.setdefault(edge, []).append(index)
    edges = set()
    for incident in by_edge.values():
        for i, j in combinations(incident, 2):
            edges.add((i, j))
    return Graph(vertices=frozenset(range(len(K.triangles))), edges=frozenset(edges))


def simplex_closure(vertices: Iterable[int]) -> SimplicialComplex:
    """The full simplex on the given vertices."""
    return SimplicialComplex.from_maximal_faces([make_simplex(vertices)])


def boundary_of_simplex(vertices: Iterable[int]) -> SimplicialComplex:
    """Boundary complex of the simplex on the given vertices."""
    simplex = make_simplex(vertices)
    if len(simplex) < 2:
        raise ComplexError("The boundary of a vertex is empty")
    return SimplicialComplex.from_maximal_faces(
        list(combinations(simplex, len(simplex) - 1))
    )


def complete_graph(vertices: Iterable[int]) -> SimplicialComplex:
    """Complete graph on the given vertices, as a 1-dimensional complex."""
    return skeleton(simplex_closure(vertices), 1)


def complete_bipartite_graph(
    left: Sequence[int], right: Sequence[int]
) -> SimplicialComplex:
    """Complete bipartite graph between two disjoint label sets."""
    if set(left) & set(right):
        raise ComplexError("Bipartition classes must be disjoint")
    return SimplicialComplex.from_maximal_faces([(u, v) for u in left for v in right])


def relabel(K: SimplicialComplex, mapping: Mapping[int, int]) -> SimplicialComplex:
    """
    Apply an injective relabeling to every vertex of K.

    Raises:
        ComplexError: If a vertex is unmapped or two vertices collide.
    """
    missing = [v for v in K.vertices if v not in mapping]
    if missing:
        raise ComplexError(f"Relabeling misses vertices {missing}")
    images = [mapping[v] for v in K.vertices]
    if len(set(images)) != len(images):
        raise ComplexError("Relabeling is not injective on the vertex set")
    return SimplicialComplex(tuple(mapping[v] for v in s) for s in K)


def disjoint_union(*complexes: SimplicialComplex) -> SimplicialComplex:
    """
    Union of complexes whose vertex sets are pairwise disjoint.

    Raises:
        ComplexError: If two of the complexes share a vertex label.
    """
    seen: set = set()
    simplices: set = set()
    for K in complexes:
        if seen & set(K.vertices):
            raise ComplexError("Complexes in a disjoint union must not share vertices")
        seen.update(K.vertices)
        simplices.update(K.simplices)
    return SimplicialComplex(simplices)


def union(*complexes: SimplicialComplex) -> SimplicialComplex:
    """Union of complexes over a common label space (gluing along shared faces)."""
    simplices: set = set()
    for K in complexes:
        simplices.update(K.simplices)
    return SimplicialComplex(simplices)


def subcomplex_from_faces(faces_list: Iterable[Simplex]) -> SimplicialComplex:
    """Face closure of an arbitrary collection of simplices."""
    closure: set = set()
    for simplex in faces_list:
        closure.update(faces(simplex))
    return SimplicialComplex(closure)
