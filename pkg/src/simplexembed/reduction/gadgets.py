"""
Clause and conflict gadgets.

A clause gadget is a skeleton of a simplex in which three designated simplices
are subdivided and their central copies removed; the removed simplices are
the openings. The conflict gadget is a disk glued onto two triangular loops
joined by an edge.
"""

from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from simplexembed.complex.models import (
    Simplex,
    SimplicialComplex,
    faces,
    facet_omitting,
    make_simplex,
)
from simplexembed.complex.operations import simplex_closure, skeleton
from simplexembed.reduction.models import GadgetComplex, GadgetParameterError, Opening

SIGMA_A = "sigma_a"
SIGMA_B = "sigma_b"
CONNECTING_EDGE = "c"

# Corners of the 16-gon along a c b c^-1 a^-1 c b^-1 c^-1, with loops a = (0 1 2),
# b = (3 4 5) and c = 0-3.
_CONFLICT_WORD: Tuple[int, ...] = (0, 1, 2, 0, 3, 4, 5, 3, 0, 2, 1, 0, 3, 5, 4, 3)


def staircase_annulus(simplex: Simplex, inner: Sequence[int]) -> List[Simplex]:
    """
    Triangulate the region between ∂simplex and a shrunken inner copy.

    Each facet (u_0..u_{m-1}) of the simplex spans the prism with its inner
    copy, cut into the staircase simplices (u_0..u_j, u'_j..u'_{m-1}).

    Args:
        simplex: The subdivided simplex.
        inner: Fresh labels of the inner copy, aligned with ``simplex``.

    Returns:
        The top simplices of the annulus.
    """
    shrink = dict(zip(simplex, inner))
    result = []
    for i in range(len(simplex)):
        facet = facet_omitting(simplex, i)
        for j in range(len(facet)):
            result.append(make_simplex(facet[: j + 1] + tuple(shrink[u] for u in facet[j:])))
    return sorted(result)


def opening_disk(
    subdivided: Simplex, inner: Sequence[int], apex: int
) -> List[Simplex]:
    """
    A disk bounded by the opening boundary inside its clause gadget.

    The disk is the cone over ∂subdivided from ``apex`` together with the
    annulus of the subdivision.
    """
    cone = [
        make_simplex(facet_omitting(subdivided, i) + (apex,))
        for i in range(len(subdivided))
    ]
    return sorted(cone + staircase_annulus(subdivided, inner))


def _build_clause_gadget(
    base: SimplicialComplex,
    holes: Sequence[Tuple[Simplex, Sequence[int]]],
    apex: int,
    k: int,
    clause: int,
) -> GadgetComplex:
    """
    Subdivide and open the given simplices of ``base``.

    Args:
        base: The unsubdivided complex.
        holes: For each opening in order, the simplex to subdivide and the
            vertex set of its complementary sphere.
        apex: Vertex outside every subdivided simplex used to cone the disks.
        k: Dimension of the complementary spheres.
        clause: Index used in the gadget and opening tags.
    """
    tag = f"clause:{clause}"
    next_label = max(base.vertices) + 1
    simplices = set(base.simplices)
    provenance: Dict[Simplex, str] = {}
    openings: Dict[str, Opening] = {}
    for position, (sigma, sphere_vertices) in enumerate(holes, start=1):
        inner = tuple(range(next_label, next_label + len(sigma)))
        next_label += len(sigma)
        opening_id = f"opening:{clause}:{position}"
        simplices.discard(sigma)
        for top in staircase_annulus(sigma, inner):
            for face in faces(top):
                if face not in base.simplices:
                    simplices.add(face)
                    provenance[face] = opening_id
        sphere = skeleton(simplex_closure(sphere_vertices), k)
        openings[opening_id] = Opening(
            id=opening_id,
            gadget=tag,
            subdivided=list(sigma),
            removed=list(inner),
            complementary_sphere=[list(f) for f in sphere.facets],
            disk=[list(s) for s in opening_disk(sigma, inner, apex)],
        )
    K = SimplicialComplex(simplices)
    for simplex in K:
        provenance.setdefault(simplex, tag)
    return GadgetComplex(complex=K, openings=openings, provenance=provenance)


def clause_gadget_2_4(clause: int = 1) -> GadgetComplex:
    """
    Clause gadget for 2-complexes in R^4.

    The 2-skeleton of the 6-simplex on 0..6 with the triangles 023, 013 and
    012 subdivided and opened as ω_1, ω_2 and ω_3. The complementary sphere
    of ω_i is ∂{i, 4, 5, 6}, and vertex 4 cones each opening disk.

    Example:
        >>> gadget = clause_gadget_2_4()
        >>> gadget.complex.f_vector
        (16, 48, 50)
    """
    base = skeleton(simplex_closure(range(7)), 2)
    holes = []
    for i in (1, 2, 3):
        sigma = tuple(v for v in (0, 1, 2, 3) if v != i)
        holes.append((sigma, (i, 4, 5, 6)))
    return _build_clause_gadget(base, holes, apex=4, k=2, clause=clause)


def clause_gadget_general(k: int, l: int, clause: int = 1) -> GadgetComplex:
    """
    Clause gadget for k-complexes in R^d with d = k + l + 1.

    Vertices are v_j = j for j = 0..d+1 and p = d+2. The gadget is the
    k-skeleton of the simplex on the v_j together with every (l+1)-simplex
    containing p. With B = {p, v_0, ..., v_{l+1}}, the openings sit in
    σ_i = B minus v_{i-1} for i = 1, 2, 3; the complementary sphere of ω_i is
    the k-skeleton of the simplex on the v_j outside σ_i.

    Raises:
        GadgetParameterError: Unless 1 <= l < k.
    """
    if not 1 <= l < k:
        raise GadgetParameterError(f"Clause gadget needs 1 <= l < k, got k = {k}, l = {l}")
    d = k + l + 1
    p = d + 2
    v = list(range(d + 2))
    tops = [c for c in combinations(v, k + 1)]
    tops += [make_simplex(c + (p,)) for c in combinations(v, l + 1)]
    base = SimplicialComplex.from_maximal_faces(tops)
    block = [p] + v[: l + 2]
    holes = []
    for i in (1, 2, 3):
        sigma = make_simplex(u for u in block if u != v[i - 1])
        holes.append((sigma, tuple(u for u in v if u not in sigma)))
    return _build_clause_gadget(base, holes, apex=v[l + 2], k=k, clause=clause)


def conflict_gadget_l1(tag: str = "conflict") -> GadgetComplex:
    """
    The conflict gadget: a squeezed torus over two triangles and an edge.

    Loops Σ_a = (0 1 2) and Σ_b = (3 4 5) are joined by the edge c = 0-3. A
    16-gon is attached along a c b c⁻¹ a⁻¹ c b⁻¹ c⁻¹ and triangulated as a ring
    of fresh vertices 6..21 around the apex 22.

    Example:
        >>> conflict_gadget_l1().complex.f_vector
        (23, 71, 48)
    """
    corners = _CONFLICT_WORD
    n = len(corners)
    ring = [6 + i for i in range(n)]
    apex = 6 + n
    tops: List[Tuple[int, ...]] = [(0, 1, 2), (3, 4, 5), (0, 3)]
    for i in range(n):
        j = (i + 1) % n
        tops.append((corners[i], corners[j], ring[j]))
        tops.append((corners[i], ring[i], ring[j]))
        tops.append((ring[i], ring[j], apex))
    # loop triangles only supply the loop edges
    closure = set()
    for top in tops:
        closure.update(faces(make_simplex(top)))
    closure -= {(0, 1, 2), (3, 4, 5)}
    K = SimplicialComplex(closure)
    return GadgetComplex(
        complex=K,
        provenance={simplex: tag for simplex in K},
        loops={SIGMA_A: (0, 1, 2), SIGMA_B: (3, 4, 5), CONNECTING_EDGE: (0, 3)},
    )
