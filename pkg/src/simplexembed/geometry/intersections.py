"""Intersection numbers of k-simplex images in R^{2k}, computed exactly."""

from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence

import numpy as np

from simplexembed.complex.models import Simplex, SimplicialComplex
from simplexembed.geometry.models import (
    GenericMapExhaustedError,
    IntersectionRecord,
    LinearMap,
    NonGenericMapError,
    Point,
)
from simplexembed.global_models import Parity
from simplexembed.linalg.matrices import IntVector
from simplexembed.linalg.rational import determinant, rank_rational, solve_rational
from simplexembed.vankampen.models import PairIndex
from simplexembed.vankampen.obstruction import alternation, pair_index


def moment_map(K: SimplicialComplex, k: int) -> LinearMap:
    """
    Place the i-th vertex of K (1-based, increasing labels) at γ(i).

    γ(t) = (t, t^2, ..., t^{2k}) is the moment curve; any 2k+1 of its points
    are affinely independent, so the map is generic.
    """
    return LinearMap(
        k=k,
        points={
            v: tuple(Fraction(i**e) for e in range(1, 2 * k + 1))
            for i, v in enumerate(K.vertices, start=1)
        },
    )


def affinely_independent(points: Sequence[Point]) -> bool:
    """True iff the points are affinely independent."""
    if len(points) <= 1:
        return True
    base = points[0]
    differences = [[c - b for c, b in zip(p, base)] for p in points[1:]]
    return rank_rational(differences) == len(points) - 1


def check_general_position(f: LinearMap, vertices: Optional[Iterable[int]] = None) -> None:
    """
    Require every at most 2k+1 images among the given vertices to be affinely independent.

    Raises:
        NonGenericMapError: Naming the first dependent vertex set.
    """
    labels = sorted(f.points if vertices is None else set(vertices))
    size = min(len(labels), 2 * f.k + 1)
    for subset in combinations(labels, size):
        if not affinely_independent([f.image(v) for v in subset]):
            raise NonGenericMapError(
                f"Images of vertices {list(subset)} are affinely dependent", subset
            )


def _orientation(f: LinearMap, sigma: Simplex, tau: Simplex) -> int:
    """Sign of det of the basis of edge vectors of σ followed by those of τ."""
    columns = []
    for simplex in (sigma, tau):
        origin = f.image(simplex[0])
        for v in simplex[1:]:
            columns.append([c - o for c, o in zip(f.image(v), origin)])
    rows = [list(row) for row in zip(*columns)]
    det = determinant(rows)
    if det == 0:
        raise NonGenericMapError(
            f"Edge vectors of {list(sigma)} and {list(tau)} are linearly dependent",
            sigma + tau,
        )
    return 1 if det > 0 else -1


def intersection_number(f: LinearMap, sigma: Simplex, tau: Simplex) -> IntersectionRecord:
    """
    Signed intersection number f(σ)·f(τ) of two disjoint k-simplices.

    Solves Σλ_i f(v_i) = Σμ_j f(w_j) with Σλ = Σμ = 1. The images cross iff
    every barycentric coordinate is positive; the sign is the orientation of
    the edge-vector basis of σ then τ.

    Raises:
        NonGenericMapError: If the union is not in general position, or the
            intersection touches a boundary face.
        ValueError: If σ and τ are not disjoint k-simplices for f.
    """
    k = f.k
    if len(sigma) != k + 1 or len(tau) != k + 1 or set(sigma) & set(tau):
        raise ValueError(f"Expected disjoint {k}-simplices, got {list(sigma)}, {list(tau)}")
    rows: List[List[Fraction]] = []
    for c in range(2 * k):
        rows.append(
            [f.image(v)[c] for v in sigma] + [-f.image(w)[c] for w in tau]
        )
    rows.append([Fraction(1)] * (k + 1) + [Fraction(0)] * (k + 1))
    rows.append([Fraction(0)] * (k + 1) + [Fraction(1)] * (k + 1))
    rhs = [Fraction(0)] * (2 * k) + [Fraction(1), Fraction(1)]
    solution = solve_rational(rows, rhs)
    if solution is None:
        # parallel affine hulls: disjoint when the union is generic
        check_general_position(f, sigma + tau)
        return IntersectionRecord(pair=(sigma, tau), value=0)
    if any(x == 0 for x in solution):
        raise NonGenericMapError(
            f"Images of {list(sigma)} and {list(tau)} meet on a boundary face",
            sigma + tau,
        )
    if any(x < 0 for x in solution):
        return IntersectionRecord(pair=(sigma, tau), value=0)
    return IntersectionRecord(
        pair=(sigma, tau),
        value=_orientation(f, sigma, tau),
        lambdas=solution[: k + 1],
        mus=solution[k + 1 :],
    )


def compute_o_f(
    K: SimplicialComplex, k: int, f: LinearMap, index: Optional[PairIndex] = None
) -> IntVector:
    """The vector (o_f)_{σ,τ} = (-1)^k f(σ)·f(τ) over P."""
    if index is None:
        index = pair_index(K, k)
    sign = (-1) ** k
    return tuple(sign * intersection_number(f, sigma, tau).value for sigma, tau in index)


def gale_alternation(sigma: Simplex, tau: Simplex) -> bool:
    """True iff the labels of σ and τ strictly alternate."""
    return alternation(sigma, tau) != 0


def total_intersection_count(K: SimplicialComplex, k: int, f: LinearMap) -> int:
    """Σ |f(σ)·f(τ)| over unordered pairs of disjoint k-simplices."""
    total = 0
    for sigma, tau in pair_index(K, k):
        if sigma < tau:
            total += abs(intersection_number(f, sigma, tau).value)
    return total


def total_intersection_parity(K: SimplicialComplex, k: int, f: LinearMap) -> Parity:
    """
    Parity of the total intersection count of f.

    Raises:
        ValueError: If dim K differs from k.
    """
    if K.dimension != k:
        raise ValueError(f"Parity requires dim K = k, got dim {K.dimension} and k = {k}")
    return Parity.of(total_intersection_count(K, k, f))


def random_generic_map(
    K: SimplicialComplex,
    k: int,
    rng: np.random.Generator,
    bound: int = 50,
    max_attempts: int = 100,
) -> LinearMap:
    """
    Draw integer coordinates in [-bound, bound] until the map is generic.

    Args:
        K: Complex whose vertices are mapped.
        k: Half the ambient dimension.
        rng: Seeded numpy generator; the caller owns reproducibility.
        bound: Coordinate magnitude bound.
        max_attempts: Draws before giving up.

    Raises:
        GenericMapExhaustedError: If every draw was rejected.
    """
    vertices = K.vertices
    for _ in range(max_attempts):
        draw = rng.integers(-bound, bound + 1, size=(len(vertices), 2 * k))
        try:
            f = LinearMap(
                k=k,
                points={v: tuple(Fraction(int(c)) for c in row) for v, row in zip(vertices, draw)},
            )
            check_general_position(f)
        except NonGenericMapError:
            continue
        return f
    raise GenericMapExhaustedError(
        f"No generic map found in {max_attempts} attempts; try another seed or a larger bound"
    )
