"""Core models for finite abstract simplicial complexes."""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

Simplex = Tuple[int, ...]
"""A simplex as its strictly increasing tuple of vertex labels."""

Edge = Tuple[int, int]


class ComplexError(Exception):
    """Raised when a complex is invalid or an operation's precondition fails."""

    pass


class ComplexFormatError(ComplexError):
    """Raised when a complex file cannot be parsed."""

    pass


def make_simplex(vertices: Iterable[int]) -> Simplex:
    """
    Normalize a collection of vertex labels into a Simplex.

    Args:
        vertices: Vertex labels in any order; repeats collapse.

    Returns:
        The sorted tuple of distinct labels.

    Raises:
        ComplexError: If the collection is empty or holds a label that is not
            a nonnegative integer.
    """
    labels = set()
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise ComplexError(f"Vertex labels must be nonnegative integers, got {v!r}")
        labels.add(v)
    if not labels:
        raise ComplexError("A simplex needs at least one vertex")
    return tuple(sorted(labels))


def dim_of(simplex: Simplex) -> int:
    """Dimension of a simplex."""
    return len(simplex) - 1


def faces(simplex: Simplex) -> Iterator[Simplex]:
    """Yield every nonempty face of a simplex, the simplex itself included."""
    for size in range(1, len(simplex) + 1):
        yield from combinations(simplex, size)


def facet_omitting(simplex: Simplex, i: int) -> Simplex:
    """The codimension-one face that omits the i-th vertex (0-based)."""
    return simplex[:i] + simplex[i + 1 :]


class SimplicialComplex:
    """
    An immutable finite abstract simplicial complex.

    The full face-closed set of simplices is stored. Vertex labels are
    nonnegative integers ordered numerically, and every enumeration the class
    exposes is lexicographic on sorted vertex tuples so that downstream
    indices are reproducible.
    """

    __slots__ = ("_simplices", "_by_dim", "_hash")

    def __init__(self, simplices: Iterable[Iterable[int]]):
        """
        Create a complex from an already face-closed collection of simplices.

        Args:
            simplices: Every simplex of the complex.

        Raises:
            ComplexError: If some face of a given simplex is missing.
        """
        normalized = frozenset(make_simplex(s) for s in simplices)
        for simplex in normalized:
            if len(simplex) > 1:
                for i in range(len(simplex)):
                    if facet_omitting(simplex, i) not in normalized:
                        raise ComplexError(
                            f"Not closed under faces: {list(simplex)} is present "
                            f"but {list(facet_omitting(simplex, i))} is not"
                        )
        by_dim: Dict[int, List[Simplex]] = {}
        for simplex in normalized:
            by_dim.setdefault(dim_of(simplex), []).append(simplex)
        self._simplices: FrozenSet[Simplex] = normalized
        self._by_dim: Dict[int, Tuple[Simplex, ...]] = {
            d: tuple(sorted(group)) for d, group in sorted(by_dim.items())
        }
        self._hash = hash(normalized)

    @classmethod
    def from_maximal_faces(
        cls, maximal_faces: Sequence[Iterable[int]]
    ) -> "SimplicialComplex":
        """
        Build the face closure of a list of faces.

        Args:
            maximal_faces: Vertex-label collections; they need not be maximal,
                the closure is taken either way.

        Returns:
            The smallest complex containing every input face.

        Raises:
            ComplexError: If the list is empty, or a face is empty or carries
                an invalid label.
        """
        if len(maximal_faces) == 0:
            raise ComplexError("A complex needs at least one face")
        closure = set()
        for face in maximal_faces:
            simplex = make_simplex(face)
            if simplex in closure:
                continue
            closure.update(faces(simplex))
        return cls(closure)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        """The void complex (used for links of isolated vertices)."""
        return cls(())

    @property
    def simplices(self) -> FrozenSet[Simplex]:
        """All simplices of the complex."""
        return self._simplices

    @property
    def dimension(self) -> int:
        """Largest simplex dimension, or -1 for the void complex."""
        return max(self._by_dim) if self._by_dim else -1

    @property
    def vertices(self) -> Tuple[int, ...]:
        """Vertex labels in increasing order."""
        return tuple(s[0] for s in self._by_dim.get(0, ()))

    def simplices_of_dim(self, d: int) -> Tuple[Simplex, ...]:
        """Simplices of dimension d in lexicographic order."""
        return self._by_dim.get(d, ())

    @property
    def edges(self) -> Tuple[Simplex, ...]:
        return self.simplices_of_dim(1)

    @property
    def triangles(self) -> Tuple[Simplex, ...]:
        return self.simplices_of_dim(2)

    @property
    def facets(self) -> Tuple[Simplex, ...]:
        """Maximal simplices, ordered by dimension then lexicographically."""
        maximal = []
        for d, group in self._by_dim.items():
            cofaces = self._by_dim.get(d + 1, ())
            covered = {facet_omitting(c, i) for c in cofaces for i in range(len(c))}
            maximal.extend(s for s in group if s not in covered)
        return tuple(maximal)

    @property
    def f_vector(self) -> Tuple[int, ...]:
        """Number of simplices in each dimension 0..dim."""
        return tuple(len(self.simplices_of_dim(d)) for d in range(self.dimension + 1))

    def __contains__(self, simplex: object) -> bool:
        if isinstance(simplex, tuple):
            return simplex in self._simplices
        try:
            return make_simplex(simplex) in self._simplices  # type: ignore[arg-type]
        except (ComplexError, TypeError):
            return False

    def __iter__(self) -> Iterator[Simplex]:
        for group in self._by_dim.values():
            yield from group

    def __len__(self) -> int:
        return len(self._simplices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SimplicialComplex(f_vector={self.f_vector})"


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on integer labels."""

    vertices: FrozenSet[int]
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if u == v:
                raise ComplexError(f"Graph has a loop at {u}")
            if u > v:
                raise ComplexError(f"Edge ({u}, {v}) is not normalized as (min, max)")
            if u not in self.vertices or v not in self.vertices:
                raise ComplexError(f"Edge ({u}, {v}) has an endpoint outside the vertex set")

    @classmethod
    def from_edges(
        cls, edges: Iterable[Tuple[int, int]], vertices: Iterable[int] = ()
    ) -> "Graph":
        """Build a graph from an edge list, normalizing endpoint order."""
        normalized = frozenset((min(u, v), max(u, v)) for u, v in edges)
        labels = set(vertices)
        for u, v in normalized:
            labels.update((u, v))
        return cls(vertices=frozenset(labels), edges=normalized)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)
