"""Finite abstract simplicial complexes and their combinatorial operations.

Example:
    >>> from simplexembed.complex import SimplicialComplex, euler_characteristic
    >>> K = SimplicialComplex.from_maximal_faces([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
    >>> K.f_vector
    (4, 6, 4)
    >>> euler_characteristic(K)
    2
"""

from simplexembed.complex.models import (
    ComplexError,
    ComplexFormatError,
    Graph,
    Simplex,
    SimplicialComplex,
)
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
)
from simplexembed.complex.serialization import (
    ComplexDocument,
    load_complex,
    load_document,
    parse_complex_text,
    save_document,
    to_rustworkx,
)

__all__ = [
    # Models
    "ComplexError",
    "ComplexFormatError",
    "Graph",
    "Simplex",
    "SimplicialComplex",
    # Operations
    "barycentric_subdivision",
    "boundary_of_simplex",
    "complete_bipartite_graph",
    "complete_graph",
    "cone",
    "disjoint_pairs",
    "disjoint_union",
    "dual_triangle_graph",
    "euler_characteristic",
    "link",
    "one_skeleton_graph",
    "relabel",
    "simplex_closure",
    "skeleton",
    "star",
    # Serialization
    "ComplexDocument",
    "load_complex",
    "load_document",
    "parse_complex_text",
    "save_document",
    "to_rustworkx",
]
