"""Reading and writing complexes in the text and JSON facet formats."""

from pathlib import Path
from typing import Any, Dict, List, Tuple

import rustworkx as rx
from pydantic import BaseModel, Field, ValidationError, field_validator
from rich.console import Console

from simplexembed.complex.models import (
    ComplexError,
    ComplexFormatError,
    Graph,
    SimplicialComplex,
)
from simplexembed.utils.file_utils import is_json_path, read_text_file, write_text_file

console = Console(stderr=True)


class ComplexDocument(BaseModel):
    """A complex as stored on disk: its facets plus free-form metadata."""

    facets: List[List[int]] = Field(
        ..., description="Maximal faces, each a list of vertex labels"
    )
    metadata: Dict[str, Any] = Field(
        default_factory=dict,
        description="Producer-specific annotations (provenance, openings, ...)",
    )

    @field_validator("facets")
    @classmethod
    def _distinct_labels(cls, facets: List[List[int]]) -> List[List[int]]:
        for facet in facets:
            if len(set(facet)) != len(facet):
                raise ValueError(f"Facet {facet} repeats a vertex label")
        return facets

    @classmethod
    def from_complex(
        cls, K: SimplicialComplex, metadata: Dict[str, Any] | None = None
    ) -> "ComplexDocument":
        """Describe K by its facets in deterministic order."""
        return cls(
            facets=[list(facet) for facet in K.facets],
            metadata=metadata or {},
        )

    def to_complex(self) -> SimplicialComplex:
        """
        Rebuild the complex described by this document.

        Raises:
            ComplexFormatError: If the facet list is empty or a facet is invalid.
        """
        try:
            return SimplicialComplex.from_maximal_faces(self.facets)
        except ComplexError as e:
            raise ComplexFormatError(str(e)) from e


def parse_complex_text(text: str) -> SimplicialComplex:
    """
    Parse the text format: one face per line, labels separated by spaces.

    Anything after ``#`` on a line is a comment; blank lines are skipped.

    Raises:
        ComplexFormatError: On a non-integer token, a negative or repeated
            label, or an input without faces.
    """
    faces = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            face = [int(token) for token in line.split()]
        except ValueError as e:
            raise ComplexFormatError(f"Line {line_number}: {e}") from e
        if any(v < 0 for v in face):
            raise ComplexFormatError(
                f"Line {line_number}: vertex labels must be nonnegative"
            )
        if len(set(face)) != len(face):
            raise ComplexFormatError(
                f"Line {line_number}: vertex label repeated in {face}"
            )
        faces.append(face)
    if not faces:
        raise ComplexFormatError("No faces found in input")
    try:
        return SimplicialComplex.from_maximal_faces(faces)
    except ComplexError as e:
        raise ComplexFormatError(str(e)) from e


def format_complex_text(K: SimplicialComplex, header: str | None = None) -> str:
    """Render K in the text format, one facet per line."""
    lines = []
    if header:
        lines.extend(f"# {part}" for part in header.splitlines())
    lines.extend(" ".join(str(v) for v in facet) for facet in K.facets)
    return "\n".join(lines) + "\n"


def load_document(input_path: Path) -> ComplexDocument:
    """
    Load a complex file; ``.json`` files use the structured format.

    Args:
        input_path: Path to the complex file.

    Returns:
        The parsed document (metadata is empty for text files).

    Raises:
        FileNotFoundError: If the file does not exist.
        ComplexFormatError: If the content does not describe a complex.
    """
    content = read_text_file(input_path)
    if is_json_path(input_path):
        try:
            document = ComplexDocument.model_validate_json(content)
        except ValidationError as e:
            raise ComplexFormatError(f"Invalid complex document {input_path}: {e}") from e
        document.to_complex()
        return document
    return ComplexDocument.from_complex(parse_complex_text(content))


def load_complex(input_path: Path) -> SimplicialComplex:
    """Load only the complex stored in a file."""
    return load_document(input_path).to_complex()


def save_document(document: ComplexDocument, output_path: Path) -> None:
    """
    Save a document; the format follows the file suffix.

    Text output cannot carry metadata, so a warning is printed when some
    would be lost.
    """
    if is_json_path(output_path):
        write_text_file(output_path, document.model_dump_json(indent=2))
        return
    if document.metadata:
        console.print(
            f"[yellow]Warning:[/yellow] Text format drops metadata; "
            f"use a .json file to keep it ({output_path})"
        )
    write_text_file(output_path, format_complex_text(document.to_complex()))


def to_rustworkx(graph: Graph) -> Tuple[rx.PyGraph, Dict[int, int]]:
    """
    Convert a Graph to an undirected rustworkx PyGraph.

    Args:
        graph: Graph to convert.

    Returns:
        Tuple of (PyGraph, label_to_index_map); node payloads are the labels.
    """
    rx_graph: rx.PyGraph = rx.PyGraph(multigraph=False)
    node_map: Dict[int, int] = {}
    for label in sorted(graph.vertices):
        node_map[label] = rx_graph.add_node(label)
    for u, v in graph.sorted_edges():
        rx_graph.add_edge(node_map[u], node_map[v], None)
    return rx_graph, node_map
