"""Models for the plane embeddability decision of 2-complexes."""

from typing import List, Optional

from pydantic import BaseModel, Field

from simplexembed.global_models import Embed22Reason, Embed22Verdict


class Embed22Error(Exception):
    """Raised when the plane pipeline receives input outside its preconditions."""

    pass


class LinkWitness(BaseModel):
    """A vertex whose link is neither a forest nor a single cycle."""

    vertex: int = Field(..., description="The failing vertex")
    link_vertices: List[int] = Field(..., description="Vertices of its link")
    link_edges: List[List[int]] = Field(..., description="Edges of its link")


class Embed22Report(BaseModel):
    """Decision for EMBED(2,2) with the witness of a NO answer."""

    verdict: Embed22Verdict = Field(..., description="YES or NO")
    reason: Embed22Reason = Field(
        Embed22Reason.NONE, description="Stage that rejected the complex"
    )
    subdivision_vertices: Optional[int] = Field(
        None, description="Vertices of the barycentric 1-skeleton, on planarity failure"
    )
    subdivision_edges: Optional[int] = Field(
        None, description="Edges of the barycentric 1-skeleton, on planarity failure"
    )
    link: Optional[LinkWitness] = Field(None, description="Failing vertex link")
    triangles: Optional[List[List[int]]] = Field(
        None, description="Triangles of a closed Z/2 cycle component"
    )
