"""Text formatter for plane embeddability reports."""

from simplexembed.embed22.models import Embed22Report


class Embed22TextFormatter:
    """Format an Embed22Report with its witness listing."""

    @staticmethod
    def format(report: Embed22Report) -> str:
        lines = [f"verdict: {report.verdict.value}", f"reason: {report.reason.value}"]
        if report.subdivision_vertices is not None:
            lines.append(
                f"subdivision_1_skeleton: {report.subdivision_vertices} vertices, "
                f"{report.subdivision_edges} edges"
            )
        if report.link is not None:
            lines.append(f"vertex: {report.link.vertex}")
            lines.append(f"link_vertices: {' '.join(map(str, report.link.link_vertices))}")
            lines.append(
                "link_edges: " + ", ".join(f"{u}-{v}" for u, v in report.link.link_edges)
            )
        if report.triangles is not None:
            lines.append(f"triangles: {len(report.triangles)}")
            lines.extend(" ".join(map(str, t)) for t in report.triangles)
        return "\n".join(lines)
