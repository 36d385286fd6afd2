"""Output formatters for Van Kampen reports and obstruction dumps."""

from pathlib import Path

from simplexembed.utils.file_utils import write_text_file
from simplexembed.vankampen.models import (
    ObstructionDump,
    ObstructionSystem,
    VanKampenReport,
)


class VanKampenTextFormatter:
    """Format a VanKampenReport as stable key/value lines."""

    @staticmethod
    def format(report: VanKampenReport) -> str:
        field = "GF(2)" if report.mod2 else "Z"
        lines = [
            f"verdict: {report.verdict.value}",
            f"k: {report.k}",
            f"coefficients: {field}",
            f"vanishes: {str(report.vanishes).lower()}",
            f"pairs: {report.pair_count}",
            f"finger_moves: {report.column_count}",
        ]
        if report.mod2 and report.vanishes and report.k > 1:
            lines.append("note: mod-2 vanishing is only necessary for k >= 2")
        return "\n".join(lines)


def save_obstruction_dump(system: ObstructionSystem, output_path: Path) -> None:
    """Write the audit dump of a system as JSON."""
    dump = ObstructionDump.from_system(system)
    write_text_file(output_path, dump.model_dump_json(indent=2))
