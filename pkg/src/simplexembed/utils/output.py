"""Output helpers shared by the CLI verbs."""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel

from simplexembed.utils.file_utils import write_text_file


class JsonFormatter:
    """Format report models as indented JSON."""

    @staticmethod
    def format(report: BaseModel) -> str:
        return report.model_dump_json(indent=2)


class OutputWriter:
    """Write formatted output to file or stdout."""

    @staticmethod
    def write(content: str, output_file: Optional[Path] = None) -> None:
        """
        Write content to file or stdout.

        Args:
            content: The content to write
            output_file: Optional file path. If None, writes to stdout.
        """
        if output_file:
            write_text_file(output_file, content)
        else:
            print(content)
