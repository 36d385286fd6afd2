"""File helpers for complex, DIMACS and report files."""

from pathlib import Path

JSON_SUFFIX = ".json"


def is_json_path(path: Path) -> bool:
    """True when the suffix selects the structured JSON format."""
    return path.suffix.lower() == JSON_SUFFIX


def read_text_file(file_path: Path) -> str:
    """
    Read a UTF-8 input file.

    Args:
        file_path: Complex, DIMACS or config file.

    Returns:
        The file contents.

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If the path is not a regular file
        UnicodeDecodeError: If the file is not UTF-8
    """
    if not file_path.exists():
        raise FileNotFoundError(f"Input file not found: {file_path}")
    if not file_path.is_file():
        raise ValueError(f"Path is not a file: {file_path}")

    try:
        return file_path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise UnicodeDecodeError(
            e.encoding,
            e.object,
            e.start,
            e.end,
            f"{file_path} is not valid UTF-8: {e.reason}",
        ) from e


def write_text_file(file_path: Path, content: str) -> None:
    """
    Write content with a single trailing newline and LF line endings.

    Missing parent directories are created, so ``-o out/run1/k.json`` works
    without a prior mkdir. Output bytes depend only on ``content``.
    """
    if file_path.exists() and file_path.is_dir():
        raise ValueError(f"Output path is a directory: {file_path}")
    file_path.parent.mkdir(parents=True, exist_ok=True)
    text = content if content.endswith("\n") else content + "\n"
    with open(file_path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
