"""JSONL file I/O for traces and reports.

JSONL (JSON Lines) stores one JSON document per line, so experiment logs
can be appended run by run and streamed back without loading everything.
"""

from pathlib import Path
from typing import Iterable

from pydantic import BaseModel


def append_jsonl(path: Path | str, documents: Iterable[BaseModel]) -> int:
    """Append documents to a JSONL file, creating it and its parents if needed.

    Args:
        path: Output file path
        documents: Pydantic documents to write

    Returns:
        Number of documents appended

    Example:
        >>> doc = TraceDocument.from_trace(grun(3))
        >>> append_jsonl("runs/seed3.jsonl", [doc])
        1
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    count = 0
    with path.open("a", encoding="utf-8") as f:
        for document in documents:
            f.write(document.model_dump_json() + "\n")
            count += 1

    return count


def count_jsonl(path: Path | str) -> int:
    """Count the number of records in a JSONL file.

    Args:
        path: Input JSONL file path

    Returns:
        Number of records (non-empty lines)
    """
    path = Path(path)
    count = 0
    with path.open("r", encoding="utf-8") as f:
        for line in f:
            if line.strip():
                count += 1
    return count
