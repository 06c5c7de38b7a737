"""JSONL persistence for trace and report documents."""

from ackermann_goodstein.io.jsonl import append_jsonl, count_jsonl

__all__ = ["append_jsonl", "count_jsonl"]
