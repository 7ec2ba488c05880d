"""
Byte-stable JSON helpers shared by the emitters and the CLI.
Keys are sorted, separators are fixed, output ends with a newline.
"""

import json
import sys
from pathlib import Path
from typing import Any, Union

from .errors import DocumentError


def to_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def read_source(source: Union[str, Path]) -> str:
    """Read a document from a path, or from stdin when the path is "-" """
    if str(source) == "-":
        return sys.stdin.read()
    path = Path(source)
    if not path.exists():
        raise FileNotFoundError(f"Document not found: {path}")
    return path.read_text(encoding="utf-8")


def parse_json(text: str, what: str = "document") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{what} is not valid JSON: {e}") from e


def require_object(data: Any, allowed: set, required: set, what: str) -> dict:
    """Check a JSON object against its known and mandatory fields"""
    if not isinstance(data, dict):
        raise DocumentError(f"{what} must be a JSON object")
    unknown = set(data) - allowed
    if unknown:
        raise DocumentError(f"{what} has unknown fields: {sorted(unknown)}")
    missing = required - set(data)
    if missing:
        raise DocumentError(f"{what} is missing fields: {sorted(missing)}")
    return data
