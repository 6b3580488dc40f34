"""Canonical JSON and plain-text rendering of command payloads."""

import json
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List

import numpy as np

from .enums import OutputFormat
from .exceptions import PermionError
from .linalg import RationalMatrix


def _default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if hasattr(value, "to_dict"):
        return value.to_dict()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def to_json(payload: Any) -> str:
    """Canonical JSON: sorted keys, no spaces, UTF-8 text."""
    return json.dumps(
        payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False, default=_default
    )


def matrix_to_json(matrix: RationalMatrix) -> str:
    return to_json(matrix.to_dict())


def matrix_from_json(text: str) -> RationalMatrix:
    """
    Parse {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}.

    Raises:
        PermionError: If the text is not a matrix document
    """
    try:
        data = json.loads(text)
        return RationalMatrix.from_dict(data)
    except PermionError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise PermionError(f"not a matrix document: {e}")


def _grid(rows: List[List[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(row[j]) for row in rows) for j in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip() for row in rows
    )


def _render_lines(payload: Any) -> str:
    return "\n".join(str(item) for item in payload)


def _render_table(payload: Dict[str, Any]) -> str:
    """Cayley table with cycle labels; row a, column b holds a*b."""
    labels = payload["elements"]
    rows = [["*"] + labels]
    for label, row in zip(labels, payload["table"]):
        rows.append([label] + [labels[k] for k in row])
    return _grid(rows)


def _render_classes(payload: Dict[str, List[str]]) -> str:
    return "\n".join(f"{key}: {' '.join(members)}" for key, members in payload.items())


def _render_matrix(payload: Dict[str, Any]) -> str:
    return _grid([list(row) for row in payload["entries"]])


def _render_representation(payload: Dict[str, Any]) -> str:
    blocks = [f"{payload['label']} representation of S_{payload['n']}, dimension {payload['dim']}"]
    for label, matrix in payload["matrices"].items():
        blocks.append(f"D{label if label != 'e' else '(e)'} =\n{_render_matrix(matrix)}")
    return "\n\n".join(blocks)


def _render_tableaux(payload: List[str]) -> str:
    return "\n\n".join(
        "\n".join(" ".join(row.split(",")) for row in tableau.split(";")) for tableau in payload
    )


def _render_mapping(payload: Any) -> str:
    if not isinstance(payload, dict):
        return to_json(payload)
    lines = []
    for key in sorted(payload):
        value = payload[key]
        text = value if isinstance(value, str) else to_json(value)
        lines.append(f"{key}: {text}")
    return "\n".join(lines)


_TEXT_RENDERERS: Dict[str, Callable[[Any], str]] = {
    "elements": _render_lines,
    "table": _render_table,
    "classes": _render_classes,
    "matrix": _render_matrix,
    "representation": _render_representation,
    "tableaux": _render_tableaux,
    "states": _render_lines,
}


def render(payload: Any, fmt: OutputFormat = OutputFormat.JSON, kind: str = "") -> str:
    """
    Render a JSON-ready payload.

    Args:
        payload: Plain lists, dicts, strings and numbers
        fmt: json (canonical, byte-stable) or text (human-readable)
        kind: Text layout to use; unknown kinds print key: value lines

    Returns:
        The rendering with a trailing newline
    """
    if OutputFormat(fmt) == OutputFormat.JSON:
        return to_json(payload) + "\n"
    return _TEXT_RENDERERS.get(kind, _render_mapping)(payload) + "\n"
