"""Wire formats for node lists and matrices.

Rationals always travel as canonical strings, never as binary floats.

- inline nodes:  "1,2,-3/4"
- node file:     {"nodes": ["1", "-3/4", "2/5"]}  (JSON)
- matrix JSON:   array of arrays of rational strings
- matrix CSV:    one row per line, comma-separated, newline "\\n"

JSON and CSV renderings of the same matrix parse back to identical
values; parse errors report the offending position.
"""

from __future__ import annotations

import json
from pathlib import Path

from .rational import RationalParseError, parse_rational, render_rational
from .structmat import ExactMatrix
from .sympoly import NodeSet


class NodesFileError(ValueError):
    """A node file is missing, malformed, or off-schema."""


class MatrixFormatError(ValueError):
    """Serialized matrix text is malformed."""


def parse_nodes_text(text: str) -> NodeSet:
    """Parse comma-separated inline nodes, e.g. "1,2,-3/4".

    Parse errors carry the position within the full inline string.
    """
    nodes = []
    offset = 0
    for piece in text.split(","):
        try:
            nodes.append(parse_rational(piece))
        except RationalParseError as exc:
            raise RationalParseError(text, offset + exc.position, exc.reason) from None
        offset += len(piece) + 1
    return NodeSet(tuple(nodes))


def load_nodes_file(path: str | Path) -> NodeSet:
    """Load a JSON node file with schema {"nodes": [rational strings]}."""
    path = Path(path)
    try:
        raw = path.read_text()
    except OSError as exc:
        raise NodesFileError(f"cannot read node file {path}: {exc}") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise NodesFileError(f"node file {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "nodes" not in data:
        raise NodesFileError(f'node file {path} must be an object with a "nodes" key')
    values = data["nodes"]
    if not isinstance(values, list) or not values:
        raise NodesFileError(f'node file {path}: "nodes" must be a non-empty array')
    if not all(isinstance(v, str) for v in values):
        raise NodesFileError(f'node file {path}: nodes must be rational strings, not numbers')
    return NodeSet(tuple(parse_rational(v) for v in values))


def serialize_nodes(ns: NodeSet) -> tuple[str, ...]:
    """Node set as canonical rational strings, for reports and files."""
    return tuple(render_rational(a) for a in ns)


def matrix_to_json(m: ExactMatrix) -> str:
    """Matrix as a JSON array of arrays of rational strings."""
    return json.dumps([[render_rational(e) for e in row] for row in m.entries])


def matrix_to_csv(m: ExactMatrix) -> str:
    """Matrix as CSV: one row per line, no trailing comma."""
    return "".join(",".join(render_rational(e) for e in row) + "\n" for row in m.entries)


def matrix_from_json(text: str) -> ExactMatrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"matrix JSON is invalid: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise MatrixFormatError("matrix JSON must be an array of arrays of rational strings")
    try:
        return ExactMatrix(tuple(tuple(parse_rational(e) for e in row) for row in data))
    except (TypeError, ValueError) as exc:
        raise MatrixFormatError(f"matrix JSON entries are malformed: {exc}") from None


def matrix_from_csv(text: str) -> ExactMatrix:
    lines = [line for line in text.split("\n") if line != ""]
    if not lines:
        raise MatrixFormatError("matrix CSV is empty")
    try:
        return ExactMatrix(tuple(tuple(parse_rational(e) for e in line.split(",")) for line in lines))
    except (RationalParseError, ValueError) as exc:
        raise MatrixFormatError(f"matrix CSV entries are malformed: {exc}") from None
