"""Text and JSON formats for defining graphs.

The line-based format (``#`` starts a comment)::

    vertex <name>
    edge <u> <v> <label> [> | < | ? | .]
    rot <v>: <n1> <n2> ...

``>`` means u -> v, ``<`` means v -> u, ``?`` marks a wildcard
(label must be 2) and ``.`` leaves the edge unoriented; the direction
column defaults to ``.``.  ``rot`` lines give the cyclic order of the
neighbours around a vertex for embedded graphs.
"""

from __future__ import annotations

import json

from .presentations import (
    ORIENTATION_SYMBOLS,
    DefiningGraph,
    GammaEdge,
    Orientation,
)


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


def parse_gamma(text: str) -> DefiningGraph:
    vertices: list[str] = []
    edges: list[tuple] = []
    rotations: dict[str, tuple[str, ...]] = {}
    edge_lines: dict[tuple[str, str], int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "vertex":
            if len(fields) != 2:
                raise ParseError(lineno, "expected: vertex <name>")
            if fields[1] in vertices:
                raise ParseError(lineno, f"duplicate vertex {fields[1]!r}")
            vertices.append(fields[1])
        elif kind == "edge":
            if len(fields) not in (4, 5):
                raise ParseError(lineno, "expected: edge <u> <v> <label> [> < ? .]")
            u, v = fields[1], fields[2]
            try:
                label = int(fields[3])
            except ValueError:
                raise ParseError(lineno, f"label must be an integer: {fields[3]!r}")
            symbol = fields[4] if len(fields) == 5 else "."
            if symbol not in ORIENTATION_SYMBOLS:
                raise ParseError(lineno, f"unknown direction symbol {symbol!r}")
            edges.append((u, v, label, ORIENTATION_SYMBOLS[symbol]))
            edge_lines[(min(u, v), max(u, v))] = lineno
        elif kind == "rot":
            if len(fields) < 2 or not fields[1].endswith(":"):
                raise ParseError(lineno, "expected: rot <v>: <n1> <n2> ...")
            vtx = fields[1][:-1]
            rotations[vtx] = tuple(fields[2:])
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")

    try:
        return DefiningGraph(vertices, edges, rotations or None)
    except ValueError as exc:
        raise ParseError(0, str(exc)) from exc


_SYMBOL_OF = {o: s for s, o in ORIENTATION_SYMBOLS.items()}


def gamma_to_text(gamma: DefiningGraph) -> str:
    lines = [f"vertex {v}" for v in gamma.vertices]
    for e in gamma.edges:
        lines.append(f"edge {e.u} {e.v} {e.label} {_SYMBOL_OF[e.orientation]}")
    if gamma.rotations:
        for v in gamma.vertices:
            if v in gamma.rotations and gamma.rotations[v]:
                lines.append(f"rot {v}: " + " ".join(gamma.rotations[v]))
    return "\n".join(lines) + "\n"


def gamma_to_json_dict(gamma: DefiningGraph) -> dict:
    return {
        "vertices": list(gamma.vertices),
        "edges": [
            {"u": e.u, "v": e.v, "label": e.label, "orientation": e.orientation.value}
            for e in gamma.edges
        ],
        "rotations": (
            {v: list(order) for v, order in gamma.rotations.items()}
            if gamma.rotations
            else None
        ),
    }


def gamma_from_json_dict(obj: dict) -> DefiningGraph:
    edges = [
        GammaEdge(e["u"], e["v"], e["label"], Orientation(e["orientation"]))
        for e in obj.get("edges", ())
    ]
    return DefiningGraph(obj["vertices"], edges, obj.get("rotations") or None)


def parse_gamma_json(text: str) -> DefiningGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, f"invalid JSON: {exc.msg}") from exc
    try:
        return gamma_from_json_dict(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(0, f"bad graph object: {exc}") from exc


def load_gamma(path: str) -> DefiningGraph:
    """Read a defining graph from a ``.json`` or line-format file."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return parse_gamma_json(text)
    return parse_gamma(text)
