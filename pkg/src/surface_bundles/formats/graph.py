"""Graph text: one entry per line.

    vertices v1 v2 v3 v4 v5
    edge v1 v3
    edge v1 v4
    complement

A trailing `complement` line replaces the listed edges by their complement,
so the opposite of a cycle can be written with five lines instead of ten.
Blank lines and `#` comments are ignored.
"""
from __future__ import annotations

from surface_bundles.errors import ParseError
from surface_bundles.models import LabeledGraph
from surface_bundles.raag import opposite_graph


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graph_lines(lines: list[tuple[int, str]]) -> LabeledGraph:
    """Parse (line number, text) entries into a graph."""
    vertices: list[str] | None = None
    edges: list[tuple[str, str]] = []
    complement = False
    for no, raw in lines:
        text = _strip(raw)
        if not text:
            continue
        head, *rest = text.split()
        if head == "vertices":
            if vertices is not None:
                raise ParseError("vertices listed twice", line=no)
            vertices = rest
        elif head == "edge":
            if len(rest) != 2:
                raise ParseError(f"edge needs two endpoints, got {rest}", line=no)
            edges.append((rest[0], rest[1]))
        elif head == "complement" and not rest:
            complement = True
        else:
            raise ParseError(f"unknown graph entry '{text}'", line=no)
    if vertices is None:
        first = lines[0][0] if lines else None
        raise ParseError("graph has no 'vertices' line", line=first)
    try:
        g = LabeledGraph.build(vertices, edges)
    except ValueError as exc:
        raise ParseError(str(exc), line=lines[0][0] if lines else None) from None
    return opposite_graph(g) if complement else g


def format_graph_lines(g: LabeledGraph) -> list[str]:
    return ["vertices " + " ".join(g.vertices)] + [f"edge {u} {v}" for u, v in g.edges]


def parse_graph_text(text: str) -> LabeledGraph:
    return parse_graph_lines(list(enumerate(text.splitlines(), start=1)))


def format_graph_text(g: LabeledGraph) -> str:
    return "\n".join(format_graph_lines(g)) + "\n"
