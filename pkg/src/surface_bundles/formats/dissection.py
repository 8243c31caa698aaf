"""Dissection text: sections introduced by `name:` lines, one entry per line.

    graph:
      vertices v1 v2 v3
      edge v1 v2
    curves:
      v1: x1+ x2-
      v2: x1- x2+
    crossings:
      x1: v1 v2
      x2: v1 v2
    faces:
      v1+ v2- v1- v2+
    genus:
      1

`crossings:` and `faces:` are optional. When `crossings:` is present every
entry must name the two curves that actually pass through that crossing.
A corner or passage is a label followed by `+` or `-`.
"""
from __future__ import annotations

import logging
import re
from collections import defaultdict

from surface_bundles.errors import ParseError
from surface_bundles.formats.graph import format_graph_lines, parse_graph_lines
from surface_bundles.models import Curve, Dissection

logger = logging.getLogger(__name__)

SECTIONS = ("graph", "curves", "crossings", "faces", "genus")
REQUIRED = ("graph", "curves", "genus")

_SECTION = re.compile(r"(?P<name>[a-z]+):")
_SIGNED = re.compile(r"(?P<label>[A-Za-z0-9_]+)(?P<sign>[+-])")
_ENTRY = re.compile(r"(?P<label>[A-Za-z0-9_]+):(?P<rest>.*)")


def _signed(token: str, no: int) -> tuple[str, int]:
    m = _SIGNED.fullmatch(token)
    if m is None:
        raise ParseError(f"expected <label>+ or <label>-, got '{token}'", line=no)
    return m.group("label"), 1 if m.group("sign") == "+" else -1


def _sign_text(label: str, sign: int) -> str:
    return f"{label}{'+' if sign > 0 else '-'}"


def _split_sections(text: str) -> dict[str, list[tuple[int, str]]]:
    sections: dict[str, list[tuple[int, str]]] = {}
    current: str | None = None
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _SECTION.fullmatch(line)
        if m is not None and m.group("name") in SECTIONS:
            current = m.group("name")
            if current in sections:
                raise ParseError(f"section '{current}:' appears twice", line=no)
            sections[current] = []
        elif current is None:
            raise ParseError(f"entry '{line}' before any section header", line=no)
        else:
            sections[current].append((no, line))
    missing = [s for s in REQUIRED if s not in sections]
    if missing:
        raise ParseError(f"missing sections: {', '.join(s + ':' for s in missing)}")
    return sections


def _parse_curves(entries: list[tuple[int, str]]) -> list[Curve]:
    curves = []
    for no, line in entries:
        m = _ENTRY.fullmatch(line)
        if m is None:
            raise ParseError(f"curve entry '{line}' is not '<label>: <crossings>'", line=no)
        passages = tuple(_signed(t, no) for t in m.group("rest").split())
        try:
            curves.append(Curve(label=m.group("label"), crossings=passages))
        except ValueError as exc:
            raise ParseError(str(exc), line=no) from None
    return curves


def _check_crossings(entries: list[tuple[int, str]], curves: list[Curve]) -> None:
    owners: dict[str, list[str]] = defaultdict(list)
    for c in curves:
        for x, _ in c.crossings:
            owners[x].append(c.label)
    for no, line in entries:
        m = _ENTRY.fullmatch(line)
        if m is None or len(m.group("rest").split()) != 2:
            raise ParseError(f"crossing entry '{line}' is not '<crossing>: <curve> <curve>'", line=no)
        x = m.group("label")
        if sorted(m.group("rest").split()) != sorted(owners.get(x, [])):
            raise ParseError(f"crossing {x} is declared on {m.group('rest').split()}, "
                             f"curves pass through it on {owners.get(x, [])}", line=no)


def parse_dissection(text: str) -> Dissection:
    sections = _split_sections(text)
    graph = parse_graph_lines(sections["graph"])
    curves = _parse_curves(sections["curves"])
    if "crossings" in sections:
        _check_crossings(sections["crossings"], curves)
    faces = None
    if "faces" in sections:
        faces = tuple(tuple(_signed(t, no) for t in line.split()) for no, line in sections["faces"])
    genus_lines = sections["genus"]
    if len(genus_lines) != 1 or not genus_lines[0][1].isdigit():
        raise ParseError("genus: needs exactly one nonnegative integer",
                         line=genus_lines[0][0] if genus_lines else None)
    try:
        d = Dissection(graph=graph, genus=int(genus_lines[0][1]), curves=tuple(curves), faces=faces)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    logger.debug("parsed dissection: %d curves, %d crossings", len(d.curves), len(d.crossings))
    return d


def format_dissection(d: Dissection) -> str:
    lines = ["graph:"] + [f"  {ln}" for ln in format_graph_lines(d.graph)]
    lines.append("curves:")
    lines += [f"  {c.label}: " + " ".join(_sign_text(x, s) for x, s in c.crossings) for c in d.curves]
    owners: dict[str, list[str]] = defaultdict(list)
    for c in d.curves:
        for x, _ in c.crossings:
            owners[x].append(c.label)
    lines.append("crossings:")
    lines += [f"  {x}: {' '.join(labels)}" for x, labels in owners.items()]
    if d.faces is not None:
        lines.append("faces:")
        lines += ["  " + " ".join(_sign_text(label, s) for label, s in face) for face in d.faces]
    lines += ["genus:", f"  {d.genus}"]
    return "\n".join(lines) + "\n"
