"""Gamma-dissections, label reading and the genus-h covering.

A dissection is a family of labelled, oriented simple closed curves on a
closed surface, given combinatorially: each curve lists its crossings in
order with a transverse sign. The crossing signs fix a rotation system, so
the complementary faces can be traced without any geometry:

    darts        (curve, position, +1 leaving / -1 arriving)
    alpha        pairs the leaving dart at position p with the arriving
                 dart at position p+1 of the same curve (one arc)
    rotation     counterclockwise at a crossing, with a the +1 passage:
                 a_out, b_out, a_in, b_in
    faces        orbits of rotation . alpha

Each dart on a face boundary contributes the directed label (curve, +1)
when the face is walked along the curve's orientation, (curve, -1) when
against it. Those directed labels are what the link condition inspects.
"""
from __future__ import annotations

import logging
import re
from collections import defaultdict
from itertools import permutations, product
from pathlib import Path

import networkx as nx
import yaml

from surface_bundles import config
from surface_bundles.errors import PreconditionError
from surface_bundles.formats.words import parse_symbol_word
from surface_bundles.models import (
    Curve,
    Dissection,
    GroupMap,
    LabeledGraph,
    LabelReadingRecord,
    RaagWord,
    SurfaceLoop,
    SurfaceWord,
)
from surface_bundles.raag import is_trivial, normal_form, opposite_graph

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent / "data"
RECORD_FILE = "label_reading.yaml"

Dart = tuple[int, int, int]
Corner = tuple[str, int]
Face = tuple[Corner, ...]
PairingTable = tuple[tuple[tuple[str, int], tuple[str, int]], ...]

_G = config.SURFACE_GENERATOR_PREFIXES["gamma"]
_D = config.SURFACE_GENERATOR_PREFIXES["delta"]


# ─────────────────────────────── faces ───────────────────────────────

def _passages(d: Dissection) -> dict[str, list[tuple[int, int, int]]]:
    """crossing -> [(curve index, position, sign), (...)], validated."""
    at: dict[str, list[tuple[int, int, int]]] = defaultdict(list)
    for ci, curve in enumerate(d.curves):
        for pos, (x, sign) in enumerate(curve.crossings):
            at[x].append((ci, pos, sign))
    for x, seen in at.items():
        if len(seen) != 2:
            raise PreconditionError(f"crossing {x} is traversed {len(seen)} times, expected 2")
        if seen[0][2] != -seen[1][2]:
            raise PreconditionError(f"crossing {x}: both passages carry sign {seen[0][2]:+d}")
    return at


def _rotation(at: dict[str, list[tuple[int, int, int]]]) -> dict[Dart, Dart]:
    succ: dict[Dart, Dart] = {}
    for seen in at.values():
        a, b = sorted(seen, key=lambda p: -p[2])          # a carries +1
        cycle = [(a[0], a[1], 1), (b[0], b[1], 1), (a[0], a[1], -1), (b[0], b[1], -1)]
        for i, dart in enumerate(cycle):
            succ[dart] = cycle[(i + 1) % 4]
    return succ


def _alpha(dart: Dart, lengths: list[int]) -> Dart:
    ci, pos, side = dart
    if side == 1:
        return ci, (pos + 1) % lengths[ci], -1
    return ci, (pos - 1) % lengths[ci], 1


def trace_faces(d: Dissection) -> list[Face]:
    """Boundary cycles of the complementary faces, as directed labels."""
    empty = [c.label for c in d.curves if not c.crossings]
    if empty:
        raise PreconditionError(f"curves {empty} meet no other curve")
    at = _passages(d)
    rotate = _rotation(at)
    lengths = [len(c.crossings) for c in d.curves]

    faces: list[Face] = []
    unseen = set(rotate)
    for start in sorted(rotate):
        if start not in unseen:
            continue
        corners: list[Corner] = []
        dart = start
        while dart in unseen:
            unseen.discard(dart)
            corners.append((d.curves[dart[0]].label, dart[2]))
            dart = rotate[_alpha(dart, lengths)]
        faces.append(tuple(corners))
    logger.debug("traced %d faces from %d crossings", len(faces), len(at))
    return faces


def _canonical_cycle(face: Face) -> Face:
    if not face:
        return face
    return min(face[i:] + face[:i] for i in range(len(face)))


def same_faces(a: list[Face], b: list[Face]) -> bool:
    """Equal as multisets of cycles up to rotation."""
    return sorted(map(_canonical_cycle, a)) == sorted(map(_canonical_cycle, b))


def euler_genus(d: Dissection) -> int | None:
    """Genus of the closed surface carried by the curve system, None if not integral."""
    faces = trace_faces(d)
    v = len(d.crossings)
    e = sum(len(c.crossings) for c in d.curves)
    chi = v - e + len(faces)
    return None if chi % 2 else (2 - chi) // 2


# ─────────────────────────────── conditions ───────────────────────────────

def _curves_connected(d: Dissection) -> bool:
    g = nx.Graph()
    g.add_nodes_from(range(len(d.curves)))
    owners: dict[str, list[int]] = defaultdict(list)
    for ci, curve in enumerate(d.curves):
        for x, _ in curve.crossings:
            owners[x].append(ci)
    for pair in owners.values():
        g.add_edge(pair[0], pair[-1])
    return nx.is_connected(g)


def check_dissection(d: Dissection) -> bool:
    """Labels are vertices, crossing labels are distinct and adjacent, complement is disks."""
    at = _passages(d)
    for curve in d.curves:
        if not d.graph.has_vertex(curve.label):
            logger.info("label %s is not a vertex", curve.label)
            return False
        if not curve.crossings:
            logger.info("curve %s meets no other curve", curve.label)
            return False
    for x, ((ci, _, _), (cj, _, _)) in at.items():
        u, v = d.curves[ci].label, d.curves[cj].label
        if u == v or not d.graph.adjacent(u, v):
            logger.info("crossing %s joins %s and %s, which are not distinct adjacent vertices", x, u, v)
            return False
    if not _curves_connected(d):
        logger.info("curve system is disconnected")
        return False
    genus = euler_genus(d)
    if genus != d.genus:
        logger.info("Euler count gives genus %s, declared %d", genus, d.genus)
        return False
    if d.faces is not None and not same_faces(list(d.faces), trace_faces(d)):
        logger.info("declared faces differ from the traced ones")
        return False
    return True


def face_link_ok(face: Face, graph: LabeledGraph) -> bool:
    """Injectivity and fullness of one face's corner cycle."""
    if len(set(face)) != len(face):
        return False
    k = len(face)
    for i in range(k):
        for j in range(i + 1, k):
            if (j - i) in (1, k - 1):
                continue
            u, v = face[i][0], face[j][0]
            if u != v and graph.adjacent(u, v):
                return False
    return True


def link_condition(d: Dissection) -> bool:
    if not check_dissection(d):
        raise PreconditionError("not a dissection; link condition is undefined")
    for face in trace_faces(d):
        if not face_link_ok(face, d.graph):
            logger.info("link condition fails on face %s", face)
            return False
    return True


# ─────────────────────────────── reading loops ───────────────────────────────

def read_loop(d: Dissection, loop: SurfaceLoop) -> RaagWord:
    """v^(+1) or v^(-1) for every crossing of the loop, normal-formed in A(graph)."""
    labels = {c.label for c in d.curves}
    for label, _ in loop.crossings:
        if label not in labels:
            raise PreconditionError(f"loop crosses '{label}', which is not a curve of the dissection")
    return normal_form(RaagWord(letters=loop.crossings), d.graph)


def label_reading(record: LabelReadingRecord, loop: SurfaceWord) -> RaagWord:
    return normal_form(record.reading.apply(loop), record.graph)


def chain_curve_system(m: int) -> Dissection:
    """Chain c_1 .. c_m, consecutive curves crossing once with i(c_i, c_{i+1}) = +1.

    The genus is the one its Euler count gives; for even m the chain fills
    a genus m/2 surface with a single disk face.
    """
    if m < 2:
        raise PreconditionError(f"chain of {m} curves")
    names = [f"c{i}" for i in range(1, m + 1)]
    graph = LabeledGraph.build(names, [(names[i], names[i + 1]) for i in range(m - 1)])
    curves = []
    for i in range(1, m + 1):
        crossings = []
        if i > 1:
            crossings.append((f"x{i - 1}", -1))
        if i < m:
            crossings.append((f"x{i}", 1))
        curves.append(Curve(label=names[i - 1], crossings=tuple(crossings)))
    draft = Dissection(graph=graph, genus=0, curves=tuple(curves))
    genus = euler_genus(draft)
    return draft.model_copy(update={"genus": genus if genus is not None else 0})


# ─────────────────────────────── covering ───────────────────────────────

def surface_generators(h: int) -> tuple[str, ...]:
    """g1, g2, d1 .. d_(2h-2)."""
    return (f"{_G}1", f"{_G}2") + tuple(f"{_D}{i}" for i in range(1, 2 * h - 1))


def covering_pullback(h: int) -> GroupMap:
    """pi_1(S_h) -> pi_1(S_2) of the (h-1)-fold cyclic cover.

    g1 -> g1^(h-1), g2 -> g2, d_(2k+1) -> g1^k d1 g1^-k, d_(2k+2) -> g1^k d2 g1^-k.
    """
    if h < 2:
        raise PreconditionError(f"base genus {h} < 2")
    g1, g2, d1, d2 = f"{_G}1", f"{_G}2", f"{_D}1", f"{_D}2"
    images = [((g1, h - 1),), ((g2, 1),)]
    for k in range(h - 1):
        for d in (d1, d2):
            conj = SurfaceWord(letters=((g1, k), (d, 1), (g1, -k)) if k else ((d, 1),))
            images.append(conj.free_reduce().letters)
    return GroupMap(name=f"cover[h={h}]", domain=surface_generators(h),
                    codomain=surface_generators(2), images=tuple(images))


# ─────────────────────────────── relators and pairings ───────────────────────────────

def pairing_id(table: PairingTable) -> str:
    """`g1g2-d1d2`; an inverted generator carries a trailing apostrophe."""
    def name(gen: str, e: int) -> str:
        return gen if e > 0 else f"{gen}'"
    return "-".join(name(*x) + name(*y) for x, y in table)


def parse_pairing_id(text: str) -> PairingTable:
    token = re.compile(r"([A-Za-z]+\d+)('?)")
    pairs = []
    for chunk in text.split("-"):
        found = token.findall(chunk)
        if len(found) != 2 or "".join(g + p for g, p in found) != chunk:
            raise PreconditionError(f"bad pairing table '{text}'")
        pairs.append(tuple((g, -1 if p else 1) for g, p in found))
    return tuple(pairs)  # type: ignore[return-value]


DEFAULT_PAIRING: PairingTable = ((("g1", 1), ("g2", 1)), (("d1", 1), ("d2", 1)))


def pairs_for_genus(h: int, table: PairingTable) -> list[tuple[tuple[str, int], tuple[str, int]]]:
    """Pair 1 from the table; pair k+2 is the table's second pair on d_(2k+1), d_(2k+2)."""
    if h < 2:
        raise PreconditionError(f"base genus {h} < 2")
    first, second = table
    shifted = [first]
    for k in range(h - 1):
        rename = {f"{_D}1": f"{_D}{2 * k + 1}", f"{_D}2": f"{_D}{2 * k + 2}"}
        shifted.append(tuple((rename.get(g, g), e) for g, e in second))
    return shifted


def surface_relator(h: int, table: PairingTable = DEFAULT_PAIRING) -> SurfaceWord:
    """prod_j [x_j, y_j] with [x, y] = x y x^-1 y^-1."""
    letters: list[tuple[str, int]] = []
    for (x, e), (y, f) in pairs_for_genus(h, table):
        letters += [(x, e), (y, f), (x, -e), (y, -f)]
    return SurfaceWord(letters=tuple(letters))


def candidate_pairings(generators: tuple[str, ...]) -> list[PairingTable]:
    """All orderings and inversions of four generators into two commutator pairs."""
    out = []
    for order in permutations(generators):
        for signs in product((1, -1), repeat=len(generators)):
            gens = list(zip(order, signs))
            out.append(((gens[0], gens[1]), (gens[2], gens[3])))
    return out


def find_pairing_table(record: LabelReadingRecord) -> PairingTable:
    """First candidate pairing whose genus-2 relator reads as the identity."""
    for table in candidate_pairings(record.reading.domain):
        if is_trivial(label_reading(record, surface_relator(2, table)), record.graph):
            logger.debug("pairing %s passes", pairing_id(table))
            return table
    raise PreconditionError(f"no commutator pairing of record '{record.name}' reads as the identity")


# ─────────────────────────────── records ───────────────────────────────

def _record_graph(spec: dict) -> LabeledGraph:
    vertices = list(spec["vertices"])
    if spec.get("complement_of_cycle"):
        return opposite_graph(LabeledGraph.build(vertices, [(vertices[i], vertices[(i + 1) % len(vertices)])
                                                            for i in range(len(vertices))]))
    return LabeledGraph.build(vertices, [tuple(e) for e in spec.get("edges", [])])


def load_record(path: Path | None = None) -> LabelReadingRecord:
    raw = yaml.safe_load((path or DATA_DIR / RECORD_FILE).read_text())
    graph = _record_graph(raw["graph"])
    gens = tuple(raw["generators"])
    images = [parse_symbol_word(raw["images"][g]) for g in gens]
    reading = GroupMap.from_words(raw.get("name", "record"), gens, graph.vertices, images)
    loop = parse_symbol_word(raw.get("witness_loop", "1"), SurfaceWord)
    return LabelReadingRecord(name=raw.get("name", "record"), graph=graph, reading=reading,
                              witness_loop=loop)


def load_default_record() -> LabelReadingRecord:
    """The shipped genus-2 reading onto A(C5bar)."""
    return load_record(DATA_DIR / RECORD_FILE)


def validate_record(record: LabelReadingRecord) -> list[str]:
    """Return a list of problems ([] means valid)."""
    problems: list[str] = []
    if record.reading.domain != surface_generators(2):
        problems.append(f"{record.name}: generators {record.reading.domain}, expected {surface_generators(2)}")
        return problems
    try:
        find_pairing_table(record)
    except PreconditionError as exc:
        problems.append(str(exc))
    return problems
