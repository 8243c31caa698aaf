"""Dissections, face tracing, the covering map and the shipped label-reading record."""
from pathlib import Path

import pytest
from pydantic import ValidationError

from surface_bundles.dissection import (
    DEFAULT_PAIRING,
    candidate_pairings,
    chain_curve_system,
    check_dissection,
    covering_pullback,
    euler_genus,
    face_link_ok,
    find_pairing_table,
    label_reading,
    link_condition,
    load_record,
    load_default_record,
    pairing_id,
    pairs_for_genus,
    parse_pairing_id,
    read_loop,
    same_faces,
    surface_generators,
    surface_relator,
    trace_faces,
    validate_record,
)
from surface_bundles.errors import PreconditionError
from surface_bundles.models import Curve, Dissection, LabeledGraph, RaagWord, SurfaceLoop, SurfaceWord
from surface_bundles.raag import is_trivial

RECORD_TEMPLATE = """\
name: test record
graph:
  vertices: [v1, v2, v3, v4, v5]
  complement_of_cycle: true
generators: [{gens}]
images:
  g1: "v1^-1 v2"
  g2: "v5^-1 v4 v5 v4"
  d1: "v5^-1 v4 v5 v3"
  d2: "v1^-1 v5^-1 v1 v5"
witness_loop: "{loop}"
"""


def _write_record(tmp_path: Path, gens="g1, g2, d1, d2", loop="g2^-1 d1 g1^-1") -> Path:
    path = tmp_path / "record.yaml"
    path.write_text(RECORD_TEMPLATE.format(gens=gens, loop=loop))
    return path


def _pair_of_curves(edge: bool = True) -> Dissection:
    graph = LabeledGraph.build(["c1", "c2"], [("c1", "c2")] if edge else [])
    curves = (Curve(label="c1", crossings=(("x1", 1),)), Curve(label="c2", crossings=(("x1", -1),)))
    return Dissection(graph=graph, genus=1, curves=curves)


# ── faces ───────────────────────────────────────────────────────────────────

def test_two_crossing_curves_fill_a_torus():
    d = chain_curve_system(2)
    faces = trace_faces(d)
    assert faces == [(("c1", -1), ("c2", 1), ("c1", 1), ("c2", -1))]
    assert d.genus == 1


def test_even_chain_fills_with_one_face():
    d = chain_curve_system(4)
    assert len(trace_faces(d)) == 1
    assert euler_genus(d) == 2
    assert d.genus == 2


def test_faces_compare_up_to_rotation():
    face = (("c1", -1), ("c2", 1), ("c1", 1), ("c2", -1))
    rotated = face[2:] + face[:2]
    assert same_faces([face], [rotated])
    assert not same_faces([face], [tuple(reversed(face))])


def test_crossing_traversed_once_is_rejected():
    graph = LabeledGraph.build(["c1", "c2"], [("c1", "c2")])
    curves = (Curve(label="c1", crossings=(("x1", 1), ("x2", -1))), Curve(label="c2", crossings=(("x1", -1),)))
    with pytest.raises(PreconditionError, match="traversed 1 times"):
        trace_faces(Dissection(graph=graph, genus=1, curves=curves))


def test_curve_without_crossings_is_rejected():
    graph = LabeledGraph.build(["c1", "c2"], [])
    curves = (Curve(label="c1"), Curve(label="c2"))
    with pytest.raises(PreconditionError, match="meet no other curve"):
        trace_faces(Dissection(graph=graph, genus=0, curves=curves))


def test_crossing_signs_must_be_opposite():
    graph = LabeledGraph.build(["c1", "c2"], [("c1", "c2")])
    curves = (Curve(label="c1", crossings=(("x1", 1),)), Curve(label="c2", crossings=(("x1", 1),)))
    with pytest.raises(PreconditionError, match="both passages"):
        trace_faces(Dissection(graph=graph, genus=1, curves=curves))


def test_curve_signs_are_validated():
    with pytest.raises(ValidationError, match="sign must be"):
        Curve(label="c1", crossings=(("x1", 2),))


# ── dissection and link conditions ──────────────────────────────────────────

def test_torus_pair_is_a_dissection_with_link_condition():
    d = _pair_of_curves()
    assert check_dissection(d)
    assert link_condition(d)


def test_crossing_between_non_adjacent_labels_fails():
    d = _pair_of_curves(edge=False)
    assert not check_dissection(d)
    with pytest.raises(PreconditionError, match="not a dissection"):
        link_condition(d)


def test_declared_genus_must_match_the_euler_count():
    d = _pair_of_curves().model_copy(update={"genus": 2})
    assert not check_dissection(d)


def test_declared_faces_must_match_the_traced_faces():
    good = _pair_of_curves().model_copy(update={"faces": ((("c1", 1), ("c2", -1), ("c1", -1), ("c2", 1)),)})
    bad = _pair_of_curves().model_copy(update={"faces": ((("c1", 1), ("c2", 1), ("c1", -1), ("c2", -1)),)})
    assert check_dissection(good)
    assert not check_dissection(bad)


def test_long_chain_face_repeats_a_corner():
    assert check_dissection(chain_curve_system(4))
    assert not link_condition(chain_curve_system(4))


SQUARE_FACE = (("v1", 1), ("v2", 1), ("v3", 1), ("v4", 1))


def test_face_link_is_full_when_only_neighbouring_corners_commute():
    assert face_link_ok(SQUARE_FACE, LabeledGraph.cycle(4))


def test_face_link_fails_fullness_on_a_diagonal_edge():
    graph = LabeledGraph.build(["v1", "v2", "v3", "v4"], [("v1", "v2"), ("v1", "v3")])
    assert not face_link_ok(SQUARE_FACE, graph)


def test_face_link_fails_injectivity_on_a_repeated_corner():
    assert not face_link_ok((("v1", 1), ("v2", 1), ("v1", 1)), LabeledGraph.cycle(4))


def test_read_loop_normalises_in_the_graph():
    d = _pair_of_curves()
    loop = SurfaceLoop(crossings=(("c2", 1), ("c1", -1)))
    assert read_loop(d, loop) == RaagWord(letters=(("c1", -1), ("c2", 1)))


def test_read_loop_rejects_unknown_curves():
    with pytest.raises(PreconditionError, match="not a curve"):
        read_loop(_pair_of_curves(), SurfaceLoop(crossings=(("c9", 1),)))


# ── covering and pairings ───────────────────────────────────────────────────

def test_surface_generators():
    assert surface_generators(2) == ("g1", "g2", "d1", "d2")
    assert surface_generators(3) == ("g1", "g2", "d1", "d2", "d3", "d4")


def test_covering_pullback_images():
    m = covering_pullback(3)
    assert m.image("g1") == (("g1", 2),)
    assert m.image("g2") == (("g2", 1),)
    assert m.image("d1") == (("d1", 1),)
    assert m.image("d3") == (("g1", 1), ("d1", 1), ("g1", -1))
    assert m.image("d4") == (("g1", 1), ("d2", 1), ("g1", -1))


def test_covering_needs_base_genus_two():
    with pytest.raises(PreconditionError, match="base genus"):
        covering_pullback(1)


def test_pairs_for_genus_shift_the_delta_pair():
    assert pairs_for_genus(3, DEFAULT_PAIRING) == [
        (("g1", 1), ("g2", 1)),
        (("d1", 1), ("d2", 1)),
        (("d3", 1), ("d4", 1)),
    ]


def test_pairing_ids_round_trip():
    table = ((("g1", -1), ("g2", 1)), (("d1", 1), ("d2", -1)))
    assert pairing_id(table) == "g1'g2-d1d2'"
    assert parse_pairing_id("g1'g2-d1d2'") == table
    assert pairing_id(DEFAULT_PAIRING) == "g1g2-d1d2"


def test_bad_pairing_id():
    with pytest.raises(PreconditionError, match="bad pairing"):
        parse_pairing_id("g1g2g3-d1")


def test_candidate_pairings_cover_orders_and_signs():
    assert len(candidate_pairings(surface_generators(2))) == 24 * 16


def test_surface_relator_layout():
    assert surface_relator(2) == SurfaceWord.of(
        "g1", "g2", ("g1", -1), ("g2", -1), "d1", "d2", ("d1", -1), ("d2", -1))


# ── the shipped record ──────────────────────────────────────────────────────

def test_default_record_loads_and_validates():
    record = load_default_record()
    assert record.graph.vertices == ("v1", "v2", "v3", "v4", "v5")
    assert len(record.graph.edges) == 5
    assert validate_record(record) == []


def test_default_record_reads_the_relator_as_identity():
    record = load_default_record()
    assert find_pairing_table(record) == DEFAULT_PAIRING
    assert label_reading(record, surface_relator(2)).is_empty
    assert is_trivial(record.reading.apply(surface_relator(2)), record.graph)


def test_witness_loop_reading():
    record = load_default_record()
    assert label_reading(record, record.witness_loop) == RaagWord.of(("v4", -1), "v3", ("v2", -1), "v1")


def test_record_from_file(tmp_path):
    record = load_record(_write_record(tmp_path))
    assert record.name == "test record"
    assert validate_record(record) == []


def test_record_with_wrong_generators_is_reported(tmp_path):
    path = tmp_path / "record.yaml"
    path.write_text(RECORD_TEMPLATE.format(gens="g1, g2, d1", loop="g1").replace('  d2: "v1^-1 v5^-1 v1 v5"\n', ""))
    problems = validate_record(load_record(path))
    assert len(problems) == 1
    assert "expected" in problems[0]


def test_record_witness_loop_must_use_known_generators(tmp_path):
    with pytest.raises(ValidationError, match="unknown generators"):
        load_record(_write_record(tmp_path, loop="e1"))
