"""Text formats: words, graphs, dissections and factorization files."""
import pytest

from surface_bundles.dissection import chain_curve_system
from surface_bundles.enums import ProvenanceKind, VerificationLevel, WordOrder
from surface_bundles.errors import ParseError
from surface_bundles.formats import (
    format_braid_text,
    format_bundle,
    format_dissection,
    format_graph_text,
    format_twist_word,
    parse_braid_text,
    parse_bundle,
    parse_dissection,
    parse_graph_text,
    parse_symbol_word,
    parse_twist_text,
    parse_twist_word,
    read_bundle,
    write_bundle,
)
from surface_bundles.models import BraidWord, LabeledGraph, SurfaceWord
from surface_bundles.raag import opposite_graph

X3_22_TEXT = """\
bundle v1
fiber-genus 2
base-genus 2
order left
pair 1: A = T2^3 T1^-3 | B = T4^3 T5^3 T4^3 T5^-3
pair 2: A = T3^3 T5^3 T4^3 T5^-3 | B = T5^3 T1^3 T5^-3 T1^-3
verified: raag braid homology
provenance: xn g=2 h=2 n=3 pairing=g1g2-d1d2
"""

MINIMAL_TEXT = """\
bundle v1
fiber-genus 2
base-genus 1
order left
pair 1: A = 1 | B = 1
"""


def _bundle_text(**over):
    lines = {
        "magic": "bundle v1",
        "g": "fiber-genus 2",
        "h": "base-genus 1",
        "order": "order left",
        "pairs": "pair 1: A = T1 | B = T3",
        "trailer": "verified: none\nprovenance: manual",
    }
    lines.update(over)
    return "\n".join(v for v in lines.values() if v) + "\n"


# ── words ───────────────────────────────────────────────────────────────────

def test_twist_words():
    w = parse_twist_word("T2^-3 T1^3", 2)
    assert w.letters == ((2, -3), (1, 3))
    assert format_twist_word(w) == "T2^-3 T1^3"
    assert parse_twist_word("1", 2).is_empty
    assert format_twist_word(parse_twist_word("1", 2)) == "1"


@pytest.mark.parametrize("text,match", [
    ("T6", "outside 1..5"),
    ("T0", "outside"),
    ("T1^0", "exponent 0"),
    ("S1", "bad twist token"),
])
def test_bad_twist_tokens(text, match):
    with pytest.raises(ParseError, match=match):
        parse_twist_word(text, 2)


def test_reversing_a_word_is_not_inverting_it():
    w = parse_twist_word("T2^-3 T1^3 T4", 2)
    assert w.reversed_letters().letters == ((4, 1), (1, 3), (2, -3))
    assert w.inverse().letters == ((4, -1), (1, -3), (2, 3))
    right = w.as_order(WordOrder.RIGHT)
    assert right.letters == w.reversed_letters().letters
    assert right.as_order(WordOrder.LEFT) == w


def test_symbol_words():
    w = parse_symbol_word("g2^-1 d1 g1^-1", SurfaceWord)
    assert isinstance(w, SurfaceWord)
    assert w.letters == (("g2", -1), ("d1", 1), ("g1", -1))
    with pytest.raises(ParseError, match="bad generator"):
        parse_symbol_word("g2^x")


def test_braid_text():
    w = parse_braid_text("braid n=5\ns1 s2^-1\nb^3\n")
    assert w == BraidWord(strands=5, letters=((1, 1), (2, -1), (5, 3)))
    assert format_braid_text(w) == "braid n=5\ns1 s2^-1 b^3\n"
    with pytest.raises(ParseError, match="header"):
        parse_braid_text("s1 s2")


def test_twist_text_with_order():
    w = parse_twist_text("twist g=2 order=right\nT1 T2^-1\n")
    assert w.order is WordOrder.RIGHT
    assert w.letters == ((1, 1), (2, -1))


# ── graphs ──────────────────────────────────────────────────────────────────

def test_graph_text_with_complement():
    text = "vertices v1 v2 v3 v4 v5\n" + "".join(
        f"edge v{i} v{i % 5 + 1}\n" for i in range(1, 6)) + "complement  # C5bar\n"
    g = parse_graph_text(text)
    assert g.edge_set == opposite_graph(LabeledGraph.cycle(5)).edge_set
    assert parse_graph_text(format_graph_text(g)) == g


@pytest.mark.parametrize("text,match", [
    ("edge v1 v2\n", "no 'vertices'"),
    ("vertices v1 v2\nedge v1\n", "two endpoints"),
    ("vertices v1 v2\nloop v1\n", "unknown graph entry"),
    ("vertices v1 v2\nedge v1 v3\n", "outside the vertex list"),
])
def test_bad_graph_text(text, match):
    with pytest.raises(ParseError, match=match):
        parse_graph_text(text)


# ── dissections ─────────────────────────────────────────────────────────────

def test_dissection_text_of_a_torus_pair():
    text = format_dissection(chain_curve_system(2))
    assert text == (
        "graph:\n"
        "  vertices c1 c2\n"
        "  edge c1 c2\n"
        "curves:\n"
        "  c1: x1+\n"
        "  c2: x1-\n"
        "crossings:\n"
        "  x1: c1 c2\n"
        "genus:\n"
        "  1\n"
    )
    assert parse_dissection(text) == chain_curve_system(2)


def test_dissection_faces_section():
    text = format_dissection(chain_curve_system(2)).replace(
        "genus:", "faces:\n  c1- c2+ c1+ c2-\ngenus:")
    d = parse_dissection(text)
    assert d.faces == ((("c1", -1), ("c2", 1), ("c1", 1), ("c2", -1)),)


def test_dissection_crossings_must_match_curves():
    text = format_dissection(chain_curve_system(2)).replace("x1: c1 c2", "x1: c1 c1")
    with pytest.raises(ParseError, match="crossing x1"):
        parse_dissection(text)


def test_dissection_needs_its_sections():
    with pytest.raises(ParseError, match="missing sections: genus:"):
        parse_dissection("graph:\n  vertices c1\ncurves:\n  c1: x1+\n")


def test_dissection_rejects_entries_before_sections():
    with pytest.raises(ParseError, match="before any section"):
        parse_dissection("c1: x1+\n")


# ── factorization files ─────────────────────────────────────────────────────

def test_generated_bundle_text(x3_22):
    assert format_bundle(x3_22) == X3_22_TEXT


def test_bundle_text_parses_back(x3_22):
    assert parse_bundle(X3_22_TEXT) == x3_22


def test_trailer_lines_are_optional():
    f = parse_bundle(MINIMAL_TEXT)
    assert f.verified == ()
    assert f.provenance.kind is ProvenanceKind.MANUAL
    assert format_bundle(f).endswith("verified: none\nprovenance: manual\n")


def test_right_order_file():
    f = parse_bundle(_bundle_text(order="order right", pairs="pair 1: A = T1 T2 | B = T3"))
    assert f.order is WordOrder.RIGHT
    assert f.pairs[0][0].order is WordOrder.RIGHT


@pytest.mark.parametrize("over,match", [
    ({"magic": "bundle v2"}, "first line"),
    ({"g": "fiber-genus two"}, "expected 'fiber-genus"),
    ({"order": "order sideways"}, "expected 'order"),
    ({"pairs": "pair 2: A = T1 | B = T3"}, "out of sequence"),
    ({"pairs": "pair 1: A = T9 | B = T3"}, "twist index 9"),
    ({"pairs": ""}, "0 pairs for base genus 1"),
    ({"trailer": "verified: raag sideways"}, "unknown verification level"),
    ({"trailer": "provenance: invented"}, "unknown provenance kind"),
    ({"trailer": "provenance: xn g"}, "not key=value"),
    ({"trailer": "verified: none\npair 1: A = T1 | B = T3"}, "after the trailer"),
    ({"trailer": "garbage"}, "unrecognised line"),
])
def test_bundle_parse_errors(over, match):
    with pytest.raises(ParseError, match=match):
        parse_bundle(_bundle_text(**over))


def test_parse_error_carries_the_line_number():
    with pytest.raises(ParseError) as info:
        parse_bundle(_bundle_text(pairs="pair 1: A = T9 | B = T3"))
    assert info.value.line == 5


def test_bundle_files(tmp_path, torus_2_5):
    path = write_bundle(torus_2_5, tmp_path / "torus.bundle")
    f = read_bundle(path)
    assert f == torus_2_5
    assert f.verified == (VerificationLevel.HOMOLOGY,)
    assert str(f.provenance) == "torus g=2 k=5"
