"""Monodromy factorizations: generation, verification, sums, certificates, separation."""
import pytest

from conftest import commuting_factorization, twist
from surface_bundles.bundles import (
    check_parameters,
    default_pairing,
    fiber_sum,
    generate_torus_bundle,
    generate_xn,
    homotopy_separation,
    indecomposability_report,
    section_sum,
    delta_tail_readings,
    torus_indecomposability_report,
    torus_word,
    verify_factorization,
    verify_grid,
)
from surface_bundles.dissection import chain_curve_system, pairing_id, surface_relator
from surface_bundles.enums import (
    BatchStatus,
    CheckStatus,
    KimWordVariant,
    ProvenanceKind,
    VerificationLevel,
    WordOrder,
)
from surface_bundles.errors import PreconditionError, VerificationError
from surface_bundles.models import (
    AbelianGroupInvariants,
    CertificateReport,
    CheckResult,
    MonodromyFactorization,
    Provenance,
    SurfaceWord,
)
from surface_bundles.pipeline import build_pipeline


# ── parameters ──────────────────────────────────────────────────────────────

@pytest.mark.parametrize("g,h,n,match", [
    (1, 2, 3, "fiber genus"),
    (2, 1, 3, "base genus"),
    (2, 2, 2, "not in"),
    (2, 2, 1, "not in"),
])
def test_parameters_are_checked(g, h, n, match):
    with pytest.raises(PreconditionError, match=match):
        check_parameters(g, h, n)
    with pytest.raises(PreconditionError, match=match):
        generate_xn(g, h, n)


# ── the pipeline ────────────────────────────────────────────────────────────

def test_generator_images_at_genus_two():
    p = build_pipeline(2, 2, 3)

    def image(name):
        return p.twist_image(SurfaceWord.of(name))

    assert image("g1") == twist(2, (2, 3), (1, -3))
    assert image("g2") == twist(2, (4, 3), (5, 3), (4, 3), (5, -3))
    assert image("d1") == twist(2, (3, 3), (5, 3), (4, 3), (5, -3))
    assert image("d2") == twist(2, (5, 3), (1, 3), (5, -3), (1, -3))


def test_relator_vanishes_at_every_stage():
    p = build_pipeline(3, 3, 3)
    relator = surface_relator(3)
    assert p.raag_image(relator).is_empty
    assert p.target_image(relator).is_empty


def test_default_pairing_is_the_first_candidate():
    assert pairing_id(default_pairing()) == "g1g2-d1d2"


# ── generation ──────────────────────────────────────────────────────────────

def test_xn_shape_and_provenance(x3_22):
    assert x3_22.fiber_genus == 2
    assert x3_22.base_genus == 2
    assert x3_22.order is WordOrder.LEFT
    assert x3_22.verified == (VerificationLevel.RAAG, VerificationLevel.BRAID, VerificationLevel.HOMOLOGY)
    assert str(x3_22.provenance) == "xn g=2 h=2 n=3 pairing=g1g2-d1d2"
    a1, b1 = x3_22.pairs[0]
    assert a1 == twist(2, (2, 3), (1, -3))
    assert b1 == twist(2, (4, 3), (5, 3), (4, 3), (5, -3))


def test_squared_kim_word_is_recorded_in_provenance():
    f = generate_xn(2, 2, 3, kim_variant=KimWordVariant.SQUARED)
    assert f.provenance.get("kim") == "squared"
    assert verify_factorization(f, VerificationLevel.RAAG).passed


def test_xn_passes_braid_level(x3_22):
    report = verify_factorization(x3_22, VerificationLevel.BRAID)
    assert report.passed
    assert report.evidence is None


ACCEPTANCE_GRID = [(g, h, n) for g in (2, 3, 4) for h in (2, 3) for n in (3, 5)]


@pytest.mark.slow
@pytest.mark.parametrize("level", list(VerificationLevel), ids=lambda lvl: lvl.value)
def test_grid_passes_every_level(level):
    result = verify_grid(ACCEPTANCE_GRID, level, max_concurrent=2)
    assert result.status is BatchStatus.SUCCESS, result.errors
    assert all(result.results)


def test_repeated_grid_points_share_cached_pipelines():
    build_pipeline.cache_clear()
    result = verify_grid([(2, 2, 3)] * 6, VerificationLevel.HOMOLOGY, max_concurrent=4)
    assert result.status is BatchStatus.SUCCESS, result.errors
    assert result.results == [True] * 6
    assert len(build_pipeline.cache) == 1


@pytest.mark.parametrize("g,h,n", [(2, 2, 3), (2, 2, 5)])
def test_generated_exponents_are_multiples_of_n(g, h, n):
    f = generate_xn(g, h, n)
    for w in f.words():
        assert w.letters
        assert all(e % n == 0 for _, e in w.letters), w


def test_delta_tail_readings():
    readings = delta_tail_readings(2, 2, 3)
    assert readings.derived.passed
    assert not readings.literal.passed
    assert readings.literal.evidence
    assert list(readings.failing()) == ["literal"]
    assert readings.factorization.provenance.get("tail") == "derived:pass,literal:fail"
    assert verify_factorization(readings.factorization, VerificationLevel.RAAG).passed


def test_delta_tail_needs_the_derived_tail(monkeypatch):
    monkeypatch.setattr("surface_bundles.bundles.generate_xn", lambda g, h, n: commuting_factorization(g, h))
    with pytest.raises(PreconditionError, match="no tail"):
        delta_tail_readings(2, 2, 3)


def test_tampered_factorization_fails_homology(x3_22):
    (a1, b1), pair2 = x3_22.pairs
    tampered = x3_22.model_copy(update={"pairs": ((a1 * twist(2, (1, 1)), b1), pair2), "verified": ()})
    report = verify_factorization(tampered, VerificationLevel.HOMOLOGY)
    assert not report.passed
    assert report.evidence
    assert not verify_factorization(tampered, VerificationLevel.RAAG).passed


def test_raag_level_needs_xn_provenance(commuting):
    with pytest.raises(PreconditionError, match="xn provenance"):
        verify_factorization(commuting, VerificationLevel.RAAG)


def test_identity_factorization_passes_homology_and_braid():
    f = commuting_factorization()
    assert verify_factorization(f, "homology").passed
    assert verify_factorization(f, "braid").passed


def test_torus_bundle():
    f = generate_torus_bundle(2, 3)
    assert f.base_genus == 1
    assert f.pairs[0][0] == torus_word(2, 3)
    assert f.pairs[0][1].is_empty
    assert f.verified == (VerificationLevel.HOMOLOGY,)
    assert f.provenance.kind is ProvenanceKind.TORUS


def test_torus_word():
    assert torus_word(2, 4) == twist(2, (1, 4), (2, -1), (3, 1), (4, -1))
    with pytest.raises(PreconditionError):
        generate_torus_bundle(2, 0)


def test_factorization_needs_one_pair_per_handle():
    one = twist(2)
    with pytest.raises(ValueError, match="pairs for base genus"):
        MonodromyFactorization(fiber_genus=2, base_genus=2, pairs=((one, one),))


def test_factorization_rejects_mixed_genus():
    with pytest.raises(ValueError, match="genus 3"):
        MonodromyFactorization(fiber_genus=2, base_genus=1, pairs=((twist(3), twist(2)),))


# ── sums ────────────────────────────────────────────────────────────────────

def test_fiber_sum(x3_22, torus_2_5):
    total = fiber_sum(x3_22, torus_2_5)
    assert total.base_genus == 3
    assert total.pairs[:2] == x3_22.pairs
    assert total.pairs[2] == torus_2_5.pairs[0]
    assert total.verified == (VerificationLevel.HOMOLOGY,)
    assert total.provenance.kind is ProvenanceKind.FIBER_SUM


def test_fiber_sum_with_glue_conjugates_the_first_summand(x3_22, torus_2_5):
    glue = twist(2, (1, 1))
    total = fiber_sum(x3_22, torus_2_5, glue)
    assert total.pairs[0][0] == x3_22.pairs[0][0].conjugate(glue)
    assert verify_factorization(total, VerificationLevel.HOMOLOGY).passed


def test_fiber_sum_needs_equal_fiber_genus(x3_22):
    with pytest.raises(PreconditionError, match="fiber genus"):
        fiber_sum(x3_22, generate_torus_bundle(3, 1))


def test_section_sum_of_commuting_factorizations(x3_22):
    right = commuting_factorization()
    total = section_sum(x3_22, right)
    assert total.fiber_genus == 4
    assert total.base_genus == 2
    assert 6 in total.pairs[0][0].indices() and 8 in total.pairs[0][1].indices()
    assert 9 not in total.pairs[0][0].indices()
    assert total.verified == (VerificationLevel.BRAID, VerificationLevel.HOMOLOGY)
    assert total.provenance.get("lift") == "0"


def test_section_sum_rejects_colliding_curves(x3_22):
    with pytest.raises(PreconditionError, match="re-index"):
        section_sum(commuting_factorization(), x3_22)


def test_section_sum_lift_needs_the_boundary_twist():
    with pytest.raises(VerificationError, match="Delta\\^4"):
        section_sum(commuting_factorization(), commuting_factorization(), lift=1)


def test_section_sum_needs_equal_base_genus(x3_22):
    with pytest.raises(PreconditionError, match="base genus"):
        section_sum(x3_22, commuting_factorization(base_genus=3))


# ── certificates ────────────────────────────────────────────────────────────

def test_indecomposability_report_x3_22():
    report = indecomposability_report(2, 2, 3)
    assert report.subject == "X_3(2,2)"
    names = [c.name for c in report.checks]
    assert names == ["label-reading record", "link condition", "kim condition", "lonne hypothesis",
                     "relator", "non-centrality", "penner witness"]
    statuses = {c.name: c.status for c in report.checks}
    assert statuses["link condition"] is CheckStatus.SKIPPED
    assert all(s is CheckStatus.PASS for n, s in statuses.items() if n != "link condition")
    assert report.all_passed
    assert len(report.verdicts) == 2
    assert "T1^3 T2^-3 T3^3 T4^-3" in dict((c.name, c.evidence) for c in report.checks)["penner witness"]


def test_indecomposability_report_with_a_dissection():
    report = indecomposability_report(2, 2, 3, dissection=chain_curve_system(2))
    link = next(c for c in report.checks if c.name == "link condition")
    assert link.status is CheckStatus.PASS


def test_failing_link_condition_withholds_verdicts():
    report = indecomposability_report(2, 2, 3, dissection=chain_curve_system(4))
    assert not report.all_passed
    assert report.verdicts == ()


def test_indecomposability_report_rejects_excluded_exponent():
    with pytest.raises(PreconditionError, match="not in"):
        indecomposability_report(2, 2, 2)


def test_torus_report():
    report = torus_indecomposability_report(2, 1)
    assert report.subject == "T_1(g=2)"
    assert report.all_passed
    assert len(report.verdicts) == 2


def test_verdicts_cannot_accompany_failures():
    with pytest.raises(ValueError, match="verdicts emitted"):
        CertificateReport(subject="x", checks=(CheckResult(name="a", status=CheckStatus.FAIL),),
                          verdicts=("indecomposable",))


# ── separation ──────────────────────────────────────────────────────────────

def test_separation_of_torus_bundles():
    fs = [generate_torus_bundle(2, k) for k in (2, 3, 3)]
    report = homotopy_separation(fs, labels=["k2", "k3", "k3b"])
    assert report.groups[0] == AbelianGroupInvariants(free_rank=2, torsion=(2,))
    assert report.distinct == ((0, 1, True), (0, 2, True), (1, 2, False))
    assert not report.pairwise_distinct


@pytest.mark.slow
@pytest.mark.parametrize("g,h", [(2, 2), (2, 3), (3, 2)])
def test_xn_family_is_pairwise_distinct(g, h):
    fs = [generate_xn(g, h, n) for n in (3, 5, 7)]
    report = homotopy_separation(fs, labels=["X3", "X5", "X7"])
    assert report.pairwise_distinct
    for n, group in zip((3, 5, 7), report.groups):
        assert group.has_prime_power_factor(n)


def test_separation_needs_matching_labels(torus_2_5):
    with pytest.raises(PreconditionError, match="labels"):
        homotopy_separation([torus_2_5], labels=["a", "b"])


def test_separation_refuses_unverified_input(x3_22):
    (a1, b1), pair2 = x3_22.pairs
    broken = x3_22.model_copy(update={"pairs": ((a1 * twist(2, (1, 1)), b1), pair2), "verified": (),
                                      "provenance": Provenance()})
    with pytest.raises(PreconditionError, match="not verified"):
        homotopy_separation([broken], labels=["broken"])
