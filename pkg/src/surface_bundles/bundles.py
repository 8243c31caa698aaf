"""Monodromy factorizations: generation, verification, sums, certificates.

A factorization lists pairs (A_j, B_j) of twist words. Read in left
(functional) order, its relator is

    B_h^-1 A_h^-1 B_h A_h  ...  B_1^-1 A_1^-1 B_1 A_1

which is the image of prod_j [x_j, y_j] under the letter-reversing
monodromy map. Verification levels:

    raag      the surface relator reads as the identity in A(C5bar) and,
              after Kim's embedding, in A(C_{2g+1}bar)
    braid     the relator lifted through Birman-Hilden is the trivial braid
    homology  the relator's action matrices multiply to the identity
"""
from __future__ import annotations

import logging
import threading
from itertools import combinations

from cachetools import LRUCache, cached

from surface_bundles import config
from surface_bundles.batch import BatchProcessor, BatchResult
from surface_bundles.braid import check_lonne_relations
from surface_bundles.dissection import (
    PairingTable,
    find_pairing_table,
    link_condition,
    load_default_record,
    pairing_id,
    pairs_for_genus,
    parse_pairing_id,
    surface_relator,
    validate_record,
)
from surface_bundles.enums import (
    CheckStatus,
    KimWordVariant,
    ProvenanceKind,
    VerificationLevel,
    WordOrder,
)
from surface_bundles.errors import PreconditionError, VerificationError
from surface_bundles.formats.words import format_twist_word
from surface_bundles.garside import garside_normal_form
from surface_bundles.invariants import format_array, h1_total_space, is_identity_array, relator_action
from surface_bundles.mcg import expand_c2g1, relator_word, twists_to_braid
from surface_bundles.models import (
    CertificateReport,
    CheckResult,
    Dissection,
    LabeledGraph,
    MonodromyFactorization,
    Provenance,
    SeparationReport,
    SurfaceWord,
    TailReadings,
    TwistWord,
    VerificationReport,
)
from surface_bundles.penner import chain_penner_data, penner_certify
from surface_bundles.pipeline import Pipeline, build_pipeline
from surface_bundles.raag import check_kim_condition, format_symbols, kim_subset, kim_word, opposite_graph

logger = logging.getLogger(__name__)

GENERATION_LEVELS = (VerificationLevel.RAAG, VerificationLevel.BRAID, VerificationLevel.HOMOLOGY)


# ─────────────────────────────── parameters ───────────────────────────────

def check_parameters(g: int, h: int | None = None, n: int | None = None) -> None:
    bounds = config.PARAMETER_BOUNDS
    if g < bounds["fiber_genus_min"]:
        raise PreconditionError(f"fiber genus g={g} < {bounds['fiber_genus_min']}")
    if h is not None and h < bounds["base_genus_min"]:
        raise PreconditionError(f"base genus h={h} < {bounds['base_genus_min']} (h = 1 is the torus family)")
    if n is not None and (n in (1, 2) or n < bounds["lonne_power_min"]):
        raise PreconditionError(f"n={n}: {config.REPORT_LABELS['lonne_hypothesis']} fails (need n >= 3)")


@cached(LRUCache(maxsize=4), lock=threading.RLock())
def default_pairing() -> PairingTable:
    return find_pairing_table(load_default_record())


# ─────────────────────────────── generation ───────────────────────────────

def _pipeline_pairs(p: Pipeline, table: PairingTable) -> tuple[tuple[TwistWord, TwistWord], ...]:
    pairs = []
    for (x, e), (y, f) in pairs_for_genus(p.base_genus, table):
        a = p.twist_image(SurfaceWord(letters=((x, e),)))
        b = p.twist_image(SurfaceWord(letters=((y, f),)))
        pairs.append((a, b))
    return tuple(pairs)


def generate_xn(g: int, h: int, n: int, *, kim_variant: KimWordVariant | None = None,
                levels: tuple[VerificationLevel, ...] = GENERATION_LEVELS) -> MonodromyFactorization:
    """X_n(g, h): the pipeline image of the surface relator, verified before it is returned."""
    check_parameters(g, h, n)
    variant = kim_variant or KimWordVariant(config.KIM_WORD)
    table = default_pairing()
    p = build_pipeline(g, h, n, variant)
    params = [("g", str(g)), ("h", str(h)), ("n", str(n)), ("pairing", pairing_id(table))]
    if variant is KimWordVariant.SQUARED:
        params.append(("kim", variant.value))
    f = MonodromyFactorization(fiber_genus=g, base_genus=h, pairs=_pipeline_pairs(p, table),
                               provenance=Provenance(kind=ProvenanceKind.XN, params=tuple(params)))
    for level in levels:
        report = verify_factorization(f, level)
        if not report.passed:
            raise VerificationError(f"X_{n}({g},{h}) fails at level {level.value}: {report.detail}",
                                    level=level.value, evidence=report.evidence)
    logger.info("generated X_%d(%d,%d) verified at %s", n, g, h, ", ".join(lvl.value for lvl in levels))
    return f.with_verified(*levels)


def torus_word(g: int, k: int) -> TwistWord:
    """phi_k = T1^k T2^-1 T3 T4^-1 ... T_2g^-1."""
    letters = [(1, k)] + [(i, 1 if i % 2 else -1) for i in range(2, 2 * g + 1)]
    return TwistWord(genus=g, letters=tuple(letters))


def generate_torus_bundle(g: int, k: int) -> MonodromyFactorization:
    """Mapping torus of phi_k: base genus 1, single pair (phi_k, 1)."""
    check_parameters(g)
    if k < config.PARAMETER_BOUNDS["torus_power_min"]:
        raise PreconditionError(f"k={k} < {config.PARAMETER_BOUNDS['torus_power_min']}")
    f = MonodromyFactorization(
        fiber_genus=g, base_genus=1, pairs=((torus_word(g, k), TwistWord.identity(g)),),
        provenance=Provenance(kind=ProvenanceKind.TORUS, params=(("g", str(g)), ("k", str(k)))))
    if not verify_factorization(f, VerificationLevel.HOMOLOGY).passed:
        raise VerificationError("torus bundle relator is not trivial on homology", level="homology")
    return f.with_verified(VerificationLevel.HOMOLOGY)


def penner_witness(g: int, h: int, n: int, *, kim_variant: KimWordVariant | None = None) -> TwistWord:
    """Image of the recorded witness loop: (T1^n T2^-n)^(h-1) T3^n W^-1."""
    check_parameters(g, h, n)
    p = build_pipeline(g, h, n, kim_variant or KimWordVariant(config.KIM_WORD))
    return p.twist_image(p.record.witness_loop)


# ─────────────────────────────── verification ───────────────────────────────

def _verify_homology(f: MonodromyFactorization) -> VerificationReport:
    m = relator_action(f)
    ok = is_identity_array(m)
    evidence = None if ok else format_array(m)
    detail = "relator acts trivially on H1" if ok else "relator acts nontrivially on H1"
    return VerificationReport(level=VerificationLevel.HOMOLOGY, passed=ok, detail=detail, evidence=evidence)


def _verify_braid(f: MonodromyFactorization) -> VerificationReport:
    lift = twists_to_braid(relator_word(f))
    form = garside_normal_form(lift)
    ok = form.is_identity
    detail = (f"relator lifts to the trivial braid on {lift.strands} strands" if ok
              else f"relator lifts to a nontrivial braid (canonical length {form.canonical_length})")
    return VerificationReport(level=VerificationLevel.BRAID, passed=ok, detail=detail,
                              evidence=None if ok else str(form))


def _pipeline_for(f: MonodromyFactorization) -> tuple[Pipeline, PairingTable]:
    prov = f.provenance
    if prov.kind is not ProvenanceKind.XN:
        raise PreconditionError(f"level raag needs xn provenance, factorization is '{prov.kind.value}'")
    try:
        g, h, n = prov.get_int("g"), prov.get_int("h"), prov.get_int("n")
        table = parse_pairing_id(prov.get("pairing") or "")
    except (KeyError, ValueError) as exc:
        raise PreconditionError(f"provenance incomplete for level raag: {exc}") from None
    if (g, h) != (f.fiber_genus, f.base_genus):
        raise PreconditionError("provenance parameters disagree with the factorization")
    variant = KimWordVariant(prov.get("kim", KimWordVariant.SINGLE.value))
    return build_pipeline(g, h, n, variant), table


def _verify_raag(f: MonodromyFactorization) -> VerificationReport:
    p, table = _pipeline_for(f)
    relator = surface_relator(f.base_genus, table)
    inner = p.raag_image(relator)
    outer = p.target_image(relator)
    same_words = _pipeline_pairs(p, table) == f.as_order(WordOrder.LEFT).pairs
    ok = inner.is_empty and outer.is_empty and same_words
    if ok:
        detail = "surface relator reads as the identity in A(C5bar) and A(C_{2g+1}bar)"
        evidence = None
    elif not same_words:
        detail = "factorization words are not the pipeline images of its provenance"
        evidence = None
    else:
        detail = "surface relator has a nonempty normal form"
        evidence = format_symbols(inner if not inner.is_empty else outer)
    return VerificationReport(level=VerificationLevel.RAAG, passed=ok, detail=detail, evidence=evidence)


def verify_factorization(f: MonodromyFactorization, level: VerificationLevel | str) -> VerificationReport:
    level = VerificationLevel(level)
    if level is VerificationLevel.HOMOLOGY:
        report = _verify_homology(f)
    elif level is VerificationLevel.BRAID:
        report = _verify_braid(f)
    else:
        report = _verify_raag(f)
    logger.info("verify %s at %s: %s", f.provenance, level.value, "PASS" if report.passed else "FAIL")
    return report


def delta_tail_readings(g: int, h: int, n: int) -> TailReadings:
    """Braid-level check of the derived d1 image (tail T_{2g+1}^-n) and the tail T_{2g+1}^-1.

    The derived factorization comes back with `tail=derived:<pass|fail>,literal:<pass|fail>`
    appended to its provenance; a failing reading keeps its Garside form as evidence.
    """
    derived = generate_xn(g, h, n)
    top = 2 * g + 1
    a2, b2 = derived.pairs[1]
    if not a2.letters or a2.letters[-1] != (top, -n):
        raise PreconditionError(f"A_2 of X_{n}({g},{h}) does not end in T{top}^-{n}; no tail to re-read")
    literal_pairs = list(derived.pairs)
    literal_pairs[1] = (a2.model_copy(update={"letters": a2.letters[:-1] + ((top, -1),)}), b2)
    literal = derived.model_copy(update={"pairs": tuple(literal_pairs), "verified": ()})

    derived_report = verify_factorization(derived, VerificationLevel.BRAID)
    literal_report = verify_factorization(literal, VerificationLevel.BRAID)
    readings = TailReadings(factorization=derived, derived=derived_report, literal=literal_report)
    for name, report in readings.failing().items():
        logger.info("%s tail reading of X_%d(%d,%d) fails: %s", name, n, g, h, report.evidence)
    prov = derived.provenance
    tagged = prov.model_copy(update={"params": prov.params + (("tail", readings.summary),)})
    return readings.model_copy(update={"factorization": derived.model_copy(update={"provenance": tagged})})


def verify_grid(grid: list[tuple[int, int, int]], level: VerificationLevel | str,
                max_concurrent: int | None = None) -> BatchResult:
    """Generate and verify X_n(g, h) for every (g, h, n); one batch item per instance."""
    level = VerificationLevel(level)

    def handler(g: int, h: int, n: int) -> bool:
        return verify_factorization(generate_xn(g, h, n), level).passed

    requests = [{"g": g, "h": h, "n": n} for g, h, n in grid]
    return BatchProcessor(max_concurrent).run(requests, handler)


# ─────────────────────────────── sums ───────────────────────────────

def _common_levels(*fs: MonodromyFactorization) -> set[VerificationLevel]:
    levels = set(fs[0].verified)
    for f in fs[1:]:
        levels &= set(f.verified)
    levels.discard(VerificationLevel.RAAG)
    return levels


def fiber_sum(f1: MonodromyFactorization, f2: MonodromyFactorization,
              glue: TwistWord | None = None) -> MonodromyFactorization:
    """(phi A_j phi^-1, phi B_j phi^-1) for f1, then f2's pairs."""
    if f1.fiber_genus != f2.fiber_genus:
        raise PreconditionError(f"fiber genus differs: {f1.fiber_genus} vs {f2.fiber_genus}")
    g = f1.fiber_genus
    phi = (glue or TwistWord.identity(g)).as_order(WordOrder.LEFT)
    if phi.genus != g:
        raise PreconditionError(f"glue word has genus {phi.genus}, fibers have genus {g}")
    left1, left2 = f1.as_order(WordOrder.LEFT), f2.as_order(WordOrder.LEFT)
    pairs = tuple((a.conjugate(phi), b.conjugate(phi)) for a, b in left1.pairs) + left2.pairs
    params = (("h1", str(f1.base_genus)), ("h2", str(f2.base_genus)))
    out = MonodromyFactorization(fiber_genus=g, base_genus=f1.base_genus + f2.base_genus, pairs=pairs,
                                 provenance=Provenance(kind=ProvenanceKind.FIBER_SUM, params=params))
    inherited = _common_levels(f1, f2)
    if _verify_homology(out).passed:
        inherited.add(VerificationLevel.HOMOLOGY)
    else:
        inherited.discard(VerificationLevel.HOMOLOGY)
    return out.with_verified(*inherited)


def _expanded_left(f: MonodromyFactorization) -> list[tuple[TwistWord, TwistWord]]:
    left = f.as_order(WordOrder.LEFT)
    return [(expand_c2g1(a), expand_c2g1(b)) for a, b in left.pairs]


def _reembed(w: TwistWord, genus: int, shift: int = 0) -> TwistWord:
    return TwistWord(genus=genus, letters=tuple((k + shift, e) for k, e in w.letters), order=WordOrder.LEFT)


def section_sum(f1: MonodromyFactorization, f2: MonodromyFactorization, lift: int = 0,
                glue: TwistWord | None = None) -> MonodromyFactorization:
    """Glue along sections: f1 on c_1..c_2g1, f2 shifted onto c_(2g1+2)..c_(2g1+2g2).

    With lift n != 0, f1's relator must lift to Delta^(4n) on 2g1+1 strands (the
    chain relation for T_gamma^n); f2's relator is then checked on homology.
    """
    if f1.base_genus != f2.base_genus:
        raise PreconditionError(f"base genus differs: {f1.base_genus} vs {f2.base_genus}")
    g1, g2 = f1.fiber_genus, f2.fiber_genus
    big = g1 + g2
    shift = 2 * g1 + 1

    left = _expanded_left(f1)
    right = _expanded_left(f2)
    for a, b in right:
        over = sorted(k for k in a.indices() | b.indices() if k > 2 * g2 - 1)
        if over:
            raise PreconditionError(f"f2 uses curves {over}; only c_1..c_{2 * g2 - 1} re-index without collision")
    phi = expand_c2g1((glue or TwistWord.identity(g1)).as_order(WordOrder.LEFT))
    if phi.genus != g1 or any(k > 2 * g1 for k in phi.indices()):
        raise PreconditionError(f"glue word must be a genus-{g1} word on c_1..c_{2 * g1 + 1}")

    lhs = MonodromyFactorization(fiber_genus=g1, base_genus=f1.base_genus, pairs=tuple(left))
    form = garside_normal_form(twists_to_braid(relator_word(lhs)))
    if form.factors or form.infimum != 4 * lift:
        raise VerificationError(f"left relator is not Delta^{4 * lift} on {2 * g1 + 1} strands",
                                level=VerificationLevel.BRAID.value, evidence=str(form))
    rhs = MonodromyFactorization(fiber_genus=g2, base_genus=f2.base_genus, pairs=tuple(right))
    right_check = _verify_braid(rhs) if lift == 0 else _verify_homology(rhs)
    if not right_check.passed:
        raise VerificationError(f"right relator fails: {right_check.detail}",
                                level=right_check.level.value, evidence=right_check.evidence)

    phi_big = _reembed(phi, big)
    pairs = []
    for (a1, b1), (a2, b2) in zip(left, right):
        a = _reembed(a1, big).conjugate(phi_big) * _reembed(a2, big, shift)
        b = _reembed(b1, big).conjugate(phi_big) * _reembed(b2, big, shift)
        pairs.append((a.free_reduce(), b.free_reduce()))
    params = (("g1", str(g1)), ("g2", str(g2)), ("lift", str(lift)))
    out = MonodromyFactorization(fiber_genus=big, base_genus=f1.base_genus, pairs=tuple(pairs),
                                 provenance=Provenance(kind=ProvenanceKind.SECTION_SUM, params=params))
    levels = []
    if _verify_homology(out).passed:
        levels.append(VerificationLevel.HOMOLOGY)
    if lift == 0 and _verify_braid(out).passed:
        levels.append(VerificationLevel.BRAID)
    return out.with_verified(*levels)


# ─────────────────────────────── certificates ───────────────────────────────

def _check(name: str, ok: bool, evidence: str) -> CheckResult:
    return CheckResult(name=name, status=CheckStatus.PASS if ok else CheckStatus.FAIL, evidence=evidence)


def _noncentral_witness(f: MonodromyFactorization) -> CheckResult:
    for j, (a, b) in enumerate(f.as_order(WordOrder.LEFT).pairs, start=1):
        for tag, w in (("A", a), ("B", b)):
            form = garside_normal_form(twists_to_braid(w))
            if not form.is_central_power:
                return _check("non-centrality", True,
                              f"{tag}{j} lifts to {form.canonical_length} simple factors, not a power of Delta^2")
    return _check("non-centrality", False, "every monodromy word lifts to a power of Delta^2")


def indecomposability_report(g: int, h: int, n: int, *, dissection: Dissection | None = None,
                             kim_variant: KimWordVariant | None = None) -> CertificateReport:
    """Sub-checks behind fiber-sum and section-sum indecomposability of X_n(g, h)."""
    check_parameters(g, h, n)
    variant = kim_variant or KimWordVariant(config.KIM_WORD)
    checks: list[CheckResult] = []

    record = load_default_record()
    problems = validate_record(record)
    checks.append(_check("label-reading record", not problems,
                         "; ".join(problems) or f"'{record.name}' reads the surface relator as the identity"))
    if dissection is None:
        checks.append(CheckResult(name="link condition", status=CheckStatus.SKIPPED,
                                  evidence="no dissection supplied; record provenance cited"))
    else:
        checks.append(_check("link condition", link_condition(dissection),
                             f"{len(dissection.curves)} curves on genus {dissection.genus}"))

    target = opposite_graph(LabeledGraph.cycle(2 * g + 1))
    w = kim_word(g, variant)
    checks.append(_check("kim condition", check_kim_condition(target, kim_subset(g), w),
                         f"S = {{{', '.join(kim_subset(g))}}}, w = {format_symbols(w)}"))
    lonne = check_lonne_relations(g, n)
    checks.append(_check("lonne hypothesis", lonne.matches,
                         f"n = {n}, {lonne.commuting_pairs} commuting generator pairs"
                         + (f", mismatches {lonne.mismatches()}" if not lonne.matches else "")))

    f = generate_xn(g, h, n, kim_variant=variant)
    checks.append(_check("relator", True, f"verified at {', '.join(lvl.value for lvl in f.verified)}"))
    checks.append(_noncentral_witness(f))

    witness = penner_witness(g, h, n, kim_variant=variant)
    checks.append(_check("penner witness", penner_certify(witness, chain_penner_data(g)),
                         format_twist_word(witness)))

    labels = config.REPORT_LABELS
    passed = all(c.status is not CheckStatus.FAIL for c in checks)
    verdicts = (labels["fiber_sum_verdict"], labels["section_sum_verdict"]) if passed else ()
    return CertificateReport(subject=f"X_{n}({g},{h})", checks=tuple(checks), verdicts=verdicts)


def torus_indecomposability_report(g: int, k: int) -> CertificateReport:
    """Mapping tori: fiber sums are excluded by the base, section sums by the Penner witness phi_k."""
    f = generate_torus_bundle(g, k)
    phi = f.pairs[0][0]
    checks = (
        CheckResult(name="torus base", status=CheckStatus.PASS,
                    evidence="the torus is not a nontrivial connected sum"),
        _check("penner witness", penner_certify(phi, chain_penner_data(g)), format_twist_word(phi)),
    )
    labels = config.REPORT_LABELS
    passed = all(c.status is CheckStatus.PASS for c in checks)
    verdicts = (labels["fiber_sum_verdict"], labels["section_sum_verdict"]) if passed else ()
    return CertificateReport(subject=f"T_{k}(g={g})", checks=checks, verdicts=verdicts)


def homotopy_separation(factorizations: list[MonodromyFactorization], labels: list[str] | None = None,
                        max_concurrent: int | None = None) -> SeparationReport:
    """H_1 of every total space and which pairs differ."""
    labels = labels or [str(f.provenance) for f in factorizations]
    if len(labels) != len(factorizations):
        raise PreconditionError(f"{len(labels)} labels for {len(factorizations)} factorizations")
    unverified = [lbl for lbl, f in zip(labels, factorizations) if VerificationLevel.HOMOLOGY not in f.verified
                  and not _verify_homology(f).passed]
    if unverified:
        raise PreconditionError(f"not verified on homology: {unverified}")
    batch = BatchProcessor(max_concurrent).run([{"f": f} for f in factorizations], h1_total_space)
    if batch.errors:
        raise PreconditionError(f"H1 computation failed: {batch.errors}")
    groups = tuple(batch.results)
    distinct = tuple((i, j, groups[i] != groups[j]) for i, j in combinations(range(len(groups)), 2))
    return SeparationReport(labels=tuple(labels), groups=groups, distinct=distinct)
