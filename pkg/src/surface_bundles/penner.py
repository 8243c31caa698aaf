"""Penner's construction: positive twists on A times negative twists on B.

If A and B are multicurves that together fill the surface, any word using
only T_a (a in A) positively and T_b (b in B) negatively, with every curve
appearing, is pseudo-Anosov. `penner_certify` checks exactly those
hypotheses. `penner_growth` is supporting evidence: the measure-update
matrices M_c = I + |e| E_c (E_c adds i(c, d) times coordinate d to
coordinate c) multiply to a nonnegative integer matrix, and a power with
every row sum >= 2 proves spectral radius > 1.
"""
from __future__ import annotations

import logging

import numpy as np

from surface_bundles import config
from surface_bundles.dissection import chain_curve_system, trace_faces
from surface_bundles.enums import WordOrder
from surface_bundles.errors import PreconditionError
from surface_bundles.models import PennerData, PennerGrowth, TwistWord
from surface_bundles.models.matrices import identity_array

logger = logging.getLogger(__name__)


def chain_penner_data(genus: int) -> PennerData:
    """A = odd chain curves, B = even chain curves among c_1 .. c_2g."""
    if genus < 1:
        raise PreconditionError(f"genus {genus} < 1")
    size = 2 * genus
    chain = chain_curve_system(size)
    faces = trace_faces(chain)
    fills = chain.genus == genus and len(faces) == 1
    certificate = (f"chain c1..c{size}: {len(faces)} complementary face, Euler genus {chain.genus}"
                   if fills else None)
    odds = tuple(range(1, size + 1, 2))
    evens = tuple(range(2, size + 1, 2))
    hits = tuple((a, b, 1) for a in odds for b in evens if abs(a - b) == 1)
    return PennerData(positive=odds, negative=evens, intersections=hits,
                      filling=fills, certificate=certificate)


def _signs_ok(w: TwistWord, pd: PennerData) -> bool:
    pos, neg = set(pd.positive), set(pd.negative)
    for k, e in w.letters:
        if not ((k in pos and e > 0) or (k in neg and e < 0)):
            return False
    return True


def penner_certify(w: TwistWord, pd: PennerData) -> bool:
    """Every letter is T_a^+ (a in A) or T_b^- (b in B) and every curve occurs."""
    if not pd.filling:
        raise PreconditionError("Penner data without a filling certificate")
    if w.is_empty or not _signs_ok(w, pd):
        return False
    return set(pd.curves) <= w.indices()


def _update_matrix(k: int, e: int, pd: PennerData, index: dict[int, int]) -> np.ndarray:
    m = identity_array(len(index))
    opposite = pd.negative if k in pd.positive else pd.positive
    for d in opposite:
        m[index[k], index[d]] += abs(e) * pd.intersection(k, d)
    return m


def _is_primitive(p: np.ndarray) -> bool:
    """Wielandt: primitive iff the ((N-1)^2 + 1)-th power is positive."""
    n = p.shape[0]
    pattern = (p > 0).astype(np.int64)
    power = pattern.copy()
    for _ in range((n - 1) ** 2):
        power = ((power @ pattern) > 0).astype(np.int64)
    return bool(power.all())


def penner_growth(w: TwistWord, pd: PennerData) -> PennerGrowth:
    if not _signs_ok(w, pd):
        raise PreconditionError("word does not have Penner sign pattern for this data")
    curves = pd.curves
    index = {c: i for i, c in enumerate(curves)}
    applied = w.as_order(WordOrder.RIGHT).letters
    product = identity_array(len(curves))
    for k, e in applied:
        product = _update_matrix(k, e, pd, index) @ product

    primitive = _is_primitive(product)
    power = None
    if primitive:
        acc = identity_array(len(curves))
        for m in range(1, config.PENNER_MAX_POWER + 1):
            acc = acc @ product
            if min(sum(row) for row in acc) >= 2:
                power = m
                break

    v = np.ones(len(curves))
    pf = product.astype(float)
    estimate = 1.0
    for _ in range(config.POWER_ITERATIONS):
        nxt = pf @ v
        norm = float(np.linalg.norm(nxt))
        if norm == 0.0:
            estimate = 0.0
            break
        estimate = norm / float(np.linalg.norm(v))
        v = nxt / norm
    certified = primitive and power is not None
    logger.debug("penner growth: primitive=%s power=%s lambda~%.6f", primitive, power, estimate)
    return PennerGrowth(certified=certified, primitive=primitive, power=power, lambda_estimate=estimate)
