"""Dehn twists along the chain c_1 .. c_{2g+1} and their action on homology.

Birman-Hilden: B_{2g+1} -> Mod(S_g), s_i -> T_{c_i}, is an
anti-homomorphism for functional composition, so `braid_to_twists`
reverses the letters and records the result as a left-order word.

Homology basis [c_1] .. [c_2g] with the chain form J (i(c_i, c_{i+1}) = +1).
For a twist T_b^e acting on a column vector x:

    T_b^e(x) = x - e * i(x, b) * b = (I + e * b b^T J) x

A left-order word t_1 t_2 ... t_k acts as M(t_1) M(t_2) ... M(t_k).
"""
from __future__ import annotations

import logging
import threading

import numpy as np
from cachetools import LRUCache, cached

from surface_bundles.enums import WordOrder
from surface_bundles.errors import PreconditionError
from surface_bundles.models import BraidWord, MonodromyFactorization, SpMatrix, TwistWord
from surface_bundles.models.matrices import chain_form, identity_array

logger = logging.getLogger(__name__)


# ── Birman-Hilden dictionary ──

def braid_to_twists(w: BraidWord) -> TwistWord:
    """s_i^e -> T_{c_i}^e with the letter order reversed; the band -> T_{c_{2g+1}}."""
    n = w.strands
    if n < 5 or n % 2 == 0:
        raise PreconditionError(f"strand count {n} is not odd >= 5")
    return TwistWord(genus=(n - 1) // 2, letters=tuple(reversed(w.letters)), order=WordOrder.LEFT)


def twists_to_braid(w: TwistWord) -> BraidWord:
    """Inverse dictionary: a braid whose image under `braid_to_twists` is w."""
    left = w.as_order(WordOrder.LEFT)
    return BraidWord(strands=2 * w.genus + 1, letters=tuple(reversed(left.letters)))


def _c2g1_conjugate(genus: int, e: int, order: WordOrder) -> list[tuple[int, int]]:
    """T_{c_{2g+1}}^e written over c_1 .. c_2g."""
    down = [(k, 1) for k in range(2 * genus, 1, -1)]            # T_2g ... T_2
    down_inv = [(k, -1) for k in range(2, 2 * genus + 1)]
    letters = down + [(1, e)] + down_inv
    return letters if order is WordOrder.LEFT else letters[::-1]


def expand_c2g1(w: TwistWord) -> TwistWord:
    """Replace every T_{c_{2g+1}}^e by (T_2g ... T_2) T_1^e (T_2g ... T_2)^-1."""
    top = 2 * w.genus + 1
    if top not in w.indices():
        return w
    out: list[tuple[int, int]] = []
    for k, e in w.letters:
        if k == top:
            out.extend(_c2g1_conjugate(w.genus, e, w.order))
        else:
            out.append((k, e))
    return w.model_copy(update={"letters": tuple(out)})


# ── homology ──

def curve_class(k: int, genus: int) -> tuple[int, ...]:
    """[c_k] in the basis [c_1] .. [c_2g]; [c_{2g+1}] = [c_1] - [c_2] + ... - [c_2g]."""
    size = 2 * genus
    if not 1 <= k <= size + 1:
        raise PreconditionError(f"curve index {k} outside 1..{size + 1}")
    if k == size + 1:
        return tuple(1 if i % 2 == 0 else -1 for i in range(size))
    return tuple(1 if i == k - 1 else 0 for i in range(size))


@cached(LRUCache(maxsize=512), lock=threading.RLock())
def _twist_rows(k: int, e: int, genus: int) -> tuple[tuple[int, ...], ...]:
    b = np.array(curve_class(k, genus), dtype=object).reshape(-1, 1)
    m = identity_array(2 * genus) + e * (b @ (b.T @ chain_form(genus)))
    return tuple(tuple(int(x) for x in row) for row in m)


def twist_matrix(k: int, e: int, genus: int) -> np.ndarray:
    """Action of T_{c_k}^e as an object array (a fresh copy per call)."""
    return np.array(_twist_rows(k, e, genus), dtype=object)


def action_array(w: TwistWord) -> np.ndarray:
    """Matrix of w on H_1 as an exact object array."""
    m = identity_array(2 * w.genus)
    letters = w.letters if w.order is WordOrder.LEFT else tuple(reversed(w.letters))
    for k, e in letters:
        m = m @ twist_matrix(k, e, w.genus)
    return m


def twist_action(w: TwistWord) -> SpMatrix:
    return SpMatrix.from_symplectic_array(action_array(w), w.genus)


# ── relators ──

def relator_sequence(f: MonodromyFactorization) -> list[TwistWord]:
    """The 4h words whose left-order product is the relator of f.

    pairs (A_1, B_1) .. (A_h, B_h) give B_h^-1 A_h^-1 B_h A_h ... B_1^-1 A_1^-1 B_1 A_1.
    """
    left = f.as_order(WordOrder.LEFT)
    seq: list[TwistWord] = []
    for a, b in reversed(left.pairs):
        seq += [b.inverse(), a.inverse(), b, a]
    return seq


def relator_word(f: MonodromyFactorization) -> TwistWord:
    """Left-order relator as one twist word (free-reduced)."""
    out = TwistWord.identity(f.fiber_genus, WordOrder.LEFT)
    for w in relator_sequence(f):
        out = out * w
    return out.free_reduce()
