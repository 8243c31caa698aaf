"""Dehn twists: the Birman-Hilden dictionary, c_{2g+1} and the homology action."""
import random
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from conftest import twist
from surface_bundles.enums import WordOrder
from surface_bundles.errors import PreconditionError
from surface_bundles.garside import garside_equal
from surface_bundles.mcg import (
    action_array,
    braid_to_twists,
    curve_class,
    expand_c2g1,
    relator_sequence,
    _twist_rows,
    relator_word,
    twist_action,
    twist_matrix,
    twists_to_braid,
)
from surface_bundles.models import BraidWord
from surface_bundles.models.matrices import chain_form, identity_array


def _is_identity(m) -> bool:
    return bool((m == identity_array(m.shape[0])).all())


# ── Birman-Hilden ───────────────────────────────────────────────────────────

def test_braid_to_twists_reverses_letters():
    w = braid_to_twists(BraidWord(strands=5, letters=((1, 1), (2, -1))))
    assert w.genus == 2
    assert w.order is WordOrder.LEFT
    assert w.letters == ((2, -1), (1, 1))


def test_dictionary_round_trip():
    w = BraidWord(strands=7, letters=((1, 2), (7, -1), (4, 3)))
    assert twists_to_braid(braid_to_twists(w)) == w


@pytest.mark.parametrize("strands", [3, 4, 6])
def test_braid_to_twists_needs_odd_strands_from_five(strands):
    with pytest.raises(PreconditionError, match="not odd"):
        braid_to_twists(BraidWord.identity(strands))


def test_right_order_word_lifts_like_its_left_reading():
    left = twist(2, (1, 1), (2, -1))
    right = left.as_order(WordOrder.RIGHT)
    assert right.letters == ((2, -1), (1, 1))
    assert twists_to_braid(right) == twists_to_braid(left)


# ── c_{2g+1} ────────────────────────────────────────────────────────────────

@pytest.mark.parametrize("genus", [2, 3])
def test_expanded_top_twist_acts_like_the_top_twist(genus):
    top = 2 * genus + 1
    w = twist(genus, (top, 2), (1, -1))
    expanded = expand_c2g1(w)
    assert top not in expanded.indices()
    assert (action_array(expanded) == action_array(w)).all()


def test_expanded_top_twist_lifts_to_the_same_braid():
    w = twist(2, (5, 1), (3, 2))
    assert garside_equal(twists_to_braid(expand_c2g1(w)), twists_to_braid(w))


def test_expansion_without_top_twist_is_identity():
    w = twist(2, (1, 1))
    assert expand_c2g1(w) is w


# ── homology ────────────────────────────────────────────────────────────────

def test_curve_classes():
    assert curve_class(1, 2) == (1, 0, 0, 0)
    assert curve_class(5, 2) == (1, -1, 1, -1)
    with pytest.raises(PreconditionError):
        curve_class(6, 2)


def test_twist_matrix_on_the_crossing_curve():
    m = twist_matrix(1, 1, 2)
    assert list(m[:, 1]) == [1, 1, 0, 0]
    assert list(m[:, 0]) == [1, 0, 0, 0]


def test_twist_inverse_matrix():
    assert _is_identity(twist_matrix(3, 2, 2) @ twist_matrix(3, -2, 2))


def test_random_words_act_symplectically():
    rng = random.Random(5)
    for genus in (2, 3, 4):
        j = chain_form(genus)
        for _ in range(200):
            letters = tuple((rng.randint(1, 2 * genus + 1), rng.choice((1, -1, 2, -3)))
                            for _ in range(rng.randint(0, 8)))
            m = action_array(twist(genus, *letters))
            assert (m.T.dot(j).dot(m) == j).all()
            twist_action(twist(genus, *letters))       # validates as SpMatrix


def test_chain_relation_acts_trivially():
    chain = twist(2, (1, 1), (2, 1), (3, 1), (4, 1))
    assert _is_identity(action_array(chain ** 10))


def test_braid_relation_on_homology():
    a = action_array(twist(2, (1, 1), (2, 1), (1, 1)))
    b = action_array(twist(2, (2, 1), (1, 1), (2, 1)))
    assert (a == b).all()


def test_left_and_right_readings_act_the_same():
    w = twist(2, (1, 2), (2, -1), (5, 1))
    assert (action_array(w) == action_array(w.as_order(WordOrder.RIGHT))).all()


def test_word_times_inverse_acts_as_the_identity():
    rng = random.Random(41)
    for genus in (2, 3):
        one = twist_action(twist(genus))
        for _ in range(30):
            letters = [(rng.randint(1, 2 * genus + 1), rng.choice((1, -1, 2))) for _ in range(rng.randint(1, 6))]
            w = twist(genus, *letters)
            assert twist_action(w * w.inverse()) == one
            assert twist_action(w.inverse() * w) == one


def _braid_relator(strands: int, rng: random.Random) -> tuple[tuple[int, int], ...]:
    """A word equal to the identity in B_strands: a braid relation, a far commutation or a cancelling pair."""
    i = rng.randint(1, strands - 2)
    kind = rng.randrange(3)
    if kind == 0:
        return ((i, 1), (i + 1, 1), (i, 1), (i + 1, -1), (i, -1), (i + 1, -1))
    if kind == 1 and i + 2 <= strands - 1:
        j = rng.randint(i + 2, strands - 1)
        return ((i, 1), (j, 1), (i, -1), (j, -1))
    return ((i, 1), (i, -1))


@pytest.mark.parametrize("strands", [5, 7])
def test_equal_braids_act_the_same_on_homology(strands):
    rng = random.Random(strands)
    for _ in range(40):
        letters = [(rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))]
        cut = rng.randint(0, len(letters))
        rewritten = letters[:cut] + list(_braid_relator(strands, rng)) + letters[cut:]
        w = BraidWord(strands=strands, letters=tuple(letters))
        v = BraidWord(strands=strands, letters=tuple(rewritten))
        assert garside_equal(w, v)
        assert twist_action(braid_to_twists(w)) == twist_action(braid_to_twists(v))


def test_twist_matrices_agree_across_threads():
    _twist_rows.cache_clear()
    jobs = [(k, e, 3) for k in range(1, 8) for e in (-2, -1, 1, 2)] * 8
    with ThreadPoolExecutor(max_workers=8) as pool:
        rows = list(pool.map(lambda job: _twist_rows(*job), jobs))
    for job, got in zip(jobs, rows):
        assert got == _twist_rows(*job)
    assert len(_twist_rows.cache) <= 56


# ── relators ────────────────────────────────────────────────────────────────

def test_relator_sequence_layout(commuting):
    seq = relator_sequence(commuting)
    assert len(seq) == 4 * commuting.base_genus
    a, b = commuting.pairs[-1]
    assert seq[:4] == [b.inverse(), a.inverse(), b, a]


def test_commuting_relator_is_trivial_on_homology(commuting):
    m = identity_array(4)
    for w in relator_sequence(commuting):
        m = m @ action_array(w)
    assert _is_identity(m)
    assert np.array_equal(action_array(relator_word(commuting)), m)
