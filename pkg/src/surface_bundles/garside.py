"""Left normal form in the braid group B_n (Garside / Thurston).

Every braid is written uniquely as Delta^p A_1 ... A_k with each A_i a
proper simple braid (a permutation other than the identity and Delta) and
every pair (A_i, A_(i+1)) left-weighted: the starting set of A_(i+1) lies
inside the finishing set of A_i.

Negative letters are rewritten as sigma_i^-1 = Delta^-1 (Delta sigma_i^-1)
and the Delta^-1 are pushed to the front with x Delta^-1 = Delta^-1 flip(x).
The remaining positive product is normalised factor by factor.
"""
from __future__ import annotations

import logging

from surface_bundles import permutations as perms
from surface_bundles.errors import PreconditionError
from surface_bundles.models import BraidWord, GarsideForm
from surface_bundles.permutations import Perm

logger = logging.getLogger(__name__)


def _simples(signed: list[int], n: int) -> tuple[int, list[Perm]]:
    """(p, simples) with the braid equal to Delta^p times the product of simples."""
    delta = perms.half_twist(n)
    negatives_after = [0] * len(signed)
    count = 0
    for j in range(len(signed) - 1, -1, -1):
        negatives_after[j] = count
        if signed[j] < 0:
            count += 1

    simples: list[Perm] = []
    for j, x in enumerate(signed):
        i = abs(x)
        s = perms.generator(n, i) if x > 0 else perms.swap_positions(delta, i - 1)
        if negatives_after[j] % 2:
            s = perms.flip(s)
        simples.append(s)
    return -count, simples


def _make_left_weighted(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move letters from the front of b to the back of a until S(b) <= F(a)."""
    while True:
        movable = perms.left_descents(b) - perms.right_descents(a)
        if not movable:
            return a, b
        i = min(movable)
        a = perms.swap_positions(a, i)
        b = perms.swap_values(b, i)


def _append(factors: list[Perm], s: Perm) -> None:
    factors.append(s)
    for j in range(len(factors) - 1, 0, -1):
        left, right = _make_left_weighted(factors[j - 1], factors[j])
        unchanged = left == factors[j - 1]
        factors[j - 1], factors[j] = left, right
        if unchanged:
            break


def garside_normal_form(w: BraidWord) -> GarsideForm:
    """Canonical form; equal braids have identical forms."""
    n = w.strands
    p, simples = _simples(w.signed_letters(), n)
    one, delta = perms.identity(n), perms.half_twist(n)

    factors: list[Perm] = []
    for s in simples:
        if s != one:
            _append(factors, s)

    lead = 0
    while lead < len(factors) and factors[lead] == delta:
        lead += 1
    body = [f for f in factors[lead:] if f != one]
    return GarsideForm(strands=n, infimum=p + lead, factors=tuple(body))


def garside_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Word problem: w1 w2^-1 has the identity normal form."""
    if w1.strands != w2.strands:
        raise PreconditionError(f"strand counts differ: {w1.strands} vs {w2.strands}")
    return garside_normal_form(w1 * w2.inverse()).is_identity


def is_trivial(w: BraidWord) -> bool:
    return garside_normal_form(w).is_identity


def delta_power(n: int, p: int) -> BraidWord:
    """Delta^p as an Artin word; Delta = (s1 ... s_(n-1)) (s1 ... s_(n-2)) ... s1."""
    delta = [(i, 1) for top in range(n - 1, 0, -1) for i in range(1, top + 1)]
    word = BraidWord(strands=n, letters=tuple(delta))
    return word ** p


def full_twist(n: int) -> BraidWord:
    """Delta^2 = (s1 ... s_(n-1))^n, the generator of the centre."""
    return BraidWord(strands=n, letters=tuple((i, 1) for i in range(1, n))) ** n


def form_to_word(form: GarsideForm) -> BraidWord:
    """Artin word spelling a normal form (used in reports)."""
    letters = list(delta_power(form.strands, form.infimum).letters)
    for f in form.factors:
        letters.extend((i, 1) for i in perms.to_artin(f))
    return BraidWord(strands=form.strands, letters=tuple(letters)).free_reduce()


def central_exponent(w: BraidWord) -> int | None:
    """p when w = Delta^p with p even (a power of the full twist), else None."""
    form = garside_normal_form(w)
    if form.is_central_power:
        logger.debug("braid is Delta^%d", form.infimum)
        return form.infimum
    return None
