"""Handle reduction: an independent solution of the braid word problem.

A sigma_i-handle is a subword s_i^e v s_i^-e where v has no letter s_j with
j <= i. Reducing it replaces every s_(i+1)^d in v by s_(i+1)^-e s_i^d s_(i+1)^e,
keeps the other letters and drops both ends. Always reducing the handle whose
right end comes first terminates, and the word is trivial iff it ends empty.

Words here are lists of signed Artin indices (+i for s_i, -i for s_i^-1).
Independent of the Garside code; the tests compare the two.
"""
from __future__ import annotations

from surface_bundles.models import BraidWord


def _first_handle(word: list[int]) -> tuple[int, int] | None:
    for r, x in enumerate(word):
        i = abs(x)
        for t in range(r - 1, -1, -1):
            y = word[t]
            if abs(y) < i:
                break
            if abs(y) == i:
                if y == -x:
                    return t, r
                break
    return None


def _free_reduce(word: list[int]) -> list[int]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def reduce_handle(word: list[int], start: int, end: int) -> list[int]:
    e = 1 if word[start] > 0 else -1
    i = abs(word[start])
    inner: list[int] = []
    for x in word[start + 1:end]:
        if abs(x) == i + 1:
            d = 1 if x > 0 else -1
            inner.extend([-e * (i + 1), d * i, e * (i + 1)])
        else:
            inner.append(x)
    return word[:start] + inner + word[end + 1:]


def handle_reduce(word: list[int]) -> list[int]:
    """Reduce until no handle is left; the result is handle-free."""
    word = _free_reduce(list(word))
    while (handle := _first_handle(word)) is not None:
        word = _free_reduce(reduce_handle(word, *handle))
    return word


def is_trivial(w: BraidWord) -> bool:
    return not handle_reduce(w.signed_letters())


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    return is_trivial(w1 * w2.inverse())
