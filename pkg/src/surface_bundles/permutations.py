"""Permutations as simple braids.

A permutation is a tuple `p` with `p[j]` the image of position j (0-based).
The simple braid of p is the positive braid in which every pair of strands
crosses at most once; its Artin length is the inversion count of p.
Products follow braid words read left to right: the word `x y` has
the permutation j -> x[y[j]].
"""
from __future__ import annotations

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def half_twist(n: int) -> Perm:
    """Delta, the longest permutation."""
    return tuple(range(n - 1, -1, -1))


def inverse(x: Perm) -> Perm:
    inv = [0] * len(x)
    for j, xj in enumerate(x):
        inv[xj] = j
    return tuple(inv)


def swap_positions(x: Perm, i: int) -> Perm:
    """x * s_(i+1): exchange positions i and i+1."""
    y = list(x)
    y[i], y[i + 1] = y[i + 1], y[i]
    return tuple(y)


def swap_values(x: Perm, i: int) -> Perm:
    """s_(i+1) * x: exchange the values i and i+1."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in x)


def right_descents(x: Perm) -> frozenset[int]:
    """0-based i with x * s_(i+1) shorter than x."""
    return frozenset(i for i in range(len(x) - 1) if x[i] > x[i + 1])


def left_descents(x: Perm) -> frozenset[int]:
    """0-based i with s_(i+1) * x shorter than x."""
    return right_descents(inverse(x))


def flip(x: Perm) -> Perm:
    """Conjugation by Delta: sigma_i -> sigma_(n-i)."""
    n = len(x)
    return tuple(n - 1 - x[n - 1 - j] for j in range(n))


def generator(n: int, i: int) -> Perm:
    """Permutation of the Artin generator sigma_i (1-based)."""
    return swap_positions(identity(n), i - 1)


def is_permutation(x: Perm) -> bool:
    return sorted(x) == list(range(len(x)))


def to_artin(x: Perm) -> list[int]:
    """A reduced positive Artin word (1-based indices) for the simple braid of x."""
    word: list[int] = []
    while True:
        d = right_descents(x)
        if not d:
            break
        i = min(d)
        word.append(i + 1)
        x = swap_positions(x, i)
    return word[::-1]
