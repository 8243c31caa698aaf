"""Braid groups: band generators, the word problem and Lonne's subgroup.

    A(C_{2g+1}bar) --lonne(g, n)--> B_{2g+1}
        v_i      -> s_i^n              (1 <= i <= 2g)
        v_{2g+1} -> beta_{1,2g+1}^n    (the closing band, written `b`)

Group maps carry braid letters as symbols (`s1`, ..., `s{n-1}`, `b`);
`braid_from_symbols` turns an image into a BraidWord.
"""
from __future__ import annotations

import logging
from itertools import combinations

from surface_bundles import config
from surface_bundles.errors import PreconditionError
from surface_bundles.garside import garside_equal, garside_normal_form, is_trivial  # noqa: F401
from surface_bundles.models import (
    BraidWord,
    GroupMap,
    LabeledGraph,
    LonneMatrix,
    LonneRelationReport,
    SymbolWord,
)

logger = logging.getLogger(__name__)

BAND_SYMBOL = "b"
CLOSING_BAND_MIN_STRANDS = 5   # chains of genus >= 2


def band_to_artin(i: int, j: int, n: int) -> BraidWord:
    """Artin word of the band generator beta_{i,j}.

    beta_{i,i+1} is s_i. In general beta_{i,j} = (s_{j-1} ... s_{i+1}) s_i (s_{j-1} ... s_{i+1})^-1,
    so beta_{1,3}^2 = s2 s1^2 s2^-1 is the standard pure generator. The closing band
    beta_{1,n} of a chain (n >= CLOSING_BAND_MIN_STRANDS) is the other conjugate,
    (s_2 ... s_{n-1})^-1 s_1 (s_2 ... s_{n-1}), which matches the twist about c_{2g+1}.
    """
    if n < 2:
        raise PreconditionError(f"{n} strands")
    if not 1 <= i < j <= n:
        raise PreconditionError(f"band ({i}, {j}) needs 1 <= i < j <= {n}")
    middle = BraidWord(strands=n, letters=tuple((k, 1) for k in range(i + 1, j)))
    core = BraidWord(strands=n, letters=((i, 1),))
    if i == 1 and j == n and n >= CLOSING_BAND_MIN_STRANDS:
        return middle.inverse() * core * middle
    descending = BraidWord(strands=n, letters=middle.letters[::-1])
    return descending * core * descending.inverse()


def commutator(x: BraidWord, y: BraidWord) -> BraidWord:
    """[x, y] = x y x^-1 y^-1."""
    return x * y * x.inverse() * y.inverse()


# ── symbol alphabet ──

def braid_symbols(n: int) -> tuple[str, ...]:
    return tuple(f"s{i}" for i in range(1, n)) + (BAND_SYMBOL,)


def braid_from_symbols(word: SymbolWord, n: int) -> BraidWord:
    letters = []
    for sym, e in word.letters:
        if sym == BAND_SYMBOL:
            letters.append((n, e))
        elif sym.startswith("s") and sym[1:].isdigit():
            letters.append((int(sym[1:]), e))
        else:
            raise PreconditionError(f"'{sym}' is not a braid symbol")
    return BraidWord(strands=n, letters=tuple(letters))


# ── Lonne's subgroup ──

def _check_parameters(g: int, n: int) -> None:
    if g < config.PARAMETER_BOUNDS["fiber_genus_min"]:
        raise PreconditionError(f"fiber genus {g} < 2")
    if n in (1, 2) or n < config.PARAMETER_BOUNDS["lonne_power_min"]:
        raise PreconditionError(f"exponent n={n} violates the hypothesis n not in {{1, 2}} (need n >= 3)")


def lonne_matrix(g: int, n: int) -> LonneMatrix:
    """m_ij = n for j = i +- 1 mod 2g+1, 0 otherwise."""
    _check_parameters(g, n)
    size = 2 * g + 1
    rows = tuple(tuple(n if (j - i) % size in (1, size - 1) else 0 for j in range(size))
                 for i in range(size))
    return LonneMatrix(genus=g, power=n, entries=rows)


def lonne_embedding(g: int, n: int) -> GroupMap:
    """A(C_{2g+1}bar) -> B_{2g+1}: v_i -> s_i^n, v_{2g+1} -> b^n."""
    _check_parameters(g, n)
    size = 2 * g + 1
    images = [((f"s{i}", n),) for i in range(1, size)] + [((BAND_SYMBOL, n),)]
    return GroupMap(name=f"lonne[g={g},n={n}]",
                    domain=tuple(f"v{i}" for i in range(1, size + 1)),
                    codomain=braid_symbols(size), images=tuple(images))


def lonne_generators(g: int, n: int) -> list[BraidWord]:
    """The generators beta_{i,j}^{m_ij} of B^M_{2g+1} as Artin words, v-order."""
    m = lonne_embedding(g, n)
    size = 2 * g + 1
    return [braid_from_symbols(SymbolWord(letters=m.image(v)), size).artin() for v in m.domain]


def check_lonne_relations(g: int, n: int) -> LonneRelationReport:
    """Which generator pairs commute in B_{2g+1}, against the edges of C_{2g+1}bar."""
    _check_parameters(g, n)
    size = 2 * g + 1
    gens = lonne_generators(g, n)
    cycle = LabeledGraph.cycle(size)
    pairs = []
    for i, j in combinations(range(1, size + 1), 2):
        commutes = is_trivial(commutator(gens[i - 1], gens[j - 1]))
        is_edge = not cycle.adjacent(f"v{i}", f"v{j}")
        pairs.append((i, j, commutes, is_edge))
    report = LonneRelationReport(genus=g, power=n, pairs=tuple(pairs))
    logger.info("lonne relations g=%d n=%d: %d commuting pairs, pattern %s",
                g, n, report.commuting_pairs, "matches" if report.matches else "differs")
    return report
