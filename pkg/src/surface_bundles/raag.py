"""Right-angled Artin group calculus.

Pipeline position:

    A(C5bar) --relabel--> A(CObar(C_{2g+1}bar, S)) --Kim--> A(C_{2g+1}bar)

Normal forms use the piling representation: one pile per vertex; pushing
x^e puts e on x's pile and a separator (0) on the pile of every vertex
that does not commute with x, and a letter cancels when the top of its
pile is the opposite sign. Reading the piles back, always taking the
smallest vertex whose pile starts with a letter, yields the shortlex-least
word among all commutation shuffles of the reduced word.
"""
from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable

import networkx as nx

from surface_bundles import config
from surface_bundles.enums import KimWordVariant, MapOrder
from surface_bundles.errors import PreconditionError
from surface_bundles.models import GroupMap, LabeledGraph, RaagWord, SymbolWord
from surface_bundles.models.words import free_reduce_letters

logger = logging.getLogger(__name__)

COLLAPSED_VERTEX = "vS"


# ── graphs ──

def opposite_graph(g: LabeledGraph) -> LabeledGraph:
    """Same vertices; a pair is an edge iff it is not an edge of g."""
    comp = nx.complement(g.to_networkx())
    return LabeledGraph.from_networkx(comp, order=list(g.vertices))


def is_anti_connected(g: LabeledGraph, s: Iterable[str]) -> bool:
    """Induced subgraph of s in the opposite graph is connected."""
    s = list(s)
    if not s:
        return False
    return nx.is_connected(opposite_graph(g).to_networkx().subgraph(s))


def _require_subset(g: LabeledGraph, s: Iterable[str]) -> list[str]:
    s = list(dict.fromkeys(s))
    if not s:
        raise PreconditionError("vertex subset is empty")
    missing = [v for v in s if not g.has_vertex(v)]
    if missing:
        raise PreconditionError(f"vertices {missing} are not in the graph")
    return s


def co_contraction(g: LabeledGraph, s: Iterable[str], name: str = COLLAPSED_VERTEX) -> LabeledGraph:
    """opposite(contract(opposite(g), s)) with s collapsed to `name`.

    The collapsed vertex takes the position of the first listed vertex of s;
    loops and repeated edges from the contraction are dropped.
    """
    s = _require_subset(g, s)
    if not is_anti_connected(g, s):
        raise PreconditionError(f"{s} is not anti-connected")
    if name in g.vertices and name not in s:
        raise PreconditionError(f"collapsed vertex name '{name}' already used")

    opp = opposite_graph(g).to_networkx()
    keep = s[0]
    for v in s[1:]:
        opp = nx.contracted_nodes(opp, keep, v, self_loops=False)
    opp = nx.relabel_nodes(opp, {keep: name})

    members = set(s)
    order: list[str] = []
    for v in g.vertices:
        if v not in members:
            order.append(v)
        elif name not in order:
            order.append(name)
    contracted = LabeledGraph.from_networkx(nx.Graph(opp), order=order)
    logger.debug("co-contracted %s in %d-vertex graph -> %s", s, len(g.vertices), order)
    return opposite_graph(contracted)


def defining_relators(g: LabeledGraph) -> list[RaagWord]:
    """[u, v] = u v u^-1 v^-1 for every edge."""
    return [RaagWord(letters=((u, 1), (v, 1), (u, -1), (v, -1))) for u, v in g.edges]


# ── word problem ──

def _check_letters(word: SymbolWord, g: LabeledGraph) -> None:
    for v, _ in word.letters:
        if not g.has_vertex(v):
            raise PreconditionError(f"letter '{v}' is not a vertex of the graph")


def _pile(word: SymbolWord, g: LabeledGraph) -> dict[str, deque]:
    blockers = {v: [u for u in g.vertices if u != v and not g.adjacent(u, v)] for v in g.vertices}
    piles: dict[str, deque] = {v: deque() for v in g.vertices}
    for v, e in word.unit_letters():
        pile = piles[v]
        if pile and pile[-1] == -e:
            pile.pop()
            for u in blockers[v]:
                piles[u].pop()
        else:
            pile.append(e)
            for u in blockers[v]:
                piles[u].append(0)
    return piles


def _depile(piles: dict[str, deque], g: LabeledGraph) -> list[tuple[str, int]]:
    blockers = {v: [u for u in g.vertices if u != v and not g.adjacent(u, v)] for v in g.vertices}
    out: list[tuple[str, int]] = []
    while True:
        v = next((u for u in g.vertices if piles[u] and piles[u][0]), None)
        if v is None:
            break
        out.append((v, piles[v].popleft()))
        for u in blockers[v]:
            piles[u].popleft()
    return out


def normal_form(w: SymbolWord, g: LabeledGraph) -> RaagWord:
    """Reduced, shortlex-least representative (vertex order = listed order)."""
    _check_letters(w, g)
    letters = _depile(_pile(w, g), g)
    return RaagWord(letters=free_reduce_letters(letters))


def raag_equal(w1: SymbolWord, w2: SymbolWord, g: LabeledGraph) -> bool:
    """Word problem: w1 w2^-1 has empty normal form."""
    _check_letters(w2, g)
    return normal_form(RaagWord(letters=w1.letters + w2.inverse().letters), g).is_empty


def is_trivial(w: SymbolWord, g: LabeledGraph) -> bool:
    return normal_form(w, g).is_empty


# ── Kim's embedding ──

def check_kim_condition(g: LabeledGraph, s: Iterable[str], w: SymbolWord) -> bool:
    """Every ordered pair (u, v) of s is joined by a path of the anti-graph on s
    whose vertex sequence is a subsequence of the generators of w."""
    s = _require_subset(g, s)
    if not is_anti_connected(g, s):
        raise PreconditionError(f"{s} is not anti-connected")
    outside = sorted({v for v, _ in w.letters} - set(s))
    if outside:
        raise PreconditionError(f"word uses letters {outside} outside {s}")

    sequence = w.generators()
    anti = opposite_graph(g).to_networkx().subgraph(s)

    def _subsequence(path: list[str]) -> bool:
        it = iter(sequence)
        return all(any(x == p for x in it) for p in path)

    for u in s:
        for v in s:
            if u == v:
                continue
            if not any(_subsequence(p) for p in nx.all_simple_paths(anti, u, v)):
                logger.debug("kim condition fails for pair (%s, %s)", u, v)
                return False
    return True


def kim_word(genus: int, variant: KimWordVariant | str | None = None) -> RaagWord:
    """v4 v5^-1 v6 ... v_{2g} ... v6 v5^-1 v4 (even index +1, odd index -1).

    At genus 2 the word degenerates; `variant` picks v4 or v4^2.
    """
    if genus < 2:
        raise PreconditionError(f"fiber genus {genus} < 2")
    variant = KimWordVariant(variant or config.KIM_WORD)
    if genus == 2:
        return RaagWord(letters=(("v4", 2 if variant is KimWordVariant.SQUARED else 1),))
    up = [(f"v{i}", 1 if i % 2 == 0 else -1) for i in range(4, 2 * genus + 1)]
    return RaagWord(letters=tuple(up + up[-2::-1]))


def kim_subset(genus: int) -> list[str]:
    """S = {v4, ..., v_{2g}} in C_{2g+1}bar."""
    return [f"v{i}" for i in range(4, 2 * genus + 1)]


def kim_embedding(g: LabeledGraph, s: Iterable[str], w: SymbolWord,
                  name: str = COLLAPSED_VERTEX) -> GroupMap:
    """A(CObar(g, s)) -> A(g): v_S -> w, every other vertex fixed."""
    s = _require_subset(g, s)
    if not check_kim_condition(g, s, w):
        raise PreconditionError(f"Kim condition fails for S={s} and w={format_symbols(w)}")
    domain_graph = co_contraction(g, s, name=name)
    images = [w.letters if v == name else ((v, 1),) for v in domain_graph.vertices]
    return GroupMap.from_words(f"kim[{format_symbols(w)}]", domain_graph.vertices, g.vertices,
                               images, order=MapOrder.HOMOMORPHISM)


def compose_maps(f: GroupMap, g: GroupMap) -> GroupMap:
    """Apply f, then g (generator-wise substitution of f's images into g)."""
    if set(f.codomain) != set(g.domain):
        raise PreconditionError(f"codomain of '{f.name}' does not match domain of '{g.name}'")
    anti = (f.order is MapOrder.ANTI_HOMOMORPHISM) != (g.order is MapOrder.ANTI_HOMOMORPHISM)
    images = [g.apply_letters(f.image(x)) for x in f.domain]
    return GroupMap(name=f"{g.name}.{f.name}", domain=f.domain, codomain=g.codomain,
                    images=tuple(images),
                    order=MapOrder.ANTI_HOMOMORPHISM if anti else MapOrder.HOMOMORPHISM)


def relabel_map(name: str, mapping: dict[str, str], codomain: Iterable[str]) -> GroupMap:
    """Generator renaming, e.g. A(C5bar) -> A(CObar) with v4 -> vS."""
    return GroupMap(name=name, domain=tuple(mapping), codomain=tuple(codomain),
                    images=tuple(((mapping[v], 1),) for v in mapping))


def map_sends_relators_to_identity(m: GroupMap, relators: Iterable[SymbolWord], target: LabeledGraph) -> bool:
    """Every relator's image has empty normal form in A(target)."""
    return all(is_trivial(m.apply(r), target) for r in relators)


def format_symbols(w: SymbolWord) -> str:
    return " ".join(v if e == 1 else f"{v}^{e}" for v, e in w.letters) or "1"
