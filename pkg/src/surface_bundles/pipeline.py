"""The map pi_1(S_h) -> Mod(S_g) assembled from its recorded stages.

    pi_1(S_h) --cover--> pi_1(S_2) --reading--> A(C5bar)
              --relabel--> A(CObar(C_{2g+1}bar, S)) --Kim--> A(C_{2g+1}bar)
              --Lonne--> B_{2g+1} --Birman-Hilden--> Mod(S_g)

Relabelling fixes v1 v2 v3, sends v4 to the collapsed vertex vS and v5 to
v_{2g+1}. Every stage up to the braid group is a homomorphism; the last
one reverses letters, so twist images come out as left-order words.
"""
from __future__ import annotations

import logging
import threading

from cachetools import LRUCache, cached
from pydantic import BaseModel, ConfigDict

from surface_bundles import config
from surface_bundles.braid import braid_from_symbols, lonne_embedding
from surface_bundles.dissection import covering_pullback, load_default_record
from surface_bundles.enums import KimWordVariant
from surface_bundles.errors import PreconditionError
from surface_bundles.mcg import braid_to_twists
from surface_bundles.models import (
    BraidWord,
    GroupMap,
    LabeledGraph,
    LabelReadingRecord,
    RaagWord,
    SymbolWord,
    TwistWord,
)
from surface_bundles.raag import (
    COLLAPSED_VERTEX,
    co_contraction,
    compose_maps,
    kim_embedding,
    kim_subset,
    kim_word,
    normal_form,
    opposite_graph,
    relabel_map,
)

logger = logging.getLogger(__name__)

_FROZEN = ConfigDict(frozen=True, extra="forbid")


class Pipeline(BaseModel):
    """All stages for one (g, h, n, Kim word) choice."""

    model_config = _FROZEN

    genus: int
    base_genus: int
    power: int
    kim_variant: KimWordVariant
    record: LabelReadingRecord
    surface_to_raag: GroupMap        # pi_1(S_h) -> A(C5bar)
    raag_to_target: GroupMap         # A(C5bar) -> A(C_{2g+1}bar)
    target_to_braid: GroupMap        # A(C_{2g+1}bar) -> braid symbols
    target_graph: LabeledGraph

    def raag_image(self, word: SymbolWord) -> RaagWord:
        """Normal form in A(C5bar)."""
        return normal_form(self.surface_to_raag.apply(word), self.record.graph)

    def target_image(self, word: SymbolWord) -> RaagWord:
        """Normal form in A(C_{2g+1}bar), after Kim's embedding."""
        inner = self.raag_to_target.apply(self.surface_to_raag.apply(word))
        return normal_form(inner, self.target_graph)

    def braid_image(self, word: SymbolWord) -> BraidWord:
        raag = self.surface_to_raag.apply(word)
        braid = self.target_to_braid.apply(self.raag_to_target.apply(raag))
        return braid_from_symbols(braid, 2 * self.genus + 1)

    def twist_image(self, word: SymbolWord) -> TwistWord:
        return braid_to_twists(self.braid_image(word)).free_reduce()


def _relabel(genus: int, record_graph: LabeledGraph, target: LabeledGraph) -> GroupMap:
    top = f"v{2 * genus + 1}"
    mapping = {"v1": "v1", "v2": "v2", "v3": "v3", "v4": COLLAPSED_VERTEX, "v5": top}
    if tuple(mapping) != record_graph.vertices:
        raise PreconditionError(f"record graph {record_graph.vertices} is not v1..v5")
    contracted = co_contraction(target, kim_subset(genus))
    image_edges = {frozenset(mapping[v] for v in e) for e in record_graph.edges}
    if image_edges != contracted.edge_set:
        raise PreconditionError("relabelling is not an isomorphism onto the co-contraction")
    return relabel_map(f"relabel[g={genus}]", mapping, contracted.vertices)


@cached(LRUCache(maxsize=64), lock=threading.RLock())
def build_pipeline(genus: int, base_genus: int, power: int,
                   kim_variant: KimWordVariant | None = None) -> Pipeline:
    variant = kim_variant or KimWordVariant(config.KIM_WORD)
    record = load_default_record()
    target = opposite_graph(LabeledGraph.cycle(2 * genus + 1))

    to_raag = compose_maps(covering_pullback(base_genus), record.reading)
    relabel = _relabel(genus, record.graph, target)
    kim = kim_embedding(target, kim_subset(genus), kim_word(genus, variant))
    raag_to_target = compose_maps(relabel, kim)
    lonne = lonne_embedding(genus, power)
    logger.debug("pipeline g=%d h=%d n=%d kim=%s assembled", genus, base_genus, power, variant.value)
    return Pipeline(genus=genus, base_genus=base_genus, power=power, kim_variant=variant,
                    record=record, surface_to_raag=to_raag, raag_to_target=raag_to_target,
                    target_to_braid=lonne, target_graph=target)
