"""Curve systems on surfaces: dissections and loops read against them.

A curve lists the crossings it meets, in order, each with a transverse
sign: +1 when the other curve crosses it from right to left (local
intersection number +1), -1 otherwise. The two passages through a crossing
therefore carry opposite signs. Faces are optional declared data; the
dissection module traces the true faces from the crossing signs and
compares.
"""
from __future__ import annotations

from collections import Counter

from pydantic import BaseModel, ConfigDict, Field, model_validator

from surface_bundles.models.graph import LabeledGraph
from surface_bundles.models.maps import GroupMap
from surface_bundles.models.words import IDENTIFIER, SurfaceWord

_FROZEN = ConfigDict(frozen=True, extra="forbid")

Corner = tuple[str, int]      # (curve label, +1 / -1)


def _check_sign(sign: int, where: str) -> None:
    if sign not in (1, -1):
        raise ValueError(f"{where}: sign must be +1 or -1, got {sign}")


class Curve(BaseModel):
    """One labelled, oriented simple closed curve."""

    model_config = _FROZEN

    label: str
    crossings: tuple[tuple[str, int], ...] = ()

    @model_validator(mode="after")
    def _signed_crossings(self) -> "Curve":
        if not IDENTIFIER.fullmatch(self.label):
            raise ValueError(f"curve label '{self.label}' is not an identifier")
        for x, s in self.crossings:
            _check_sign(s, f"curve {self.label} at {x}")
        return self


class Dissection(BaseModel):
    """Gamma-dissection candidate: graph, curves, declared faces, genus."""

    model_config = _FROZEN

    graph: LabeledGraph
    genus: int = Field(ge=0)
    curves: tuple[Curve, ...]
    faces: tuple[tuple[Corner, ...], ...] | None = None

    @model_validator(mode="after")
    def _face_signs(self) -> "Dissection":
        for f in self.faces or ():
            for label, s in f:
                _check_sign(s, f"face corner {label}")
        return self

    @property
    def crossings(self) -> frozenset[str]:
        return frozenset(x for c in self.curves for x, _ in c.crossings)

    def passage_counts(self) -> Counter:
        return Counter(x for c in self.curves for x, _ in c.crossings)


class SurfaceLoop(BaseModel):
    """A loop recorded by the curves it crosses, in order, with directions."""

    model_config = _FROZEN

    crossings: tuple[Corner, ...] = ()

    @model_validator(mode="after")
    def _signs(self) -> "SurfaceLoop":
        for label, s in self.crossings:
            _check_sign(s, f"loop crossing {label}")
        return self


class LabelReadingRecord(BaseModel):
    """A recorded label-reading homomorphism pi_1(S) -> A(graph).

    `witness_loop` is a loop whose image is used as the pseudo-Anosov
    witness once pushed through the rest of the pipeline.
    """

    model_config = _FROZEN

    name: str
    graph: LabeledGraph
    reading: GroupMap
    witness_loop: SurfaceWord = SurfaceWord()

    @model_validator(mode="after")
    def _codomain_is_graph(self) -> "LabelReadingRecord":
        if tuple(self.reading.codomain) != self.graph.vertices:
            raise ValueError(f"record '{self.name}': codomain {self.reading.codomain} is not the vertex list")
        unknown = sorted({g for g, _ in self.witness_loop.letters} - set(self.reading.domain))
        if unknown:
            raise ValueError(f"record '{self.name}': witness loop uses unknown generators {unknown}")
        return self
