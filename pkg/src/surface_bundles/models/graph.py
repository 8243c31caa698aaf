"""Finite simple graphs with an ordered vertex list.

The vertex order matters: it is the generator order for shortlex normal
forms, so two graphs with the same edges but listed differently give
different (equally canonical) normal forms.
"""
from __future__ import annotations

import networkx as nx
from pydantic import BaseModel, ConfigDict, PrivateAttr, model_validator

from surface_bundles.models.words import IDENTIFIER

_FROZEN = ConfigDict(frozen=True, extra="forbid")


class LabeledGraph(BaseModel):
    """Vertices in listed order plus unordered edges; no loops, no repeats."""

    model_config = _FROZEN

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...] = ()

    _neighbours: dict[str, frozenset[str]] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _simple_graph(self) -> "LabeledGraph":
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"repeated vertex in {self.vertices}")
        for v in self.vertices:
            if not IDENTIFIER.fullmatch(v):
                raise ValueError(f"vertex '{v}' is not an identifier")
        listed = set(self.vertices)
        seen: set[frozenset[str]] = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at '{u}'")
            if u not in listed or v not in listed:
                raise ValueError(f"edge ({u} {v}) has an endpoint outside the vertex list")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"repeated edge ({u} {v})")
            seen.add(key)
        return self

    @classmethod
    def build(cls, vertices: list[str] | tuple[str, ...], edges) -> "LabeledGraph":
        """Normalise edge orientation and order to the vertex order."""
        rank = {v: i for i, v in enumerate(vertices)}
        norm = sorted({tuple(sorted(e, key=lambda v: rank.get(v, len(rank)))) for e in edges},
                      key=lambda e: (rank.get(e[0], len(rank)), rank.get(e[1], len(rank))))
        return cls(vertices=tuple(vertices), edges=tuple(norm))

    @classmethod
    def cycle(cls, k: int, prefix: str = "v") -> "LabeledGraph":
        """C_k on v1..vk with edges {v_i, v_(i+1 mod k)}."""
        names = [f"{prefix}{i}" for i in range(1, k + 1)]
        return cls.build(names, [(names[i], names[(i + 1) % k]) for i in range(k)])

    @classmethod
    def from_networkx(cls, g: nx.Graph, order: list[str] | None = None) -> "LabeledGraph":
        return cls.build(list(order if order is not None else g.nodes), g.edges)

    def model_post_init(self, __context) -> None:
        nbrs: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._neighbours = {v: frozenset(s) for v, s in nbrs.items()}

    @property
    def edge_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(e) for e in self.edges)

    def neighbours(self, v: str) -> frozenset[str]:
        return self._neighbours[v]

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._neighbours.get(u, frozenset())

    def has_vertex(self, v: str) -> bool:
        return v in self._neighbours

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g
