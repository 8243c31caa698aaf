"""Penner configurations: two multicurves, their intersections, a filling flag."""
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, model_validator

_FROZEN = ConfigDict(frozen=True, extra="forbid")


class PennerData(BaseModel):
    """A = curves twisted positively, B = curves twisted negatively.

    Curves are chain indices. `intersections` holds (a, b, i(a, b)) for
    a in A, b in B; curves inside A (or inside B) are pairwise disjoint by
    construction. `filling` may only be set together with the certificate
    text that justified it.
    """

    model_config = _FROZEN

    positive: tuple[int, ...]
    negative: tuple[int, ...]
    intersections: tuple[tuple[int, int, int], ...] = ()
    filling: bool = False
    certificate: str | None = None

    @model_validator(mode="after")
    def _disjoint_families(self) -> "PennerData":
        common = set(self.positive) & set(self.negative)
        if common:
            raise ValueError(f"curves {sorted(common)} are in both families")
        pos, neg = set(self.positive), set(self.negative)
        for a, b, count in self.intersections:
            if a not in pos or b not in neg:
                raise ValueError(f"intersection ({a}, {b}) must pair A with B")
            if count < 0:
                raise ValueError(f"intersection ({a}, {b}) is negative")
        if self.filling and not self.certificate:
            raise ValueError("filling flag set without a certificate")
        return self

    @property
    def curves(self) -> tuple[int, ...]:
        return tuple(sorted(self.positive + self.negative))

    def intersection(self, c: int, d: int) -> int:
        for a, b, count in self.intersections:
            if {a, b} == {c, d}:
                return count
        return 0


class PennerGrowth(BaseModel):
    """Integer growth certificate for a Penner word plus a float dilatation estimate.

    `power` is the exponent m at which every row of the update-matrix
    product's m-th power sums to at least 2, None when no such m was found.
    """

    model_config = _FROZEN

    certified: bool
    primitive: bool
    power: int | None = None
    lambda_estimate: float      # approximate
