"""Bundle-level models: monodromy factorizations, reports, certificates.

House rules encoded here (not in prose):
- A factorization has exactly one pair per handle of the base surface.
- All words share the fiber genus and the reading order of the factorization.
- Verdict lines exist only when every cited sub-check passed.
"""
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from surface_bundles.enums import (
    CheckStatus,
    ProvenanceKind,
    VerificationLevel,
    WordOrder,
)
from surface_bundles.models.matrices import AbelianGroupInvariants
from surface_bundles.models.words import TwistWord

_FROZEN = ConfigDict(frozen=True, extra="forbid")

LEVEL_ORDER = (VerificationLevel.RAAG, VerificationLevel.BRAID, VerificationLevel.HOMOLOGY)


class Provenance(BaseModel):
    """Construction that produced a factorization, as ordered key=value params."""

    model_config = _FROZEN

    kind: ProvenanceKind = ProvenanceKind.MANUAL
    params: tuple[tuple[str, str], ...] = ()

    def get(self, key: str, default: str | None = None) -> str | None:
        return dict(self.params).get(key, default)

    def get_int(self, key: str) -> int:
        value = self.get(key)
        if value is None:
            raise KeyError(f"provenance has no '{key}'")
        return int(value)

    def __str__(self) -> str:
        return " ".join([self.kind.value] + [f"{k}={v}" for k, v in self.params])


class MonodromyFactorization(BaseModel):
    """Pairs (a_j, b_j) with prod_j [a_j, b_j] = 1 in the mapping class group."""

    model_config = _FROZEN

    fiber_genus: int = Field(ge=1)
    base_genus: int = Field(ge=1)
    pairs: tuple[tuple[TwistWord, TwistWord], ...]
    order: WordOrder = WordOrder.LEFT
    verified: tuple[VerificationLevel, ...] = ()
    provenance: Provenance = Provenance()

    @model_validator(mode="after")
    def _consistent_words(self) -> "MonodromyFactorization":
        if len(self.pairs) != self.base_genus:
            raise ValueError(f"{len(self.pairs)} pairs for base genus {self.base_genus}")
        for j, pair in enumerate(self.pairs, start=1):
            for w in pair:
                if w.genus != self.fiber_genus:
                    raise ValueError(f"pair {j}: word of genus {w.genus} in a genus-{self.fiber_genus} factorization")
                if w.order is not self.order:
                    raise ValueError(f"pair {j}: word read {w.order.value}, factorization read {self.order.value}")
        if len(set(self.verified)) != len(self.verified):
            raise ValueError("verification level listed twice")
        return self

    def words(self) -> list[TwistWord]:
        """The 2h monodromy words a_1, b_1, ..., a_h, b_h."""
        return [w for pair in self.pairs for w in pair]

    def as_order(self, order: WordOrder) -> "MonodromyFactorization":
        if order is self.order:
            return self
        pairs = tuple((a.as_order(order), b.as_order(order)) for a, b in self.pairs)
        return self.model_copy(update={"pairs": pairs, "order": order})

    def with_verified(self, *levels: VerificationLevel) -> "MonodromyFactorization":
        have = set(self.verified) | set(levels)
        return self.model_copy(update={"verified": tuple(lvl for lvl in LEVEL_ORDER if lvl in have)})


class VerificationReport(BaseModel):
    """Outcome of checking the relator at one level."""

    model_config = _FROZEN

    level: VerificationLevel
    passed: bool
    detail: str
    evidence: str | None = None     # offending normal form / matrix on failure


class TailReadings(BaseModel):
    """Braid-level outcome of both readings of the d1 image's closing twist."""

    model_config = _FROZEN

    factorization: MonodromyFactorization   # derived reading; provenance carries both outcomes
    derived: VerificationReport
    literal: VerificationReport

    @property
    def summary(self) -> str:
        return ",".join(f"{name}:{'pass' if r.passed else 'fail'}"
                        for name, r in (("derived", self.derived), ("literal", self.literal)))

    def failing(self) -> dict[str, VerificationReport]:
        return {name: r for name, r in (("derived", self.derived), ("literal", self.literal)) if not r.passed}


class CheckResult(BaseModel):
    """One sub-check of a certificate."""

    model_config = _FROZEN

    name: str
    status: CheckStatus
    evidence: str = ""


class CertificateReport(BaseModel):
    """Evidence for fiber-sum and section-sum indecomposability."""

    model_config = _FROZEN

    subject: str
    checks: tuple[CheckResult, ...]
    verdicts: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @model_validator(mode="after")
    def _verdicts_need_passing_checks(self) -> "CertificateReport":
        failed = [c.name for c in self.checks if c.status is CheckStatus.FAIL]
        if self.verdicts and failed:
            raise ValueError(f"verdicts emitted while checks failed: {failed}")
        return self

    @property
    def all_passed(self) -> bool:
        return all(c.status is not CheckStatus.FAIL for c in self.checks)


class SeparationReport(BaseModel):
    """Pairwise comparison of H1 of several total spaces."""

    model_config = _FROZEN

    labels: tuple[str, ...]
    groups: tuple[AbelianGroupInvariants, ...]
    distinct: tuple[tuple[int, int, bool], ...]

    @property
    def pairwise_distinct(self) -> bool:
        return all(d for _, _, d in self.distinct)
