"""Braid-side value types: Garside normal forms and Lonne exponent matrices."""
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from surface_bundles import permutations as perms

_FROZEN = ConfigDict(frozen=True, extra="forbid")


class GarsideForm(BaseModel):
    """Delta^infimum * factors[0] * ... * factors[-1], left-weighted.

    Each factor is a permutation standing for its simple braid; none is the
    identity or Delta, and each consecutive pair (a, b) satisfies
    left_descents(b) <= right_descents(a).
    """

    model_config = _FROZEN

    strands: int = Field(ge=2)
    infimum: int = 0
    factors: tuple[tuple[int, ...], ...] = ()

    @model_validator(mode="after")
    def _left_weighted(self) -> "GarsideForm":
        n = self.strands
        top, one = perms.half_twist(n), perms.identity(n)
        for f in self.factors:
            if len(f) != n or not perms.is_permutation(f):
                raise ValueError(f"factor {f} is not a permutation of {n} strands")
            if f in (top, one):
                raise ValueError(f"factor {f} is trivial or Delta")
        for a, b in zip(self.factors, self.factors[1:]):
            if not perms.left_descents(b) <= perms.right_descents(a):
                raise ValueError(f"factors {a}, {b} are not left-weighted")
        return self

    @property
    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def is_central_power(self) -> bool:
        """True iff the braid is a power of Delta^2 (the centre of B_n)."""
        return not self.factors and self.infimum % 2 == 0

    def __str__(self) -> str:
        body = " . ".join("[" + " ".join(f"s{i}" for i in perms.to_artin(f)) + "]"
                          for f in self.factors)
        head = f"D^{self.infimum}"
        return f"{head} . {body}" if body else head


class LonneMatrix(BaseModel):
    """Cyclic exponent matrix m_ij = n for j = i +- 1 mod 2g+1, else 0."""

    model_config = _FROZEN

    genus: int = Field(ge=2)
    power: int
    entries: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _cyclic_pattern(self) -> "LonneMatrix":
        if self.power in (1, 2) or self.power < 1:
            raise ValueError(f"exponent {self.power} violates the hypothesis n not in {{1, 2}}")
        size = 2 * self.genus + 1
        if len(self.entries) != size or any(len(r) != size for r in self.entries):
            raise ValueError(f"matrix must be {size}x{size}")
        for i in range(size):
            for j in range(size):
                want = self.power if (j - i) % size in (1, size - 1) else 0
                if self.entries[i][j] != want:
                    raise ValueError(f"entry ({i + 1},{j + 1}) is {self.entries[i][j]}, expected {want}")
        return self

    @property
    def size(self) -> int:
        return 2 * self.genus + 1

    def entry(self, i: int, j: int) -> int:
        """1-based access, matching m_ij."""
        return self.entries[i - 1][j - 1]


class LonneRelationReport(BaseModel):
    """Commutation pattern of the generators of B^M_(2g+1) inside B_(2g+1).

    `pairs` holds (i, j, commutes, is_edge) for 1 <= i < j <= 2g+1, where
    is_edge says whether v_i v_j is an edge of the complement of C_(2g+1).
    """

    model_config = _FROZEN

    genus: int = Field(ge=2)
    power: int
    pairs: tuple[tuple[int, int, bool, bool], ...]

    @property
    def matches(self) -> bool:
        return all(commutes == is_edge for _, _, commutes, is_edge in self.pairs)

    @property
    def commuting_pairs(self) -> int:
        return sum(1 for _, _, commutes, _ in self.pairs if commutes)

    def mismatches(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, commutes, is_edge in self.pairs if commutes != is_edge]
