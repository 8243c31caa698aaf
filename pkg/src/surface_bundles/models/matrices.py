"""Exact integer matrices and finitely generated abelian groups.

Entries are Python ints (arbitrary precision). Numeric work happens on
numpy object arrays, which keep Python-int arithmetic; the models are the
frozen, hashable exchange format between modules.
"""
from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

_FROZEN = ConfigDict(frozen=True, extra="forbid")


def chain_form(genus: int) -> np.ndarray:
    """Intersection form on [c_1]..[c_2g]: J[i][i+1] = 1, J[i+1][i] = -1."""
    size = 2 * genus
    j = np.zeros((size, size), dtype=object)
    for i in range(size - 1):
        j[i, i + 1] = 1
        j[i + 1, i] = -1
    return j


def identity_array(size: int) -> np.ndarray:
    a = np.zeros((size, size), dtype=object)
    for i in range(size):
        a[i, i] = 1
    return a


class IntMatrix(BaseModel):
    """rows x cols integer matrix, stored row-major."""

    model_config = _FROZEN

    rows: int = Field(ge=0)
    cols: int = Field(ge=0)
    entries: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _dimensions(self) -> "IntMatrix":
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for r, row in enumerate(self.entries):
            if len(row) != self.cols:
                raise ValueError(f"row {r} has {len(row)} entries, expected {self.cols}")
        return self

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [tuple(int(x) for x in row) for row in rows]
        return cls(rows=len(rows), cols=len(rows[0]) if rows else 0, entries=tuple(rows))

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "IntMatrix":
        r, c = arr.shape
        return cls(rows=r, cols=c, entries=tuple(tuple(int(x) for x in row) for row in arr))

    def to_array(self) -> np.ndarray:
        arr = np.zeros((self.rows, self.cols), dtype=object)
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                arr[i, j] = x
        return arr

    def transpose(self) -> "IntMatrix":
        return IntMatrix(rows=self.cols, cols=self.rows,
                         entries=tuple(zip(*self.entries)) if self.entries else ())

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            x == (1 if i == j else 0) for i, row in enumerate(self.entries) for j, x in enumerate(row))


class SpMatrix(IntMatrix):
    """Integer matrix preserving the chain intersection form: M^T J M = J."""

    genus: int = Field(ge=1)

    @model_validator(mode="after")
    def _symplectic(self) -> "SpMatrix":
        size = 2 * self.genus
        if self.rows != size or self.cols != size:
            raise ValueError(f"symplectic matrix for genus {self.genus} must be {size}x{size}")
        m = self.to_array()
        j = chain_form(self.genus)
        if not (m.T.dot(j).dot(m) == j).all():
            raise ValueError("matrix does not preserve the chain intersection form")
        return self

    @classmethod
    def from_symplectic_array(cls, arr: np.ndarray, genus: int) -> "SpMatrix":
        return cls(rows=arr.shape[0], cols=arr.shape[1], genus=genus,
                   entries=tuple(tuple(int(x) for x in row) for row in arr))


class AbelianGroupInvariants(BaseModel):
    """Z^free_rank plus Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... | d_t, all d_i >= 2."""

    model_config = _FROZEN

    free_rank: int = Field(ge=0)
    torsion: tuple[int, ...] = ()

    @model_validator(mode="after")
    def _divisibility_chain(self) -> "AbelianGroupInvariants":
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2 (units are dropped, zeros are free rank)")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"invariant factors {a} and {b} break the divisibility chain")
        return self

    def plus_free(self, r: int) -> "AbelianGroupInvariants":
        return self.model_copy(update={"free_rank": self.free_rank + r})

    def has_prime_power_factor(self, p: int) -> bool:
        """Some cyclic summand of order p^k (k >= 1) in the primary decomposition."""
        return any(d % p == 0 for d in self.torsion)

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " (+) ".join(parts) if parts else "0"
