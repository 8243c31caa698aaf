"""Word models: RAAG, surface-group, braid and Dehn-twist words.

A word is a tuple of syllables `(generator, exponent)` with non-zero
exponents. Raw words may be unreduced; `free_reduce()` merges neighbouring
syllables of the same generator and drops the ones that cancel.

House rules encoded here:
- Words are values: frozen, hashable, safe to hand between threads.
- Products only combine words over the same alphabet (strand count,
  genus, reading order); mixing raises instead of silently reindexing.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Iterator
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from surface_bundles.enums import WordOrder

_FROZEN = ConfigDict(frozen=True, extra="forbid")

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def free_reduce_letters(letters: Iterable[tuple]) -> tuple:
    """Merge adjacent syllables on the same generator; drop zero exponents."""
    out: list[tuple] = []
    for gen, e in letters:
        if not e:
            continue
        if out and out[-1][0] == gen:
            total = out[-1][1] + e
            out.pop()
            if total:
                out.append((gen, total))
        else:
            out.append((gen, e))
    return tuple(out)


def invert_letters(letters: Iterable[tuple]) -> tuple:
    return tuple((gen, -e) for gen, e in reversed(tuple(letters)))


class _SyllableOps:
    """Operations shared by every word model (all of them have `letters`)."""

    def _check_compatible(self, other: Self) -> None:  # overridden where alphabets carry data
        if type(other) is not type(self):
            raise TypeError(f"cannot multiply {type(self).__name__} by {type(other).__name__}")

    def _with(self, letters: Iterable[tuple]) -> Self:
        return self.model_copy(update={"letters": tuple(letters)})  # type: ignore[attr-defined]

    @property
    def length(self) -> int:
        """Number of unit letters (sum of |exponent|)."""
        return sum(abs(e) for _, e in self.letters)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def generators(self) -> tuple:
        """Generator sequence with exponents stripped."""
        return tuple(gen for gen, _ in self.letters)

    def unit_letters(self) -> Iterator[tuple]:
        """Expand to syllables of exponent +1 or -1."""
        for gen, e in self.letters:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield gen, step

    def inverse(self) -> Self:
        return self._with(invert_letters(self.letters))

    def free_reduce(self) -> Self:
        return self._with(free_reduce_letters(self.letters))

    def reversed_letters(self) -> Self:
        """Same syllables in reverse order (not the inverse)."""
        return self._with(reversed(self.letters))

    def __mul__(self, other: Self) -> Self:
        self._check_compatible(other)
        return self._with(self.letters + other.letters)

    def __pow__(self, k: int) -> Self:
        base = self if k >= 0 else self.inverse()
        return self._with(base.letters * abs(k))


class SymbolWord(_SyllableOps, BaseModel):
    """Word over named generators, e.g. `v1^-1 v2` or `g2^-1 d1 g1^-1`."""

    model_config = _FROZEN

    letters: tuple[tuple[str, int], ...] = ()

    @model_validator(mode="after")
    def _well_formed(self) -> "SymbolWord":
        for gen, e in self.letters:
            if not IDENTIFIER.fullmatch(gen):
                raise ValueError(f"generator '{gen}' is not an identifier")
            if e == 0:
                raise ValueError(f"generator '{gen}' carries exponent 0")
        return self

    @classmethod
    def of(cls, *letters: tuple[str, int] | str) -> Self:
        """`RaagWord.of("v1", ("v2", -1))`; bare names mean exponent 1."""
        return cls(letters=tuple((x, 1) if isinstance(x, str) else x for x in letters))


class RaagWord(SymbolWord):
    """Word in a right-angled Artin group; generators are graph vertices."""


class SurfaceWord(SymbolWord):
    """Word in the surface-group generators g1, g2, d1, d2, ... (gamma/delta)."""


class BraidWord(_SyllableOps, BaseModel):
    """Braid word on `strands` strands, read left to right.

    Index i in 1..n-1 is the Artin generator sigma_i. Index n is the closing
    band generator beta_{1,n}; `artin()` rewrites it into sigma letters.
    """

    model_config = _FROZEN

    strands: int = Field(ge=2)
    letters: tuple[tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _indices_in_range(self) -> "BraidWord":
        for i, e in self.letters:
            if not 1 <= i <= self.strands:
                raise ValueError(f"braid index {i} outside 1..{self.strands} for {self.strands} strands")
            if e == 0:
                raise ValueError(f"braid letter s{i} carries exponent 0")
        return self

    def _check_compatible(self, other: Self) -> None:
        super()._check_compatible(other)
        if other.strands != self.strands:
            raise ValueError(f"strand counts differ: {self.strands} vs {other.strands}")

    @property
    def has_band_letters(self) -> bool:
        return any(i == self.strands for i, _ in self.letters)

    def artin(self) -> "BraidWord":
        """Rewrite closing-band letters as conjugates of sigma_1."""
        if not self.has_band_letters:
            return self
        from surface_bundles.braid import band_to_artin  # local: braid imports this module

        band = band_to_artin(1, self.strands, self.strands)
        out: list[tuple[int, int]] = []
        for i, e in self.letters:
            if i == self.strands:
                out.extend((band ** e).letters)
            else:
                out.append((i, e))
        return self._with(free_reduce_letters(out))

    def signed_letters(self) -> list[int]:
        """Artin unit letters as signed indices (+i for sigma_i, -i for its inverse)."""
        word = self.artin()
        return [i * e for i, e in word.unit_letters()]

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands=strands)


class TwistWord(_SyllableOps, BaseModel):
    """Word in Dehn twists along the chain c_1 .. c_{2g+1} of a genus-g surface."""

    model_config = _FROZEN

    genus: int = Field(ge=1)
    letters: tuple[tuple[int, int], ...] = ()
    order: WordOrder = WordOrder.LEFT

    @model_validator(mode="after")
    def _indices_in_range(self) -> "TwistWord":
        top = 2 * self.genus + 1
        for k, e in self.letters:
            if not 1 <= k <= top:
                raise ValueError(f"twist index {k} outside 1..{top} for genus {self.genus}")
            if e == 0:
                raise ValueError(f"twist letter T{k} carries exponent 0")
        return self

    def _check_compatible(self, other: Self) -> None:
        super()._check_compatible(other)
        if other.genus != self.genus:
            raise ValueError(f"genus differs: {self.genus} vs {other.genus}")
        if other.order is not self.order:
            raise ValueError(f"reading order differs: {self.order.value} vs {other.order.value}")

    def as_order(self, order: WordOrder) -> "TwistWord":
        """The same mapping class written in the other reading convention."""
        if order is self.order:
            return self
        return self.reversed_letters().model_copy(update={"order": order})

    def indices(self) -> frozenset[int]:
        return frozenset(k for k, _ in self.letters)

    def conjugate(self, by: "TwistWord") -> "TwistWord":
        """`by * self * by^-1`, free-reduced."""
        return (by * self * by.inverse()).free_reduce()

    @classmethod
    def identity(cls, genus: int, order: WordOrder = WordOrder.LEFT) -> "TwistWord":
        return cls(genus=genus, order=order)
