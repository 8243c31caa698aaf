"""Recorded group maps: one image word per domain generator.

Images are kept as symbolic syllable tuples so one model covers every
stage of the pipeline (surface group, RAAGs, braid and twist alphabets).
An anti-homomorphism sends a product x*y to image(y)*image(x).
"""
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, PrivateAttr, model_validator

from surface_bundles.enums import MapOrder
from surface_bundles.errors import PreconditionError
from surface_bundles.models.words import SymbolWord, free_reduce_letters, invert_letters

_FROZEN = ConfigDict(frozen=True, extra="forbid")

Letters = tuple[tuple[str, int], ...]


class GroupMap(BaseModel):
    """Map from the free group on `domain` into words over `codomain`."""

    model_config = _FROZEN

    name: str
    domain: tuple[str, ...]
    codomain: tuple[str, ...]
    images: tuple[Letters, ...]
    order: MapOrder = MapOrder.HOMOMORPHISM

    _lookup: dict[str, Letters] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _one_image_per_generator(self) -> "GroupMap":
        if len(self.images) != len(self.domain):
            raise ValueError(f"map '{self.name}': {len(self.images)} images for {len(self.domain)} generators")
        if len(set(self.domain)) != len(self.domain):
            raise ValueError(f"map '{self.name}': repeated domain generator")
        alphabet = set(self.codomain)
        for gen, img in zip(self.domain, self.images):
            for sym, e in img:
                if sym not in alphabet:
                    raise ValueError(f"map '{self.name}': image of {gen} uses '{sym}' outside the codomain")
                if e == 0:
                    raise ValueError(f"map '{self.name}': image of {gen} has a zero exponent")
        return self

    def model_post_init(self, __context) -> None:
        self._lookup = dict(zip(self.domain, self.images))

    @classmethod
    def from_words(cls, name: str, domain, codomain, images, order: MapOrder = MapOrder.HOMOMORPHISM) -> "GroupMap":
        """Build from SymbolWord (or letter-tuple) images."""
        imgs = tuple(tuple(w.letters) if isinstance(w, SymbolWord) else tuple(w) for w in images)
        return cls(name=name, domain=tuple(domain), codomain=tuple(codomain), images=imgs, order=order)

    @classmethod
    def identity(cls, name: str, alphabet) -> "GroupMap":
        alphabet = tuple(alphabet)
        return cls(name=name, domain=alphabet, codomain=alphabet, images=tuple(((a, 1),) for a in alphabet))

    def image(self, gen: str) -> Letters:
        try:
            return self._lookup[gen]
        except KeyError:
            raise PreconditionError(f"map '{self.name}': unknown generator '{gen}'") from None

    def apply_letters(self, letters) -> Letters:
        """Image of a syllable sequence, free-reduced."""
        seq = tuple(letters)
        if self.order is MapOrder.ANTI_HOMOMORPHISM:
            seq = seq[::-1]
        out: list[tuple[str, int]] = []
        for gen, e in seq:
            img = self.image(gen)
            piece = img if e > 0 else invert_letters(img)
            out.extend(piece * abs(e))
        return free_reduce_letters(out)

    def apply(self, word: SymbolWord) -> SymbolWord:
        return SymbolWord(letters=self.apply_letters(word.letters))
