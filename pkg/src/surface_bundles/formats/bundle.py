"""Factorization files.

    bundle v1
    fiber-genus 2
    base-genus 2
    order left
    pair 1: A = T2^-3 T1^3 | B = T4^3
    pair 2: A = ... | B = ...
    verified: raag homology
    provenance: xn g=2 h=2 n=3 pairing=g1g2-d1d2

Header lines come in this order. `verified:` lists levels or says `none`;
both trailing lines may be omitted on input (read as `none` and `manual`).
Output is byte-for-byte deterministic.
"""
from __future__ import annotations

import logging
import re
from pathlib import Path

from surface_bundles.enums import ProvenanceKind, VerificationLevel, WordOrder
from surface_bundles.errors import ParseError
from surface_bundles.formats.words import format_twist_word, parse_twist_word
from surface_bundles.models import MonodromyFactorization, Provenance

logger = logging.getLogger(__name__)

MAGIC = "bundle v1"
NONE = "none"

_HEADER = (
    ("fiber-genus", re.compile(r"fiber-genus\s+(\d+)")),
    ("base-genus", re.compile(r"base-genus\s+(\d+)")),
    ("order", re.compile(r"order\s+(left|right)")),
)
_PAIR = re.compile(r"pair\s+(?P<j>\d+):\s*A\s*=(?P<a>[^|]*)\|\s*B\s*=(?P<b>.*)")
_VERIFIED = re.compile(r"verified:(?P<rest>.*)")
_PROVENANCE = re.compile(r"provenance:\s*(?P<kind>\S+)(?P<rest>.*)")
_PARAM = re.compile(r"(?P<key>[A-Za-z0-9_]+)=(?P<value>\S+)")


def _parse_verified(text: str, no: int) -> tuple[VerificationLevel, ...]:
    tokens = text.split()
    if tokens == [NONE] or not tokens:
        return ()
    try:
        return tuple(VerificationLevel(t) for t in tokens)
    except ValueError:
        raise ParseError(f"unknown verification level in '{text.strip()}'", line=no) from None


def _parse_provenance(m: re.Match, no: int) -> Provenance:
    try:
        kind = ProvenanceKind(m.group("kind"))
    except ValueError:
        raise ParseError(f"unknown provenance kind '{m.group('kind')}'", line=no) from None
    params = []
    for token in m.group("rest").split():
        p = _PARAM.fullmatch(token)
        if p is None:
            raise ParseError(f"provenance parameter '{token}' is not key=value", line=no)
        params.append((p.group("key"), p.group("value")))
    return Provenance(kind=kind, params=tuple(params))


def parse_bundle(text: str) -> MonodromyFactorization:
    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines or lines[0][1] != MAGIC:
        raise ParseError(f"first line must be '{MAGIC}'", line=lines[0][0] if lines else 1)
    values: list[str] = []
    for (no, line), (key, pattern) in zip(lines[1:4], _HEADER):
        m = pattern.fullmatch(line)
        if m is None:
            raise ParseError(f"expected '{key} ...', got '{line}'", line=no)
        values.append(m.group(1))
    if len(values) < len(_HEADER):
        raise ParseError("truncated header", line=lines[-1][0])
    g, h, order = int(values[0]), int(values[1]), WordOrder(values[2])

    pairs = []
    verified: tuple[VerificationLevel, ...] = ()
    provenance = Provenance()
    trailer = False
    for no, line in lines[4:]:
        if (m := _PAIR.fullmatch(line)) is not None:
            if trailer:
                raise ParseError("pair line after the trailer", line=no)
            j = int(m.group("j"))
            if j != len(pairs) + 1:
                raise ParseError(f"pair {j} out of sequence, expected {len(pairs) + 1}", line=no)
            pairs.append((parse_twist_word(m.group("a").strip(), g, order, line=no),
                          parse_twist_word(m.group("b").strip(), g, order, line=no)))
        elif (m := _VERIFIED.fullmatch(line)) is not None:
            trailer = True
            verified = _parse_verified(m.group("rest"), no)
        elif (m := _PROVENANCE.fullmatch(line)) is not None:
            trailer = True
            provenance = _parse_provenance(m, no)
        else:
            raise ParseError(f"unrecognised line '{line}'", line=no)
    try:
        f = MonodromyFactorization(fiber_genus=g, base_genus=h, pairs=tuple(pairs), order=order,
                                   verified=verified, provenance=provenance)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    logger.debug("parsed bundle: g=%d h=%d, %d pairs, provenance %s", g, h, len(pairs), provenance)
    return f


def format_bundle(f: MonodromyFactorization) -> str:
    lines = [MAGIC, f"fiber-genus {f.fiber_genus}", f"base-genus {f.base_genus}", f"order {f.order.value}"]
    for j, (a, b) in enumerate(f.pairs, start=1):
        lines.append(f"pair {j}: A = {format_twist_word(a)} | B = {format_twist_word(b)}")
    lines.append("verified: " + (" ".join(lvl.value for lvl in f.verified) or NONE))
    lines.append(f"provenance: {f.provenance}")
    return "\n".join(lines) + "\n"


def read_bundle(path: str | Path) -> MonodromyFactorization:
    return parse_bundle(Path(path).read_text(encoding="utf-8"))


def write_bundle(f: MonodromyFactorization, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(format_bundle(f), encoding="utf-8")
    logger.info("wrote %s", path)
    return path
