"""Word syntaxes.

    symbol word   v1^-1 v2 v5         generators are identifiers
    twist word    T2^-3 T1^3          T<k> or T<k>^<e>, k a chain index
    braid word    s1 s2^-1 b^3        s<i>^<e>, b = closing band beta_{1,n}

Tokens are separated by whitespace; the empty word is written `1`.
"""
from __future__ import annotations

import re

from surface_bundles.enums import WordOrder
from surface_bundles.errors import ParseError
from surface_bundles.models import BraidWord, SymbolWord, TwistWord

EMPTY = "1"

_SYMBOL = re.compile(r"(?P<gen>[A-Za-z][A-Za-z0-9_]*)(?:\^(?P<exp>[+-]?\d+))?")
_TWIST = re.compile(r"T(?P<idx>\d+)(?:\^(?P<exp>[+-]?\d+))?")
_BRAID = re.compile(r"(?:s(?P<idx>\d+)|(?P<band>b))(?:\^(?P<exp>[+-]?\d+))?")


def _tokens(text: str) -> list[str]:
    tokens = text.split()
    return [] if tokens == [EMPTY] else tokens


def _exponent(m: re.Match, token: str, line: int | None) -> int:
    e = int(m.group("exp")) if m.group("exp") is not None else 1
    if e == 0:
        raise ParseError(f"token '{token}' has exponent 0", line=line)
    return e


def _format_exp(e: int) -> str:
    return "" if e == 1 else f"^{e}"


def parse_symbol_word(text: str, cls: type[SymbolWord] = SymbolWord, *, line: int | None = None) -> SymbolWord:
    letters = []
    for token in _tokens(text):
        m = _SYMBOL.fullmatch(token)
        if m is None:
            raise ParseError(f"bad generator token '{token}'", line=line)
        letters.append((m.group("gen"), _exponent(m, token, line)))
    return cls(letters=tuple(letters))


def format_symbol_word(w: SymbolWord) -> str:
    return " ".join(f"{gen}{_format_exp(e)}" for gen, e in w.letters) or EMPTY


def parse_twist_word(text: str, genus: int, order: WordOrder = WordOrder.LEFT, *,
                     line: int | None = None) -> TwistWord:
    top = 2 * genus + 1
    letters = []
    for token in _tokens(text):
        m = _TWIST.fullmatch(token)
        if m is None:
            raise ParseError(f"bad twist token '{token}'", line=line)
        k = int(m.group("idx"))
        if not 1 <= k <= top:
            raise ParseError(f"twist index {k} outside 1..{top} for genus {genus}", line=line)
        letters.append((k, _exponent(m, token, line)))
    return TwistWord(genus=genus, letters=tuple(letters), order=order)


def format_twist_word(w: TwistWord) -> str:
    return " ".join(f"T{k}{_format_exp(e)}" for k, e in w.letters) or EMPTY


def parse_braid_word(text: str, strands: int, *, line: int | None = None) -> BraidWord:
    letters = []
    for token in _tokens(text):
        m = _BRAID.fullmatch(token)
        if m is None:
            raise ParseError(f"bad braid token '{token}'", line=line)
        i = strands if m.group("band") else int(m.group("idx"))
        if not 1 <= i < strands and not (m.group("band") and i == strands):
            raise ParseError(f"braid index {i} outside 1..{strands - 1}", line=line)
        letters.append((i, _exponent(m, token, line)))
    return BraidWord(strands=strands, letters=tuple(letters))


def format_braid_word(w: BraidWord) -> str:
    return " ".join(("b" if i == w.strands else f"s{i}") + _format_exp(e) for i, e in w.letters) or EMPTY


_BRAID_HEADER = re.compile(r"braid\s+n=(?P<n>\d+)")
_TWIST_HEADER = re.compile(r"twist\s+g=(?P<g>\d+)(?:\s+order=(?P<order>left|right))?")


def parse_braid_text(text: str) -> BraidWord:
    """`braid n=<n>` header line, then the word (possibly over several lines)."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or (m := _BRAID_HEADER.fullmatch(lines[0])) is None:
        raise ParseError("missing 'braid n=<n>' header", line=1)
    n = int(m.group("n"))
    if n < 2:
        raise ParseError(f"strand count {n} < 2", line=1)
    return parse_braid_word(" ".join(lines[1:]) or EMPTY, n, line=2)


def format_braid_text(w: BraidWord) -> str:
    return f"braid n={w.strands}\n{format_braid_word(w)}\n"


def parse_twist_text(text: str) -> TwistWord:
    """`twist g=<g> order=<left|right>` header line, then the word."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or (m := _TWIST_HEADER.fullmatch(lines[0])) is None:
        raise ParseError("missing 'twist g=<g> order=<left|right>' header", line=1)
    order = WordOrder(m.group("order") or WordOrder.LEFT.value)
    return parse_twist_word(" ".join(lines[1:]) or EMPTY, int(m.group("g")), order, line=2)


def format_twist_text(w: TwistWord) -> str:
    return f"twist g={w.genus} order={w.order.value}\n{format_twist_word(w)}\n"
