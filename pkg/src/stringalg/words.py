"""Syllables and words: the raw material of walks in a quiver.

A word is printed left to right with the rightmost syllable acting first.
Inverse syllables carry a trailing apostrophe (``b'``).  Length-zero words
are the lazy paths, written ``1(v,+)`` and ``1(v,-)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True)
class Syllable:
    arrow: str
    direct: bool = True

    def inverse(self) -> "Syllable":
        return Syllable(self.arrow, not self.direct)

    def literal(self) -> str:
        return self.arrow if self.direct else self.arrow + "'"

    def sort_key(self):
        # direct before inverse, then arrow id
        return (0 if self.direct else 1, self.arrow)


@dataclass(frozen=True)
class Word:
    syllables: tuple[Syllable, ...] = ()
    vertex: str | None = None
    sign: int = 0

    def __post_init__(self):
        if self.vertex is None:
            if not self.syllables:
                raise ValueError("empty word; use Word.lazy(vertex, sign)")
            if self.sign != 0:
                raise ValueError("sign is reserved for lazy words")
        else:
            if self.syllables:
                raise ValueError("lazy word cannot carry syllables")
            if self.sign not in (1, -1):
                raise ValueError("lazy sign must be +1 or -1")

    @staticmethod
    def lazy(vertex: str, sign: int) -> "Word":
        return Word((), vertex, sign)

    @staticmethod
    def of(syllables) -> "Word":
        return Word(tuple(syllables))

    @property
    def is_lazy(self) -> bool:
        return self.vertex is not None

    def __len__(self) -> int:
        return len(self.syllables)

    def literal(self) -> str:
        if self.is_lazy:
            return f"1({self.vertex},{'+' if self.sign == 1 else '-'})"
        return " ".join(s.literal() for s in self.syllables)

    def __str__(self) -> str:
        return self.literal()


def invert_word(w: Word) -> Word:
    if w.is_lazy:
        return Word.lazy(w.vertex, -w.sign)
    return Word.of(tuple(s.inverse() for s in reversed(w.syllables)))


def word_sort_key(w: Word):
    """Total order on words: lazies first, then by length and syllable keys."""
    if w.is_lazy:
        return (0, 0, w.vertex, 0 if w.sign == 1 else 1, ())
    return (1, len(w.syllables), "", 0, tuple(s.sort_key() for s in w.syllables))


_LAZY_RE = re.compile(r"^1\(([^\s,()']+),([+-])\)$")
_SYL_RE = re.compile(r"^([^\s,()']+)(')?$")


def parse_word(text: str) -> Word:
    """Parse a word literal: space-separated syllables or a lazy path."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty word literal")
    if len(tokens) == 1:
        m = _LAZY_RE.match(tokens[0])
        if m:
            return Word.lazy(m.group(1), 1 if m.group(2) == "+" else -1)
    syllables = []
    for tok in tokens:
        m = _SYL_RE.match(tok)
        if not m:
            raise ValueError(f"bad syllable literal: {tok!r}")
        syllables.append(Syllable(m.group(1), m.group(2) != "'"))
    return Word.of(syllables)


def word_to_json(w: Word) -> dict:
    if w.is_lazy:
        return {"kind": "lazy", "vertex": w.vertex, "sign": w.sign}
    return {
        "kind": "syllables",
        "syllables": [{"arrow": s.arrow, "direct": s.direct} for s in w.syllables],
    }


def word_from_json(data: dict) -> Word:
    if data["kind"] == "lazy":
        return Word.lazy(data["vertex"], data["sign"])
    return Word.of(Syllable(s["arrow"], s["direct"]) for s in data["syllables"])
