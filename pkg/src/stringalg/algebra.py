"""The string algebra context: validity of words, concatenation, enumeration.

All operations are pure; a :class:`StringAlgebra` is immutable after
construction and carries a cache for derived catalogs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InternalInvariantError,
    NotAString,
    NotAStringAlgebra,
    NotComposable,
)
from .presentation import (
    QuiverPresentation,
    derive_signs,
    relation_walk_automaton,
    validate_string_algebra,
)
from .words import Syllable, Word, invert_word, word_sort_key


@dataclass(frozen=True)
class SubstringWitness:
    start: int
    end: int
    kind: str  # "image" | "factor"


class StringAlgebra:
    def __init__(self, presentation: QuiverPresentation, signs):
        self.presentation = presentation
        self.name = presentation.name
        self.vertices = presentation.vertices
        self.arrows = presentation.arrow_map()
        self.relations = presentation.relations
        self.sigma = dict(signs.sigma)
        self.epsilon = dict(signs.epsilon)
        self.max_relation_length = max((len(r) for r in self.relations), default=1)
        acyclic, longest, _ = relation_walk_automaton(presentation)
        if not acyclic:
            raise InternalInvariantError("constructed from a non-finite presentation")
        self.max_direct_path_length = longest
        self.cache: dict = {}

    @classmethod
    def from_presentation(cls, presentation: QuiverPresentation) -> "StringAlgebra":
        report = validate_string_algebra(presentation)
        if not report.is_string_algebra:
            raise NotAStringAlgebra(report)
        return cls(presentation, derive_signs(presentation))

    # --- syllable data ---------------------------------------------------

    def syl_source(self, s: Syllable) -> str:
        src, tgt = self.arrows[s.arrow]
        return src if s.direct else tgt

    def syl_target(self, s: Syllable) -> str:
        src, tgt = self.arrows[s.arrow]
        return tgt if s.direct else src

    def syl_sigma(self, s: Syllable) -> int:
        return self.sigma[s.arrow] if s.direct else self.epsilon[s.arrow]

    def syl_epsilon(self, s: Syllable) -> int:
        return self.epsilon[s.arrow] if s.direct else self.sigma[s.arrow]

    def all_syllables(self):
        out = []
        for a in sorted(self.arrows):
            out.append(Syllable(a, True))
            out.append(Syllable(a, False))
        return out

    # --- word data -------------------------------------------------------

    def source(self, w: Word) -> str:
        return w.vertex if w.is_lazy else self.syl_source(w.syllables[-1])

    def target(self, w: Word) -> str:
        return w.vertex if w.is_lazy else self.syl_target(w.syllables[0])

    def word_sigma(self, w: Word) -> int:
        return -w.sign if w.is_lazy else self.syl_sigma(w.syllables[-1])

    def word_epsilon(self, w: Word) -> int:
        return w.sign if w.is_lazy else self.syl_epsilon(w.syllables[0])

    def sign_data(self, w: Word):
        return (self.source(w), self.target(w), self.word_sigma(w), self.word_epsilon(w))

    def lazy_words(self):
        return [Word.lazy(v, s) for v in self.vertices for s in (1, -1)]

    # --- validity --------------------------------------------------------

    def _run_violates(self, arrows: tuple, direct: bool) -> bool:
        """Does a maximal same-direction run contain a relation occurrence?"""
        seq = arrows if direct else tuple(reversed(arrows))
        n = len(seq)
        top = min(n, self.max_relation_length)
        for length in range(1, top + 1):
            for i in range(n - length + 1):
                if seq[i:i + length] in self.relations:
                    return True
        return False

    def is_valid(self, syllables) -> bool:
        seq = tuple(syllables)
        if not seq:
            return False
        for s in seq:
            if s.arrow not in self.arrows:
                return False
        for left, right in zip(seq, seq[1:]):
            if self.syl_source(left) != self.syl_target(right):
                return False
            if left.arrow == right.arrow and left.direct != right.direct:
                return False
        i = 0
        while i < len(seq):
            j = i
            while j < len(seq) and seq[j].direct == seq[i].direct:
                j += 1
            if self._run_violates(tuple(s.arrow for s in seq[i:j]), seq[i].direct):
                return False
            i = j
        return True

    def is_string(self, syllables) -> bool:
        """Raw validity predicate on a syllable sequence (or a Word)."""
        if isinstance(syllables, Word):
            return True if syllables.is_lazy else self.is_valid(syllables.syllables)
        return self.is_valid(syllables)

    def _seam_ok(self, seq: tuple, seam: int) -> bool:
        """Check the invariants locally around positions [seam-1, seam].

        Both halves are assumed valid; only pairs and relation windows that
        cross the seam are re-inspected (window = max relation length).
        """
        left, right = seq[seam - 1], seq[seam]
        if self.syl_source(left) != self.syl_target(right):
            return False
        if left.arrow == right.arrow and left.direct != right.direct:
            return False
        # the same-direction run through the seam
        i = seam - 1
        while i > 0 and seq[i - 1].direct == seq[seam - 1].direct:
            i -= 1
        j = seam
        while j + 1 < len(seq) and seq[j + 1].direct == seq[seam].direct:
            j += 1
        if seq[seam - 1].direct == seq[seam].direct:
            run = seq[i:j + 1]
            lo = max(0, (seam - 1 - i) - (self.max_relation_length - 1))
            window = run[lo:(seam - i) + self.max_relation_length - 1 + 1]
            return not self._run_violates(tuple(s.arrow for s in window), run[0].direct)
        return True

    # --- concatenation ---------------------------------------------------

    def concat(self, v: Word, u: Word) -> Word:
        """The concatenation v·u (v acts after u)."""
        if u.is_lazy and v.is_lazy:
            if v.vertex != u.vertex or v.sign != u.sign:
                raise NotComposable(f"{v.literal()} · {u.literal()}")
            return v
        if v.is_lazy:
            if self.target(u) != v.vertex or self.word_epsilon(u) != v.sign:
                raise NotComposable(f"{v.literal()} · {u.literal()}")
            return u
        if u.is_lazy:
            if self.source(v) != u.vertex or self.word_sigma(v) != -u.sign:
                raise NotComposable(f"{v.literal()} · {u.literal()}")
            return v
        if self.source(v) != self.target(u):
            raise NotComposable(f"{v.literal()} · {u.literal()}")
        seq = v.syllables + u.syllables
        if not self._seam_ok(seq, len(v.syllables)):
            raise NotAString(f"{v.literal()} · {u.literal()}")
        return Word.of(seq)

    def concat_all(self, *parts: Word) -> Word:
        out = parts[-1]
        for p in reversed(parts[:-1]):
            out = self.concat(p, out)
        return out

    def try_concat(self, *parts: Word) -> Word | None:
        try:
            return self.concat_all(*parts)
        except (NotComposable, NotAString):
            return None

    def invert(self, w: Word) -> Word:
        return invert_word(w)

    # --- single-syllable extensions ---------------------------------------

    def can_prepend(self, s: Syllable, w: Word) -> bool:
        if w.is_lazy:
            return self.syl_source(s) == w.vertex and self.syl_sigma(s) == -w.sign
        if self.syl_source(s) != self.syl_target(w.syllables[0]):
            return False
        return self._seam_ok((s,) + w.syllables, 1)

    def prepend(self, w: Word, s: Syllable) -> Word:
        if w.is_lazy:
            return Word.of((s,))
        return Word.of((s,) + w.syllables)

    def can_append(self, w: Word, s: Syllable) -> bool:
        if w.is_lazy:
            return self.syl_target(s) == w.vertex and self.syl_epsilon(s) == w.sign
        if self.syl_source(w.syllables[-1]) != self.syl_target(s):
            return False
        return self._seam_ok(w.syllables + (s,), len(w.syllables))

    def append(self, w: Word, s: Syllable) -> Word:
        if w.is_lazy:
            return Word.of((s,))
        return Word.of(w.syllables + (s,))

    def left_extensions(self, w: Word):
        tgt = self.target(w)
        out = []
        for a, (src, atgt) in sorted(self.arrows.items()):
            if src == tgt:
                s = Syllable(a, True)
                if self.can_prepend(s, w):
                    out.append(s)
            if atgt == tgt:
                s = Syllable(a, False)
                if self.can_prepend(s, w):
                    out.append(s)
        return out

    def _unique(self, candidates, what):
        if len(candidates) > 1:
            raise InternalInvariantError(f"two {what} extensions: {candidates}")
        return candidates[0] if candidates else None

    def direct_left_extension(self, w: Word) -> Syllable | None:
        return self._unique([s for s in self.left_extensions(w) if s.direct], "direct")

    def inverse_left_extension(self, w: Word) -> Syllable | None:
        return self._unique([s for s in self.left_extensions(w) if not s.direct], "inverse")

    def right_extensions(self, w: Word):
        src = self.source(w)
        out = []
        for a, (asrc, atgt) in sorted(self.arrows.items()):
            if atgt == src:
                s = Syllable(a, True)
                if self.can_append(w, s):
                    out.append(s)
            if asrc == src:
                s = Syllable(a, False)
                if self.can_append(w, s):
                    out.append(s)
        return out

    def direct_right_extension(self, w: Word) -> Syllable | None:
        return self._unique([s for s in self.right_extensions(w) if s.direct], "direct")

    def inverse_right_extension(self, w: Word) -> Syllable | None:
        return self._unique([s for s in self.right_extensions(w) if not s.direct], "inverse")

    # --- enumeration -------------------------------------------------------

    def _string_layers(self, max_len: int):
        layers = self.cache.setdefault("string_layers", [])
        if not layers:
            layers.append(sorted(self.lazy_words(), key=word_sort_key))
        while len(layers) <= max_len:
            if len(layers) == 1:
                nxt = [Word.of((s,)) for s in self.all_syllables()
                       if self.is_valid((s,))]
            else:
                nxt = []
                for w in layers[-1]:
                    for s in self.left_extensions(w):
                        nxt.append(self.prepend(w, s))
            layers.append(sorted(nxt, key=word_sort_key))
        return layers

    def enumerate_strings(self, max_len: int, collapse_inverses: bool = False):
        """All valid strings of length <= max_len, lazy paths included."""
        out = []
        for layer in self._string_layers(max_len)[:max_len + 1]:
            out.extend(layer)
        if collapse_inverses:
            out = [w for w in out if word_sort_key(w) <= word_sort_key(invert_word(w))]
        return out

    # --- substrings --------------------------------------------------------

    def subword(self, w: Word, start: int, end: int) -> Word:
        """The contiguous piece w[start:end]; a gap yields the lazy absorbed there."""
        if w.is_lazy:
            if start == end == 0:
                return w
            raise IndexError("lazy word has no proper subwords")
        n = len(w.syllables)
        if not 0 <= start <= end <= n:
            raise IndexError(f"bad subword range {start}:{end}")
        if start < end:
            return Word.of(w.syllables[start:end])
        if start < n:
            s = w.syllables[start]
            return Word.lazy(self.syl_target(s), self.syl_epsilon(s))
        s = w.syllables[n - 1]
        return Word.lazy(self.syl_source(s), -self.syl_sigma(s))

    def _substring_witnesses(self, w: Word, kind: str, include_lazy: bool):
        # image: left neighbour inverse (or absent), right neighbour direct (or absent)
        # factor: the mirror condition
        if w.is_lazy:
            return [SubstringWitness(0, 0, kind)] if include_lazy else []
        n = len(w.syllables)
        want_left_direct = kind == "factor"

        def left_ok(i):
            return i == 0 or (w.syllables[i - 1].direct == want_left_direct)

        def right_ok(j):
            return j == n or (w.syllables[j].direct != want_left_direct)

        out = []
        for i in range(n + 1):
            if not left_ok(i):
                continue
            for j in range(i, n + 1):
                if i == j and not include_lazy:
                    continue
                if right_ok(j):
                    out.append(SubstringWitness(i, j, kind))
        return out

    def image_substrings(self, w: Word, include_lazy: bool = False):
        return self._substring_witnesses(w, "image", include_lazy)

    def factor_substrings(self, w: Word, include_lazy: bool = False):
        return self._substring_witnesses(w, "factor", include_lazy)


def load_algebra(text: str) -> StringAlgebra:
    from .presentation import parse_presentation

    return StringAlgebra.from_presentation(parse_presentation(text))
