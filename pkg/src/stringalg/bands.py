"""Bands: mixed primitive cyclic strings.

Detection accepts any rotation; canonical representatives have a direct
syllable leftmost and an inverse syllable rightmost, and are minimal for
the syllable order (direct before inverse, then arrow id).  Enumeration of
prime bands and of band-free strings is exhaustive up to verified length
bounds derived from the presentation.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import StringAlgebra
from .errors import InternalInvariantError, NotABand
from .words import Word, invert_word, word_sort_key


@dataclass(frozen=True)
class Band:
    rep: Word
    prime: bool

    @property
    def length(self) -> int:
        return len(self.rep)

    def rotations(self):
        seq = self.rep.syllables
        return [seq[i:] + seq[:i] for i in range(len(seq))]

    def literal(self) -> str:
        return self.rep.literal()


@dataclass(frozen=True)
class BandFreeCatalog:
    strings: tuple  # Words, lazies included
    length_bound: int


def _is_primitive(seq) -> bool:
    n = len(seq)
    for d in range(1, n):
        if n % d == 0 and seq == seq[:d] * (n // d):
            return False
    return True


def is_band_rotation(alg: StringAlgebra, seq) -> bool:
    """Is the syllable sequence a cyclic permutation of some band?"""
    seq = tuple(seq)
    if len(seq) < 2:
        return False
    if not alg.is_valid(seq):
        return False
    if alg.syl_source(seq[-1]) != alg.syl_target(seq[0]):
        return False
    flags = {s.direct for s in seq}
    if flags != {True, False}:
        return False
    if not _is_primitive(seq):
        return False
    return alg.is_valid(seq + seq)


def is_band(alg: StringAlgebra, w: Word) -> bool:
    return (not w.is_lazy) and is_band_rotation(alg, w.syllables)


def canonical_band(alg: StringAlgebra, w: Word) -> Band:
    """Rotate to the canonical representative and compute the prime flag."""
    if not is_band(alg, w):
        raise NotABand(w.literal())
    seq = w.syllables
    best = None
    for i in range(len(seq)):
        rot = seq[i:] + seq[:i]
        if rot[0].direct and not rot[-1].direct:
            key = tuple(s.sort_key() for s in rot)
            if best is None or key < best[0]:
                best = (key, rot)
    if best is None:
        raise InternalInvariantError(f"band without a canonical rotation: {w.literal()}")
    rep = Word.of(best[1])
    return Band(rep, _rotation_prime(alg, rep.syllables))


def _prefix_band_reach(alg: StringAlgebra, seq):
    n = len(seq)
    reach = [False] * (n + 1)
    reach[0] = True
    for j in range(2, n + 1):
        for i in range(j - 2, -1, -1):
            if reach[i] and is_band_rotation(alg, seq[i:j]):
                reach[j] = True
                break
    return reach


def _suffix_band_reach(alg: StringAlgebra, seq):
    n = len(seq)
    reach = [False] * (n + 1)
    reach[n] = True
    for i in range(n - 2, -1, -1):
        for j in range(i + 2, n + 1):
            if reach[j] and is_band_rotation(alg, seq[i:j]):
                reach[i] = True
                break
    return reach


def _rotation_prime(alg: StringAlgebra, seq) -> bool:
    n = len(seq)
    for i in range(n):
        rot = seq[i:] + seq[:i]
        pre = _prefix_band_reach(alg, rot)
        suf = _suffix_band_reach(alg, rot)
        if any(pre[m] and suf[m] for m in range(1, n)):
            return False
    return True


def is_prime_band(alg: StringAlgebra, b: Band | Word) -> bool:
    """No rotation splits into >= 2 blocks, each a rotation of a band."""
    w = b.rep if isinstance(b, Band) else b
    if not is_band(alg, w):
        raise NotABand(w.literal())
    return _rotation_prime(alg, w.syllables)


# --- bounds ----------------------------------------------------------------


def mixed_pair_count(alg: StringAlgebra) -> int:
    """Number of two-syllable strings (direct)(inverse)."""
    count = 0
    for a, (asrc, _) in alg.arrows.items():
        for b, (bsrc, _) in alg.arrows.items():
            if a != b and asrc == bsrc:
                count += 1
    return count


def prime_band_length_bound(alg: StringAlgebra) -> int:
    n = mixed_pair_count(alg)
    m = alg.max_direct_path_length
    return 2 * n * (m + 1)


def band_free_length_bound(alg: StringAlgebra) -> int:
    n = mixed_pair_count(alg)
    m = alg.max_direct_path_length
    return (n + 1) * m + 2 * n


# --- enumeration -------------------------------------------------------------


def enumerate_bands(alg: StringAlgebra, max_len: int):
    """All bands of length <= max_len, canonicalized, by generate-and-filter."""
    found = {}
    for w in alg.enumerate_strings(max_len):
        if not w.is_lazy and is_band(alg, w):
            b = canonical_band(alg, w)
            found[b.rep] = b
    return sorted(found.values(), key=lambda b: word_sort_key(b.rep))


def _has_repeated_mixed_pair(seq) -> bool:
    seen = set()
    for left, right in zip(seq, seq[1:]):
        if left.direct and not right.direct:
            key = (left.arrow, right.arrow)
            if key in seen:
                return True
            seen.add(key)
    return False


def enumerate_prime_bands(alg: StringAlgebra, length_bound: int | None = None):
    """The complete set of prime bands, via bounded search.

    A prime band contains each (direct)(inverse) two-syllable string at most
    once per rotation, which prunes the depth-first search hard.
    """
    key = ("prime_bands", length_bound)
    if key in alg.cache:
        return alg.cache[key]
    bound = prime_band_length_bound(alg) if length_bound is None else length_bound
    found = {}

    def visit(word: Word):
        seq = word.syllables
        if (
            len(seq) >= 2
            and seq[0].direct
            and alg.syl_source(seq[-1]) == alg.syl_target(seq[0])
            and _is_primitive(seq)
            and alg.is_valid(seq + seq)
        ):
            b = canonical_band(alg, word)
            if b.prime:
                found.setdefault(b.rep, b)
        if len(seq) >= bound:
            return
        for s in alg.left_extensions(word):
            new = alg.prepend(word, s)
            if _has_repeated_mixed_pair(new.syllables):
                continue
            visit(new)

    for s in alg.all_syllables():
        if not s.direct and alg.is_valid((s,)):
            visit(Word.of((s,)))

    out = sorted(found.values(), key=lambda b: word_sort_key(b.rep))
    alg.cache[key] = out
    return out


def contains_band_rotation(alg: StringAlgebra, u: Word):
    """First (leftmost-starting, then shortest) band-rotation subword, if any."""
    if u.is_lazy:
        return None
    seq = u.syllables
    n = len(seq)
    for i in range(n - 1):
        for j in range(i + 2, n + 1):
            if is_band_rotation(alg, seq[i:j]):
                return canonical_band(alg, Word.of(seq[i:j])), i
    return None


def is_band_free(alg: StringAlgebra, u: Word) -> bool:
    return u.is_lazy or contains_band_rotation(alg, u) is None


def band_free_catalog(alg: StringAlgebra) -> BandFreeCatalog:
    """All band-free strings, lazy paths included."""
    if "band_free" in alg.cache:
        return alg.cache["band_free"]
    bound = band_free_length_bound(alg)
    out = list(alg.lazy_words())

    def visit(word: Word):
        out.append(word)
        if len(word) > bound:
            raise InternalInvariantError(
                f"band-free string beyond the length bound {bound}: {word.literal()}")
        for s in alg.left_extensions(word):
            new = alg.prepend(word, s)
            seq = new.syllables
            # a new band occurrence must use the fresh leftmost syllable
            if any(is_band_rotation(alg, seq[:k]) for k in range(2, len(seq) + 1)):
                continue
            visit(new)

    for s in alg.all_syllables():
        if alg.is_valid((s,)):
            visit(Word.of((s,)))

    catalog = BandFreeCatalog(tuple(sorted(out, key=word_sort_key)), bound)
    alg.cache["band_free"] = catalog
    return catalog


def enumerate_band_free_strings(alg: StringAlgebra) -> BandFreeCatalog:
    return band_free_catalog(alg)
