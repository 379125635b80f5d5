"""Hammock total orders and their neighbour operators.

Strings anchored at a vertex on a fixed sign side form a total order; the
comparison walks the shared end (suffix on the left side, prefix on the
right side) and lets a direct divergence sort below an inverse one.  The
operators l, lbar, r, rbar compute order neighbours by word shape alone, so
they apply on either sign branch.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import bands
from .algebra import StringAlgebra
from .errors import (
    GradedIndexError,
    InternalInvariantError,
    NotABand,
    NotInHammock,
    UndefinedOperator,
)
from .words import Word, invert_word, word_sort_key

LESS, EQUAL, GREATER = "less", "equal", "greater"

OPS = ("lbar", "l", "rbar", "r")


@dataclass(frozen=True)
class HammockRef:
    vertex: str
    side: str  # "l" | "r"
    branch: int = 1  # +1 is the default sign convention

    def __post_init__(self):
        if self.side not in ("l", "r") or self.branch not in (1, -1):
            raise ValueError("side must be 'l'/'r' and branch +1/-1")


def in_hammock(alg: StringAlgebra, u: Word, h: HammockRef) -> bool:
    if h.side == "l":
        return alg.source(u) == h.vertex and alg.word_sigma(u) == -h.branch
    return alg.target(u) == h.vertex and alg.word_epsilon(u) == h.branch


def compare(alg: StringAlgebra, u: Word, w: Word, h: HammockRef) -> str:
    for x in (u, w):
        if not in_hammock(alg, x, h):
            raise NotInHammock(f"{x.literal()} not in H_{h.side}({h.vertex})")
    if u == w:
        return EQUAL
    us, ws = u.syllables, w.syllables
    if h.side == "l":
        i, j = len(us), len(ws)
        while i > 0 and j > 0 and us[i - 1] == ws[j - 1]:
            i -= 1
            j -= 1
        if i == 0 and j == 0:
            return EQUAL
        if i == 0:  # u is a proper suffix of w
            return LESS if not ws[j - 1].direct else GREATER
        if j == 0:
            return LESS if us[i - 1].direct else GREATER
        if us[i - 1].direct and not ws[j - 1].direct:
            return LESS
        if not us[i - 1].direct and ws[j - 1].direct:
            return GREATER
        raise InternalInvariantError("parallel same-kind divergence in a hammock")
    # right side: compare along the shared prefix, direct divergence is greater
    i, j, nu, nw = 0, 0, len(us), len(ws)
    while i < nu and j < nw and us[i] == ws[j]:
        i += 1
        j += 1
    if i == nu and j == nw:
        return EQUAL
    if i == nu:  # u is a proper prefix of w
        return LESS if ws[j].direct else GREATER
    if j == nw:
        return LESS if not us[i].direct else GREATER
    if us[i].direct and not ws[j].direct:
        return GREATER
    if not us[i].direct and ws[j].direct:
        return LESS
    raise InternalInvariantError("parallel same-kind divergence in a hammock")


# --- the four operators -------------------------------------------------------


def op_l(alg: StringAlgebra, u: Word) -> Word | None:
    """Prepend the inverse extension, then the maximal direct run."""
    b = alg.inverse_left_extension(u)
    if b is None:
        return None
    w = alg.prepend(u, b)
    while True:
        a = alg.direct_left_extension(w)
        if a is None:
            return w
        w = alg.prepend(w, a)


def op_lbar(alg: StringAlgebra, u: Word) -> Word | None:
    """Prepend the direct extension, then the maximal inverse run."""
    a = alg.direct_left_extension(u)
    if a is None:
        return None
    w = alg.prepend(u, a)
    while True:
        b = alg.inverse_left_extension(w)
        if b is None:
            return w
        w = alg.prepend(w, b)


def op_r(alg: StringAlgebra, u: Word) -> Word | None:
    w = op_l(alg, invert_word(u))
    return None if w is None else invert_word(w)


def op_rbar(alg: StringAlgebra, u: Word) -> Word | None:
    w = op_lbar(alg, invert_word(u))
    return None if w is None else invert_word(w)


def apply_op(alg: StringAlgebra, name: str, u: Word) -> Word | None:
    return {"l": op_l, "lbar": op_lbar, "r": op_r, "rbar": op_rbar}[name](alg, u)


def op_l_graded(alg: StringAlgebra, u: Word, i: int) -> Word:
    """l_i drops the i leftmost syllables of the maximal direct run of l."""
    w = op_l(alg, u)
    if w is None:
        raise UndefinedOperator(f"l undefined at {u.literal()}")
    k = len(w) - len(u) - 1
    if not 0 <= i <= k:
        raise GradedIndexError(f"index {i} outside 0..{k}")
    return Word.of(w.syllables[i:])


def op_lbar_graded(alg: StringAlgebra, u: Word, i: int) -> Word:
    w = op_lbar(alg, u)
    if w is None:
        raise UndefinedOperator(f"lbar undefined at {u.literal()}")
    k = len(w) - len(u) - 1
    if not 0 <= i <= k:
        raise GradedIndexError(f"index {i} outside 0..{k}")
    return Word.of(w.syllables[i:])


def op_r_graded(alg: StringAlgebra, u: Word, i: int) -> Word:
    return invert_word(op_l_graded(alg, invert_word(u), i))


def op_rbar_graded(alg: StringAlgebra, u: Word, i: int) -> Word:
    return invert_word(op_lbar_graded(alg, invert_word(u), i))


def apply_graded(alg: StringAlgebra, name: str, u: Word, i: int) -> Word:
    return {
        "l": op_l_graded,
        "lbar": op_lbar_graded,
        "r": op_r_graded,
        "rbar": op_rbar_graded,
    }[name](alg, u, i)


# --- order neighbours ----------------------------------------------------------


def successor(alg: StringAlgebra, u: Word, side: str = "l") -> Word | None:
    if side == "r":
        w = successor(alg, invert_word(u), "l")
        return None if w is None else invert_word(w)
    w = op_l(alg, u)
    if w is not None:
        return w
    # strip the leading inverse run and the following direct syllable
    seq = u.syllables
    k = 0
    while k < len(seq) and not seq[k].direct:
        k += 1
    if k == len(seq):  # lazy or all-inverse: maximal element
        return None
    rest = seq[k + 1:]
    if rest:
        return Word.of(rest)
    s = seq[k]
    return Word.lazy(alg.syl_source(s), -alg.syl_sigma(s))


def predecessor(alg: StringAlgebra, u: Word, side: str = "l") -> Word | None:
    if side == "r":
        w = predecessor(alg, invert_word(u), "l")
        return None if w is None else invert_word(w)
    w = op_lbar(alg, u)
    if w is not None:
        return w
    seq = u.syllables
    k = 0
    while k < len(seq) and seq[k].direct:
        k += 1
    if k == len(seq):
        return None
    rest = seq[k + 1:]
    if rest:
        return Word.of(rest)
    s = seq[k]
    return Word.lazy(alg.syl_source(s), -alg.syl_sigma(s))


# --- one-sided expansions -------------------------------------------------------


@dataclass(frozen=True)
class ExpansionResult:
    status: str  # "defined" | "undefined"
    failed_at_step: int | None = None
    period_rotation: Word | None = None  # rotation as it recurs at the far end
    period_band: object | None = None  # Band
    preperiod: Word | None = None  # between the periodic part and the base
    base: Word | None = None

    @property
    def defined(self) -> bool:
        return self.status == "defined"

    def literal(self, side: str = "l") -> str:
        if not self.defined:
            return f"undefined@{self.failed_at_step}"
        pre = "" if self.preperiod is None else f"{self.preperiod.literal()}·"
        if side == "l":
            return f"∞({self.period_rotation.literal()})·{pre}{self.base.literal()}"
        return f"{self.base.literal()}·{pre}({self.period_rotation.literal()})∞"


def _expansion_target_length(alg: StringAlgebra, u: Word) -> int:
    prime_bound = max(2, bands.prime_band_length_bound(alg))
    return len(u) + bands.band_free_length_bound(alg) + 3 * prime_bound + 6


def one_sided_expansion(alg: StringAlgebra, u: Word, op: str) -> ExpansionResult:
    """Iterate an operator and describe the limit as period + preperiod.

    Left operators grow words on the left; right operators are handled by
    inversion so the detected data always sits at the far (growing) end.
    """
    if op in ("r", "rbar"):
        res = one_sided_expansion(alg, invert_word(u), {"r": "l", "rbar": "lbar"}[op])
        if not res.defined:
            return ExpansionResult("undefined", failed_at_step=res.failed_at_step, base=u)
        return ExpansionResult(
            "defined",
            period_rotation=invert_word(res.period_rotation),
            period_band=res.period_band,
            preperiod=None if res.preperiod is None else invert_word(res.preperiod),
            base=u,
        )
    fn = {"l": op_l, "lbar": op_lbar}[op]
    prime_bound = max(2, bands.prime_band_length_bound(alg))
    window = 2 * prime_bound
    target = _expansion_target_length(alg, u)
    w = u
    steps = 0
    for _attempt in range(4):
        while len(w) < target:
            nxt = fn(alg, w)
            steps += 1
            if nxt is None:
                return ExpansionResult("undefined", failed_at_step=steps, base=u)
            w = nxt
        added = w.syllables[: len(w) - len(u)]
        for p in range(1, prime_bound + 1):
            if len(added) < 2 * p:
                break
            span = min(len(added) - p, window)
            if not all(added[i] == added[i + p] for i in range(span)):
                continue
            k = 0
            while k + p < len(added) and added[k + p] == added[k]:
                k += 1
            cut = k + p  # added[:cut] is p-periodic
            if cut < 2 * p:
                continue
            rotation = Word.of(added[:p])
            try:
                band = bands.canonical_band(alg, rotation)
            except NotABand:
                continue
            pre_seq = added[cut:]
            preperiod = Word.of(pre_seq) if pre_seq else None
            return ExpansionResult(
                "defined",
                period_rotation=rotation,
                period_band=band,
                preperiod=preperiod,
                base=u,
            )
        target *= 2  # preperiod longer than the confidence window: look further
    raise InternalInvariantError(
        f"no period detected for expansion of {u.literal()} under {op}")


# --- torsion-freeness -------------------------------------------------------------


def torsion_free_witness(alg: StringAlgebra):
    """A pair (u, op) with op(u) defined but op(op(u)) undefined, or None.

    Definedness of each operator depends only on a bounded window at the
    moving end, so scanning all strings of length <= 3W is exhaustive
    (W = max relation length + max relation-avoiding direct path length).
    """
    if "torsion_free_witness" in alg.cache:
        return alg.cache["torsion_free_witness"]
    cap = 3 * (alg.max_relation_length + alg.max_direct_path_length)
    candidates = [w for w in alg.enumerate_strings(cap) if not w.is_lazy]
    candidates.sort(key=word_sort_key)
    candidates += [w for w in alg.enumerate_strings(0)]
    witness = None
    for u in candidates:
        for op in OPS:
            w1 = apply_op(alg, op, u)
            if w1 is not None and apply_op(alg, op, w1) is None:
                witness = (u, op)
                break
        if witness:
            break
    alg.cache["torsion_free_witness"] = witness
    return witness


def is_torsion_free(alg: StringAlgebra):
    """Forward closure of all four operators; returns (flag, witness)."""
    witness = torsion_free_witness(alg)
    return witness is None, witness


# --- intervals ----------------------------------------------------------------------


@dataclass(frozen=True)
class IntervalWitness:
    band: object  # Band whose rotation pumps the interval
    rotation: Word
    filler: Word  # band-free connector (possibly lazy)
    boundary: object  # Syllable entering the interval interior
    word: Word  # the full pumpable string rotation·filler·boundary·x


def interval_pump_witness(alg: StringAlgebra, x: Word, boundary_direct: bool):
    """A band insertion above x, if one exists.

    With a direct boundary this decides infinitude of [root, x]: the interior
    consists of the strings y·a·x, and it is infinite exactly when some prime
    band rotation can be planted on the far side of such an extension.  The
    inverse-boundary variant is the mirrored test used for projection steps.
    """
    exts = [s for s in alg.left_extensions(x) if s.direct == boundary_direct]
    if not exts:
        return None
    catalog = bands.band_free_catalog(alg).strings
    primes = bands.enumerate_prime_bands(alg)
    for s in exts:
        ax = alg.prepend(x, s)
        for band in primes:
            for rot_seq in band.rotations():
                rot = Word.of(rot_seq)
                for z in catalog:
                    w = alg.try_concat(rot, z, ax)
                    if w is not None:
                        filler = z
                        return IntervalWitness(band, rot, filler, s, w)
    return None


def interval_is_finite(alg: StringAlgebra, vertex: str, sign: int, k: int):
    """Finiteness of [1_(vertex,sign), l_k(1_(vertex,sign))], with witness."""
    root = Word.lazy(vertex, sign)
    x = op_l_graded(alg, root, k)
    witness = interval_pump_witness(alg, x, boundary_direct=True)
    return witness is None, witness
