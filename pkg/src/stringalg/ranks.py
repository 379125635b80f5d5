"""Rank classification of graph maps and the stable-rank estimate.

Graph maps between string modules factor into graded one-syllable-group
steps; each step owns an interval in a hammock, and the classification runs
on interval finiteness plus a bridge-quiver certificate.  Band-module maps
are classified through one-sided expansions of their associated string.
Exact finite ranks are out of scope: Finite is terminal.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import bands as bandmod
from . import bridges as bridgemod
from . import hammocks
from .algebra import StringAlgebra
from .errors import (
    GradedIndexError,
    InternalInvariantError,
    NotAFactorSubstring,
    NotAnImageSubstring,
    NotAnInclusionShape,
    NotMetaTorsionFree,
    UndefinedOperator,
)
from .words import Word, invert_word, word_sort_key

FINITE = "Finite"
EXACTLY_OMEGA = "ExactlyOmega"
EXACTLY_OMEGA_PLUS_ONE = "ExactlyOmegaPlusOne"
STABLE_RADICAL = "StableRadical"
INDETERMINATE = "IndeterminateAtLeastOmega"


@dataclass(frozen=True)
class RankClass:
    label: str
    witness: object = None

    def __str__(self):
        return self.label


# --- complex terms ---------------------------------------------------------------


@dataclass(frozen=True)
class ComplexTerm:
    factors: tuple  # of (op, index), first applied first
    base: tuple  # (vertex, sign)
    kind: str = "l-term"

    def render(self) -> str:
        if not self.factors:
            return "id"
        names = []
        for op, idx in reversed(self.factors):
            stem = {"l": "l", "lbar": "lbar", "r": "r", "rbar": "rbar"}[op]
            names.append(stem if idx == 0 else f"{stem}_{idx}")
        return " ".join(names)


def evaluate_term(alg: StringAlgebra, term: ComplexTerm, w: Word) -> Word:
    for op, idx in term.factors:
        w = hammocks.apply_graded(alg, op, w, idx)
    return w


def iterate_term(alg: StringAlgebra, term: ComplexTerm, w: Word, target_len: int) -> Word:
    if not term.factors:
        raise UndefinedOperator("cannot iterate the identity term")
    while len(w) < target_len:
        w = evaluate_term(alg, term, w)
    return w


def _max_direct_prefix(alg: StringAlgebra, w: Word) -> int:
    count = 0
    while True:
        a = alg.direct_left_extension(w)
        if a is None:
            return count
        w = alg.prepend(w, a)
        count += 1


def _max_inverse_prefix(alg: StringAlgebra, w: Word) -> int:
    count = 0
    while True:
        b = alg.inverse_left_extension(w)
        if b is None:
            return count
        w = alg.prepend(w, b)
        count += 1


def inclusion_terms(alg: StringAlgebra, v: Word, u: Word) -> ComplexTerm:
    """The graded factorization of the canonical inclusion M(v) -> M(u).

    u must extend v on the left with an inverse syllable at the seam.
    """
    base = (alg.target(v), alg.word_epsilon(v))
    if v.is_lazy:
        if u.is_lazy:
            if u != v:
                raise NotAnInclusionShape(f"{v.literal()} vs {u.literal()}")
            return ComplexTerm((), base)
        if alg.source(u) != v.vertex or alg.word_sigma(u) != -v.sign:
            raise NotAnInclusionShape(f"{u.literal()} does not end at {v.literal()}")
        added = u.syllables
        tail: tuple = ()
    else:
        if u.is_lazy or len(u) < len(v) or u.syllables[-len(v):] != v.syllables:
            raise NotAnInclusionShape(f"{v.literal()} is not a left-suffix of {u.literal()}")
        added = u.syllables[: len(u) - len(v)]
        tail = v.syllables
    if not added:
        return ComplexTerm((), base)
    if added[-1].direct:
        raise NotAnInclusionShape("the first added syllable must be inverse")

    factors = []
    current = v
    idx = len(added)
    while idx > 0:
        if added[idx - 1].direct:
            raise NotAnInclusionShape("direct syllable where an inverse was expected")
        j = idx - 1
        i = j - 1
        while i >= 0 and added[i].direct:
            i -= 1
        run = j - 1 - i  # direct syllables actually present above the inverse
        stepped = alg.prepend(current, added[j])
        kmax = _max_direct_prefix(alg, stepped)
        if run > kmax:
            raise InternalInvariantError("direct run exceeds the maximal extension")
        factors.append(("l", kmax - run))
        current = Word.of(added[i + 1:] + tail)
        idx = i + 1
    return ComplexTerm(tuple(factors), base)


# --- recursive systems --------------------------------------------------------------


@dataclass(frozen=True)
class RecursiveSystemWitness:
    tau: ComplexTerm
    tau1: ComplexTerm
    tau2: ComplexTerm
    mu: ComplexTerm
    base: tuple
    band_b: object
    band_b_prime: object
    band_b_composite: Word

    def render(self) -> str:
        v, j = self.base
        root = f"1({v},{'+' if j == 1 else '-'})"
        return (f"{self.tau.render()}({root}) = "
                f"<{self.mu.render()} | {self.tau1.render()} {self.tau.render()} "
                f"{self.tau2.render()}>({root})")


def _denominator(w: RecursiveSystemWitness) -> ComplexTerm:
    return ComplexTerm(w.tau2.factors + w.tau.factors + w.tau1.factors, w.base)


def verify_recursive_system(alg: StringAlgebra, w: RecursiveSystemWitness) -> bool:
    root = Word.lazy(*w.base)
    try:
        y = evaluate_term(alg, w.tau, root)
    except (UndefinedOperator, GradedIndexError):
        return False
    window = 3 * max(2, bandmod.prime_band_length_bound(alg)) \
        + bandmod.band_free_length_bound(alg) + len(y) + 6
    try:
        left = iterate_term(alg, w.mu, y, window)
        right = iterate_term(alg, _denominator(w), root, window)
    except (UndefinedOperator, GradedIndexError):
        return False
    k = min(len(left), len(right))
    if left.syllables[-k:] != right.syllables[-k:]:
        return False
    # fundamental solution: y is not itself in the image of mu
    candidates = list(alg.lazy_words())
    candidates += [Word.of(y.syllables[i:]) for i in range(1, len(y))]
    for z in candidates:
        try:
            if evaluate_term(alg, w.mu, z) == y:
                return False
        except (UndefinedOperator, GradedIndexError):
            continue
    return True


def _band_rotation_ending_with(alg: StringAlgebra, seed: Word, x: Word):
    """A prime-band rotation that ends with x and continues with seed's syllable."""
    head = seed.syllables[0]
    tail = (head,) + x.syllables
    for band in bandmod.enumerate_prime_bands(alg):
        for rot in band.rotations():
            if len(rot) >= len(tail) and rot[-len(tail):] == tail:
                return band, Word.of(rot)
    return None, None


def find_recursive_system(alg: StringAlgebra, x: Word, base: tuple):
    """A recursive system certifying the inclusion M(1_base) -> M(x), or None."""
    vertex, sign = base
    if x.is_lazy or x.syllables[-1].direct:
        raise NotAnInclusionShape("x must begin with an inverse syllable")
    if alg.source(x) != vertex or alg.word_sigma(x) != -sign:
        raise NotAnInclusionShape(f"{x.literal()} does not attach to 1({vertex},{sign})")

    alpha = alg.direct_left_extension(x)
    beta = alg.inverse_left_extension(x)
    if alpha is None or beta is None:
        return None
    ax = alg.prepend(x, alpha)
    bx = alg.prepend(x, beta)
    if not bridgemod.is_extendable(alg, ax)[0] or not bridgemod.is_extendable(alg, bx)[0]:
        return None

    b_band, b_rot = _band_rotation_ending_with(alg, Word.of((alpha,)), x)
    bp_band, bp_rot = _band_rotation_ending_with(alg, Word.of((beta,)), x)
    if b_rot is None or bp_rot is None:
        return None

    composite = None
    connectors = list(alg.lazy_words())
    connectors += [w for w in bandmod.band_free_catalog(alg).strings if not w.is_lazy]
    for v in connectors:
        cand = alg.try_concat(bp_rot, v, b_rot)
        if cand is not None and bandmod.is_band_rotation(alg, cand.syllables):
            composite = cand
            break
    if composite is None:
        return None

    root = Word.lazy(vertex, sign)
    try:
        tau = inclusion_terms(alg, root, x)
        xb = alg.try_concat(x, b_rot)
        if xb is None:
            return None
        if len(composite) >= len(xb) and composite.syllables[-len(xb):] == xb.syllables:
            tau2 = inclusion_terms(alg, root, b_rot)
            tau1 = inclusion_terms(alg, xb, composite)
            period_start = composite
        else:
            xbpp = alg.try_concat(x, composite)
            full = alg.try_concat(bp_rot, composite)
            if xbpp is None or full is None:
                return None
            tau2 = inclusion_terms(alg, root, composite)
            tau1 = inclusion_terms(alg, xbpp, full)
            period_start = full
    except (NotAnInclusionShape, InternalInvariantError):
        return None

    mu = _derive_mu(alg, ComplexTerm(tau2.factors + tau.factors + tau1.factors, base),
                    root, x, len(period_start) - 0)
    if mu is None:
        return None
    witness = RecursiveSystemWitness(
        tau=tau, tau1=tau1, tau2=tau2, mu=mu, base=base,
        band_b=b_band, band_b_prime=bp_band, band_b_composite=composite)
    if not verify_recursive_system(alg, witness):
        return None
    return witness


def _derive_mu(alg: StringAlgebra, denominator: ComplexTerm, root: Word,
               x: Word, period_hint: int):
    """Read lbar chunks for one period off the denominator's limit."""
    try:
        limit = iterate_term(alg, denominator, root,
                             len(x) + 4 * max(period_hint, 2) + 4)
    except (UndefinedOperator, GradedIndexError):
        return None
    if len(limit) < len(x) or limit.syllables[-len(x):] != x.syllables:
        return None
    # the period of the far end
    seq = limit.syllables
    period = None
    for p in range(1, len(seq) // 2 + 1):
        if all(seq[i] == seq[i + p] for i in range(min(len(seq) - p, 2 * period_hint))):
            period = p
            break
    if period is None:
        return None
    added = seq[: len(seq) - len(x)]
    factors = []
    pos = len(added)
    consumed = 0
    current = x
    while consumed == 0 or consumed % period != 0:
        if consumed > 3 * period or pos == 0:
            return None
        if not added[pos - 1].direct:
            return None
        j = pos - 1
        i = j - 1
        while i >= 0 and not added[i].direct:
            i -= 1
        run = j - 1 - i  # inverse syllables present above the direct one
        stepped = alg.prepend(current, added[j])
        kmax = _max_inverse_prefix(alg, stepped)
        if run > kmax:
            return None
        factors.append(("lbar", kmax - run))
        current = Word.of(added[i + 1:] + x.syllables)
        consumed += pos - (i + 1)
        pos = i + 1
    return ComplexTerm(tuple(factors), denominator.base)


# --- graph-map descriptors -----------------------------------------------------------


@dataclass(frozen=True)
class SSMap:
    w: Word
    v: Word
    u: Word
    factor_at: tuple | None = None  # (start, end) of v in w
    image_at: tuple | None = None  # (start, end) of v in u


@dataclass(frozen=True)
class SBMap:
    v: Word
    band: object  # target Band


@dataclass(frozen=True)
class BSMap:
    band: object  # source Band
    v: Word


@dataclass(frozen=True)
class BBMap:
    source_band: object
    target_band: object
    v: Word | None = None
    hom_label: str | None = None


def _find_occurrence(alg: StringAlgebra, container: Word, part: Word, kind: str):
    for wit in (alg.image_substrings(container, include_lazy=True)
                if kind == "image" else alg.factor_substrings(container, include_lazy=True)):
        if alg.subword(container, wit.start, wit.end) == part:
            return (wit.start, wit.end)
    return None


@dataclass(frozen=True)
class Step:
    kind: str  # "mono" | "epi"
    word: Word  # the larger word owning the interval


def _left_mono_chunk_starts(added) -> list:
    """Chunk boundaries peeling (direct run)(inverse) groups from the right."""
    starts = []
    idx = len(added)
    while idx > 0:
        if added[idx - 1].direct:
            raise NotAnImageSubstring("image boundary must be inverse")
        i = idx - 2
        while i >= 0 and added[i].direct:
            i -= 1
        starts.append(i + 1)
        idx = i + 1
    return starts


def _left_epi_chunk_starts(added) -> list:
    starts = []
    idx = len(added)
    while idx > 0:
        if not added[idx - 1].direct:
            raise NotAFactorSubstring("factor boundary must be direct")
        i = idx - 2
        while i >= 0 and not added[i].direct:
            i -= 1
        starts.append(i + 1)
        idx = i + 1
    return starts


def mono_steps(alg: StringAlgebra, u: Word, occ: tuple) -> list:
    """Steps of the canonical inclusion M(v) -> M(u) for v = u[occ]."""
    i, j = occ
    steps = []
    n = len(u)
    inv_u = invert_word(u)
    if j < n:  # right part first, via the inverse word
        added = inv_u.syllables[: n - j]
        for s in _left_mono_chunk_starts(added):
            steps.append(Step("mono", Word.of(inv_u.syllables[s: n - i])))
    if i > 0:
        added = u.syllables[:i]
        for s in _left_mono_chunk_starts(added):
            steps.append(Step("mono", Word.of(u.syllables[s:])))
    return steps


def epi_steps(alg: StringAlgebra, w: Word, occ: tuple) -> list:
    """Steps of the canonical projection M(w) -> M(v) for v = w[occ]."""
    i, j = occ
    steps = []
    n = len(w)
    inv_w = invert_word(w)
    if i > 0:
        added = w.syllables[:i]
        for s in _left_epi_chunk_starts(added):
            steps.append(Step("epi", Word.of(w.syllables[s:])))
    if j < n:
        added = inv_w.syllables[: n - j]
        for s in _left_epi_chunk_starts(added):
            steps.append(Step("epi", Word.of(inv_w.syllables[s: n - i])))
    return steps


def _step_interval_witness(alg: StringAlgebra, step: Step):
    key = ("step_interval", step.kind, step.word)
    if key in alg.cache:
        return alg.cache[key]
    witness = hammocks.interval_pump_witness(
        alg, step.word, boundary_direct=(step.kind == "mono"))
    alg.cache[key] = witness
    return witness


def _classify_steps(alg: StringAlgebra, steps) -> RankClass:
    uncertified = None
    for step in steps:
        witness = _step_interval_witness(alg, step)
        if witness is None:
            continue
        if bridgemod.band_class_reaches_cycle(alg, witness.band):
            return RankClass(STABLE_RADICAL, witness)
        if uncertified is None:
            uncertified = witness
    if uncertified is not None:
        return RankClass(INDETERMINATE, uncertified)
    return RankClass(FINITE)


def rank_ss(alg: StringAlgebra, d: SSMap) -> RankClass:
    occ_im = d.image_at or _find_occurrence(alg, d.u, d.v, "image")
    if occ_im is None or alg.subword(d.u, *occ_im) != d.v:
        raise NotAnImageSubstring(f"{d.v.literal()} in {d.u.literal()}")
    occ_fa = d.factor_at or _find_occurrence(alg, d.w, d.v, "factor")
    if occ_fa is None or alg.subword(d.w, *occ_fa) != d.v:
        raise NotAFactorSubstring(f"{d.v.literal()} in {d.w.literal()}")
    steps = epi_steps(alg, d.w, occ_fa) + mono_steps(alg, d.u, occ_im)
    return _classify_steps(alg, steps)


# --- band-module maps ---------------------------------------------------------------


def biinfinite_substrings(alg: StringAlgebra, band, kind: str, max_len: int):
    """Substrings of the two-sided infinite band word with boundary conditions."""
    rep = band.rep.syllables
    p = len(rep)
    reps = rep * (max_len // p + 3)
    want_left_direct = kind == "factor"
    seen = {}
    for i in range(1, p + 1):
        if reps[i - 1].direct != want_left_direct:
            continue
        for length in range(0, max_len + 1):
            j = i + length
            if reps[j].direct == want_left_direct:
                continue
            if length == 0:
                s = reps[i]
                w = Word.lazy(alg.syl_target(s), alg.syl_epsilon(s))
            else:
                w = Word.of(reps[i:j])
            seen.setdefault(w, w)
    return sorted(seen, key=word_sort_key)


def _occurrence_phases(alg: StringAlgebra, band, v: Word, kind: str):
    rep = band.rep.syllables
    p = len(rep)
    reps = rep * (len(v) // p + 3)
    want_left_direct = kind == "factor"
    phases = []
    for i in range(1, p + 1):
        j = i + len(v)
        if reps[i - 1].direct != want_left_direct or reps[j].direct == want_left_direct:
            continue
        if v.is_lazy:
            s = reps[i]
            if (alg.syl_target(s), alg.syl_epsilon(s)) == (v.vertex, v.sign):
                phases.append(i)
        elif reps[i:j] == v.syllables:
            phases.append(i)
    return phases


def is_biinfinite_substring(alg: StringAlgebra, band, v: Word, kind: str) -> bool:
    return bool(_occurrence_phases(alg, band, v, kind))


def _expansion_follows_band(alg: StringAlgebra, v: Word, band, bar: bool) -> bool:
    """Does the left-side expansion of v stay inside the band's infinite word?

    Once the growth matched the band for a full period plus a state window,
    determinism keeps it periodic forever.
    """
    rep = band.rep.syllables
    p = len(rep)
    need = 2 * p + alg.max_relation_length + alg.max_direct_path_length + 2
    op = "lbar" if bar else "l"
    for phase in _occurrence_phases(alg, band, v, "factor" if bar else "image"):
        w = v
        expected = itertools.cycle(reversed(rep[phase:] + rep[:phase]))
        ok = True
        added_total = 0
        while added_total < need and ok:
            nxt = hammocks.apply_op(alg, op, w)
            if nxt is None:
                ok = False
                break
            fresh = nxt.syllables[: len(nxt) - len(w)]
            for s in reversed(fresh):
                if s != next(expected):
                    ok = False
                    break
            added_total += len(fresh)
            w = nxt
        if ok:
            return True
    return False


def _inverse_band(alg: StringAlgebra, band):
    return bandmod.canonical_band(alg, invert_word(band.rep))


def _normalize_lazy_sign(alg: StringAlgebra, band, v: Word, kind: str) -> Word:
    # the two lazy orientations present the same module; accept either sign
    if (v.is_lazy and not is_biinfinite_substring(alg, band, v, kind)
            and is_biinfinite_substring(alg, band, invert_word(v), kind)):
        return invert_word(v)
    return v


def rank_sb(alg: StringAlgebra, band, v: Word) -> RankClass:
    """Map M(v) -> band module over `band`, with v an image substring of its word."""
    v = _normalize_lazy_sign(alg, band, v, "image")
    key = ("rank_sb", band.rep, v)
    if key in alg.cache:
        return alg.cache[key]
    if not is_biinfinite_substring(alg, band, v, "image"):
        raise NotAnImageSubstring(f"{v.literal()} in inf({band.rep.literal()})inf")
    if not band.prime:
        out = RankClass(STABLE_RADICAL, {"reason": "composite band"})
    else:
        follows_l = _expansion_follows_band(alg, v, band, bar=False)
        follows_r = _expansion_follows_band(
            alg, invert_word(v), _inverse_band(alg, band), bar=False)
        if follows_l and follows_r:
            out = RankClass(EXACTLY_OMEGA)
        else:
            side = "l" if not follows_l else "r"
            out = RankClass(STABLE_RADICAL, {"reason": f"expansion escapes on {side}"})
    alg.cache[key] = out
    return out


def rank_bs(alg: StringAlgebra, band, v: Word) -> RankClass:
    """Map from the band module over `band` to M(v), v a factor substring."""
    v = _normalize_lazy_sign(alg, band, v, "factor")
    key = ("rank_bs", band.rep, v)
    if key in alg.cache:
        return alg.cache[key]
    if not is_biinfinite_substring(alg, band, v, "factor"):
        raise NotAFactorSubstring(f"{v.literal()} in inf({band.rep.literal()})inf")
    if not band.prime:
        out = RankClass(STABLE_RADICAL, {"reason": "composite band"})
    else:
        follows_l = _expansion_follows_band(alg, v, band, bar=True)
        follows_r = _expansion_follows_band(
            alg, invert_word(v), _inverse_band(alg, band), bar=True)
        if follows_l and follows_r:
            out = RankClass(EXACTLY_OMEGA)
        else:
            side = "l" if not follows_l else "r"
            out = RankClass(STABLE_RADICAL, {"reason": f"expansion escapes on {side}"})
    alg.cache[key] = out
    return out


def rank_bb(alg: StringAlgebra, d: BBMap) -> RankClass:
    if (d.v is None) == (d.hom_label is None):
        raise InternalInvariantError("exactly one of v / hom_label required")
    if d.hom_label is not None:
        return RankClass(FINITE, {"hom_label": d.hom_label})
    bs = rank_bs(alg, d.source_band, d.v)
    sb = rank_sb(alg, d.target_band, d.v)
    for leg in (bs, sb):
        if leg.label == STABLE_RADICAL:
            return RankClass(STABLE_RADICAL, leg.witness)
    return RankClass(EXACTLY_OMEGA_PLUS_ONE, {"legs": (bs.label, sb.label)})


# --- stable rank ----------------------------------------------------------------------


def _inverse_free_key(v: Word):
    if v.is_lazy:
        return ("lazy", v.vertex)
    return min(word_sort_key(v), word_sort_key(invert_word(v)))


@dataclass(frozen=True)
class StableRankEstimate:
    value: str  # "omega" | "omega_plus_one" | "omega_plus_two"
    sb_omega: tuple  # (band, v) families of rank-omega maps into band modules
    bs_omega: tuple
    composable_pair: tuple | None

    def to_json(self):
        def fam(items):
            return [{"band": b.rep.literal(), "v": v.literal()} for b, v in items]

        pair = None
        if self.composable_pair is not None:
            (b1, v1), (b2, v2) = self.composable_pair
            pair = {"bs": {"band": b1.rep.literal(), "v": v1.literal()},
                    "sb": {"band": b2.rep.literal(), "v": v2.literal()}}
        return {"value": self.value, "sb_omega": fam(self.sb_omega),
                "bs_omega": fam(self.bs_omega), "composable_pair": pair}


def stable_rank_estimate(alg: StringAlgebra) -> StableRankEstimate:
    classification = bridgemod.classify_algebra(alg)
    if not classification.meta_torsion_free:
        raise NotMetaTorsionFree(alg.name)
    sb_omega = []
    bs_omega = []
    for band in bandmod.enumerate_prime_bands(alg):
        cap = 2 * len(band.rep) + bandmod.band_free_length_bound(alg)
        for v in biinfinite_substrings(alg, band, "image", cap):
            if rank_sb(alg, band, v).label == EXACTLY_OMEGA:
                sb_omega.append((band, v))
        for v in biinfinite_substrings(alg, band, "factor", cap):
            if rank_bs(alg, band, v).label == EXACTLY_OMEGA:
                bs_omega.append((band, v))
    if not sb_omega and not bs_omega:
        return StableRankEstimate("omega", (), (), None)
    sb_keys = {_inverse_free_key(v): (b, v) for b, v in sb_omega}
    pair = None
    for b, v in bs_omega:
        hit = sb_keys.get(_inverse_free_key(v))
        if hit is not None:
            pair = ((b, v), hit)
            break
    if pair is not None:
        return StableRankEstimate("omega_plus_two", tuple(sb_omega), tuple(bs_omega), pair)
    return StableRankEstimate("omega_plus_one", tuple(sb_omega), tuple(bs_omega), None)


# --- dichotomy audit --------------------------------------------------------------------


def dichotomy_audit(alg: StringAlgebra, max_len: int = 8):
    """Classify every inclusion/projection side over strings of bounded length.

    Returns (counts, indeterminate examples).  A full SS map combines one
    projection side and one inclusion side; its class is Finite when both
    sides are, StableRadical when either side is, so side-level classes
    decide the audit.
    """
    counts = {FINITE: 0, STABLE_RADICAL: 0, INDETERMINATE: 0}
    indeterminate = []
    for u in alg.enumerate_strings(max_len, collapse_inverses=True):
        for wit in alg.image_substrings(u, include_lazy=True):
            steps = mono_steps(alg, u, (wit.start, wit.end))
            cls = _classify_steps(alg, steps)
            counts[cls.label] += 1
            if cls.label == INDETERMINATE:
                v = alg.subword(u, wit.start, wit.end)
                indeterminate.append(("mono", v, u))
        for wit in alg.factor_substrings(u, include_lazy=True):
            steps = epi_steps(alg, u, (wit.start, wit.end))
            cls = _classify_steps(alg, steps)
            counts[cls.label] += 1
            if cls.label == INDETERMINATE:
                v = alg.subword(u, wit.start, wit.end)
                indeterminate.append(("epi", v, u))
    return counts, indeterminate
