"""Independent brute-force cross-checks for the optimized paths.

These implementations are deliberately naive (generate-and-filter, full
order scans) and share nothing with the fast code beyond word validity.
They are the provenance source for every frozen expected value.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key

from . import bands as bandmod
from . import bridges as bridgemod
from . import hammocks
from .algebra import StringAlgebra
from .words import Word, invert_word, word_sort_key


@dataclass
class OracleReport:
    check_id: str
    population: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def line(self) -> str:
        status = "pass" if self.passed else f"FAIL({len(self.mismatches)})"
        return f"{self.check_id:32s} population={self.population:<7d} {status}"


# --- independent primitives ------------------------------------------------------


def oracle_is_band(alg: StringAlgebra, w: Word) -> bool:
    """Band test via permutability: every rotation and the square are strings."""
    if w.is_lazy or len(w) < 2:
        return False
    seq = w.syllables
    if alg.syl_source(seq[-1]) != alg.syl_target(seq[0]):
        return False
    if {s.direct for s in seq} != {True, False}:
        return False
    n = len(seq)
    for d in range(1, n):
        if n % d == 0 and seq == seq[:d] * (n // d):
            return False
    rots = [seq[i:] + seq[:i] for i in range(n)]
    return all(alg.is_valid(r) for r in rots) and alg.is_valid(seq + seq)


def oracle_bands(alg: StringAlgebra, max_len: int):
    reps = {}
    for w in alg.enumerate_strings(max_len):
        if oracle_is_band(alg, w):
            seq = w.syllables
            best = min(
                (seq[i:] + seq[:i] for i in range(len(seq))
                 if seq[i].direct and not seq[i - 1].direct),
                key=lambda r: tuple(s.sort_key() for s in r),
            )
            reps[best] = Word.of(best)
    return sorted(reps.values(), key=word_sort_key)


def _oracle_prime(alg: StringAlgebra, seq) -> bool:
    n = len(seq)

    def splits_into_bands(piece, minimum):
        if not piece:
            return minimum <= 0
        for cut in range(2, len(piece) + 1):
            if oracle_is_band(alg, Word.of(piece[:cut])):
                if splits_into_bands(piece[cut:], minimum - 1):
                    return True
        return False

    for i in range(n):
        rot = seq[i:] + seq[:i]
        if splits_into_bands(rot, 2):
            return False
    return True


def oracle_prime_bands(alg: StringAlgebra, max_len: int):
    return [w for w in oracle_bands(alg, max_len) if _oracle_prime(alg, w.syllables)]


def oracle_successor(alg: StringAlgebra, u: Word, h: hammocks.HammockRef,
                     search_len: int):
    members = [w for w in alg.enumerate_strings(search_len)
               if hammocks.in_hammock(alg, w, h)]

    def cmp(a, b):
        r = hammocks.compare(alg, a, b, h)
        return {"less": -1, "equal": 0, "greater": 1}[r]

    members.sort(key=cmp_to_key(cmp))
    idx = members.index(u)
    return members[idx + 1] if idx + 1 < len(members) else None


def oracle_predecessor(alg: StringAlgebra, u: Word, h: hammocks.HammockRef,
                       search_len: int):
    members = [w for w in alg.enumerate_strings(search_len)
               if hammocks.in_hammock(alg, w, h)]

    def cmp(a, b):
        r = hammocks.compare(alg, a, b, h)
        return {"less": -1, "equal": 0, "greater": 1}[r]

    members.sort(key=cmp_to_key(cmp))
    idx = members.index(u)
    return members[idx - 1] if idx > 0 else None


def oracle_relation_avoiding_paths_finite(alg: StringAlgebra) -> bool:
    """Pigeonhole walk enumeration; complete for small presentations."""
    cap = len(alg.arrows) * alg.max_relation_length + 1
    forbidden = {tuple(reversed(r)) for r in alg.relations}

    def blocked(path):
        for f in forbidden:
            if len(path) >= len(f) and path[-len(f):] == f:
                return True
        return False

    frontier = [(v, ()) for v in alg.vertices]
    for _depth in range(cap):
        nxt = []
        for vtx, path in frontier:
            for a, (src, tgt) in alg.arrows.items():
                if src != vtx:
                    continue
                np = path + (a,)
                if not blocked(np):
                    nxt.append((tgt, np))
        if not nxt:
            return True
        frontier = nxt
    return False


# --- the check battery ----------------------------------------------------------


def _sorted_hammocks(alg: StringAlgebra):
    refs = []
    for v in alg.vertices:
        for side in ("l", "r"):
            for branch in (1, -1):
                refs.append(hammocks.HammockRef(v, side, branch))
    return refs


def check_successors(alg: StringAlgebra, member_len: int, search_len: int) -> OracleReport:
    report = OracleReport("successor-oracle")
    pool = alg.enumerate_strings(search_len)
    for h in _sorted_hammocks(alg):
        members = [w for w in pool if hammocks.in_hammock(alg, w, h)]

        def cmp(a, b):
            return {"less": -1, "equal": 0, "greater": 1}[hammocks.compare(alg, a, b, h)]

        members.sort(key=cmp_to_key(cmp))
        position = {w: i for i, w in enumerate(members)}
        for u in members:
            if len(u) > member_len:
                continue
            report.population += 2
            idx = position[u]
            fast = hammocks.successor(alg, u, h.side)
            slow = members[idx + 1] if idx + 1 < len(members) else None
            if fast is None:
                if slow is not None:
                    report.mismatches.append((u.literal(), "succ", None, slow.literal()))
            elif len(fast) <= search_len and fast != slow:
                report.mismatches.append(
                    (u.literal(), "succ", fast.literal(), None if slow is None else slow.literal()))
            fast = hammocks.predecessor(alg, u, h.side)
            slow = members[idx - 1] if idx > 0 else None
            if fast is None:
                if slow is not None:
                    report.mismatches.append((u.literal(), "pred", None, slow.literal()))
            elif len(fast) <= search_len and fast != slow:
                report.mismatches.append(
                    (u.literal(), "pred", fast.literal(), None if slow is None else slow.literal()))
    return report


def check_prime_band_completeness(alg: StringAlgebra, bound: int | None = None) -> OracleReport:
    report = OracleReport("prime-band-completeness")
    base = bandmod.prime_band_length_bound(alg) if bound is None else bound
    at_bound = {b.rep for b in bandmod.enumerate_prime_bands(alg, base)}
    beyond = {b.rep for b in bandmod.enumerate_prime_bands(alg, base + 1)}
    report.population = len(beyond)
    for rep in sorted(beyond - at_bound, key=word_sort_key):
        report.mismatches.append((rep.literal(), "missed below the bound"))
    return report


def check_prime_band_bruteforce(alg: StringAlgebra, cap: int) -> OracleReport:
    report = OracleReport("prime-band-bruteforce")
    slow = {w for w in oracle_prime_bands(alg, cap)}
    fast = {b.rep for b in bandmod.enumerate_prime_bands(alg) if len(b.rep) <= cap}
    report.population = len(slow | fast)
    for rep in sorted(slow ^ fast, key=word_sort_key):
        report.mismatches.append((rep.literal(), "prime-band set disagreement"))
    return report


def check_mixed_pair_at_most_once(alg: StringAlgebra) -> OracleReport:
    report = OracleReport("mixed-pair-at-most-once")
    for band in bandmod.enumerate_prime_bands(alg):
        for rot in band.rotations():
            report.population += 1
            seen = set()
            for left, right in zip(rot, rot[1:]):
                if left.direct and not right.direct:
                    key = (left.arrow, right.arrow)
                    if key in seen:
                        report.mismatches.append((band.rep.literal(), str(key)))
                    seen.add(key)
    return report


def check_band_free_sharpness(alg: StringAlgebra, hard_cap: int = 25) -> OracleReport:
    report = OracleReport("band-free-sharpness")
    edge = bandmod.band_free_length_bound(alg) + 1
    if edge > hard_cap:
        return report  # too deep for the exhaustive check on this presentation
    for w in alg.enumerate_strings(edge):
        if len(w) != edge:
            continue
        report.population += 1
        if bandmod.contains_band_rotation(alg, w) is None:
            report.mismatches.append((w.literal(), "band-free beyond the bound"))
    return report


def check_extendability(alg: StringAlgebra, cap: int) -> OracleReport:
    report = OracleReport("extendability")
    for w in alg.enumerate_strings(cap, collapse_inverses=True):
        report.population += 1
        ok, _ = bridgemod.is_extendable(alg, w)
        if not ok:
            report.mismatches.append((w.literal(), "not extendable to a band"))
    return report


def check_expansion_period_prime(alg: StringAlgebra, cap: int = 6) -> OracleReport:
    report = OracleReport("expansion-period-prime")
    for w in alg.enumerate_strings(cap):
        for op in hammocks.OPS:
            res = hammocks.one_sided_expansion(alg, w, op)
            if not res.defined:
                continue
            report.population += 1
            if not res.period_band.prime:
                report.mismatches.append((w.literal(), op, res.period_band.rep.literal()))
    return report


def check_sign_inversion(alg: StringAlgebra, cap: int = 8) -> OracleReport:
    report = OracleReport("sign-inversion")
    for w in alg.enumerate_strings(cap):
        report.population += 1
        inv = invert_word(w)
        if (alg.word_sigma(inv) != alg.word_epsilon(w)
                or alg.word_epsilon(inv) != alg.word_sigma(w)):
            report.mismatches.append((w.literal(), "sign inversion identity"))
    return report


def check_substring_duality(alg: StringAlgebra, cap: int = 6) -> OracleReport:
    """Inversion carries image substrings to image substrings of the inverse
    (both boundary conditions change sides and flip kind), and dually."""
    report = OracleReport("substring-duality")
    for w in alg.enumerate_strings(cap):
        report.population += 1
        n = len(w)
        inv = invert_word(w)
        for kind, lister in (("image", alg.image_substrings),
                             ("factor", alg.factor_substrings)):
            direct = {(x.start, x.end) for x in lister(w, include_lazy=True)}
            dual = {(n - x.end, n - x.start) for x in lister(inv, include_lazy=True)}
            if direct != dual:
                report.mismatches.append((w.literal(), f"{kind} duality"))
    return report


def check_enumeration_naive(alg: StringAlgebra, cap: int) -> OracleReport:
    report = OracleReport("enumeration-naive")
    syllables = alg.all_syllables()
    naive = set(alg.lazy_words())
    frontier = [(s,) for s in syllables if alg.is_valid((s,))]
    naive |= {Word.of(t) for t in frontier}
    for _ in range(cap - 1):
        nxt = []
        for t in frontier:
            for s in syllables:
                cand = (s,) + t
                if alg.is_valid(cand):
                    nxt.append(cand)
        naive |= {Word.of(t) for t in nxt}
        frontier = nxt
    fast = set(alg.enumerate_strings(cap))
    report.population = len(naive | fast)
    for w in sorted(naive ^ fast, key=word_sort_key):
        report.mismatches.append((w.literal(), "enumeration disagreement"))
    return report


def check_finiteness_bruteforce(alg: StringAlgebra) -> OracleReport:
    report = OracleReport("finiteness-bruteforce")
    report.population = 1
    if not oracle_relation_avoiding_paths_finite(alg):
        report.mismatches.append((alg.name, "brute force found unbounded walks"))
    return report


def check_neighbor_lengths(alg: StringAlgebra, cap: int = 6) -> OracleReport:
    report = OracleReport("neighbor-length-change")
    for w in alg.enumerate_strings(cap):
        for side in ("l", "r"):
            s = hammocks.successor(alg, w, side)
            if s is not None:
                report.population += 1
                if len(s) == len(w):
                    report.mismatches.append((w.literal(), side))
    return report


def check_opposite_undefined(alg: StringAlgebra, cap: int = 6) -> OracleReport:
    report = OracleReport("opposite-op-undefined")
    for w in alg.enumerate_strings(cap):
        left = hammocks.op_l(alg, w)
        if left is not None:
            report.population += 1
            if hammocks.op_lbar(alg, left) is not None:
                report.mismatches.append((w.literal(), "lbar after l"))
        bar = hammocks.op_lbar(alg, w)
        if bar is not None:
            report.population += 1
            if hammocks.op_l(alg, bar) is not None:
                report.mismatches.append((w.literal(), "l after lbar"))
    return report


def check_no_shared_limits(alg: StringAlgebra, v_cap: int = 6, x_cap: int = 12) -> OracleReport:
    """No lbar-tower limit coincides with an l-tower limit (desk scale)."""
    report = OracleReport("no-shared-limits")
    l_limits = []
    for v in alg.enumerate_strings(v_cap):
        res = hammocks.one_sided_expansion(alg, v, "l")
        if res.defined:
            l_limits.append((v, res))
    for x in alg.enumerate_strings(x_cap):
        res = hammocks.one_sided_expansion(alg, x, "lbar")
        if not res.defined:
            continue
        for v, other in l_limits:
            report.population += 1
            if _limits_equal(alg, res, other):
                report.mismatches.append((x.literal(), v.literal()))
    return report


def _limit_suffix(alg: StringAlgebra, res: hammocks.ExpansionResult, length: int):
    period = res.period_rotation.syllables
    tail = () if res.preperiod is None else res.preperiod.syllables
    tail = tail + (res.base.syllables if not res.base.is_lazy else ())
    reps = period * (length // len(period) + 2)
    full = reps + tail
    return full[-length:]


def _limits_equal(alg: StringAlgebra, a, b) -> bool:
    window = (len(a.period_rotation) + len(b.period_rotation)) * 3
    window += sum(len(r.preperiod or ()) + len(r.base) for r in (a, b)) + 4
    return _limit_suffix(alg, a, window) == _limit_suffix(alg, b, window)


def check_band_free_stability(alg: StringAlgebra) -> OracleReport:
    report = OracleReport("band-free-stability")
    catalog = bandmod.band_free_catalog(alg)
    report.population = len(catalog.strings)
    longest = max((len(w) for w in catalog.strings), default=0)
    if longest > catalog.length_bound:
        report.mismatches.append((str(longest), "catalog exceeds its bound"))
    return report


def run_all_checks(alg: StringAlgebra, budget: int = 8):
    """Every cross-check at the given length budget, in a fixed order."""
    small = min(budget, 6)
    naive_cap = max(3, min(budget, {1: 8, 2: 8, 3: 6, 4: 6, 5: 5}.get(len(alg.arrows), 4)))
    checks = [
        check_successors(alg, member_len=budget, search_len=budget + 4),
        check_prime_band_completeness(alg),
        check_prime_band_bruteforce(alg, cap=small),
        check_mixed_pair_at_most_once(alg),
        check_band_free_sharpness(alg),
        check_expansion_period_prime(alg, cap=small),
        check_sign_inversion(alg, cap=budget),
        check_substring_duality(alg, cap=small),
        check_enumeration_naive(alg, cap=naive_cap),
        check_finiteness_bruteforce(alg),
        check_neighbor_lengths(alg, cap=small),
        check_opposite_undefined(alg, cap=small),
        check_band_free_stability(alg),
    ]
    classification = bridgemod.classify_algebra(alg)
    if classification.meta_union_cyclic and classification.torsion_free:
        checks.append(check_extendability(alg, cap=budget))
        checks.append(check_no_shared_limits(alg, v_cap=small, x_cap=budget))
    return checks
