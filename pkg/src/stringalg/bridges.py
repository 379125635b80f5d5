"""Bridges between bands, the (extended) bridge quiver, and string generation.

Vertices are the canonical prime bands plus the lazy paths.  Arrows are
band-free connecting strings subject to non-factorization conditions; weak
variants drop those conditions.  Trivial bridges are the zero-length
self-loops; they exist on every band vertex and are excluded from all
cycle-based classification.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from . import bands as bandmod
from .algebra import StringAlgebra
from .errors import InternalInvariantError, NotAString
from .words import Syllable, Word, invert_word, word_sort_key

# --- arrows -------------------------------------------------------------------


@dataclass(frozen=True)
class BridgeArrow:
    source: object  # Band or lazy Word
    target: object  # Band or lazy Word
    label: Word
    kind: str  # "bridge" | "half" | "reverse_half" | "zero"
    weak_only: bool | None = False
    exit: Syllable | None = None
    sigma_ba: int | None = None

    def key(self):
        return (_vertex_key(self.source), _vertex_key(self.target),
                word_sort_key(self.label), self.kind)


def _vertex_key(v):
    if isinstance(v, bandmod.Band):
        return (1,) + word_sort_key(v.rep)
    return (0,) + word_sort_key(v)


def vertex_literal(v) -> str:
    return v.rep.literal() if isinstance(v, bandmod.Band) else v.literal()


def _vertex_word(v) -> Word:
    return v.rep if isinstance(v, bandmod.Band) else v


def _compose_labels(alg: StringAlgebra, left: Word, right: Word) -> Word | None:
    return alg.try_concat(left, right)


def _remove_rotation(alg: StringAlgebra, word: Word, band: bandmod.Band, lazy_result: Word):
    """All words obtained by deleting one occurrence of a rotation of band."""
    if word.is_lazy:
        return []
    seq = word.syllables
    out = []
    for rot in band.rotations():
        span = len(rot)
        for i in range(len(seq) - span + 1):
            if seq[i:i + span] == rot:
                rest = seq[:i] + seq[i + span:]
                if not rest:
                    out.append(lazy_result)
                elif alg.is_valid(rest):
                    out.append(Word.of(rest))
    return out


# --- weak bridges and bridges ----------------------------------------------------


def weak_bridges(alg: StringAlgebra, b1: bandmod.Band, b2: bandmod.Band):
    """Band-free labels u with b2·u·b1 a string."""
    out = []
    for u in bandmod.band_free_catalog(alg).strings:
        if alg.try_concat(b2.rep, u, b1.rep) is not None:
            out.append(u)
    return out


def _bridge_excluded(alg: StringAlgebra, b1, b2, label: Word, primes) -> bool:
    if len(label) < 2:
        return False
    seq = label.syllables

    def is_weak(src, tgt, piece) -> bool:
        return (bandmod.is_band_free(alg, piece)
                and alg.try_concat(tgt.rep, piece, src.rep) is not None)

    for cut in range(1, len(seq)):
        u2, u1 = Word.of(seq[:cut]), Word.of(seq[cut:])
        for b in primes:
            if is_weak(b1, b, u1) and is_weak(b, b2, u2):
                return True
    # overlap clause: the middle of the label completes the band itself
    for cut in range(1, len(seq)):
        u2p, u1p = seq[:cut], seq[cut:]
        for b in primes:
            bseq = b.rep.syllables
            for split in range(len(bseq) + 1):
                tail2, head1 = bseq[:split], bseq[split:]
                u2full = u2p + tail2
                u1full = head1 + u1p
                if not (alg.is_valid(u1full) if u1full else False):
                    continue
                if not (alg.is_valid(u2full) if u2full else False):
                    continue
                if is_weak(b1, b, Word.of(u1full)) and is_weak(b, b2, Word.of(u2full)):
                    return True
    return False


def bridges_between(alg: StringAlgebra, b1, b2):
    primes = bandmod.enumerate_prime_bands(alg)
    out = []
    for label in weak_bridges(alg, b1, b2):
        excluded = _bridge_excluded(alg, b1, b2, label, primes)
        out.append((label, excluded))
    return out


def _bridge_exit(alg: StringAlgebra, b1, b2, label: Word) -> Syllable | None:
    """First syllable from the right where inf(b2)·u·b1 leaves inf(b1)."""
    usyl = () if label.is_lazy else label.syllables
    need = len(usyl) + 3 * (len(b1.rep) + len(b2.rep)) + 4
    reps2 = b2.rep.syllables * (need // len(b2.rep) + 2)
    xs = reps2 + usyl + b1.rep.syllables
    ys = b1.rep.syllables * (len(xs) // len(b1.rep) + 2)
    for i in range(1, len(xs) + 1):
        if xs[-i] != ys[-i]:
            return xs[-i]
    return None


# --- half bridges ---------------------------------------------------------------


def _half_exit(alg: StringAlgebra, band, label: Word) -> Syllable:
    if label.is_lazy:
        return band.rep.syllables[-1]
    return label.syllables[-1]


def weak_half_bridges_from(alg: StringAlgebra, x: Word):
    """Weak half bridges from a lazy path x to every prime band."""
    arrows = []
    for band in bandmod.enumerate_prime_bands(alg):
        for u in bandmod.band_free_catalog(alg).strings:
            if alg.try_concat(band.rep, u, x) is None:
                continue
            ex = _half_exit(alg, band, u)
            arrows.append(BridgeArrow(
                source=x, target=band, label=u, kind="half", weak_only=None,
                exit=ex, sigma_ba=1 if not ex.direct else -1))
    arrows.sort(key=lambda a: a.key())
    return arrows


def _sq_below_edges(alg: StringAlgebra, arrows, strong_bridges):
    """Single generating clause of the lower-than relation on weak half bridges."""
    by_source_band: dict = {}
    for br in strong_bridges:
        by_source_band.setdefault(br.source.rep, []).append(br)
    index = {(a.target.rep, a.label): a for a in arrows}
    edges = set()
    for a in arrows:
        x = a.source
        for br in by_source_band.get(a.target.rep, []):
            comp = _compose_labels(alg, br.label, a.label)
            if comp is None:
                continue
            candidates = [comp]
            candidates += _remove_rotation(alg, comp, a.target, lazy_result=x)
            for cand in candidates:
                hit = index.get((br.target.rep, cand))
                if hit is not None and hit != a:
                    edges.add((a, hit))
    return edges


def half_bridges_from(alg: StringAlgebra, x: Word, transitive: bool = True):
    """Half bridges from the lazy path x: minimal per sigma value.

    An arrow is dropped when a strictly lower weak half bridge carries the
    same sigma value; lower-than is taken in the reflexive-transitive closure
    unless transitive=False.
    """
    arrows = weak_half_bridges_from(alg, x)
    strong = [a for a in band_bridges(alg) if not a.weak_only]
    edges = _sq_below_edges(alg, arrows, strong)
    below: dict = {a: {a} for a in arrows}
    for src, dst in edges:
        below[dst].add(src)
    if transitive:
        changed = True
        while changed:
            changed = False
            for a in arrows:
                extra = set()
                for b in below[a]:
                    extra |= below[b]
                if not extra <= below[a]:
                    below[a] |= extra
                    changed = True
    out = []
    for a in arrows:
        dominated = any(
            b != a and b in below[a] and a not in below[b] and b.sigma_ba == a.sigma_ba
            for b in arrows)
        out.append(replace(a, weak_only=dominated))
    return out


def reverse_half_bridges_to(alg: StringAlgebra, x: Word, transitive: bool = True):
    """Arrows band -> x obtained by inverting half bridges from the mirror lazy."""
    mirror = Word.lazy(x.vertex, -x.sign)
    primes = {b.rep: b for b in bandmod.enumerate_prime_bands(alg)}
    out = []
    for a in half_bridges_from(alg, mirror, transitive=transitive):
        inv_rep = bandmod.canonical_band(alg, invert_word(a.target.rep)).rep
        band = primes.get(inv_rep)
        if band is None:
            raise InternalInvariantError("prime bands not closed under inversion")
        out.append(BridgeArrow(
            source=band, target=x, label=invert_word(a.label),
            kind="reverse_half", weak_only=a.weak_only, exit=None, sigma_ba=None))
    out.sort(key=lambda a: a.key())
    return out


# --- zero bridges ----------------------------------------------------------------


def weak_zero_bridges(alg: StringAlgebra):
    out = []
    for u in bandmod.band_free_catalog(alg).strings:
        src = Word.lazy(alg.source(u), -alg.word_sigma(u))
        tgt = Word.lazy(alg.target(u), alg.word_epsilon(u))
        out.append(BridgeArrow(source=src, target=tgt, label=u, kind="zero",
                               weak_only=None))
    out.sort(key=lambda a: a.key())
    return out


def zero_bridges(alg: StringAlgebra):
    whb: dict = {}
    rwh: dict = {}
    for lazy in alg.lazy_words():
        whb[lazy] = [a for a in weak_half_bridges_from(alg, lazy) if len(a.label) > 0]
        rev = []
        mirror = Word.lazy(lazy.vertex, -lazy.sign)
        primes = {b.rep: b for b in bandmod.enumerate_prime_bands(alg)}
        for a in weak_half_bridges_from(alg, mirror):
            if len(a.label) == 0:
                continue
            inv_rep = bandmod.canonical_band(alg, invert_word(a.target.rep)).rep
            rev.append((primes[inv_rep], invert_word(a.label)))
        rwh[lazy] = rev
    out = []
    for arrow in weak_zero_bridges(alg):
        excluded = False
        for b1arrow in whb[arrow.source]:
            band = b1arrow.target
            for band2, label2 in rwh[arrow.target]:
                if band2.rep != band.rep:
                    continue
                comp = _compose_labels(alg, label2, b1arrow.label)
                if comp is None:
                    continue
                if comp == arrow.label:
                    excluded = True
                    break
                removed = _remove_rotation(alg, comp, band, lazy_result=arrow.label)
                if arrow.label in removed:
                    excluded = True
                    break
            if excluded:
                break
        out.append(replace(arrow, weak_only=excluded))
    return out


# --- the quivers ----------------------------------------------------------------


def band_bridges(alg: StringAlgebra):
    """All bridges between prime band vertices, weak-only ones flagged."""
    if "band_bridges" in alg.cache:
        return alg.cache["band_bridges"]
    primes = bandmod.enumerate_prime_bands(alg)
    arrows = []
    for b1 in primes:
        for b2 in primes:
            for label, excluded in bridges_between(alg, b1, b2):
                ex = _bridge_exit(alg, b1, b2, label)
                arrows.append(BridgeArrow(
                    source=b1, target=b2, label=label, kind="bridge",
                    weak_only=excluded, exit=ex,
                    sigma_ba=None if ex is None else (1 if not ex.direct else -1)))
    arrows.sort(key=lambda a: a.key())
    alg.cache["band_bridges"] = arrows
    return arrows


@dataclass(frozen=True)
class ExtendedBridgeQuiver:
    vertices: tuple
    arrows: tuple  # strong arrows
    weak_arrows: tuple  # weak-only arrows (empty unless requested)

    def arrows_between(self, src_literal: str, tgt_literal: str, include_weak=True):
        pool = self.arrows + (self.weak_arrows if include_weak else ())
        return [a for a in pool
                if vertex_literal(a.source) == src_literal
                and vertex_literal(a.target) == tgt_literal]

    def to_dot(self) -> str:
        lines = ["digraph bridge_quiver {"]
        names = {}
        for i, v in enumerate(sorted(self.vertices, key=_vertex_key)):
            names[_vertex_key(v)] = f"n{i}"
            lines.append(f'  n{i} [label="{vertex_literal(v)}"];')
        for a in sorted(self.arrows + self.weak_arrows, key=lambda a: a.key()):
            style = ', style=dashed' if a.weak_only else ""
            lines.append(
                f'  {names[_vertex_key(a.source)]} -> {names[_vertex_key(a.target)]}'
                f' [label="{a.label.literal()}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_extended_bridge_quiver(alg: StringAlgebra, include_weak: bool = False,
                                 transitive: bool = True) -> ExtendedBridgeQuiver:
    vertices = list(bandmod.enumerate_prime_bands(alg)) + alg.lazy_words()
    arrows = list(band_bridges(alg))
    for lazy in alg.lazy_words():
        arrows += half_bridges_from(alg, lazy, transitive=transitive)
        arrows += reverse_half_bridges_to(alg, lazy, transitive=transitive)
    arrows += zero_bridges(alg)
    strong = tuple(sorted((a for a in arrows if not a.weak_only), key=lambda a: a.key()))
    weak = tuple(sorted((a for a in arrows if a.weak_only), key=lambda a: a.key())) \
        if include_weak else ()
    return ExtendedBridgeQuiver(tuple(vertices), strong, weak)


# --- classification ---------------------------------------------------------------


def _classification_edges(alg: StringAlgebra):
    """Strong band-band bridges minus the trivial self-loops."""
    return [a for a in band_bridges(alg)
            if not a.weak_only and not (a.source == a.target and len(a.label) == 0)]


def _tarjan_sccs(nodes, edges_by_node):
    index: dict = {}
    low: dict = {}
    onstack: set = set()
    stack: list = []
    sccs: list = []
    counter = [0]

    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(edges_by_node.get(root, ())))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        onstack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter[0]
                    counter[0] += 1
                    stack.append(nxt)
                    onstack.add(nxt)
                    work.append((nxt, iter(edges_by_node.get(nxt, ()))))
                    advanced = True
                    break
                if nxt in onstack:
                    low[node] = min(low[node], index[nxt])
            if not advanced:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[node])
                if low[node] == index[node]:
                    comp = set()
                    while True:
                        w = stack.pop()
                        onstack.discard(w)
                        comp.add(w)
                        if w == node:
                            break
                    sccs.append(comp)
    return sccs


@dataclass(frozen=True)
class AlgebraClassification:
    domestic: bool
    torsion_free: bool
    meta_union_cyclic: bool
    meta_torsion_free: bool
    witnesses: dict

    def to_json(self):
        wit = {}
        for k, v in self.witnesses.items():
            wit[k] = v if isinstance(v, str) else str(v)
        return {
            "domestic": self.domestic,
            "torsion_free": self.torsion_free,
            "meta_union_cyclic": self.meta_union_cyclic,
            "meta_torsion_free": self.meta_torsion_free,
            "witnesses": wit,
        }


def _reachable(starts, succ):
    seen = set(starts)
    todo = list(starts)
    while todo:
        n = todo.pop()
        for m in succ.get(n, ()):
            if m not in seen:
                seen.add(m)
                todo.append(m)
    return seen


def classify_algebra(alg: StringAlgebra) -> AlgebraClassification:
    from . import hammocks

    primes = bandmod.enumerate_prime_bands(alg)
    nodes = [b.rep for b in primes]
    edges = _classification_edges(alg)
    succ: dict = {n: [] for n in nodes}
    pred: dict = {n: [] for n in nodes}
    for a in edges:
        succ[a.source.rep].append(a.target.rep)
        pred[a.target.rep].append(a.source.rep)

    sccs = _tarjan_sccs(nodes, succ)
    self_loops = {a.source.rep for a in edges if a.source == a.target}
    cyclic_nodes = set(self_loops)
    for comp in sccs:
        if len(comp) > 1:
            cyclic_nodes |= comp

    witnesses: dict = {}
    domestic = not cyclic_nodes
    if not domestic:
        sample = sorted(cyclic_nodes, key=word_sort_key)[0]
        loop = [a for a in edges if a.source.rep == sample and a.target.rep == sample]
        if loop:
            witnesses["meta_band"] = f"cycle at {sample.literal()} via {loop[0].label.literal()}"
        else:
            witnesses["meta_band"] = f"cycle through {sample.literal()}"

    # weakly connected components of the band quiver
    undirected: dict = {n: set() for n in nodes}
    for a in edges:
        undirected[a.source.rep].add(a.target.rep)
        undirected[a.target.rep].add(a.source.rep)
    seen: set = set()
    components = []
    for n in nodes:
        if n in seen:
            continue
        comp = _reachable([n], {k: list(v) for k, v in undirected.items()})
        seen |= comp
        components.append(comp)

    scc_of = {}
    for comp in sccs:
        for n in comp:
            scc_of[n] = frozenset(comp)

    meta_union_cyclic = bool(nodes)
    for comp in components:
        if len(comp) < 2 or any(scc_of[n] != frozenset(comp) for n in comp):
            meta_union_cyclic = False
            witnesses.setdefault(
                "meta_union_cyclic_failure",
                "component {" + ", ".join(w.literal() for w in sorted(comp, key=word_sort_key)) + "}")
            break

    from_cycle = _reachable(cyclic_nodes, succ)
    to_cycle = _reachable(cyclic_nodes, pred)
    meta_torsion_free = bool(nodes)
    for comp in components:
        if len(comp) < 2:
            meta_torsion_free = False
            witnesses.setdefault(
                "meta_torsion_free_failure",
                "isolated band " + sorted(comp, key=word_sort_key)[0].literal())
            break
    if meta_torsion_free:
        for a in edges:
            if a.source.rep not in from_cycle or a.target.rep not in to_cycle:
                meta_torsion_free = False
                witnesses.setdefault(
                    "meta_torsion_free_failure",
                    f"arrow {a.source.rep.literal()} -> {a.target.rep.literal()} "
                    f"({a.label.literal()}) has no two-sided infinite extension")
                break

    tf, tf_witness = hammocks.is_torsion_free(alg)
    if tf_witness is not None:
        witnesses["torsion_free_failure"] = f"({tf_witness[0].literal()}, {tf_witness[1]})"

    return AlgebraClassification(
        domestic=domestic,
        torsion_free=tf,
        meta_union_cyclic=meta_union_cyclic,
        meta_torsion_free=meta_torsion_free,
        witnesses=witnesses,
    )


def band_class_reaches_cycle(alg: StringAlgebra, band: bandmod.Band) -> bool:
    edges = _classification_edges(alg)
    succ: dict = {}
    for a in edges:
        succ.setdefault(a.source.rep, []).append(a.target.rep)
    self_loops = {a.source.rep for a in edges if a.source == a.target}
    nodes = [b.rep for b in bandmod.enumerate_prime_bands(alg)]
    cyclic = set(self_loops)
    for comp in _tarjan_sccs(nodes, {n: succ.get(n, []) for n in nodes}):
        if len(comp) > 1:
            cyclic |= comp
    return bool(_reachable([band.rep], succ) & cyclic)


def band_reach(alg: StringAlgebra, src: bandmod.Band, dst: bandmod.Band) -> bool:
    succ: dict = {}
    for a in _classification_edges(alg):
        succ.setdefault(a.source.rep, []).append(a.target.rep)
    return dst.rep in _reachable([src.rep], succ)


# --- generation -------------------------------------------------------------------


@dataclass(frozen=True)
class PathSpec:
    arrows: tuple  # BridgeArrow path lazy -> (bands) -> lazy
    exponents: tuple  # one integer >= -1 per interior band vertex

    def interior_bands(self):
        return [a.target for a in self.arrows[:-1]] if len(self.arrows) > 1 else []


def _free_reduce(seq):
    out = []
    for s in seq:
        if out and out[-1].arrow == s.arrow and out[-1].direct != s.direct:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def generate_string(alg: StringAlgebra, spec: PathSpec) -> Word:
    """Spell the path with band powers and freely reduce the word."""
    arrows = spec.arrows
    if not arrows:
        raise NotAString("empty path")
    if isinstance(arrows[0].source, bandmod.Band) or isinstance(arrows[-1].target, bandmod.Band):
        raise NotAString("a generating path runs from a lazy path to a lazy path")
    bands_on_path = spec.interior_bands()
    if len(spec.exponents) != len(bands_on_path):
        raise NotAString("one exponent per interior band vertex required")
    if any(m < -1 for m in spec.exponents):
        raise NotAString("exponents must be >= -1")
    pieces: list = []
    for j in range(len(arrows) - 1, 0, -1):
        label = arrows[j].label
        pieces.extend(() if label.is_lazy else label.syllables)
        rep = bands_on_path[j - 1].rep
        m = spec.exponents[j - 1]
        if m >= 0:
            pieces.extend(rep.syllables * m)
        else:
            pieces.extend(invert_word(rep).syllables)
    label0 = arrows[0].label
    pieces.extend(() if label0.is_lazy else label0.syllables)
    reduced = _free_reduce(tuple(pieces))
    if not reduced:
        root = arrows[0].source
        if arrows[-1].target != root:
            raise NotAString("empty spelling with mismatched end lazies")
        return root
    if not alg.is_valid(reduced):
        raise NotAString(" ".join(s.literal() for s in reduced))
    word = Word.of(reduced)
    root = arrows[0].source
    if alg.source(word) != root.vertex or alg.word_sigma(word) != -root.sign:
        raise NotAString(f"{word.literal()} does not attach to {root.literal()}")
    return word


def find_generating_path(alg: StringAlgebra, u: Word) -> PathSpec:
    """One path generating u, by the leftward greedy minimal-band scan.

    Arrows on the returned path are arrows of the extended weak bridge
    quiver; generate_string(find_generating_path(u)) == u.
    """
    root = Word.lazy(alg.source(u), -alg.word_sigma(u))
    if u.is_lazy:
        arrow = BridgeArrow(source=u, target=u, label=u, kind="zero", weak_only=None)
        return PathSpec((arrow,), ())

    syllables = u.syllables
    first = Word.of((syllables[-1],))
    arrows: list = [BridgeArrow(
        source=root, target=_lazy_after(alg, first), label=first,
        kind="zero", weak_only=None)]
    exponents: list = []

    for k in range(len(syllables) - 2, -1, -1):
        s = syllables[k]
        last = arrows[-1]
        merged_seq = (s,) + (() if last.label.is_lazy else last.label.syllables)
        merged = Word.of(merged_seq)
        if bandmod.is_band_free(alg, merged):
            arrows[-1] = replace(last, label=merged, target=_lazy_after(alg, merged))
            continue
        # the fresh syllable closes a band: split off the shortest one
        w = last.label.syllables if not last.label.is_lazy else ()
        beta = None
        for j in range(1, len(w) + 1):
            head = (s,) + w[:j]
            if bandmod.is_band_rotation(alg, head):
                beta = head
                w2 = w[j:]
                break
        if beta is None:
            raise InternalInvariantError("band closure without a closing prefix")
        band = bandmod.canonical_band(alg, Word.of(beta))
        rep = band.rep.syllables
        if rep == beta:
            incoming_label = Word.of(w2) if w2 else _lazy_between(alg, last, w2, beta)
            terminal_label = Word.lazy(alg.syl_target(beta[0]), alg.syl_epsilon(beta[0]))
            exponent = 1
        else:
            offset = None
            for o in range(1, len(beta)):
                if beta[o:] + beta[:o] == rep:
                    offset = o
                    break
            if offset is None:
                raise InternalInvariantError("rotation mismatch against canonical band")
            incoming_seq = beta[offset:] + w2
            incoming_label = Word.of(incoming_seq)
            terminal_label = Word.of(beta[:offset])
            exponent = 0
        arrows[-1] = replace(last, label=incoming_label, target=band)
        arrows.append(BridgeArrow(
            source=band, target=_lazy_after(alg, Word.of((s,))),
            label=terminal_label,
            kind="reverse_half", weak_only=None))
        exponents.append(exponent)

    for i, a in enumerate(arrows):
        kind = "zero"
        if isinstance(a.source, bandmod.Band) and isinstance(a.target, bandmod.Band):
            kind = "bridge"
        elif isinstance(a.target, bandmod.Band):
            kind = "half"
        elif isinstance(a.source, bandmod.Band):
            kind = "reverse_half"
        arrows[i] = replace(a, kind=kind)
    return PathSpec(tuple(arrows), tuple(exponents))


def _lazy_after(alg: StringAlgebra, w: Word) -> Word:
    return Word.lazy(alg.target(w), alg.word_epsilon(w))


def _lazy_between(alg: StringAlgebra, last_arrow, w2, beta) -> Word:
    # empty remainder after the band: the label degenerates to the lazy
    # absorbed at the source end of the closed band
    return Word.lazy(alg.syl_source(beta[-1]), -alg.syl_sigma(beta[-1]))


# --- extendability -----------------------------------------------------------------


def is_extendable(alg: StringAlgebra, u: Word):
    """Is u a substring of a rotation of some band?  Returns (flag, witness).

    Decided by planting prime bands on both sides and closing the cycle
    through the bridge quiver.
    """
    primes = bandmod.enumerate_prime_bands(alg)
    if not u.is_lazy:
        for b in primes:
            double = b.rep.syllables * 2
            for i in range(len(b.rep)):
                if double[i:i + len(u)] == u.syllables:
                    return True, {"band": b, "kind": "subword"}
    catalog = bandmod.band_free_catalog(alg).strings
    for b in primes:
        for rot_b in b.rotations():
            left = Word.of(rot_b)
            for v in catalog:
                lv = alg.try_concat(left, v)
                if lv is None:
                    continue
                lvu = alg.try_concat(lv, u)
                if lvu is None:
                    continue
                for bp in primes:
                    if not band_reach(alg, b, bp):
                        continue
                    for rot_bp in bp.rotations():
                        right = Word.of(rot_bp)
                        for vp in catalog:
                            word = alg.try_concat(lvu, vp, right)
                            if word is not None:
                                return True, {
                                    "band_left": b, "band_right": bp,
                                    "filler_left": v, "filler_right": vp,
                                    "word": word,
                                }
    return False, None
