import pytest

from stringalg import (
    BridgeArrow,
    PathSpec,
    Word,
    build_extended_bridge_quiver,
    canonical_band,
    classify_algebra,
    enumerate_prime_bands,
    find_generating_path,
    generate_string,
    is_extendable,
    parse_word,
    weak_bridges,
)
from stringalg.bridges import (
    band_bridges,
    bridges_between,
    half_bridges_from,
    weak_half_bridges_from,
    zero_bridges,
)
from stringalg.errors import NotAString


def _prime(alg, literal):
    for b in enumerate_prime_bands(alg):
        if b.rep.literal() == literal:
            return b
    raise AssertionError(literal)


def test_weak_bridges_gp(gp23):
    aB = _prime(gp23, "a b'")
    labels = {u.literal() for u in weak_bridges(gp23, aB, aB)}
    assert labels == {"1(v,-)", "b'"}


def test_weak_bridges_lambda2(lambda2):
    aB = _prime(lambda2, "a b'")
    eD = _prime(lambda2, "e d'")
    dE = _prime(lambda2, "d e'")
    assert [u.literal() for u in weak_bridges(lambda2, aB, eD)] == ["e c"]
    assert weak_bridges(lambda2, dE, aB) == []
    assert weak_bridges(lambda2, aB, dE) == []


def test_gp_weak_bridges_are_bridges(gp23):
    aB = _prime(gp23, "a b'")
    for b1 in enumerate_prime_bands(gp23):
        for b2 in enumerate_prime_bands(gp23):
            for label, excluded in bridges_between(gp23, b1, b2):
                assert not excluded  # every weak bridge here has length <= 1
    loops = [a for a in band_bridges(gp23)
             if a.source == aB and a.target == aB and not a.weak_only]
    assert sorted(a.label.literal() for a in loops) == ["1(v,-)", "b'"]


def test_factoring_weak_bridge_excluded(fig2_omega):
    # a b' -> (f e c a h g') via "f e c" splits through e d'
    aB = _prime(fig2_omega, "a b'")
    big = _prime(fig2_omega, "f e c a h g'")
    pairs = dict(bridges_between(fig2_omega, aB, big))
    label = parse_word("f e c")
    assert label in pairs and pairs[label] is True


def test_half_bridges_figure(gp23):
    minus = Word.lazy("v", -1)
    plus = Word.lazy("v", 1)
    by_target = {}
    for a in half_bridges_from(gp23, minus):
        by_target.setdefault(a.target.rep.literal(), []).append(a)
    got = {(a.label.literal(), a.weak_only) for a in by_target["a b'"]}
    assert got == {("1(v,-)", False), ("a", False), ("b'", True)}
    got = {(a.label.literal(), a.weak_only) for a in by_target["a b' b'"]}
    assert got == {("1(v,-)", False), ("a", False)}
    by_target = {}
    for a in half_bridges_from(gp23, plus):
        by_target.setdefault(a.target.rep.literal(), []).append(a)
    got = {(a.label.literal(), a.weak_only) for a in by_target["b b a'"]}
    assert got == {("1(v,+)", False), ("b", False), ("b b", True)}


def test_half_bridge_sigma_values(gp23):
    plus = Word.lazy("v", 1)
    arrows = {(a.target.rep.literal(), a.label.literal()): a.sigma_ba
              for a in weak_half_bridges_from(gp23, plus)}
    assert arrows[("b a'", "1(v,+)")] == 1  # exit a', an inverse
    assert arrows[("b b a'", "b")] == -1  # exit b, direct


def test_every_half_bridge_is_weak(gp23, lambda2):
    for alg in (gp23, lambda2):
        for lazy in alg.lazy_words():
            weak = {(a.target.rep, a.label) for a in weak_half_bridges_from(alg, lazy)}
            for a in half_bridges_from(alg, lazy):
                assert (a.target.rep, a.label) in weak


def test_zero_bridges_gp(gp23):
    plus = Word.lazy("v", 1)
    weak_from_plus = [a for a in zero_bridges(gp23) if a.source == plus]
    labels = {a.label.literal() for a in weak_from_plus}
    assert labels == {"1(v,+)", "b", "b b", "a'"}
    by_label = {a.label.literal(): a.weak_only for a in weak_from_plus}
    assert by_label["b"] is True  # factors through b a'


def test_extended_quiver_shapes(gp23, lambda2, single_arrow):
    q = build_extended_bridge_quiver(gp23, include_weak=True)
    assert len(q.vertices) == 4 + 2
    q2 = build_extended_bridge_quiver(single_arrow)
    assert all(not hasattr(v, "rep") for v in q2.vertices)  # lazy vertices only
    # lambda2's band quiver is acyclic apart from trivial loops
    edges = [a for a in band_bridges(lambda2)
             if not a.weak_only and not (a.source == a.target and len(a.label) == 0)]
    assert all(a.source != a.target for a in edges)
    assert {(a.source.rep.literal(), a.target.rep.literal(), a.label.literal())
            for a in edges} == {("a b'", "e d'", "e c"), ("d e'", "b a'", "c' e'")}


def test_dot_export(gp23):
    q = build_extended_bridge_quiver(gp23, include_weak=True)
    dot = q.to_dot()
    assert "style=dashed" in dot
    assert dot.startswith("digraph")


def test_classify(lambda2, gp23, fig2_omega, fig2_omega_plus_one,
                  fig2_omega_plus_two, single_arrow):
    c = classify_algebra(lambda2)
    assert (c.domestic, c.torsion_free, c.meta_union_cyclic, c.meta_torsion_free) == \
        (True, True, False, False)
    c = classify_algebra(gp23)
    assert (c.domestic, c.meta_union_cyclic, c.meta_torsion_free) == (False, True, True)
    assert "meta_band" in c.witnesses
    for alg in (fig2_omega, fig2_omega_plus_one, fig2_omega_plus_two):
        c = classify_algebra(alg)
        assert not c.domestic and c.meta_torsion_free
    c = classify_algebra(single_arrow)
    assert c.domestic and not c.meta_union_cyclic and not c.meta_torsion_free


def test_generate_string_example(ex333):
    band = canonical_band(ex333, parse_word("c d' b'"))
    lbl_in = parse_word("c d' a")
    lbl_out = parse_word("e b'")
    src = Word.lazy(ex333.source(lbl_in), -ex333.word_sigma(lbl_in))
    tgt = Word.lazy(ex333.target(lbl_out), ex333.word_epsilon(lbl_out))
    spec = PathSpec((
        BridgeArrow(source=src, target=band, label=lbl_in, kind="half", weak_only=None),
        BridgeArrow(source=band, target=tgt, label=lbl_out, kind="reverse_half",
                    weak_only=None),
    ), (-1,))
    assert generate_string(ex333, spec).literal() == "e a"
    with pytest.raises(NotAString):
        generate_string(ex333, PathSpec(spec.arrows, (-2,)))


def test_two_paths_generate_b_inverse(gp23):
    minus = Word.lazy("v", -1)
    aB = _prime(gp23, "a b'")
    aBB = _prime(gp23, "a b' b'")
    B = parse_word("b'")

    def path(through):
        return PathSpec((
            BridgeArrow(source=minus, target=through, label=minus, kind="half",
                        weak_only=None),
            BridgeArrow(source=through, target=aB, label=B, kind="bridge",
                        weak_only=None),
            BridgeArrow(source=aB, target=minus, label=minus, kind="reverse_half",
                        weak_only=None),
        ), (0, 0))

    assert generate_string(gp23, path(aB)) == B
    assert generate_string(gp23, path(aBB)) == B


def test_find_generating_path_shapes(gp23, lambda2):
    spec = find_generating_path(gp23, parse_word("b'"))
    assert generate_string(gp23, spec) == parse_word("b'")
    lazy = Word.lazy("v1", 1)
    spec = find_generating_path(lambda2, lazy)
    assert len(spec.arrows) == 1 and spec.arrows[0].kind == "zero"
    assert generate_string(lambda2, spec) == lazy
    u = parse_word("e c a b'")
    spec = find_generating_path(lambda2, u)
    assert [a.kind for a in spec.arrows] == ["half", "reverse_half"]
    assert spec.arrows[0].target.rep.literal() == "a b'"
    assert generate_string(lambda2, spec) == u


def test_roundtrip_all_fixtures(lambda2, gp23, nontf, ex333, fig2_omega,
                                fig2_omega_plus_one, fig2_omega_plus_two):
    for alg in (lambda2, gp23, nontf, ex333, fig2_omega,
                fig2_omega_plus_one, fig2_omega_plus_two):
        for u in alg.enumerate_strings(7):
            spec = find_generating_path(alg, u)
            assert generate_string(alg, spec) == u, (alg.name, u.literal())


def test_is_extendable(gp23, lambda2):
    ok, wit = is_extendable(gp23, parse_word("b' a"))
    assert ok and wit["kind"] == "subword"
    ok, _ = is_extendable(lambda2, parse_word("c"))
    assert not ok
    ok, _ = is_extendable(gp23, parse_word("b b"))
    assert ok


def test_quiver_arrow_count_stable_under_bound(gp23):
    from stringalg import bands as bandmod

    catalog = bandmod.band_free_catalog(gp23)
    longest = max(len(w) for w in catalog.strings)
    assert longest < catalog.length_bound  # one spare layer exists already
