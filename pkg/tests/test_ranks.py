import pytest

from stringalg import (
    BBMap,
    SSMap,
    Word,
    canonical_band,
    dichotomy_audit,
    enumerate_prime_bands,
    find_recursive_system,
    inclusion_terms,
    parse_word,
    rank_bb,
    rank_bs,
    rank_sb,
    rank_ss,
    stable_rank_estimate,
)
from stringalg.errors import (
    NotAnImageSubstring,
    NotAnInclusionShape,
    NotMetaTorsionFree,
)
from stringalg.ranks import (
    EXACTLY_OMEGA,
    EXACTLY_OMEGA_PLUS_ONE,
    FINITE,
    INDETERMINATE,
    STABLE_RADICAL,
    biinfinite_substrings,
    evaluate_term,
    verify_recursive_system,
)


def _prime(alg, literal):
    for b in enumerate_prime_bands(alg):
        if b.rep.literal() == literal:
            return b
    raise AssertionError(literal)


def test_inclusion_terms(gp23, lambda2):
    term = inclusion_terms(gp23, Word.lazy("v", -1), parse_word("b'"))
    assert term.factors == (("l", 1),)
    assert term.base == ("v", -1)
    assert term.render() == "l_1"
    ident = inclusion_terms(lambda2, parse_word("a"), parse_word("a"))
    assert ident.factors == ()
    term = inclusion_terms(lambda2, parse_word("a"), parse_word("e c a b' a"))
    assert term.factors == (("l", 0),)
    with pytest.raises(NotAnInclusionShape):
        inclusion_terms(lambda2, parse_word("a"), parse_word("c a"))


def test_term_evaluation_matches_words(gp23):
    term = inclusion_terms(gp23, Word.lazy("v", -1), parse_word("a b' b' a b'"))
    assert term.render() == "l l_1 l"
    assert evaluate_term(gp23, term, Word.lazy("v", -1)) == parse_word("a b' b' a b'")


def test_recursive_system_gp(gp23):
    wit = find_recursive_system(gp23, parse_word("b'"), ("v", -1))
    assert wit is not None
    assert wit.tau.factors == (("l", 1),)
    assert wit.tau1.factors == (("l", 0),)
    assert wit.tau2.factors == (("l", 0),)
    assert wit.mu.factors == (("lbar", 0), ("lbar", 1))
    assert wit.mu.render() == "lbar_1 lbar"
    assert wit.band_b.rep.literal() == "a b'"
    assert wit.band_b_prime.rep.literal() == "a b' b'"
    assert verify_recursive_system(gp23, wit)


def test_recursive_system_absent_on_lambda2(lambda2):
    x = parse_word("b'")
    base = ("v2", -lambda2.word_sigma(x))
    assert find_recursive_system(lambda2, x, base) is None


def test_recursive_system_precondition(gp23):
    with pytest.raises(NotAnInclusionShape):
        find_recursive_system(gp23, parse_word("a"), ("v", -1))


def test_rank_ss_gp_stable(gp23):
    lazy = Word.lazy("v", -1)
    cls = rank_ss(gp23, SSMap(w=lazy, v=lazy, u=parse_word("b'")))
    assert cls.label == STABLE_RADICAL
    assert cls.witness is not None


def test_rank_ss_band_power_inclusions_finite(fig2_omega_plus_one):
    alg = fig2_omega_plus_one
    cD = parse_word("c d'")
    cDcD = parse_word("c d' c d'")
    assert rank_ss(alg, SSMap(w=cD, v=cD, u=cDcD)).label == FINITE


def test_rank_ss_indeterminate_on_lambda2(lambda2):
    lazy = Word.lazy("v4", -1)
    cls = rank_ss(lambda2, SSMap(w=lazy, v=lazy, u=parse_word("d'")))
    assert cls.label == INDETERMINATE


def test_rank_ss_finite_when_no_extension(lambda2):
    a = parse_word("a")
    cls = rank_ss(lambda2, SSMap(w=a, v=a, u=parse_word("e c a b' a")))
    assert cls.label == FINITE


def test_biinfinite_substrings(fig2_omega_plus_one):
    alg = fig2_omega_plus_one
    cD = _prime(alg, "c d'")
    images = biinfinite_substrings(alg, cD, "image", 6)
    literals = {w.literal() for w in images}
    assert "c d'" in literals and "c d' c d'" in literals
    assert any(w.is_lazy for w in images)


def test_rank_sb_examples(fig2_omega_plus_one, gp23):
    alg = fig2_omega_plus_one
    cD = _prime(alg, "c d'")
    aB = _prime(alg, "a b'")
    assert rank_sb(alg, cD, parse_word("c d'")).label == EXACTLY_OMEGA
    assert rank_sb(alg, cD, parse_word("c d' c d'")).label == EXACTLY_OMEGA
    assert rank_sb(alg, aB, parse_word("a b'")).label == STABLE_RADICAL
    gp_aB = _prime(gp23, "a b'")
    assert rank_sb(gp23, gp_aB, parse_word("a b'")).label == STABLE_RADICAL
    with pytest.raises(NotAnImageSubstring):
        rank_sb(alg, cD, parse_word("d'"))


def test_rank_sb_composite_band(gp23):
    composite = canonical_band(gp23, parse_word("a b' b' a b'"))
    assert not composite.prime
    v = parse_word("a b'")
    cls = rank_sb(gp23, composite, v)
    assert cls.label == STABLE_RADICAL
    assert cls.witness == {"reason": "composite band"}


def test_rank_bs_examples(fig2_omega_plus_one):
    alg = fig2_omega_plus_one
    aB = _prime(alg, "a b'")
    cD = _prime(alg, "c d'")
    assert rank_bs(alg, aB, parse_word("b' a")).label == EXACTLY_OMEGA
    assert rank_bs(alg, cD, parse_word("d' c")).label == STABLE_RADICAL


def test_rank_bb(fig2_omega_plus_two, gp23):
    alg = fig2_omega_plus_two
    aB = _prime(alg, "a b'")
    cD = _prime(alg, "c d'")
    hom = rank_bb(alg, BBMap(source_band=aB, target_band=aB, hom_label="t"))
    assert hom.label == FINITE
    # the composition through the shared lazy path at v1
    lazy = Word.lazy("v1", alg.syl_epsilon(parse_word("c").syllables[0]))
    cls = rank_bb(alg, BBMap(source_band=aB, target_band=cD, v=lazy))
    assert cls.label == EXACTLY_OMEGA_PLUS_ONE
    gp_aB = _prime(gp23, "a b'")
    cls = rank_bb(gp23, BBMap(source_band=gp_aB, target_band=gp_aB,
                              v=parse_word("a b'")))
    assert cls.label == STABLE_RADICAL


def test_stable_rank_table(fig2_omega, fig2_omega_plus_one, fig2_omega_plus_two):
    assert stable_rank_estimate(fig2_omega).value == "omega"
    est = stable_rank_estimate(fig2_omega_plus_one)
    assert est.value == "omega_plus_one"
    assert est.sb_omega and est.bs_omega and est.composable_pair is None
    est = stable_rank_estimate(fig2_omega_plus_two)
    assert est.value == "omega_plus_two"
    (bs_band, bs_v), (sb_band, sb_v) = est.composable_pair
    assert bs_v.is_lazy and sb_v.is_lazy and bs_v.vertex == sb_v.vertex == "v1"


def test_stable_rank_precondition(lambda2):
    with pytest.raises(NotMetaTorsionFree):
        stable_rank_estimate(lambda2)


def test_rank_omega_witnesses_follow_band(fig2_omega_plus_one):
    # every surviving family keeps both expansions inside its own band word
    from stringalg.hammocks import one_sided_expansion

    est = stable_rank_estimate(fig2_omega_plus_one)
    for band, v in est.sb_omega:
        if v.is_lazy:
            continue
        res = one_sided_expansion(fig2_omega_plus_one, v, "l")
        assert res.defined and res.preperiod is None
        assert canonical_band(fig2_omega_plus_one, res.period_rotation).rep == band.rep


def test_composition_of_omega_legs_never_below_omega_plus_one(fig2_omega_plus_two):
    alg = fig2_omega_plus_two
    for band in enumerate_prime_bands(alg):
        for v in biinfinite_substrings(alg, band, "factor", 4):
            for band2 in enumerate_prime_bands(alg):
                try:
                    cls = rank_bb(alg, BBMap(source_band=band, target_band=band2, v=v))
                except Exception:
                    continue
                assert cls.label in (STABLE_RADICAL, EXACTLY_OMEGA_PLUS_ONE)


def test_dichotomy_audit(fig2_omega_plus_one, lambda2):
    counts, indet = dichotomy_audit(fig2_omega_plus_one, max_len=6)
    assert counts[INDETERMINATE] == 0
    assert counts[FINITE] > 0 and counts[STABLE_RADICAL] > 0
    counts, indet = dichotomy_audit(lambda2, max_len=4)
    assert counts[INDETERMINATE] > 0
    assert indet


def test_stable_radical_witness_reverifies(gp23):
    lazy = Word.lazy("v", -1)
    cls = rank_ss(gp23, SSMap(w=lazy, v=lazy, u=parse_word("b'")))
    wit = cls.witness
    assert gp23.is_string(wit.word)
    pumped = gp23.try_concat(Word.of(wit.rotation.syllables), wit.word)
    assert pumped is not None
