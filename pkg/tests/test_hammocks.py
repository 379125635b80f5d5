import pytest

from stringalg import (
    HammockRef,
    Word,
    compare,
    interval_is_finite,
    is_torsion_free,
    one_sided_expansion,
    parse_word,
)
from stringalg.errors import GradedIndexError, NotInHammock, UndefinedOperator
from stringalg.hammocks import (
    OPS,
    apply_op,
    interval_pump_witness,
    op_l,
    op_l_graded,
    op_lbar,
    op_r,
    op_rbar,
    predecessor,
    successor,
)


def test_operators_lambda2(lambda2):
    a = parse_word("a")
    assert op_l(lambda2, a).literal() == "e c a b' a"
    assert op_lbar(lambda2, a).literal() == "c a"
    assert op_l(lambda2, parse_word("c")) is None


def test_graded_lambda2(lambda2):
    a = parse_word("a")
    assert op_l_graded(lambda2, a, 0).literal() == "e c a b' a"
    assert op_l_graded(lambda2, a, 1).literal() == "c a b' a"
    assert op_l_graded(lambda2, a, 3).literal() == "b' a"
    with pytest.raises(GradedIndexError):
        op_l_graded(lambda2, a, 4)
    with pytest.raises(UndefinedOperator):
        op_l_graded(lambda2, parse_word("c"), 0)


def test_graded_gp(gp23):
    assert op_l_graded(gp23, Word.lazy("v", -1), 1).literal() == "b'"


def test_right_operators_mirror(lambda2):
    # r acts on the source end: appending to a' mirrors prepending to a
    A = parse_word("a'")
    assert op_r(lambda2, A).literal() == "a' b a' c' e'"
    assert op_rbar(lambda2, A).literal() == "a' c'"


def test_compare_examples(lambda2):
    h = HammockRef("v1", "l")
    a = parse_word("a")
    assert compare(lambda2, a, op_l(lambda2, a), h) == "less"
    assert compare(lambda2, parse_word("c a"), a, h) == "less"
    assert compare(lambda2, a, a, h) == "equal"
    with pytest.raises(NotInHammock):
        compare(lambda2, a, parse_word("b"), h)


def test_lazy_root_comparisons(lambda2):
    h = HammockRef("v1", "l")
    root = Word.lazy("v1", 1)
    # direct extension sorts below the lazy root, inverse above
    assert compare(lambda2, parse_word("a"), root, h) == "less"
    assert lambda2.word_sigma(parse_word("a")) == -1


def test_successor_is_order_theoretic(lambda2, gp23):
    from stringalg.oracle import check_successors

    assert check_successors(lambda2, member_len=6, search_len=10).passed
    assert check_successors(gp23, member_len=6, search_len=10).passed


def test_successor_length_change(lambda2):
    for w in lambda2.enumerate_strings(6):
        for side in ("l", "r"):
            s = successor(lambda2, w, side)
            if s is not None:
                assert len(s) != len(w)
            p = predecessor(lambda2, w, side)
            if p is not None:
                assert len(p) != len(w)


def test_opposite_operator_not_defined(lambda2, gp23):
    for alg in (lambda2, gp23):
        for w in alg.enumerate_strings(6):
            left = op_l(alg, w)
            if left is not None:
                assert op_lbar(alg, left) is None
            bar = op_lbar(alg, w)
            if bar is not None:
                assert op_l(alg, bar) is None


def test_expansions(gp23, nontf, fig2_omega_plus_one):
    res = one_sided_expansion(gp23, Word.lazy("v", -1), "l")
    assert res.defined
    assert res.period_rotation.literal() == "a b'"
    assert res.preperiod is None
    assert res.period_band.prime

    res = one_sided_expansion(nontf, parse_word("a"), "lbar")
    assert not res.defined and res.failed_at_step == 2

    cD = parse_word("c d'")
    res = one_sided_expansion(fig2_omega_plus_one, cD, "l")
    assert res.defined and res.period_band.rep.literal() == "c d'"
    assert res.preperiod is None


def test_expansion_periods_are_prime(gp23, lambda2):
    for alg in (gp23, lambda2):
        for w in alg.enumerate_strings(5):
            for op in OPS:
                res = one_sided_expansion(alg, w, op)
                if res.defined:
                    assert res.period_band.prime


def test_torsion_freeness(lambda2, gp23, nontf, single_arrow):
    assert is_torsion_free(lambda2) == (True, None)
    assert is_torsion_free(gp23) == (True, None)
    ok, witness = is_torsion_free(nontf)
    assert not ok
    assert witness == (parse_word("a"), "lbar")
    assert apply_op(nontf, "lbar", parse_word("a")).literal() == "c a"
    assert apply_op(nontf, "lbar", parse_word("c a")) is None
    assert is_torsion_free(single_arrow) == (True, None)


def test_interval_finiteness(gp23, lambda2):
    finite, _ = interval_is_finite(gp23, "v", -1, 0)
    assert finite
    finite, witness = interval_is_finite(gp23, "v", -1, 1)
    assert not finite
    assert witness.band.rep.literal() == "a b'"
    assert gp23.is_string(witness.word)
    finite, _ = interval_is_finite(lambda2, "v2", 1, 0)
    assert finite
    finite, _ = interval_is_finite(lambda2, "v2", 1, 1)
    assert not finite
    with pytest.raises(UndefinedOperator):
        interval_is_finite(lambda2, "v1", 1, 0)


def test_interval_witness_pumps(gp23):
    _, witness = interval_is_finite(gp23, "v", -1, 1)
    doubled = gp23.try_concat(Word.of(witness.rotation.syllables), witness.word)
    assert doubled is not None  # the band really can be pumped


def test_interval_pump_direction(lambda2):
    # no direct extension above e c a b' a: the interval is finite
    assert interval_pump_witness(lambda2, parse_word("e c a b' a"), True) is None
    # inverse-boundary query above d': pumped by e d'
    wit = interval_pump_witness(lambda2, parse_word("e d'"), False)
    assert wit is None or wit.band is not None
