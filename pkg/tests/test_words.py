import pytest

from stringalg import Syllable, Word, invert_word, parse_word, word_to_json
from stringalg.errors import NotAString, NotComposable
from stringalg.words import word_from_json


def test_parse_render_roundtrip():
    for text in ["a", "a b'", "d' e c a b'", "1(v,+)", "1(v2,-)"]:
        assert parse_word(text).literal() == text


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_word("")
    with pytest.raises(ValueError):
        parse_word("a''")


def test_lazy_inverse_flips_sign():
    w = Word.lazy("v", 1)
    assert invert_word(w) == Word.lazy("v", -1)


def test_invert_is_involution():
    w = parse_word("d' e c a b'")
    assert invert_word(invert_word(w)) == w
    assert invert_word(parse_word("a b'")) == parse_word("b a'")


def test_json_roundtrip():
    for text in ["d' e c a b'", "1(v,-)"]:
        w = parse_word(text)
        assert word_from_json(word_to_json(w)) == w


def test_is_string_examples(lambda2):
    assert lambda2.is_string(parse_word("d' e c a b'"))
    assert not lambda2.is_string(parse_word("c b").syllables)
    assert not lambda2.is_string(parse_word("a a'").syllables)


def test_concat_examples(lambda2, gp23):
    v = lambda2.concat(parse_word("e c"), parse_word("a b'"))
    assert v.literal() == "e c a b'"
    # lazy absorption: sigma(a) = 1 over gp23
    assert gp23.concat(parse_word("a"), Word.lazy("v", -1)) == parse_word("a")
    with pytest.raises(NotAString):
        lambda2.concat(parse_word("c"), parse_word("b"))
    with pytest.raises(NotComposable):
        lambda2.concat(parse_word("a"), parse_word("c"))


def test_sign_data(gp23, lambda2):
    src, tgt, sig, eps = gp23.sign_data(parse_word("b'"))
    assert (sig, eps) == (1, -1)
    assert gp23.sign_data(Word.lazy("v", 1))[2:] == (-1, 1)
    src, tgt, _, _ = lambda2.sign_data(parse_word("e c a b'"))
    assert (src, tgt) == ("v2", "v4")


def test_sign_inversion_identity(lambda2):
    for w in lambda2.enumerate_strings(8):
        inv = invert_word(w)
        assert lambda2.word_sigma(inv) == lambda2.word_epsilon(w)
        assert lambda2.word_epsilon(inv) == lambda2.word_sigma(w)


def test_concat_lengths_and_endpoints(lambda2):
    words = lambda2.enumerate_strings(4)
    checked = 0
    for v in words:
        for u in words:
            got = lambda2.try_concat(v, u)
            if got is None:
                continue
            checked += 1
            assert len(got) == len(v) + len(u)
            assert lambda2.source(got) == lambda2.source(u)
            assert lambda2.target(got) == lambda2.target(v)
    assert checked > 50


def test_image_and_factor_substrings(lambda2):
    u = parse_word("d' e c a b'")
    image = {(w.start, w.end) for w in lambda2.image_substrings(u)}
    factor = {(w.start, w.end) for w in lambda2.factor_substrings(u)}
    assert (1, 3) in image  # e c
    assert (2, 4) in factor  # c a
    c = parse_word("c")
    whole = {(w.start, w.end) for w in lambda2.image_substrings(c)}
    assert (0, 1) in whole


def test_lazy_substring_witnesses(lambda2):
    u = parse_word("d' e c a b'")
    gaps = [w for w in lambda2.image_substrings(u, include_lazy=True) if w.start == w.end]
    # between d' and e, and at the source end after b'
    assert [(w.start, w.end) for w in gaps] == [(1, 1), (5, 5)]
    assert lambda2.subword(u, 1, 1) == Word.lazy("v4", lambda2.epsilon["e"])
    assert lambda2.subword(u, 5, 5) == Word.lazy("v2", -lambda2.word_sigma(u))


def test_enumerate_strings_examples(lambda2, gp23):
    ones = [w for w in lambda2.enumerate_strings(1, collapse_inverses=True) if len(w) == 1]
    assert sorted(w.literal() for w in ones) == ["a", "b", "c", "d", "e"]
    zeros = gp23.enumerate_strings(0)
    assert sorted(w.literal() for w in zeros) == ["1(v,+)", "1(v,-)"]
    twos = {w.literal() for w in gp23.enumerate_strings(2, collapse_inverses=True)}
    assert "a b'" in twos and "b' a" in twos and "a b" not in twos


def test_enumeration_matches_naive(nontf):
    from stringalg.oracle import check_enumeration_naive

    assert check_enumeration_naive(nontf, cap=6).passed
