import pytest

from stringalg import (
    canonical_band,
    contains_band_rotation,
    enumerate_bands,
    enumerate_prime_bands,
    is_band,
    is_band_free,
    is_prime_band,
    parse_word,
)
from stringalg.bands import (
    band_free_catalog,
    band_free_length_bound,
    is_band_rotation,
    mixed_pair_count,
    prime_band_length_bound,
)
from stringalg.errors import NotABand
from stringalg.words import Word


def test_is_band_examples(lambda2, gp23):
    assert is_band(lambda2, parse_word("a b'"))
    assert is_band(gp23, parse_word("a b' a b' b'"))  # a non-prime band
    assert not is_band(gp23, parse_word("a b' a b'"))  # proper power
    assert not is_band(gp23, parse_word("a"))
    assert not gp23.is_string(parse_word("a a'").syllables)


def test_is_band_rotation_invariance(gp23):
    for lit in ("a b'", "a b' b'", "b b a'"):
        seq = parse_word(lit).syllables
        for i in range(len(seq)):
            assert is_band_rotation(gp23, seq[i:] + seq[:i])


def test_canonical_band(gp23, lambda2):
    b = canonical_band(gp23, parse_word("b' a b'"))  # a rotation of a b' b'
    assert b.rep.literal() == "a b' b'"
    assert canonical_band(lambda2, parse_word("b' a")).rep.literal() == "a b'"
    assert not canonical_band(gp23, parse_word("a b' a b' b'")).prime
    with pytest.raises(NotABand):
        canonical_band(gp23, parse_word("a"))


def test_prime_flags(gp23, lambda2):
    assert is_prime_band(gp23, parse_word("a b' b'"))
    assert not is_prime_band(gp23, parse_word("a b' b' a b'"))
    # every band of a domestic algebra is prime
    for b in enumerate_bands(lambda2, 8):
        assert b.prime


def test_enumerate_prime_bands(lambda2, gp23, fig2_omega_plus_one):
    assert [b.rep.literal() for b in enumerate_prime_bands(lambda2)] == \
        ["a b'", "b a'", "d e'", "e d'"]
    assert [b.rep.literal() for b in enumerate_prime_bands(gp23)] == \
        ["a b'", "b a'", "a b' b'", "b b a'"]
    reps = {b.rep.literal() for b in enumerate_prime_bands(fig2_omega_plus_one)}
    assert reps == {"a b'", "b a'", "c d'", "d c'"}


def test_prime_band_enumeration_matches_oracle(gp23, lambda2):
    from stringalg.oracle import oracle_prime_bands

    for alg, cap in ((gp23, 5), (lambda2, 6)):
        slow = {w.literal() for w in oracle_prime_bands(alg, cap)}
        fast = {b.rep.literal() for b in enumerate_prime_bands(alg)
                if len(b.rep) <= cap}
        assert slow == fast


def test_bounds(gp23, lambda2):
    assert mixed_pair_count(gp23) == 2
    assert gp23.max_direct_path_length == 2
    assert prime_band_length_bound(gp23) == 12
    assert band_free_length_bound(gp23) == 10
    assert mixed_pair_count(lambda2) == 4
    assert lambda2.max_direct_path_length == 3


def test_band_free_catalog(gp23, lambda2):
    got = [w.literal() for w in band_free_catalog(gp23).strings]
    assert got == ["1(v,+)", "1(v,-)", "a", "b", "a'", "b'", "b b", "b' b'"]
    assert is_band_free(gp23, parse_word("b' b'"))
    assert not is_band_free(gp23, parse_word("a b'"))
    assert is_band_free(lambda2, parse_word("e c a"))
    # "c a b'" contains the band a b'
    assert not is_band_free(lambda2, parse_word("c a b'"))
    assert is_band_free(lambda2, Word.lazy("v1", 1))


def test_band_free_strings_are_band_free(lambda2):
    for w in band_free_catalog(lambda2).strings:
        assert contains_band_rotation(lambda2, w) is None


def test_contains_band_rotation(gp23, lambda2):
    band, offset = contains_band_rotation(gp23, parse_word("b' a b'"))
    assert (band.rep.literal(), offset) == ("a b'", 0)
    assert contains_band_rotation(lambda2, parse_word("e c a")) is None
    assert contains_band_rotation(gp23, Word.lazy("v", 1)) is None


def test_band_free_sharpness(gp23):
    # one past the bound, every string contains a band rotation
    edge = band_free_length_bound(gp23) + 1
    words = [w for w in gp23.enumerate_strings(edge) if len(w) == edge]
    assert words
    for w in words:
        assert contains_band_rotation(gp23, w) is not None


def test_mixed_pair_at_most_once_in_primes(gp23, fig2_omega):
    for alg in (gp23, fig2_omega):
        for band in enumerate_prime_bands(alg):
            for rot in band.rotations():
                seen = set()
                for left, right in zip(rot, rot[1:]):
                    if left.direct and not right.direct:
                        assert (left.arrow, right.arrow) not in seen
                        seen.add((left.arrow, right.arrow))


def test_band_enumeration_matches_bruteforce(lambda2):
    from stringalg.oracle import oracle_bands

    slow = {w.literal() for w in oracle_bands(lambda2, 6)}
    fast = {b.rep.literal() for b in enumerate_bands(lambda2, 6)}
    assert slow == fast == {"a b'", "b a'", "d e'", "e d'"}


def test_fig2_omega_prime_bands(fig2_omega):
    reps = [b.rep.literal() for b in enumerate_prime_bands(fig2_omega)]
    assert len(reps) == 6  # three up to inverse
    assert "f e c a h g'" in reps and "g h' a' c' e' f'" in reps
