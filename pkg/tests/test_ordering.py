import pytest
from hypothesis import given

from braidkit.core import BraidWord, delta_word
from braidkit.errors import BraidError
from braidkit.garside import equal
from braidkit.ordering import (
    OrderResult, compare, handle_reduce, is_positive, sigma_sign, torsion_probe,
)

from strategies import positive_words, word_pairs, words

LESS, EQUAL, GREATER = OrderResult.LESS, OrderResult.EQUAL, OrderResult.GREATER


def W(n, *letters):
    return BraidWord(n, letters)


def test_compare_examples():
    assert compare(W(3), W(3, 1)) is LESS
    assert compare(W(3, 2), W(3, 1)) is LESS
    assert compare(W(3, 1, 2, 1), W(3, 2, 1, 2)) is EQUAL
    g = W(3, 1, -2)
    assert compare(g, g * g) is LESS
    assert str(LESS) == "<"
    with pytest.raises(BraidError):
        compare(W(3), W(4))


def test_handle_reduction_example():
    # s1 s2 s1^-1 is a handle and becomes s2^-1 s1 s2
    assert handle_reduce(W(3, 1, 2, -1)) == W(3, -2, 1, 2)
    assert sigma_sign(W(3, 1, 2, -1)) == 1
    assert sigma_sign(W(3, 2, -1)) == -1


def test_is_positive_examples():
    assert is_positive(W(4, 3, 2, 1))
    assert not is_positive(W(4))
    assert not is_positive(W(3, -1, 2))


def test_torsion_probe_examples():
    assert torsion_probe(W(2, 1), 5)
    assert torsion_probe(W(3, 1, -2), 4)
    assert torsion_probe(delta_word(3), 3)
    with pytest.raises(BraidError):
        torsion_probe(W(3, 1, -1), 2)
    with pytest.raises(BraidError):
        torsion_probe(W(3, 1), 0)


@given(word_pairs(max_n=4, max_len=8))
def test_equal_iff_equal(pair):
    u, v = pair
    assert (compare(u, v) is EQUAL) == equal(u, v)


@given(word_pairs(max_n=4, max_len=8))
def test_antisymmetry(pair):
    u, v = pair
    flip = {LESS: GREATER, GREATER: LESS, EQUAL: EQUAL}
    assert compare(v, u) is flip[compare(u, v)]


@given(words(max_n=4, max_len=6), words(max_n=4, max_len=6), words(max_n=4, max_len=6))
def test_transitive_and_left_invariant(u, v, w):
    n = u.n
    v = BraidWord(n, tuple(x for x in v.letters if abs(x) < n))
    w = BraidWord(n, tuple(x for x in w.letters if abs(x) < n))
    a, b = compare(u, v), compare(v, w)
    if a is LESS and b is LESS:
        assert compare(u, w) is LESS
    assert compare(w * u, w * v) is a


@given(positive_words(max_n=4, min_len=1))
def test_positive_words_are_positive(w):
    assert is_positive(w)
    assert not is_positive(w.inverse())


@given(words(max_n=4, max_len=8))
def test_reduced_word_is_equal_and_handle_free(w):
    r = handle_reduce(w)
    assert equal(r, w)
    assert not (is_positive(w) and is_positive(w.inverse()))


@given(words(max_n=4, max_len=6))
def test_torsion_probe_on_nontrivial_braids(w):
    if sigma_sign(w) != 0:
        assert torsion_probe(w, 3)
