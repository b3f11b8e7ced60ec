import random

import pytest
from hypothesis import given, strategies as st

from braidkit.core import BraidWord, delta_word, permutation_of
from braidkit.errors import BraidError
from braidkit.garside import (
    NormalForm, all_permutations, check_axioms, classical, count_positive_words_of_delta,
    delta_power, equal, identity_nf, inf_sup_len, invert, multiply, normalize,
    simple_word, staircase_hook_count, to_word,
)
from braidkit.representations import word_oracle_equal

from strategies import word_pairs, words


def W(n, *letters):
    return BraidWord(n, letters)


def perm0(w):
    return tuple(x - 1 for x in permutation_of(w))


def test_trivial_forms():
    assert normalize(W(2, 1, -1)) == NormalForm("classical", 2, 0, ())
    assert normalize(W(2, -1)) == NormalForm("classical", 2, -1, ())
    assert str(normalize(W(2, -1))) == "D^-1"


def test_left_greedy_example():
    nf = normalize(W(4, 1, 3, 2, 2, 1, 3, 3, 2, 3, 2))
    want = [W(4, 1, 3, 2, 1), W(4, 2, 1, 3, 2), W(4, 2), W(4, 2)]
    assert nf.inf == 0
    assert nf.factors == tuple(perm0(f) for f in want)
    assert str(nf) == "D^0 | 4 2 1 3 | 3 4 1 2 | 1 3 2 4 | 1 3 2 4"
    assert (nf.inf, nf.sup, nf.canonical_length) == (0, 4, 4)


def test_equal_examples():
    assert equal(W(3, 1, 2, 1), W(3, 2, 1, 2))
    assert equal(W(4, 1, 3), W(4, 3, 1))
    assert not equal(W(3, 1), W(3, 2))
    with pytest.raises(BraidError):
        equal(W(3, 1), W(4, 1))


def test_multiply_and_invert_examples():
    x = normalize(W(4, 1, -2, 3, 3, -1))
    assert multiply(x, invert(x)) == identity_nf("classical", 4)
    d = delta_power("classical", 4, 1)
    assert multiply(d, d) == delta_power("classical", 4, 2)
    with pytest.raises(BraidError):
        multiply(x, identity_nf("classical", 3))


def test_inf_sup_len():
    assert inf_sup_len(W(3)) == (0, 0, 0)
    d3 = W(3, 1, 2) * W(3, 1, 2) * W(3, 1, 2)
    assert inf_sup_len(d3) == (2, 2, 0)


def test_simple_word_spells_permutation():
    for n in range(2, 6):
        for p in all_permutations(n):
            assert perm0(simple_word(p)) == p
            assert len(simple_word(p)) == classical(n).length(p)


@pytest.mark.parametrize("n, count", [(2, 1), (3, 2), (4, 16), (5, 768)])
def test_positive_words_of_delta(n, count):
    assert count_positive_words_of_delta(n) == count
    assert staircase_hook_count(n) == count


def test_axioms_hold_for_classical_structures():
    for n in range(2, 5):
        assert check_axioms(classical(n)) == []


def test_simple_counts():
    for n in range(2, 6):
        assert len(classical(n).simples()) == len(all_permutations(n))


def _positive(w):
    return normalize(w).inf >= 0


def _left_weighted_by_positivity(a, b):
    # the starting set of b lies inside the finishing set of a
    n = len(a)
    wa, wb = simple_word(a), simple_word(b)
    for i in range(1, n):
        s_inv = W(n, -i)
        if _positive(s_inv * wb) and not _positive(wa * s_inv):
            return False
    return True


@given(words(max_n=5, max_len=14))
def test_normal_form_shape(w):
    nf = normalize(w)
    S = classical(w.n)
    for f in nf.factors:
        assert f != S.identity and f != S.delta
    for a, b in zip(nf.factors, nf.factors[1:]):
        assert S.is_left_weighted(a, b)
        assert _left_weighted_by_positivity(a, b)


@given(words(max_n=5, max_len=12))
def test_normalize_idempotent_and_faithful(w):
    nf = normalize(w)
    back = to_word(nf)
    assert normalize(back) == nf
    assert word_oracle_equal(back, w)


def _relation_move(rng, w):
    letters = list(w.letters)
    n = w.n
    i = rng.randint(0, len(letters))
    j = rng.randint(1, n - 1)
    e = rng.choice((1, -1))
    if n >= 3 and j < n - 1 and rng.random() < 0.5:
        a, b = j, j + 1
        ins = [a * e, b * e, a * e, -b * e, -a * e, -b * e]
    else:
        k = rng.randint(1, n - 1)
        if abs(k - j) < 2:
            ins = [j * e, -j * e]
        else:
            ins = [j * e, k, -j * e, -k]
    return BraidWord(n, tuple(letters[:i] + ins + letters[i:]))


@given(words(min_n=3, max_n=5, max_len=10), st.integers(0, 10 ** 6))
def test_normalize_constant_on_relation_moves(w, seed):
    rng = random.Random(seed)
    v = w
    for _ in range(3):
        v = _relation_move(rng, v)
    assert normalize(v) == normalize(w)


@given(word_pairs(max_n=5, max_len=12))
def test_equal_agrees_with_artin_action(pair):
    u, v = pair
    assert equal(u, v) == word_oracle_equal(u, v)
    assert equal(u * v.inverse() * v, u)


@given(word_pairs(max_n=5, max_len=8))
def test_multiply_is_concatenation(pair):
    u, v = pair
    assert multiply(normalize(u), normalize(v)) == normalize(u * v)


@given(words(max_n=5, max_len=12))
def test_inverse_swaps_inf_and_sup(w):
    nf = normalize(w)
    inv = invert(nf)
    assert inv == normalize(w.inverse())
    assert inv.inf == -nf.sup
    assert inv.sup == -nf.inf


def test_delta_word_normalizes_to_delta():
    for n in range(2, 8):
        assert normalize(delta_word(n)) == delta_power("classical", n, 1)
