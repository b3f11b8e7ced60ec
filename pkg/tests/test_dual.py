import pytest
from hypothesis import given

from braidkit.core import BraidWord, delta_word
from braidkit.dual import (
    BandWord, band_to_classical, blocks_of, catalan, classical_to_band, delta_band, dual,
    dual_divisors, dual_nf_band_word, dual_nf_to_word, dual_normalize,
    dual_normalize_classical, is_noncrossing, noncrossing_partitions, render_dual_simple,
    verify_dual_relations,
)
from braidkit.errors import BraidError
from braidkit.garside import check_axioms, equal, normalize

from strategies import word_pairs, words


def test_band_text_roundtrip():
    b = BandWord.parse("4: (3,1) -(4,2)")
    assert b.letters == ((3, 1, 1), (4, 2, -1))
    assert str(b) == "4: (3,1) -(4,2)"
    # the pair is unordered
    assert BandWord.parse("3: (1,3)") == BandWord.parse("3: (3,1)")
    with pytest.raises(BraidError):
        BandWord.parse("3: (2,2)")
    with pytest.raises(BraidError):
        BandWord.parse("3: (4,1)")


def test_band_to_classical_examples():
    for n in range(2, 6):
        for i in range(1, n):
            b = BandWord(n, ((i + 1, i, 1),))
            assert band_to_classical(b) == BraidWord(n, (i,))
    assert band_to_classical(BandWord.parse("3: (3,1)")) == BraidWord(3, (2, 1, -2))
    b = BandWord.parse("4: (4,1) -(3,2) (4,2)")
    assert equal(band_to_classical(b.inverse()), band_to_classical(b).inverse())


def test_delta_band():
    assert delta_band(2) == BandWord.parse("2: (2,1)")
    assert len(delta_band(5)) == 4
    for n in range(2, 7):
        d = band_to_classical(delta_band(n))
        assert equal(d ** n, delta_word(n) ** 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_divisor_counts_are_catalan(n):
    assert len(dual_divisors(n)) == catalan(n)
    assert len(list(noncrossing_partitions(n))) == catalan(n)


def test_small_divisor_sets():
    assert [render_dual_simple(p) for p in dual_divisors(2)] == ["", "(2 1)"]
    assert len(dual_divisors(3)) == 5
    assert len(dual_divisors(4)) == 14


def test_divisors_are_noncrossing_descending_cycles():
    for p in dual_divisors(6):
        assert is_noncrossing(blocks_of(p))
    assert not is_noncrossing([(1, 3), (2, 4)])
    assert is_noncrossing([(1, 4), (2, 3)])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_dual_relations(n):
    assert verify_dual_relations(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_dual_axioms(n):
    assert check_axioms(dual(n)) == []


def test_dual_normalize_examples():
    assert str(dual_normalize(delta_band(4))) == "D^1"
    assert dual_normalize(BandWord.parse("3: (2,1) -(2,1)")).is_identity()
    nf = dual_normalize(BandWord.parse("4: (4,3) (3,1)"))
    assert nf.inf == 0 and nf.canonical_length == 1
    assert str(nf) == "D^0 | (4 3 1)"
    # the other order is not a descending cycle, so it takes two factors
    assert dual_normalize(BandWord.parse("4: (3,1) (4,3)")).canonical_length == 2


@given(words(max_n=5, max_len=10))
def test_band_roundtrip_preserves_element(w):
    assert equal(band_to_classical(classical_to_band(w)), w)
    nf = dual_normalize_classical(w)
    assert equal(dual_nf_to_word(nf), w)
    assert dual_normalize(dual_nf_band_word(nf)) == nf


@given(word_pairs(max_n=4, max_len=8))
def test_classical_and_dual_agree(pair):
    u, v = pair
    same_dual = dual_normalize_classical(u) == dual_normalize_classical(v)
    assert same_dual == (normalize(u) == normalize(v))


@given(words(max_n=5, max_len=10))
def test_dual_factors_are_left_weighted(w):
    nf = dual_normalize_classical(w)
    S = dual(w.n)
    for f in nf.factors:
        assert f not in (S.identity, S.delta)
    for a, b in zip(nf.factors, nf.factors[1:]):
        assert S.is_left_weighted(a, b)
