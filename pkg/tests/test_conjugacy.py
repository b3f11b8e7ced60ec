import itertools

import pytest
from hypothesis import given, strategies as st

from braidkit.conjugacy import (
    ConjugacyCertificate, _SummitContext, are_conjugate, closed_under_cycling,
    conjugate_by_simple, cycling, decycling, geodesic_length, minimal_conjugators,
    super_summit_rep, super_summit_set, ultra_summit_set,
)
from braidkit.core import BraidWord, delta_word
from braidkit.errors import BraidError, ResourceCapExceeded
from braidkit.garside import (
    classical, conjugate, delta_power, equal, identity_nf, invert, multiply, normalize,
    simple_nf,
)

from strategies import words


def W(n, *letters):
    return BraidWord(n, letters)


def nf(n, *letters):
    return normalize(W(n, *letters))


def test_cycling_single_factor_is_fixed():
    x = nf(3, 1)
    assert cycling(x)[0] == x
    assert decycling(x)[0] == x


def test_cycling_two_factors():
    # sigma_1 sigma_2^2 has normal form (s1 s2)(s2); cycling moves s1 s2 to the back
    x = nf(3, 1, 2, 2)
    assert str(x) == "D^0 | 2 3 1 | 1 3 2"
    y, c = cycling(x)
    assert y == nf(3, 2, 1, 2)
    assert y == conjugate(x, c)
    z, d = decycling(x)
    assert z == conjugate(x, d)
    assert z == nf(3, 2, 1, 2)


def test_delta_powers_unchanged():
    d = delta_power("classical", 4, 2)
    assert cycling(d)[0] == d
    assert super_summit_rep(d)[0] == d
    uss, _ = ultra_summit_set(d)
    assert uss.elements == [d]


def test_super_summit_of_conjugated_generator():
    x = nf(3, 1, 2, -1)
    rep, conj = super_summit_rep(x)
    assert (rep.inf, rep.sup) == (0, 1)
    assert conjugate(x, conj) == rep


def test_uss_of_sigma1():
    uss, conj = ultra_summit_set(nf(3, 1))
    assert set(uss.elements) == {nf(3, 1), nf(3, 2)}
    assert all((y.inf, y.sup) == (0, 1) for y in uss.elements)


def test_minimal_conjugator_examples():
    x = nf(3, 1)
    ctx = _SummitContext(0, 1, 1000)
    mins = minimal_conjugators(x, ctx)
    S = classical(3)
    # the conjugator above sigma_2 carries sigma_1 to sigma_2
    c = mins[1]
    assert S.left_divides(S.atoms[1], c)
    assert conjugate_by_simple(x, c) == nf(3, 2)
    # minimality: c divides every simple above sigma_2 that stays in the set
    for s in S.simples():
        if S.left_divides(S.atoms[1], s) and ctx.in_uss(conjugate_by_simple(x, s)):
            assert S.left_divides(c, s)


def test_minimal_conjugator_of_delta_power():
    # every conjugate of a central element stays put, so the atom itself is minimal
    x = delta_power("classical", 3, 2)
    ctx = _SummitContext(2, 2, 100)
    mins = minimal_conjugators(x, ctx)
    assert mins == {0: classical(3).atoms[0], 1: classical(3).atoms[1]}


def test_are_conjugate_examples():
    w = W(4, 1, -2, 3, 3)
    ok, cert = are_conjugate(w, w)
    assert ok and cert.verify()
    assert cert.witness.is_identity()
    ok, cert = are_conjugate(W(3, 1), W(3, 2))
    assert ok and cert.verify()
    assert conjugate(nf(3, 1), cert.witness) == nf(3, 2)
    assert are_conjugate(W(3, 1), W(3, -1)) == (False, None)
    with pytest.raises(BraidError):
        are_conjugate(W(3, 1), W(4, 1))


def test_resource_cap_is_reported():
    x = nf(5, 1, 2, 3, 4, -1, 3)
    with pytest.raises(ResourceCapExceeded):
        ultra_summit_set(x, cap=1)


def test_certificate_rejects_wrong_witness():
    cert = ConjugacyCertificate(nf(3, 1), nf(3, 2), identity_nf("classical", 3))
    assert not cert.verify()


@pytest.mark.parametrize("w, g", [
    (delta_word(3), 1), (delta_word(4), 1), (W(3, -1), 1), (W(3), 0), (W(3, 1, 2, 2), 1),
])
def test_geodesic_examples(w, g):
    assert geodesic_length(normalize(w)) == g


def _ball(n, radius):
    """Shortest length of each element as a word in simples and their inverses."""
    S = classical(n)
    gens = [simple_nf(S, s) for s in S.simples() if s != S.identity]
    gens += [invert(g) for g in gens]
    dist = {identity_nf("classical", n): 0}
    frontier = list(dist)
    for r in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for g in gens:
                y = multiply(x, g)
                if y not in dist:
                    dist[y] = r
                    nxt.append(y)
        frontier = nxt
    return dist


def test_geodesic_length_matches_breadth_first_search():
    dist = _ball(3, 3)
    for x, d in dist.items():
        if d > 2:
            continue
        # class minimum is at most d, so it is reached inside the ball
        sss, _ = super_summit_set(x)
        best = min(dd for y, dd in dist.items() if super_summit_rep(y)[0] in sss)
        assert geodesic_length(x) == best


def _brute_conjugate(u, v):
    su, _ = super_summit_set(normalize(u))
    rv, _ = super_summit_rep(normalize(v))
    return rv in su


def test_conjugacy_agrees_with_brute_force_small():
    letters = (1, -1, 2, -2)
    pool = [W(3, *t) for k in range(0, 4) for t in itertools.product(letters, repeat=k)]
    pool = pool[::3]
    for u in pool[:25]:
        for v in pool:
            ok, cert = are_conjugate(u, v)
            assert ok == _brute_conjugate(u, v)
            if ok:
                assert cert.verify()


@given(words(n=3, max_len=6), words(n=3, max_len=6))
def test_conjugacy_matches_brute_force(u, v):
    ok, cert = are_conjugate(u, v)
    assert ok == _brute_conjugate(u, v)
    if ok:
        assert conjugate(normalize(u), cert.witness) == normalize(v)


@given(words(max_n=4, max_len=8), words(max_n=4, max_len=5))
def test_conjugates_are_recognised(w, a):
    if a.n != w.n:
        a = BraidWord(w.n, tuple(x for x in a.letters if abs(x) < w.n))
    v = a.inverse() * w * a
    ok, cert = are_conjugate(w, v)
    assert ok and cert.verify()


@given(words(max_n=4, max_len=10))
def test_cycling_and_decycling_are_conjugations(w):
    x = normalize(w)
    y, c = cycling(x)
    assert conjugate(x, c) == y
    z, d = decycling(x)
    assert conjugate(x, d) == z


@given(words(max_n=4, max_len=10))
def test_super_summit_is_stable(w):
    x = normalize(w)
    rep, conj = super_summit_rep(x)
    assert conjugate(x, conj) == rep
    bound = classical(w.n).delta_length
    y = rep
    for _ in range(bound):
        y, _ = cycling(y)
        assert y.inf <= rep.inf
    y = rep
    for _ in range(bound):
        y, _ = decycling(y)
        assert y.sup >= rep.sup


@given(words(max_n=4, max_len=8), st.data())
def test_uss_is_a_class_invariant(w, data):
    x = normalize(w)
    uss, conj = ultra_summit_set(x)
    first = uss.elements[0]
    assert conjugate(x, conj) == first
    for y in uss.elements:
        assert (y.inf, y.sup) == (uss.inf, uss.sup)
        assert closed_under_cycling(y)
        assert conjugate(first, uss.path_conjugator(y)) == y
    y = data.draw(st.sampled_from(uss.elements))
    again, _ = ultra_summit_set(y)
    assert set(again.elements) == set(uss.elements)


@given(words(max_n=4, max_len=10))
def test_class_sup_is_minus_inverse_inf(w):
    rep, _ = super_summit_rep(normalize(w))
    inv, _ = super_summit_rep(normalize(w.inverse()))
    assert rep.sup == -inv.inf
