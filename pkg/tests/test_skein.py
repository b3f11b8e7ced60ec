import pytest
from hypothesis import given

from braidkit.core import BraidWord
from braidkit.diagram import TREFOIL, Crossing, LinkDiagram, closure
from braidkit.errors import BraidError, ResourceCapExceeded
from braidkit.hecke import HOMFLY_VARS, homfly
from braidkit.laurent import Laurent
from braidkit.skein import homfly_skein

from strategies import words


def P(text):
    return Laurent.parse(text, HOMFLY_VARS)


def test_round_unknot():
    assert homfly_skein(LinkDiagram((), 1)) == P("1")


def test_kinked_unknots():
    assert homfly_skein(LinkDiagram((Crossing(1, (1, 1, 2, 2)),))) == P("1")
    assert homfly_skein(closure(BraidWord(2, (-1,)))) == P("1")


def test_trefoil():
    assert homfly_skein(TREFOIL) == P("2*l^2 - l^4 + l^2*m^2")


def test_two_component_unlink():
    assert homfly_skein(LinkDiagram((), 2)) == P("l^-1*m^-1 - l*m^-1")
    assert homfly_skein(closure(BraidWord(2, (1, -1)))) == P("l^-1*m^-1 - l*m^-1")


def test_empty_diagram_rejected():
    with pytest.raises(BraidError):
        homfly_skein(LinkDiagram(()))


def test_budget_is_enforced():
    d = closure(BraidWord(3, (1, -2, 1, -2, 1, -2)))
    with pytest.raises(ResourceCapExceeded):
        homfly_skein(d, budget=2)


@given(words(max_n=4, max_len=8))
def test_skein_relation_at_first_crossing(w):
    # P(+) l^-1 - P(-) l = m P(0) on closures: flip and smooth the first letter
    if not w.letters:
        return
    x = w.letters[0]
    rest = w.letters[1:]
    plus = BraidWord(w.n, (abs(x),) + rest)
    minus = BraidWord(w.n, (-abs(x),) + rest)
    zero = BraidWord(w.n, rest)
    lhs = P("l^-1") * homfly_skein(closure(plus)) - P("l") * homfly_skein(closure(minus))
    assert lhs == P("m") * homfly_skein(closure(zero))
    assert homfly_skein(closure(w)) == homfly(w)
