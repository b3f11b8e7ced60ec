import random

import pytest
from hypothesis import given, settings, strategies as st

from braidkit.acceptance import FIVE_TWO_SHORT, FIVE_TWO_WORD, random_diagram
from braidkit.core import BraidWord
from braidkit.diagram import (
    FIGURE_EIGHT, FIVE_TWO, TREFOIL, Crossing, LinkDiagram, closure, find_reducing_arc,
    finger_move, read_closed_braid, reduce_once, seifert_circle_count, seifert_height,
    seifert_smooth, to_closed_braid,
)
from braidkit.errors import BraidError, ParseError
from braidkit.garside import equal
from braidkit.hecke import homfly
from braidkit.laurent import Laurent
from braidkit.skein import homfly_skein

from strategies import words


def P(text):
    return Laurent.parse(text, ("l", "m"))


def test_text_roundtrip():
    text = "diagram 3\nX + 4 2 5 1\nX + 2 6 3 5\nX + 6 4 1 3\n"
    d = LinkDiagram.parse(text)
    assert d.to_text() == text
    assert d == closure(BraidWord(2, (1, 1, 1)))
    with_comments = "# trefoil\ndiagram 3\nX + 4 2 5 1  # first\nX + 2 6 3 5\nX + 6 4 1 3\nO\n"
    parsed = LinkDiagram.parse(with_comments)
    assert parsed.loops == 1 and parsed.component_count() == 2


@pytest.mark.parametrize("text", [
    "X + 1 2 3 4",
    "diagram 2\nX + 4 2 5 1\n",
    "diagram 1\nX * 1 2 1 2\n",
    "diagram 1\nX + 1 2 a 2\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        LinkDiagram.parse(text)


def test_validation():
    # edge 2 would leave the crossing twice
    with pytest.raises(BraidError):
        LinkDiagram((Crossing(1, (1, 2, 2, 1)),))
    # consistent orientations but the rotation system lives on a torus
    with pytest.raises(BraidError, match="planar"):
        LinkDiagram((Crossing(1, (1, 2, 1, 2)),))
    # a single kink is fine
    kink = LinkDiagram((Crossing(1, (1, 1, 2, 2)),))
    assert kink.component_count() == 1


def test_closure_examples():
    unknot = closure(BraidWord(1))
    assert unknot.crossings == () and unknot.loops == 1
    tre = closure(BraidWord(2, (1, 1, 1)))
    assert len(tre.crossings) == 3 and tre.writhe() == 3
    pic = seifert_smooth(tre)
    assert pic.n_circles == 2
    assert sorted(s for _, _, s in pic.arcs.values()) == [1, 1, 1]
    assert pic.height() == 0


def test_standard_diagrams():
    assert seifert_smooth(TREFOIL).n_circles == 2
    assert seifert_height(TREFOIL) == 0
    assert FIGURE_EIGHT.writhe() == 0
    # this projection is already a closed 3-braid
    assert seifert_height(FIGURE_EIGHT) == 0
    assert seifert_circle_count(FIGURE_EIGHT) == 3


def test_five_two_picture():
    pic = seifert_smooth(FIVE_TWO)
    assert pic.n_circles == 4
    assert len(pic.arcs) == 5
    assert all(s == 1 for _, _, s in pic.arcs.values())
    assert pic.height() == 2
    arc = find_reducing_arc(pic)
    assert arc is not None
    assert not pic.coherent(*arc.circles)
    nxt = reduce_once(pic, arc)
    assert nxt.height() == 1
    assert nxt.n_circles == 4
    # the move adds two crossings with opposite signs
    assert len(nxt.arcs) == 7
    assert sorted(s for _, _, s in nxt.arcs.values()).count(-1) == 1


def test_five_two_braid():
    res = to_closed_braid(FIVE_TWO)
    assert res.moves == 2
    assert res.heights == [2, 1, 0]
    assert res.circles == 4
    assert res.braid.n == 4
    assert str(res.braid) == "4: 3 2 -1 2 -3 2 2 1 2"
    want = P("l^2 + l^4 - l^6 + l^2*m^2 + l^4*m^2")
    assert homfly(res.braid) == want
    assert homfly(FIVE_TWO_WORD) == want
    assert homfly(FIVE_TWO_SHORT) == want
    assert homfly_skein(FIVE_TWO) == want


@pytest.mark.parametrize("d, word", [
    (TREFOIL, BraidWord(2, (1, 1, 1))),
    (FIGURE_EIGHT, BraidWord(3, (1, -2, 1, -2))),
])
def test_skein_matches_trace_on_standard_diagrams(d, word):
    res = to_closed_braid(d)
    assert homfly_skein(d) == homfly(word) == homfly(res.braid)


def test_closed_braid_reads_back_up_to_rotation():
    # far-commuting letters may come out in another order
    w = BraidWord(4, (1, -2, 3, 2, 2, -1, 3))
    got = to_closed_braid(closure(w)).braid
    assert got.n == 4
    assert any(equal(got, BraidWord(4, w.letters[k:] + w.letters[:k])) for k in range(len(w)))


def test_reading_requires_height_zero():
    with pytest.raises(BraidError):
        read_closed_braid(seifert_smooth(FIVE_TWO))


def test_split_diagrams_are_stacked():
    d = LinkDiagram(closure(BraidWord(2, (1, 1, 1))).crossings + (), loops=2)
    res = to_closed_braid(d)
    assert res.braid.n == 4
    assert homfly(res.braid) == homfly_skein(d)


def test_finger_move_is_reidemeister_two():
    d = closure(BraidWord(3, (1, 2)))
    face = next(f for f in d.faces if len({e for e, _ in f}) >= 2)
    (a, la), (b, lb) = face[0], next(x for x in face if x[0] != face[0][0])
    d2 = finger_move(d, a, la, b, lb, over=True)
    assert len(d2.crossings) == len(d.crossings) + 2
    assert d2.writhe() == d.writhe()
    assert homfly_skein(d2) == homfly_skein(d)


@settings(max_examples=40)
@given(st.integers(0, 10 ** 6))
def test_reducing_moves_drop_height_by_one(seed):
    rng = random.Random(seed)
    w, d = random_diagram(rng, max_n=4, max_len=6, max_fingers=2)
    for piece in d.split_components():
        if not piece.crossings:
            continue
        pic = seifert_smooth(piece)
        k = pic.n_circles
        h0 = h = pic.height()
        assert h0 <= (k - 1) * (k - 2) // 2
        while h:
            arc = find_reducing_arc(pic)
            assert arc is not None
            pic = reduce_once(pic, arc)
            assert pic.height() == h - 1
            assert pic.n_circles == k
            h -= 1
        assert find_reducing_arc(pic) is None
    res = to_closed_braid(d)
    assert res.braid.n == seifert_circle_count(d)
    assert homfly(res.braid) == homfly(w)


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_skein_of_random_diagram_matches_source_braid(seed):
    rng = random.Random(seed)
    w, d = random_diagram(rng, max_n=4, max_len=6, max_fingers=1)
    assert homfly_skein(d) == homfly(w)


@given(words(max_n=4, max_len=8))
def test_closure_has_height_zero(w):
    d = closure(w)
    assert seifert_height(d) == 0
    assert seifert_circle_count(d) == w.n
    assert LinkDiagram.parse(d.to_text()) == d


@given(words(max_n=4, max_len=8))
def test_skein_matches_trace_on_closures(w):
    assert homfly_skein(closure(w)) == homfly(w)
