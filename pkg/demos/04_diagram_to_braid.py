"""Turning a knot diagram into a closed braid by reducing Seifert height."""

from braidkit import homfly, homfly_skein, to_closed_braid
from braidkit.diagram import FIVE_TWO, find_reducing_arc, reduce_once, seifert_smooth

print(FIVE_TWO.to_text())
pic = seifert_smooth(FIVE_TWO)
print("Seifert circles:", pic.n_circles, "height:", pic.height())
while pic.height():
    arc = find_reducing_arc(pic)
    pic = reduce_once(pic, arc)
    print("  after one move, height", pic.height(), "crossings", len(pic.arcs))

res = to_closed_braid(FIVE_TWO)
print("braid:", res.braid, "moves:", res.moves)

# two independent routes to the same polynomial
print("trace:", homfly(res.braid).render())
print("skein:", homfly_skein(FIVE_TWO).render())
