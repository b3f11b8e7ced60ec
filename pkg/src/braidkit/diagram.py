"""Oriented link diagrams as planar maps, Seifert pictures and reduction to closed braids.

A crossing lists its four edge labels counterclockwise starting from the
incoming under-edge, so the under strand runs from slot 0 to slot 2.  The
over strand enters at slot 3 on a positive crossing and at slot 1 on a
negative one.  Together with the counterclockwise slot order this is a
rotation system, which fixes the embedding in the sphere.

Text format::

    diagram 3
    X + 1 2 3 4
    ...
    O              # a crossingless unknotted component

Reduction follows Yamada and Vogel: while two Seifert circles that share a
face of the diagram are incoherent, push a finger of one across the other
(a Reidemeister II move); each move lowers the number of incoherent pairs by
exactly one, and a diagram with none is a closed braid about an axis.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property

from .core import BraidWord, direct_sum
from .errors import BraidError, ParseError

E, N, W, S = 0, 1, 2, 3


def slot_is_in(sign: int, p: int) -> bool:
    return p == 0 or p == (3 if sign > 0 else 1)


def smoothing_pairs(sign: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """(in slot, out slot) pairs joined by the oriented smoothing."""
    return ((0, 1), (3, 2)) if sign > 0 else ((0, 3), (1, 2))


@dataclass(frozen=True)
class Crossing:
    sign: int
    edges: tuple[int, int, int, int]

    def switched(self) -> Crossing:
        a, b, c, d = self.edges
        if self.sign > 0:
            return Crossing(-1, (d, a, b, c))
        return Crossing(1, (b, c, d, a))


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        for x in self.crossings:
            if x.sign not in (1, -1) or len(x.edges) != 4:
                raise BraidError(f"malformed crossing {x}")
        if self.loops < 0:
            raise BraidError("negative loop count")
        self._check()

    # structure

    @cached_property
    def heads(self) -> dict[int, tuple[int, int]]:
        return self._ends(True)

    @cached_property
    def tails(self) -> dict[int, tuple[int, int]]:
        return self._ends(False)

    def _ends(self, incoming: bool):
        out = {}
        for c, x in enumerate(self.crossings):
            for p, e in enumerate(x.edges):
                if slot_is_in(x.sign, p) == incoming:
                    out[e] = (c, p)
        return out

    def _check(self):
        count: dict[int, list[bool]] = defaultdict(list)
        for x in self.crossings:
            for p, e in enumerate(x.edges):
                count[e].append(slot_is_in(x.sign, p))
        for e, roles in count.items():
            if sorted(roles) != [False, True]:
                raise BraidError(f"edge {e} must appear once incoming and once outgoing")
        for comp in self.graph_components():
            v = len(comp)
            es = {e for c in comp for e in self.crossings[c].edges}
            faces = {self.dart_face[(e, fw)] for e in es for fw in (True, False)}
            if v - len(es) + len(faces) != 2:
                raise BraidError("diagram is not planar (Euler characteristic check failed)")

    @property
    def edges(self) -> list[int]:
        return sorted(self.heads)

    def next_edge(self, e: int) -> int:
        """Edge following e along its strand."""
        c, p = self.heads[e]
        return self.crossings[c].edges[(p + 2) % 4]

    def link_components(self) -> list[list[int]]:
        seen = set()
        comps = []
        for e in self.edges:
            if e in seen:
                continue
            comp = []
            f = e
            while f not in seen:
                seen.add(f)
                comp.append(f)
                f = self.next_edge(f)
            comps.append(comp)
        return comps

    def component_count(self) -> int:
        return len(self.link_components()) + self.loops

    def graph_components(self) -> list[list[int]]:
        parent = list(range(len(self.crossings)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e, (c1, _) in self.heads.items():
            c2, _ = self.tails[e]
            parent[find(c1)] = find(c2)
        groups = defaultdict(list)
        for c in range(len(self.crossings)):
            groups[find(c)].append(c)
        return sorted(groups.values())

    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    # faces: a dart is (edge, forward); its face lies on its left

    def _dart_end(self, e: int, forward: bool) -> tuple[int, int]:
        return self.heads[e] if forward else self.tails[e]

    def _dart_from_slot(self, c: int, p: int) -> tuple[int, bool]:
        x = self.crossings[c]
        e = x.edges[p]
        return e, not slot_is_in(x.sign, p)

    @cached_property
    def faces(self) -> list[list[tuple[int, bool]]]:
        seen = set()
        faces = []
        for e in self.edges:
            for fw in (True, False):
                if (e, fw) in seen:
                    continue
                face = []
                d = (e, fw)
                while d not in seen:
                    seen.add(d)
                    face.append(d)
                    c, q = self._dart_end(*d)
                    d = self._dart_from_slot(c, (q - 1) % 4)
                faces.append(face)
        return faces

    @cached_property
    def dart_face(self) -> dict[tuple[int, bool], int]:
        return {d: i for i, face in enumerate(self.faces) for d in face}

    def corner_face(self, c: int, k: int) -> int:
        """Face in the corner between slots k and k+1 of crossing c."""
        x = self.crossings[c]
        q = (k + 1) % 4
        e = x.edges[q]
        return self.dart_face[(e, slot_is_in(x.sign, q))]

    # editing

    def relabeled(self) -> LinkDiagram:
        """Canonical labels 1..2c following each strand from its smallest label."""
        mapping = {}
        k = 1
        for comp in sorted(self.link_components(), key=min):
            start = comp.index(min(comp))
            for e in comp[start:] + comp[:start]:
                mapping[e] = k
                k += 1
        xs = tuple(Crossing(x.sign, tuple(mapping[e] for e in x.edges)) for x in self.crossings)
        return LinkDiagram(xs, self.loops)

    def split_components(self) -> list[LinkDiagram]:
        """Connected pieces, each a diagram on its own; loops become separate pieces."""
        out = [LinkDiagram(tuple(self.crossings[c] for c in comp)).relabeled()
               for comp in self.graph_components()]
        out.extend(LinkDiagram((), 1) for _ in range(self.loops))
        return out

    def mirror(self) -> LinkDiagram:
        return LinkDiagram(tuple(x.switched() for x in self.crossings), self.loops)

    # text

    def to_text(self) -> str:
        lines = [f"diagram {len(self.crossings)}"]
        for x in self.crossings:
            lines.append("X " + ("+" if x.sign > 0 else "-") + " " + " ".join(map(str, x.edges)))
        lines.extend("O" for _ in range(self.loops))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> LinkDiagram:
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines or not lines[0].startswith("diagram"):
            raise ParseError("diagram text must start with 'diagram <crossings>'")
        try:
            declared = int(lines[0].split()[1])
        except (IndexError, ValueError):
            raise ParseError("bad diagram header") from None
        xs = []
        loops = 0
        for ln in lines[1:]:
            tok = ln.split()
            if tok == ["O"]:
                loops += 1
                continue
            if len(tok) != 6 or tok[0] != "X" or tok[1] not in ("+", "-"):
                raise ParseError(f"bad crossing line {ln!r}")
            try:
                edges = tuple(int(t) for t in tok[2:])
            except ValueError:
                raise ParseError(f"bad edge label in {ln!r}") from None
            xs.append(Crossing(1 if tok[1] == "+" else -1, edges))
        if len(xs) != declared:
            raise ParseError(f"header declares {declared} crossings, found {len(xs)}")
        return cls(tuple(xs), loops)


def from_knot_theory_pd(code) -> LinkDiagram:
    """Convert X[i,j,k,l] tuples with consecutive strand labels, inferring signs."""
    xs = []
    for i, j, k, l in code:
        positive = i == j or k == l or j - l == 1 or l - j > 1
        xs.append(Crossing(1 if positive else -1, (i, j, k, l)))
    return LinkDiagram(tuple(xs))


# closures


def closure(w: BraidWord) -> LinkDiagram:
    """Closed braid diagram; strands run counterclockwise, strand 1 innermost."""
    counter = iter(range(1, 10 ** 9))
    first = [next(counter) for _ in range(w.n)]
    current = list(first)
    xs = []
    for x in w.letters:
        i = abs(x) - 1
        in_l, in_r = current[i], current[i + 1]
        out_l, out_r = next(counter), next(counter)
        if x > 0:
            xs.append((1, [in_r, out_r, out_l, in_l]))
        else:
            xs.append((-1, [in_l, in_r, out_r, out_l]))
        current[i], current[i + 1] = out_l, out_r
    rename = {}
    loops = 0
    for k in range(w.n):
        if current[k] == first[k]:
            loops += 1
        else:
            rename[current[k]] = first[k]
    crossings = tuple(Crossing(s, tuple(rename.get(e, e) for e in es)) for s, es in xs)
    return LinkDiagram(crossings, loops).relabeled()


# Seifert pictures


@dataclass
class ReducingArc:
    face: int
    circles: tuple[int, int]
    edges: tuple[int, int]
    face_on_left: tuple[bool, bool]


@dataclass
class SeifertPicture:
    """Seifert circles of a connected diagram and their relative position."""

    diagram: LinkDiagram
    circles: list[list[int]] = field(default_factory=list)
    circle_of: dict = field(default_factory=dict)
    arcs: dict = field(default_factory=dict)  # crossing -> (circle, circle, sign)
    region_of_face: list = field(default_factory=list)
    left_region: list = field(default_factory=list)
    right_region: list = field(default_factory=list)
    left_side: list = field(default_factory=list)  # circles lying on the left of each circle

    @property
    def n_circles(self) -> int:
        return len(self.circles)

    def coherent(self, i: int, j: int) -> bool:
        return (j in self.left_side[i]) != (i in self.left_side[j])

    def height(self) -> int:
        k = self.n_circles
        return sum(1 for i in range(k) for j in range(i + 1, k) if not self.coherent(i, j))

    def exposed_circles(self, face: int) -> list[int]:
        return sorted({self.circle_of[e] for e, _ in self.diagram.faces[face]})


def seifert_smooth(d: LinkDiagram) -> SeifertPicture:
    if len(d.graph_components()) != 1:
        raise BraidError("Seifert picture needs a connected diagram with crossings")
    pic = SeifertPicture(d)
    # circles
    def succ(e):
        c, p = d.heads[e]
        x = d.crossings[c]
        for a, b in smoothing_pairs(x.sign):
            if a == p:
                return x.edges[b]
        raise AssertionError("incoming slot without partner")

    seen = set()
    circles = []
    for e in d.edges:
        if e in seen:
            continue
        circ = []
        f = e
        while f not in seen:
            seen.add(f)
            circ.append(f)
            f = succ(f)
        circles.append(circ)
    circles.sort(key=min)
    pic.circles = circles
    pic.circle_of = {e: i for i, circ in enumerate(circles) for e in circ}
    for c, x in enumerate(d.crossings):
        (a, _), (b, _) = smoothing_pairs(x.sign)
        ca, cb = pic.circle_of[x.edges[a]], pic.circle_of[x.edges[b]]
        if ca == cb:
            raise AssertionError("a crossing joins a Seifert circle to itself")
        pic.arcs[c] = (min(ca, cb), max(ca, cb), x.sign)
    # regions of the sphere minus the circles
    parent = list(range(len(d.faces)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c, x in enumerate(d.crossings):
        pairs = {frozenset(pr) for pr in smoothing_pairs(x.sign)}
        middle = [k for k in range(4) if frozenset((k, (k + 1) % 4)) not in pairs]
        f1, f2 = (d.corner_face(c, k) for k in middle)
        parent[find(f1)] = find(f2)
    roots = sorted({find(f) for f in range(len(d.faces))})
    rid = {r: i for i, r in enumerate(roots)}
    pic.region_of_face = [rid[find(f)] for f in range(len(d.faces))]
    for circ in circles:
        lefts = {pic.region_of_face[d.dart_face[(e, True)]] for e in circ}
        rights = {pic.region_of_face[d.dart_face[(e, False)]] for e in circ}
        if len(lefts) != 1 or len(rights) != 1 or lefts == rights:
            raise AssertionError("Seifert circle does not separate two regions")
        pic.left_region.append(lefts.pop())
        pic.right_region.append(rights.pop())
    if len(roots) != len(circles) + 1:
        raise AssertionError("regions do not form a tree")
    # sides: the region tree with circles as edges
    adj = defaultdict(list)
    for i in range(len(circles)):
        adj[pic.left_region[i]].append((pic.right_region[i], i))
        adj[pic.right_region[i]].append((pic.left_region[i], i))
    for i in range(len(circles)):
        reach = {pic.left_region[i]}
        queue = deque(reach)
        while queue:
            r = queue.popleft()
            for r2, j in adj[r]:
                if j != i and r2 not in reach:
                    reach.add(r2)
                    queue.append(r2)
        pic.left_side.append({j for j in range(len(circles))
                              if j != i and pic.left_region[j] in reach})
    return pic


def find_reducing_arc(pic: SeifertPicture) -> ReducingArc | None:
    """Smallest (circle pair, face) with two incoherent circles on one face."""
    best = None
    d = pic.diagram
    for fi, face in enumerate(d.faces):
        circs = pic.exposed_circles(fi)
        for a in range(len(circs)):
            for b in range(a + 1, len(circs)):
                i, j = circs[a], circs[b]
                if not pic.coherent(i, j):
                    key = (i, j, fi)
                    if best is None or key < best:
                        best = key
    if best is None:
        return None
    i, j, fi = best
    dart_i = next(dt for dt in d.faces[fi] if pic.circle_of[dt[0]] == i)
    dart_j = next(dt for dt in d.faces[fi] if pic.circle_of[dt[0]] == j)
    return ReducingArc(fi, (i, j), (dart_i[0], dart_j[0]), (dart_i[1], dart_j[1]))


def finger_move(d: LinkDiagram, e_i: int, left_i: bool, e_j: int, left_j: bool,
                over: bool = True) -> LinkDiagram:
    """Push a finger of edge e_i across edge e_j through a face they share.

    ``left_i`` / ``left_j`` say whether that face lies to the left of each
    edge.  The finger passes over e_j when ``over`` is true.
    """
    if e_i == e_j:
        raise BraidError("finger move needs two distinct edges")
    base = max(d.edges) + 1
    f1, f2, f3, g1, g2, g3 = range(base, base + 6)
    x1: dict[int, tuple[int, bool, bool]] = {}
    x2: dict[int, tuple[int, bool, bool]] = {}
    fo = over
    if not left_i:  # e_i runs west to east above the face
        x1[N], x1[S] = (f1, True, fo), (f2, False, fo)
        x2[S], x2[N] = (f2, True, fo), (f3, False, fo)
    else:
        x2[N], x2[S] = (f1, True, fo), (f2, False, fo)
        x1[S], x1[N] = (f2, True, fo), (f3, False, fo)
    go = not over
    if left_j:  # e_j runs west to east below the face
        x1[W], x1[E] = (g1, True, go), (g2, False, go)
        x2[W], x2[E] = (g2, True, go), (g3, False, go)
    else:
        x2[E], x2[W] = (g1, True, go), (g2, False, go)
        x1[E], x1[W] = (g2, True, go), (g3, False, go)

    replace = {}
    tail_i, head_i = d.tails[e_i], d.heads[e_i]
    tail_j, head_j = d.tails[e_j], d.heads[e_j]
    replace[tail_i], replace[head_i] = f1, f3
    replace[tail_j], replace[head_j] = g1, g3
    xs = []
    for c, x in enumerate(d.crossings):
        xs.append(Crossing(x.sign, tuple(replace.get((c, p), e) for p, e in enumerate(x.edges))))
    xs.append(_crossing_from_compass(x1))
    xs.append(_crossing_from_compass(x2))
    return LinkDiagram(tuple(xs), d.loops).relabeled()


def _crossing_from_compass(slots: dict[int, tuple[int, bool, bool]]) -> Crossing:
    start = next(k for k, (_, inc, ov) in slots.items() if inc and not ov)
    order = [(start + k) % 4 for k in range(4)]
    edges = tuple(slots[k][0] for k in order)
    over_in = next(i for i, k in enumerate(order) if slots[k][1] and slots[k][2])
    return Crossing(1 if over_in == 3 else -1, edges)


def reduce_once(pic: SeifertPicture, arc: ReducingArc) -> SeifertPicture:
    e_i, e_j = arc.edges
    left_i, left_j = arc.face_on_left
    return seifert_smooth(finger_move(pic.diagram, e_i, left_i, e_j, left_j, over=True))


def read_closed_braid(pic: SeifertPicture) -> BraidWord:
    """Braid word of a diagram whose Seifert circles are pairwise coherent."""
    d = pic.diagram
    k = pic.n_circles
    if pic.height():
        raise BraidError("diagram is not a closed braid (height > 0)")
    # the axis sits in the end region lying to the left of its circle
    degree = defaultdict(int)
    for i in range(k):
        degree[pic.left_region[i]] += 1
        degree[pic.right_region[i]] += 1
    starts = [i for i in range(k) if degree[pic.left_region[i]] == 1]
    if len(starts) != 1:
        raise AssertionError("cannot locate the braid axis")
    order = [starts[0]]
    while len(order) < k:
        outer = pic.right_region[order[-1]]
        nxt = [j for j in range(k) if pic.left_region[j] == outer]
        if len(nxt) != 1:
            raise AssertionError("Seifert circles are not nested")
        order.append(nxt[0])
    level = {c: i for i, c in enumerate(order)}
    # a ray from the axis outwards, crossing each circle once
    start_edge = []
    e = min(pic.circles[order[0]])
    for pos in range(k):
        start_edge.append(e)
        if pos + 1 < k:
            face = d.dart_face[(e, False)]
            e = next(dt[0] for dt in d.faces[face] if pic.circle_of[dt[0]] == order[pos + 1])
    # crossings met along each circle after the ray
    succ_of = {}
    preds = defaultdict(int)
    for pos in range(k):
        circ = pic.circles[order[pos]]
        idx = circ.index(start_edge[pos])
        seq = [d.heads[f][0] for f in circ[idx:] + circ[:idx]]
        for a, b in zip(seq, seq[1:]):
            succ_of.setdefault(a, []).append(b)
            preds[b] += 1
    letters = []
    def letter(c):
        i, j, sign = pic.arcs[c]
        lo, hi = sorted((level[i], level[j]))
        if hi != lo + 1:
            raise AssertionError("crossing between non-adjacent circles")
        return (lo + 1) * sign

    ready = sorted((abs(letter(c)), c) for c in range(len(d.crossings)) if preds[c] == 0)
    while ready:
        _, c = ready.pop(0)
        letters.append(letter(c))
        for b in succ_of.get(c, []):
            preds[b] -= 1
            if preds[b] == 0:
                ready.append((abs(letter(b)), b))
                ready.sort()
    if len(letters) != len(d.crossings):
        raise AssertionError("crossing order is cyclic; not a closed braid")
    return BraidWord(k, tuple(letters))


@dataclass
class BraidingResult:
    braid: BraidWord
    moves: int
    heights: list[int]  # height before each move, then the final 0
    circles: int


def to_closed_braid(d: LinkDiagram) -> BraidingResult:
    """Yamada-Vogel reduction; split pieces are braided separately and stacked."""
    pieces = d.split_components()
    if not pieces:
        raise BraidError("empty diagram")
    braid = None
    moves = 0
    heights: list[int] = []
    circles = 0
    for piece in pieces:
        if not piece.crossings:
            w = BraidWord(1, ())
            circles += 1
        else:
            pic = seifert_smooth(piece)
            circles += pic.n_circles
            h = pic.height()
            local = [h]
            while h:
                arc = find_reducing_arc(pic)
                if arc is None:
                    raise AssertionError("positive height but no reducing arc")
                pic = reduce_once(pic, arc)
                h2 = pic.height()
                if h2 != h - 1:
                    raise AssertionError(f"reducing move changed height {h} -> {h2}")
                h = h2
                local.append(h)
                moves += 1
            heights.extend(local)
            w = read_closed_braid(pic)
        braid = w if braid is None else direct_sum(braid, w)
    return BraidingResult(braid, moves, heights, circles)


def seifert_height(d: LinkDiagram) -> int:
    return sum(seifert_smooth(p).height() for p in d.split_components() if p.crossings)


def seifert_circle_count(d: LinkDiagram) -> int:
    return sum(seifert_smooth(p).n_circles if p.crossings else 1 for p in d.split_components())


# standard diagrams

TREFOIL = from_knot_theory_pd([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]).mirror()
FIGURE_EIGHT = from_knot_theory_pd([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)])
FIVE_TWO = from_knot_theory_pd([(1, 4, 2, 5), (3, 8, 4, 9), (5, 10, 6, 1), (9, 6, 10, 7),
                                (7, 2, 8, 3)]).mirror()
