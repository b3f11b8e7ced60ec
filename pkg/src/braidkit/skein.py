"""HOMFLY polynomial of a diagram straight from the skein relation.

Each component gets a base point on its smallest edge label and the
components are ordered by that label.  Walking them in order, a crossing is
bad when it is first met on the under strand; switching the first bad one
and smoothing it gives two smaller problems.  With no bad crossing left the
diagram is descending, hence an unlink.
"""

from __future__ import annotations

from .diagram import LinkDiagram, slot_is_in, smoothing_pairs
from .errors import BraidError, ResourceCapExceeded
from .hecke import HOMFLY_VARS, split_factor
from .laurent import Laurent

DEFAULT_BUDGET = 200_000

_L2 = Laurent({(2, 0): 1}, HOMFLY_VARS)
_LM = Laurent({(1, 1): 1}, HOMFLY_VARS)
_LINV2 = Laurent({(-2, 0): 1}, HOMFLY_VARS)
_LINV_M = Laurent({(-1, 1): -1}, HOMFLY_VARS)

Raw = tuple[tuple[int, tuple[int, int, int, int]], ...]


def _switch(sign, edges):
    a, b, c, d = edges
    return (-1, (d, a, b, c)) if sign > 0 else (1, (b, c, d, a))


def _smooth(xs: Raw, k: int) -> tuple[Raw, int]:
    """Remove crossing k by its oriented smoothing; returns new crossings and new loops."""
    sign, edges = xs[k]
    rest = [x for i, x in enumerate(xs) if i != k]
    loops = 0
    for a, b in smoothing_pairs(sign):
        keep, drop = edges[a], edges[b]
        # rename pending labels of the second pair too
        edges = tuple(keep if e == drop else e for e in edges)
        if keep == drop:
            loops += 1
            continue
        rest = [(s, tuple(keep if e == drop else e for e in es)) for s, es in rest]
    return tuple(rest), loops


def _drop_kinks(xs: Raw) -> tuple[Raw, int]:
    """Undo Reidemeister I curls (an edge joining two adjacent slots of one crossing).

    Returns the remaining crossings and the number of one-crossing
    components that became free loops.
    """
    xs = list(xs)
    freed = 0
    changed = True
    while changed:
        changed = False
        for c, (sign, es) in enumerate(xs):
            for p in range(4):
                if es[p] != es[(p + 1) % 4]:
                    continue
                r, t = (p + 2) % 4, (p + 3) % 4
                a, b = (es[r], es[t]) if slot_is_in(sign, r) else (es[t], es[r])
                rest = xs[:c] + xs[c + 1:]
                if a == b:
                    freed += 1
                    xs = rest
                else:
                    xs = [(s2, tuple(a if e == b else e for e in e2)) for s2, e2 in rest]
                changed = True
                break
            if changed:
                break
    return tuple(xs), freed


def _first_bad(xs: Raw) -> int | None:
    heads = {}
    for c, (sign, es) in enumerate(xs):
        for p, e in enumerate(es):
            if slot_is_in(sign, p):
                heads[e] = (c, p)
    seen_edges = set()
    met = set()
    for start in sorted(heads):
        if start in seen_edges:
            continue
        e = start
        while e not in seen_edges:
            seen_edges.add(e)
            c, p = heads[e]
            if c not in met:
                met.add(c)
                if p == 0:
                    return c
            e = xs[c][1][(p + 2) % 4]
    return None


def _components(xs: Raw) -> int:
    heads = {}
    for c, (sign, es) in enumerate(xs):
        for p, e in enumerate(es):
            if slot_is_in(sign, p):
                heads[e] = (c, p)
    seen = set()
    k = 0
    for start in heads:
        if start in seen:
            continue
        k += 1
        e = start
        while e not in seen:
            seen.add(e)
            c, p = heads[e]
            e = xs[c][1][(p + 2) % 4]
    return k


def _canonical(xs: Raw) -> Raw:
    """Relabel along strands and sort crossings.

    Labels increase along each strand from its base point and components keep
    their order, so the bad crossings are the same before and after.
    """
    heads = {}
    for c, (sign, es) in enumerate(xs):
        for p, e in enumerate(es):
            if slot_is_in(sign, p):
                heads[e] = (c, p)
    mapping = {}
    k = 0
    for start in sorted(heads):
        if start in mapping:
            continue
        e = start
        while e not in mapping:
            mapping[e] = k
            k += 1
            c, p = heads[e]
            e = xs[c][1][(p + 2) % 4]
    return tuple(sorted((s, tuple(mapping[e] for e in es)) for s, es in xs))


class _Skein:
    def __init__(self, budget: int):
        self.budget = budget
        self.calls = 0
        self.memo: dict = {}
        self.split = split_factor()
        self.one = Laurent.const(1, HOMFLY_VARS)

    def unlink(self, c: int) -> Laurent:
        if c < 1:
            raise BraidError("empty link has no HOMFLY polynomial")
        return self.split ** (c - 1)

    def run(self, xs: Raw, loops: int) -> Laurent:
        xs, freed = _drop_kinks(xs)
        loops += freed
        xs = _canonical(xs)
        key = (xs, loops)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.calls += 1
        if self.calls > self.budget:
            raise ResourceCapExceeded("skein recursion", self.budget)
        k = _first_bad(xs)
        if k is None:
            out = self.unlink(_components(xs) + loops)
        else:
            sign, es = xs[k]
            switched = xs[:k] + (_switch(sign, es),) + xs[k + 1:]
            smoothed, extra = _smooth(xs, k)
            ps = self.run(switched, loops)
            p0 = self.run(smoothed, loops + extra)
            if sign > 0:
                out = _L2 * ps + _LM * p0
            else:
                out = _LINV2 * ps + _LINV_M * p0
        self.memo[key] = out
        return out


def homfly_skein(d: LinkDiagram, budget: int = DEFAULT_BUDGET) -> Laurent:
    xs = tuple((x.sign, tuple(x.edges)) for x in d.crossings)
    return _Skein(budget).run(xs, d.loops)
