"""Hecke algebra, Ocneanu trace and the polynomial link invariants.

H_n has basis T_w (w in S_n) with x_i^2 = (t-1) x_i + t.  The trace is
normalised by tr(1) = 1 and tr(a x_{n-1} b) = z tr(a b) for a, b in H_{n-1}.
HOMFLY values live in Z[l^+-1, m^+-1] with the skein relation
l^-1 P(+) - l P(-) = m P(0) and P(unknot) = 1.
"""

from __future__ import annotations

from functools import lru_cache

from .core import BraidWord, exponent_sum
from .errors import BraidError
from .garside import Perm, compose, inverse, inversions
from .laurent import Laurent
from .representations import alexander_polynomial

T = Laurent.var("t", ("t",))
ONE = T.one()
ZERO = T.zero()
T_INV = T ** -1

TRACE_VARS = ("t", "z")
HOMFLY_VARS = ("l", "m")


def _swap(p: Perm, i: int) -> Perm:
    """p composed with s_i on the right (1-based i)."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


class HeckeElement:
    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: dict | None = None):
        self.n = n
        self.coeffs = {w: c for w, c in (coeffs or {}).items() if c}

    @classmethod
    def one(cls, n: int) -> HeckeElement:
        return cls(n, {tuple(range(n)): ONE})

    def times_generator(self, i: int) -> HeckeElement:
        out: dict = {}
        for w, c in self.coeffs.items():
            ws = _swap(w, i)
            if w[i - 1] < w[i]:  # length goes up
                out[ws] = out.get(ws, ZERO) + c
            else:
                out[w] = out.get(w, ZERO) + c * (T - 1)
                out[ws] = out.get(ws, ZERO) + c * T
        return HeckeElement(self.n, out)

    def times_letter(self, letter: int) -> HeckeElement:
        i = abs(letter)
        if letter > 0:
            return self.times_generator(i)
        # x_i^-1 = t^-1 x_i + (t^-1 - 1)
        a = self.times_generator(i)
        out = {w: c * T_INV for w, c in a.coeffs.items()}
        for w, c in self.coeffs.items():
            out[w] = out.get(w, ZERO) + c * (T_INV - 1)
        return HeckeElement(self.n, out)

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.n == other.n and self.coeffs == other.coeffs

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for w in sorted(self.coeffs, key=lambda p: (inversions(p), staircase_word(p))):
            word = staircase_word(w)
            basis = "*".join(f"x{i}" for i in word) if word else "1"
            parts.append(f"({self.coeffs[w].render()})*{basis}")
        return " + ".join(parts)

    __str__ = render


def hecke_image(w: BraidWord) -> HeckeElement:
    h = HeckeElement.one(w.n)
    for x in w.letters:
        h = h.times_letter(x)
    return h


def _top(p: Perm) -> int:
    """1-based largest point moved by p, or 0 for the identity."""
    for m in range(len(p) - 1, -1, -1):
        if p[m] != m:
            return m + 1
    return 0


def _split(p: Perm):
    """p = u * s_{m-1} * v with u in S_{m-1} and v = s_{m-2} ... s_j."""
    m = _top(p)
    j = inverse(p)[m - 1] + 1  # p(j) = m
    c = list(range(len(p)))
    # c = s_{m-1} ... s_j sends j to m and shifts j+1..m down by one
    for x in range(j, m + 1):
        c[x - 1] = m - 1 if x == j else x - 2
    c = tuple(c)
    u = compose(p, inverse(c))
    if inversions(p) != inversions(u) + (m - j):
        raise AssertionError("coset decomposition is not reduced")
    v_letters = list(range(m - 2, j - 1, -1))
    return u, m, v_letters


def staircase_word(p: Perm) -> list[int]:
    """Letters of the basis word (x_{i1} x_{i1-1} ...)(x_{i2} ...) with i1 < i2 < ..."""
    if _top(p) == 0:
        return []
    u, m, v = _split(p)
    return staircase_word(u) + [m - 1] + v


@lru_cache(maxsize=None)
def _basis_trace(p: Perm) -> Laurent:
    if _top(p) == 0:
        return Laurent.const(1, TRACE_VARS)
    u, m, v = _split(p)
    h = HeckeElement(len(p), {u: ONE})
    for i in v:
        h = h.times_generator(i)
    z = Laurent.var("z", TRACE_VARS)
    total = Laurent({}, TRACE_VARS)
    for w, c in h.coeffs.items():
        total = total + c.embed(TRACE_VARS) * _basis_trace(_trim(w))
    return total * z


def _trim(p: Perm) -> Perm:
    """Drop fixed points at the top so traces are shared across n."""
    m = _top(p)
    return p[:max(m, 1)]


def trace_of_element(h: HeckeElement) -> Laurent:
    total = Laurent({}, TRACE_VARS)
    for w, c in h.coeffs.items():
        total = total + c.embed(TRACE_VARS) * _basis_trace(_trim(w))
    return total


def ocneanu_trace(w: BraidWord) -> Laurent:
    return trace_of_element(hecke_image(w))


# HOMFLY through the trace

_LS = ("l", "t")  # t is half here: stored exponent 1 means sqrt(t)


def _ls(name, power=1):
    return Laurent.var(name, _LS, half=("t",), power=power)


def homfly_trace(w: BraidWord) -> Laurent:
    """HOMFLY polynomial of the closure, computed from the Ocneanu trace.

    With sqrt(kappa) = l / sqrt(t) and z = -(1 - t)/(1 - kappa t) the
    normalised trace becomes a polynomial N in l and s = sqrt(t) with
    N = P * m^(n-1), m = s - 1/s; N is then rewritten in m.
    """
    n = w.n
    e = exponent_sum(w)
    tr = ocneanu_trace(w)
    by_z: dict[int, dict] = {}
    for (te, ze), c in tr.terms.items():
        by_z.setdefault(ze, {})[(0, 2 * te)] = c
    l = _ls("l")
    s2 = _ls("t", 2)
    one = l.one()
    acc = l.zero()
    for j, terms in by_z.items():
        if j > n - 1:
            raise AssertionError("trace degree exceeds strand count")
        cj = Laurent(terms, _LS, ("t",))
        acc = acc + (-1) ** j * (one - l * l) ** (n - 1 - j) * (one - s2) ** j * cj
    acc = acc.shift((e - n + 1, -e))
    return _in_m(acc, n - 1)


def _in_m(f: Laurent, drop: int) -> Laurent:
    """Rewrite f(l, s) as a polynomial in m = s - 1/s, then divide by m^drop."""
    m_s = _ls("t", 1) - _ls("t", -1)
    m_powers = [m_s.one()]
    groups: dict[int, dict] = {}
    for (le, se), c in f.terms.items():
        groups.setdefault(le, {})[(0, se)] = c
    out: dict = {}
    for le, terms in groups.items():
        g = Laurent(terms, _LS, ("t",))
        while g:
            d = max(e[1] for e in g.terms)
            if d < 0:
                raise AssertionError("trace value is not a polynomial in m")
            a = g.terms[(0, d)]
            while len(m_powers) <= d:
                m_powers.append(m_powers[-1] * m_s)
            g = g - m_powers[d] * a
            out[(le, d - drop)] = out.get((le, d - drop), 0) + a
    return Laurent(out, HOMFLY_VARS)


def homfly(w: BraidWord) -> Laurent:
    return homfly_trace(w)


def unknot_homfly() -> Laurent:
    return Laurent.const(1, HOMFLY_VARS)


def split_factor() -> Laurent:
    """(l^-1 - l) / m, the factor contributed by each extra split unknot."""
    return Laurent({(-1, -1): 1, (1, -1): -1}, HOMFLY_VARS)


# specialisations


def jones_from_homfly(p: Laurent) -> Laurent:
    """V(t) = P(l = t, m = sqrt(t) - 1/sqrt(t))."""
    tv = ("t",)
    t = Laurent.var("t", tv, half=tv, power=2)
    m = Laurent.var("t", tv, half=tv, power=1) - Laurent.var("t", tv, half=tv, power=-1)
    return p.substitute({"l": t, "m": m}, vars=tv, half=tv)


def jones(w: BraidWord) -> Laurent:
    return jones_from_homfly(homfly(w))


def alexander_from_homfly(p: Laurent) -> Laurent:
    """P(l = 1, m = sqrt(t) - 1/sqrt(t)), normalised up to units."""
    tv = ("t",)
    p1 = p.substitute({"l": 1}, vars=("m",))
    m = Laurent.var("t", tv, half=tv, power=1) - Laurent.var("t", tv, half=tv, power=-1)
    return p1.substitute({"m": m}, vars=tv, half=tv).normalized_unit()


def alexander_burau_half(w: BraidWord) -> Laurent:
    """Burau Alexander polynomial in the half-exponent registry."""
    return alexander_polynomial(w).embed(("t",), ("t",)).normalized_unit()


def alexander(w: BraidWord) -> Laurent:
    return alexander_polynomial(w)


def mfw_bound(p: Laurent) -> int:
    """Morton-Franks-Williams lower bound breadth_l(P)/2 + 1 on the braid index."""
    if p.is_zero():
        raise BraidError("zero polynomial has no breadth")
    b = p.breadth("l")
    if b % 2:
        raise BraidError("odd l-breadth in a HOMFLY polynomial")
    return b // 2 + 1


def homfly_mirror(p: Laurent) -> Laurent:
    """P of the mirror image: l -> l^-1, m -> -m."""
    return Laurent({(-a, b): c * (-1) ** (b % 2) for (a, b), c in p.terms.items()}, HOMFLY_VARS)
