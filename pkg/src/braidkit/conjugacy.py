"""Conjugacy via cycling, decycling and summit sets.

Conjugators follow the convention ``x^a = a^-1 x a``.  Every function that
moves an element inside its conjugacy class also returns the conjugator, so
the caller can assemble a certificate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .core import BraidWord, exponent_sum, permutation_of
from .errors import BraidError, ResourceCapExceeded
from .garside import (
    NormalForm, Perm, _Builder, conjugate, identity_nf, invert, multiply, normalize,
    simple_nf, to_word,
)

DEFAULT_CAP = 100_000


def cycling(x: NormalForm) -> tuple[NormalForm, NormalForm]:
    """Move the first factor (twisted past Delta^inf) to the end."""
    if not x.factors:
        return x, identity_nf(x.kind, x.n)
    S = x.structure
    head = S.tau_power(x.factors[0], -x.inf)
    b = _Builder(S, x.inf, x.factors[1:])
    b.append_simple(head)
    return b.result(), simple_nf(S, head)


def decycling(x: NormalForm) -> tuple[NormalForm, NormalForm]:
    """Move the last factor to the front."""
    if not x.factors:
        return x, identity_nf(x.kind, x.n)
    S = x.structure
    last = x.factors[-1]
    b = _Builder(S, x.inf)
    b.append_simple(S.tau_power(last, x.inf))
    for f in x.factors[:-1]:
        b.append_simple(f)
    return b.result(), invert(simple_nf(S, last))


def _stabilise(x, conj, step, better, bound):
    misses = 0
    while misses < bound and x.factors:
        y, c = step(x)
        conj = multiply(conj, c)
        misses = 0 if better(y, x) else misses + 1
        x = y
    return x, conj


def super_summit_rep(x: NormalForm) -> tuple[NormalForm, NormalForm]:
    """An element of the super summit set and a conjugator reaching it."""
    bound = x.structure.delta_length
    conj = identity_nf(x.kind, x.n)
    x, conj = _stabilise(x, conj, cycling, lambda y, z: y.inf > z.inf, bound)
    x, conj = _stabilise(x, conj, decycling, lambda y, z: y.sup < z.sup, bound)
    return x, conj


def closed_under_cycling(x: NormalForm, cap: int = DEFAULT_CAP) -> bool:
    """x lies on a periodic cycling orbit (assumes x is super summit)."""
    seen = {x}
    y = x
    for _ in range(cap):
        y, _ = cycling(y)
        if y == x:
            return True
        if y in seen:
            return False
        seen.add(y)
    raise ResourceCapExceeded("cycling orbit", cap)


def ultra_summit_rep(x: NormalForm, cap: int = DEFAULT_CAP) -> tuple[NormalForm, NormalForm]:
    x, conj = super_summit_rep(x)
    path = [(x, conj)]
    index = {x: 0}
    y = x
    while True:
        y, c = cycling(y)
        conj = multiply(conj, c)
        if y in index:
            return path[index[y]]
        index[y] = len(path)
        path.append((y, conj))
        if len(path) > cap:
            raise ResourceCapExceeded("cycling orbit", cap)


def conjugate_by_simple(x: NormalForm, s: Perm) -> NormalForm:
    return conjugate(x, simple_nf(x.structure, s))


class _SummitContext:
    """Membership tests for the summit sets of one conjugacy class."""

    def __init__(self, inf: int, sup: int, cap: int):
        self.inf = inf
        self.sup = sup
        self.cap = cap
        self._uss: dict = {}

    def in_sss(self, y: NormalForm) -> bool:
        return y.inf == self.inf and y.sup == self.sup

    def in_uss(self, y: NormalForm) -> bool:
        v = self._uss.get(y)
        if v is None:
            v = self._uss[y] = self.in_sss(y) and closed_under_cycling(y, self.cap)
        return v


def minimal_conjugators(x: NormalForm, ctx: _SummitContext) -> dict[int, Perm]:
    """For each atom, the smallest simple c above it with x^c in the ultra summit set.

    The qualifying simples are closed under meets, so the smallest one is the
    meet of all of them.
    """
    S = x.structure
    good = [s for s in S.simples()
            if s != S.identity and ctx.in_uss(conjugate_by_simple(x, s))]
    out = {}
    for i, a in enumerate(S.atoms):
        above = [s for s in good if S.left_divides(a, s)]
        c = above[0]
        for s in above[1:]:
            c = S.meet(c, s)
        if not ctx.in_uss(conjugate_by_simple(x, c)):
            raise AssertionError("meet of ultra summit conjugators left the set")
        out[i] = c
    return out


@dataclass
class SummitSet:
    elements: list[NormalForm]
    inf: int
    sup: int
    # element -> (parent element, simple conjugator from parent)
    tree: dict = field(repr=False, default_factory=dict)
    # graph edges (source, target, simple) by minimal conjugators
    edges: list = field(repr=False, default_factory=list)

    def __contains__(self, y):
        return y in self.tree

    def __len__(self):
        return len(self.elements)

    def path_conjugator(self, y: NormalForm) -> NormalForm:
        """Conjugator from the root element to y."""
        steps = []
        while True:
            parent, s = self.tree[y]
            if parent is None:
                break
            steps.append(s)
            y = parent
        root = y
        conj = identity_nf(root.kind, root.n)
        S = root.structure
        for s in reversed(steps):
            conj = multiply(conj, simple_nf(S, s))
        return conj


def ultra_summit_set(x: NormalForm, cap: int = DEFAULT_CAP) -> tuple[SummitSet, NormalForm]:
    """Ultra summit set of x and the conjugator from x to its first element."""
    root, conj = ultra_summit_rep(x, cap)
    ctx = _SummitContext(root.inf, root.sup, cap)
    tree = {root: (None, None)}
    order = [root]
    edges = []
    queue = deque([root])
    while queue:
        y = queue.popleft()
        if not y.factors:
            break
        for i, c in sorted(minimal_conjugators(y, ctx).items()):
            z = conjugate_by_simple(y, c)
            edges.append((y, z, c))
            if z not in tree:
                tree[z] = (y, c)
                order.append(z)
                queue.append(z)
                if len(order) > cap:
                    raise ResourceCapExceeded("ultra summit set", cap)
    return SummitSet(order, root.inf, root.sup, tree, edges), conj


def super_summit_set(x: NormalForm, cap: int = DEFAULT_CAP) -> tuple[SummitSet, NormalForm]:
    """Closure of a super summit element under conjugation by every simple."""
    root, conj = super_summit_rep(x)
    S = root.structure
    tree = {root: (None, None)}
    order = [root]
    queue = deque([root])
    simples = [s for s in S.simples() if s != S.identity]
    while queue:
        y = queue.popleft()
        for s in simples:
            z = conjugate_by_simple(y, s)
            if z.inf == root.inf and z.sup == root.sup and z not in tree:
                tree[z] = (y, s)
                order.append(z)
                queue.append(z)
                if len(order) > cap:
                    raise ResourceCapExceeded("super summit set", cap)
    return SummitSet(order, root.inf, root.sup, tree), conj


def _quick_refusal(u: BraidWord, v: BraidWord) -> bool:
    if exponent_sum(u) != exponent_sum(v):
        return True
    return _cycle_type(permutation_of(u)) != _cycle_type(permutation_of(v))


def _cycle_type(p) -> tuple[int, ...]:
    seen = set()
    out = []
    for i in range(len(p)):
        if i not in seen:
            k = 0
            j = i
            while j not in seen:
                seen.add(j)
                j = p[j] - 1
                k += 1
            out.append(k)
    return tuple(sorted(out))


@dataclass(frozen=True)
class ConjugacyCertificate:
    source: NormalForm
    target: NormalForm
    witness: NormalForm

    def verify(self) -> bool:
        return conjugate(self.source, self.witness) == self.target

    def witness_word(self) -> BraidWord:
        return to_word(self.witness)


def are_conjugate(u: BraidWord, v: BraidWord, cap: int = DEFAULT_CAP
                  ) -> tuple[bool, ConjugacyCertificate | None]:
    if u.n != v.n:
        raise BraidError("braids on different strand counts")
    if _quick_refusal(u, v):
        return False, None
    return are_conjugate_nf(normalize(u), normalize(v), cap)


def are_conjugate_nf(x: NormalForm, y: NormalForm, cap: int = DEFAULT_CAP
                     ) -> tuple[bool, ConjugacyCertificate | None]:
    xs, _ = super_summit_rep(x)
    ys, _ = super_summit_rep(y)
    if (xs.inf, xs.sup) != (ys.inf, ys.sup):
        return False, None
    uss, p = ultra_summit_set(x, cap)
    target, r = ultra_summit_rep(y, cap)
    if target not in uss:
        return False, None
    q = uss.path_conjugator(target)
    witness = multiply(multiply(p, q), invert(r))
    cert = ConjugacyCertificate(x, y, witness)
    if not cert.verify():
        raise AssertionError("conjugacy witness failed verification")
    return True, cert


def geodesic_length(x: NormalForm) -> int:
    """Length of a shortest word in simples and their inverses over the class."""
    rep, _ = super_summit_rep(x)
    u, s = rep.inf, rep.canonical_length
    return max(s + u, -u, s)
