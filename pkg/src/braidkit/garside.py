"""Left-greedy normal forms over a Garside structure on a symmetric group.

Simple elements are encoded by the permutations they induce (0-based
one-line tuples, composed as functions with the right factor applied first).
A structure is fixed by a length function, an atom set and the Garside
element; every lattice operation is derived from those three ingredients,
so the classical Artin monoid and the band-generator monoid share one
engine.

The normal form of a braid is ``Delta^inf * f_1 * ... * f_s`` where each
``f_i`` is a proper nontrivial simple and every adjacent pair is
left-weighted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .core import BraidWord, delta_word
from .errors import BraidError

Perm = tuple[int, ...]


def compose(a: Perm, b: Perm) -> Perm:
    return tuple(a[i] for i in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def inversions(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def reflection_length(p: Perm) -> int:
    seen = [False] * len(p)
    cycles = 0
    for i in range(len(p)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return len(p) - cycles


def transposition(n: int, i: int, j: int) -> Perm:
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def perm_text(p: Perm) -> str:
    return " ".join(str(x + 1) for x in p)


class GarsideStructure:
    """Lattice of simple elements below ``delta`` for a given length."""

    def __init__(self, kind: str, n: int, length: Callable[[Perm], int],
                 atoms: Sequence[Perm], delta: Perm, letters: Sequence):
        self.kind = kind
        self.n = n
        self._length_fn = length
        self.atoms = tuple(atoms)
        self.letters = tuple(letters)  # external name of each atom
        self.letter_index = {x: i for i, x in enumerate(self.letters)}
        self.delta = delta
        self.delta_inv = inverse(delta)
        self.identity = tuple(range(n))
        self.delta_length = length(delta)
        self._len: dict = {}
        self._prefix_atoms: dict = {}
        self._suffix_atoms: dict = {}
        self._meet: dict = {}
        self._rmeet: dict = {}
        self._weight: dict = {}
        self._tau: dict = {}
        self._tau_inv: dict = {}
        self._word: dict = {}
        # order of tau as a permutation action
        k, p = 1, delta
        while p != self.identity:
            # smallest k with delta^k central in the symmetric group
            p = compose(p, delta)
            k += 1
        self.tau_order = k

    def __repr__(self):
        return f"GarsideStructure({self.kind!r}, n={self.n})"

    # primitive queries

    def length(self, p: Perm) -> int:
        v = self._len.get(p)
        if v is None:
            v = self._len[p] = self._length_fn(p)
        return v

    def is_simple(self, p: Perm) -> bool:
        return self.length(p) + self.length(compose(inverse(p), self.delta)) == self.delta_length

    def left_divides(self, a: Perm, b: Perm) -> bool:
        """a is a prefix of b (both simple)."""
        return self.length(a) + self.length(compose(inverse(a), b)) == self.length(b)

    def right_divides(self, a: Perm, b: Perm) -> bool:
        """a is a suffix of b (both simple)."""
        return self.length(a) + self.length(compose(b, inverse(a))) == self.length(b)

    def right_complement(self, a: Perm) -> Perm:
        """The simple c with a*c = Delta."""
        return compose(inverse(a), self.delta)

    def left_complement(self, a: Perm) -> Perm:
        """The simple c with c*a = Delta."""
        return compose(self.delta, inverse(a))

    def tau(self, a: Perm) -> Perm:
        """Delta^-1 a Delta."""
        v = self._tau.get(a)
        if v is None:
            v = self._tau[a] = compose(compose(self.delta_inv, a), self.delta)
        return v

    def tau_inv(self, a: Perm) -> Perm:
        v = self._tau_inv.get(a)
        if v is None:
            v = self._tau_inv[a] = compose(compose(self.delta, a), self.delta_inv)
        return v

    def tau_power(self, a: Perm, k: int) -> Perm:
        k %= self.tau_order
        for _ in range(k):
            a = self.tau(a)
        return a

    def prefix_atoms(self, b: Perm) -> tuple[int, ...]:
        v = self._prefix_atoms.get(b)
        if v is None:
            lb = self.length(b)
            v = tuple(i for i, x in enumerate(self.atoms)
                      if self.length(compose(x, b)) == lb - 1)
            # atoms are involutions, so x^-1 b = x b
            self._prefix_atoms[b] = v
        return v

    def suffix_atoms(self, b: Perm) -> tuple[int, ...]:
        v = self._suffix_atoms.get(b)
        if v is None:
            lb = self.length(b)
            v = tuple(i for i, x in enumerate(self.atoms)
                      if self.length(compose(b, x)) == lb - 1)
            self._suffix_atoms[b] = v
        return v

    # lattice operations

    def meet(self, a: Perm, b: Perm) -> Perm:
        """Greatest common prefix."""
        key = (a, b)
        v = self._meet.get(key)
        if v is not None:
            return v
        m = self.identity
        ra, rb = a, b
        while True:
            common = set(self.prefix_atoms(ra)).intersection(self.prefix_atoms(rb))
            if not common:
                break
            x = self.atoms[min(common)]
            m = compose(m, x)
            ra = compose(x, ra)
            rb = compose(x, rb)
        self._meet[key] = m
        return m

    def right_meet(self, a: Perm, b: Perm) -> Perm:
        """Greatest common suffix."""
        key = (a, b)
        v = self._rmeet.get(key)
        if v is not None:
            return v
        m = self.identity
        ra, rb = a, b
        while True:
            common = set(self.suffix_atoms(ra)).intersection(self.suffix_atoms(rb))
            if not common:
                break
            x = self.atoms[min(common)]
            m = compose(x, m)
            ra = compose(ra, x)
            rb = compose(rb, x)
        self._rmeet[key] = m
        return m

    def join(self, a: Perm, b: Perm) -> Perm:
        """Least common multiple for the prefix order."""
        c = self.right_meet(self.right_complement(a), self.right_complement(b))
        return compose(self.delta, inverse(c))

    def right_join(self, a: Perm, b: Perm) -> Perm:
        c = self.meet(self.left_complement(a), self.left_complement(b))
        return compose(inverse(c), self.delta)

    def left_weight(self, a: Perm, b: Perm) -> tuple[Perm, Perm]:
        """Rewrite the product a*b as a left-weighted pair."""
        key = (a, b)
        v = self._weight.get(key)
        if v is None:
            c = self.meet(self.right_complement(a), b)
            v = (compose(a, c), compose(inverse(c), b))
            self._weight[key] = v
        return v

    def is_left_weighted(self, a: Perm, b: Perm) -> bool:
        return self.meet(self.right_complement(a), b) == self.identity

    # words

    def atom_word(self, p: Perm) -> tuple[int, ...]:
        """Atom indices spelling p, taking the smallest admissible atom first."""
        v = self._word.get(p)
        if v is None:
            out = []
            r = p
            while r != self.identity:
                i = self.prefix_atoms(r)[0]
                out.append(i)
                r = compose(self.atoms[i], r)
            v = self._word[p] = tuple(out)
        return v

    def simples(self) -> list[Perm]:
        """All left divisors of Delta, found by extending with atoms."""
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for p in frontier:
                lp = self.length(p)
                for x in self.atoms:
                    q = compose(p, x)
                    if q not in seen and self.length(q) == lp + 1 and self.is_simple(q):
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        return sorted(seen, key=lambda p: (self.length(p), p))


def check_axioms(S: GarsideStructure) -> list[str]:
    """Exhaustively test the Garside axioms on the simples of S; returns violations."""
    bad = []
    simples = S.simples()
    simple_set = set(simples)
    for p in simples:
        if not S.left_divides(p, S.delta) or not S.right_divides(p, S.delta):
            bad.append(f"{p} does not divide Delta on both sides")
        word = S.atom_word(p)
        q = S.identity
        for i in word:
            q = compose(q, S.atoms[i])
        if q != p or len(word) != S.length(p):
            bad.append(f"atom word of {p} is wrong")
        if S.right_complement(p) not in simple_set or S.tau(p) not in simple_set:
            bad.append(f"complement or tau of {p} is not simple")
    for a in simples:
        for b in simples:
            m = S.meet(a, b)
            j = S.join(a, b)
            if not (S.left_divides(m, a) and S.left_divides(m, b)):
                bad.append(f"meet({a},{b}) is not a common divisor")
            if not (S.left_divides(a, j) and S.left_divides(b, j)):
                bad.append(f"join({a},{b}) is not a common multiple")
            for c in simples:
                if S.left_divides(c, a) and S.left_divides(c, b) and not S.left_divides(c, m):
                    bad.append(f"meet({a},{b}) is not greatest")
                if S.left_divides(a, c) and S.left_divides(b, c) and not S.left_divides(j, c):
                    bad.append(f"join({a},{b}) is not least")
            if len(bad) > 20:
                return bad
    return bad


@lru_cache(maxsize=None)
def classical(n: int) -> GarsideStructure:
    if n < 1:
        raise BraidError("need at least one strand")
    atoms = [transposition(n, i, i + 1) for i in range(n - 1)]
    delta = tuple(range(n - 1, -1, -1))
    return GarsideStructure("classical", n, inversions, atoms, delta, list(range(1, n)))


# normal forms


@dataclass(frozen=True)
class NormalForm:
    kind: str
    n: int
    inf: int
    factors: tuple[Perm, ...] = ()

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def structure(self) -> GarsideStructure:
        return structure_for(self.kind, self.n)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def __str__(self):
        return render(self)


def structure_for(kind: str, n: int) -> GarsideStructure:
    if kind == "classical":
        return classical(n)
    if kind == "dual":
        from .dual import dual
        return dual(n)
    raise BraidError(f"unknown Garside structure {kind!r}")


def render(nf: NormalForm) -> str:
    if nf.kind == "dual":
        from .dual import render_dual_simple
        text = render_dual_simple
    else:
        text = perm_text
    parts = [f"D^{nf.inf}"] + [text(f) for f in nf.factors]
    return " | ".join(parts)


class _Builder:
    """Mutable Delta^k * factors with factors kept left-weighted."""

    __slots__ = ("S", "k", "factors")

    def __init__(self, S: GarsideStructure, k: int = 0, factors: Iterable[Perm] = ()):
        self.S = S
        self.k = k
        self.factors = list(factors)

    def append_simple(self, x: Perm):
        S = self.S
        if x == S.identity:
            return
        f = self.factors
        f.append(x)
        changed = True
        while changed:
            changed = False
            for j in range(len(f) - 2, -1, -1):
                a, b = f[j], f[j + 1]
                a2, b2 = S.left_weight(a, b)
                if a2 != a:
                    f[j], f[j + 1] = a2, b2
                    changed = True
            while f and f[-1] == S.identity:
                f.pop()

    def append_inverse_simple(self, x: Perm):
        """Multiply on the right by x^-1 = Delta^-1 * (Delta x^-1)."""
        S = self.S
        self.factors = [S.tau_inv(f) for f in self.factors]
        self.k -= 1
        self.append_simple(S.left_complement(x))

    def times_delta_power(self, m: int):
        S = self.S
        self.factors = [S.tau_power(f, m) for f in self.factors]
        self.k += m

    def result(self) -> NormalForm:
        S = self.S
        f = [x for x in self.factors if x != S.identity]
        k = self.k
        i = 0
        while i < len(f) and f[i] == S.delta:
            i += 1
        return NormalForm(S.kind, S.n, k + i, tuple(f[i:]))


def normalize_atoms(S: GarsideStructure, letters: Iterable[tuple[int, int]]) -> NormalForm:
    """Normal form of a word given as (atom index, sign) pairs."""
    b = _Builder(S)
    for i, sign in letters:
        x = S.atoms[i]
        if sign > 0:
            b.append_simple(x)
        else:
            b.append_inverse_simple(x)
    return b.result()


def normalize(w: BraidWord) -> NormalForm:
    S = classical(w.n)
    return normalize_atoms(S, ((abs(x) - 1, x) for x in w.letters))


def equal(u: BraidWord, v: BraidWord) -> bool:
    if u.n != v.n:
        raise BraidError("braids on different strand counts")
    return normalize(u) == normalize(v)


def _check_same(a: NormalForm, b: NormalForm):
    if a.kind != b.kind or a.n != b.n:
        raise BraidError("normal forms from different structures")


def multiply(a: NormalForm, b: NormalForm) -> NormalForm:
    _check_same(a, b)
    S = a.structure
    builder = _Builder(S, a.inf + b.inf, [S.tau_power(f, b.inf) for f in a.factors])
    for f in b.factors:
        builder.append_simple(f)
    return builder.result()


def invert(a: NormalForm) -> NormalForm:
    S = a.structure
    builder = _Builder(S)
    for f in reversed(a.factors):
        builder.append_inverse_simple(f)
    builder.times_delta_power(-a.inf)
    return builder.result()


def conjugate(x: NormalForm, a: NormalForm) -> NormalForm:
    """a^-1 x a."""
    return multiply(multiply(invert(a), x), a)


def identity_nf(kind: str, n: int) -> NormalForm:
    return NormalForm(kind, n, 0, ())


def delta_power(kind: str, n: int, k: int) -> NormalForm:
    return NormalForm(kind, n, k, ())


def simple_nf(S: GarsideStructure, p: Perm) -> NormalForm:
    if p == S.identity:
        return NormalForm(S.kind, S.n, 0, ())
    if p == S.delta:
        return NormalForm(S.kind, S.n, 1, ())
    return NormalForm(S.kind, S.n, 0, (p,))


def inf_sup_len(w: BraidWord) -> tuple[int, int, int]:
    nf = normalize(w)
    return nf.inf, nf.sup, nf.canonical_length


def to_word(nf: NormalForm) -> BraidWord:
    """Classical braid word for a classical normal form."""
    if nf.kind != "classical":
        from .dual import dual_nf_to_word
        return dual_nf_to_word(nf)
    S = nf.structure
    dw = delta_word(nf.n)
    letters: list[int] = []
    if nf.inf > 0:
        letters.extend(dw.letters * nf.inf)
    elif nf.inf < 0:
        letters.extend(dw.inverse().letters * (-nf.inf))
    for f in nf.factors:
        letters.extend(S.letters[i] for i in S.atom_word(f))
    return BraidWord(nf.n, tuple(letters))


def simple_word(p: Perm) -> BraidWord:
    """Positive classical word of a permutation braid."""
    S = classical(len(p))
    return BraidWord(len(p), tuple(S.letters[i] for i in S.atom_word(p)))


# counting


def staircase_hook_count(n: int) -> int:
    """Standard Young tableaux of the staircase shape (n-1, n-2, ..., 1)."""
    shape = list(range(n - 1, 0, -1))
    cells = sum(shape)
    prod = 1
    for r, row in enumerate(shape):
        for c in range(row):
            arm = row - c - 1
            leg = sum(1 for rr in range(r + 1, len(shape)) if shape[rr] > c)
            prod *= arm + leg + 1
    return math.factorial(cells) // prod


def positive_words_of_delta(n: int) -> Iterable[tuple[int, ...]]:
    """Every positive word of length n(n-1)/2 that spells Delta.

    A positive word represents Delta only if each prefix is a simple element
    of the right length, so the search prunes non-simple prefixes.
    """
    S = classical(n)
    target = n * (n - 1) // 2

    def extend(p: Perm, word: list[int]):
        if len(word) == target:
            yield tuple(word)
            return
        lp = S.length(p)
        for i, x in enumerate(S.atoms):
            q = compose(p, x)
            if S.length(q) == lp + 1:
                word.append(S.letters[i])
                yield from extend(q, word)
                word.pop()

    yield from extend(S.identity, [])


def count_positive_words_of_delta(n: int, verify: bool = True) -> int:
    """Count positive words equal to Delta, each one checked by normalization."""
    count = 0
    want = delta_power("classical", n, 1)
    for word in positive_words_of_delta(n):
        if verify and normalize(BraidWord(n, word)) != want:
            raise AssertionError(f"enumerated word {word} is not Delta")
        count += 1
    return count


def all_permutations(n: int) -> list[Perm]:
    return list(permutations(range(n)))
