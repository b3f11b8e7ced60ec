"""Band generators and the dual (Birman-Ko-Lee) Garside structure.

The band generator a_{t,s} (t > s) joins strands s and t in front of the
strands between them.  Its permutation is the transposition (s t), the
Garside element delta = a_{n,n-1} ... a_{2,1} induces the cycle
n -> n-1 -> ... -> 1 -> n, and the simple elements are the products of
descending cycles over non-crossing partitions.  Text form of a band word:
``"4: (3,1) -(4,2)"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import BraidWord, band_letters
from .errors import BraidError, ParseError
from .garside import (
    GarsideStructure, NormalForm, Perm, equal, normalize, normalize_atoms,
    reflection_length, transposition,
)

Band = tuple[int, int, int]  # (t, s, sign) with t > s


@dataclass(frozen=True)
class BandWord:
    n: int
    letters: tuple[Band, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise BraidError("strand count must be positive")
        out = []
        for t, s, e in self.letters:
            if s > t:
                t, s = s, t
            if not (1 <= s < t <= self.n) or e not in (1, -1):
                raise BraidError(f"band letter ({t},{s}) out of range for {self.n} strands")
            out.append((t, s, e))
        object.__setattr__(self, "letters", tuple(out))

    @classmethod
    def parse(cls, text: str) -> BandWord:
        head, sep, body = text.strip().partition(":")
        if not sep:
            raise ParseError(f"missing ':' in band word {text!r}")
        try:
            n = int(head)
        except ValueError:
            raise ParseError(f"bad strand count {head!r}") from None
        body = body.strip()
        letters = []
        pos = 0
        token = re.compile(r"\s*(-?)\(\s*(\d+)\s*,\s*(\d+)\s*\)")
        while pos < len(body):
            m = token.match(body, pos)
            if not m:
                raise ParseError(f"malformed band letter at {body[pos:]!r}")
            letters.append((int(m.group(2)), int(m.group(3)), -1 if m.group(1) else 1))
            pos = m.end()
            while pos < len(body) and body[pos].isspace():
                pos += 1
        return cls(n, tuple(letters))

    def __str__(self):
        if not self.letters:
            return f"{self.n}:"
        return f"{self.n}: " + " ".join(
            ("-" if e < 0 else "") + f"({t},{s})" for t, s, e in self.letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BandWord) -> BandWord:
        return BandWord(self.n, self.letters + other.letters)

    def inverse(self) -> BandWord:
        return BandWord(self.n, tuple((t, s, -e) for t, s, e in reversed(self.letters)))


def delta_band(n: int) -> BandWord:
    return BandWord(n, tuple((k + 1, k, 1) for k in range(n - 1, 0, -1)))


def band_to_classical(w: BandWord) -> BraidWord:
    letters: list[int] = []
    for t, s, e in w.letters:
        letters.extend(band_letters(s, t, e))
    return BraidWord(w.n, tuple(letters))


def classical_to_band(w: BraidWord) -> BandWord:
    return BandWord(w.n, tuple((abs(x) + 1, abs(x), 1 if x > 0 else -1) for x in w.letters))


def _delta_perm(n: int) -> Perm:
    return tuple((k - 1) % n for k in range(n))


@lru_cache(maxsize=None)
def dual(n: int) -> GarsideStructure:
    if n < 1:
        raise BraidError("need at least one strand")
    pairs = [(t, s) for t in range(2, n + 1) for s in range(1, t)]
    atoms = [transposition(n, s - 1, t - 1) for t, s in pairs]
    return GarsideStructure("dual", n, reflection_length, atoms, _delta_perm(n), pairs)


def dual_normalize(w: BandWord) -> NormalForm:
    S = dual(w.n)
    return normalize_atoms(S, ((S.letter_index[(t, s)], e) for t, s, e in w.letters))


def dual_normalize_classical(w: BraidWord) -> NormalForm:
    return dual_normalize(classical_to_band(w))


def simple_band_word(S: GarsideStructure, p: Perm) -> list[Band]:
    return [S.letters[i] + (1,) for i in S.atom_word(p)]


def dual_nf_band_word(nf: NormalForm) -> BandWord:
    S = dual(nf.n)
    d = delta_band(nf.n)
    letters: list[Band] = []
    if nf.inf > 0:
        letters.extend(d.letters * nf.inf)
    elif nf.inf < 0:
        letters.extend(d.inverse().letters * (-nf.inf))
    for f in nf.factors:
        letters.extend(simple_band_word(S, f))
    return BandWord(nf.n, tuple(letters))


def dual_nf_to_word(nf: NormalForm) -> BraidWord:
    return band_to_classical(dual_nf_band_word(nf))


# non-crossing partitions


def blocks_of(p: Perm) -> list[tuple[int, ...]]:
    """Cycles of p as sorted 1-based blocks, singletons included."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i not in seen:
            block = []
            j = i
            while j not in seen:
                seen.add(j)
                block.append(j + 1)
                j = p[j]
            out.append(tuple(sorted(block)))
    return sorted(out)


def perm_of_blocks(n: int, blocks) -> Perm:
    """Product of descending cycles b_k -> ... -> b_1 -> b_k."""
    p = list(range(n))
    for block in blocks:
        b = sorted(block)
        for i in range(1, len(b)):
            p[b[i] - 1] = b[i - 1] - 1
        if len(b) > 1:
            p[b[0] - 1] = b[-1] - 1
    return tuple(p)


def is_descending_cycle_product(p: Perm) -> bool:
    return perm_of_blocks(len(p), blocks_of(p)) == p


def noncrossing_partitions(n: int) -> Iterator[list[tuple[int, ...]]]:
    """Set partitions of 1..n with no crossing blocks, by direct recursion."""

    def parts(items: tuple[int, ...]):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        # choose the other members of first's block; gaps are independent
        for mask in range(1 << len(rest)):
            chosen = [rest[i] for i in range(len(rest)) if mask >> i & 1]
            block = (first,) + tuple(chosen)
            gaps = []
            prev = 0
            idx = [rest.index(c) for c in chosen] + [len(rest)]
            for j in idx:
                gaps.append(rest[prev:j])
                prev = j + 1
            yield from _product_parts(block, gaps, parts)

    yield from parts(tuple(range(1, n + 1)))


def _product_parts(block, gaps, parts):
    if not gaps:
        yield [block]
        return
    for first in parts(gaps[0]):
        for tail in _product_parts(block, gaps[1:], parts):
            yield first + tail


def is_noncrossing(blocks) -> bool:
    for a in blocks:
        for b in blocks:
            if a is b:
                continue
            for i in a:
                for j in a:
                    if i >= j:
                        continue
                    inside = [x for x in b if i < x < j]
                    outside = [x for x in b if x < i or x > j]
                    if inside and outside:
                        return False
    return True


def dual_divisors(n: int) -> list[Perm]:
    return dual(n).simples()


def catalan(n: int) -> int:
    from math import comb
    return comb(2 * n, n) // (n + 1)


def render_dual_simple(p: Perm) -> str:
    cycles = [b for b in blocks_of(p) if len(b) > 1]
    return "".join("(" + " ".join(str(x) for x in reversed(b)) + ")" for b in cycles)


def verify_dual_relations(n: int) -> bool:
    """Check the band-generator relations through the classical letters."""
    def a(t, s):
        return BandWord(n, ((t, s, 1),))

    def eq(u: BandWord, v: BandWord) -> bool:
        return equal(band_to_classical(u), band_to_classical(v))

    for t in range(2, n + 1):
        for s in range(1, t):
            for r in range(2, n + 1):
                for q in range(1, r):
                    if (t - r) * (t - q) * (s - r) * (s - q) > 0:
                        if not eq(a(t, s) * a(r, q), a(r, q) * a(t, s)):
                            return False
    for t in range(3, n + 1):
        for s in range(2, t):
            for r in range(1, s):
                x = a(t, s) * a(s, r)
                if not (eq(x, a(t, r) * a(t, s)) and eq(x, a(s, r) * a(t, r))):
                    return False
    delta = band_to_classical(delta_band(n))
    return normalize(delta) == normalize(BraidWord(n, tuple(range(n - 1, 0, -1))))
