"""Linear and automorphism representations of braid words.

* Burau (unreduced and reduced) over Z[t, t^-1], and the Alexander
  polynomial derived from the reduced form.
* Lawrence-Krammer over Z[q^+-1, t^+-1] on the basis v_{j,k}, j < k.
* The Artin action on the free group, used as an independent equality test.
* Desingularisation of singular braid words into the group ring.

Matrices act on column vectors and a word maps to the ordered product of its
letters' matrices, so ``rep(u * v) == rep(u) @ rep(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .core import BraidWord, FreeGroupWord
from .errors import BraidError, ParseError
from .garside import NormalForm, identity_nf, multiply, normalize
from .laurent import Laurent, NotDivisible

Matrix = tuple[tuple[Laurent, ...], ...]

T_VARS = ("t",)
QT_VARS = ("q", "t")


# matrix helpers


def mat_identity(size: int, vars) -> Matrix:
    one = Laurent.const(1, vars)
    zero = Laurent({}, vars)
    return tuple(tuple(one if r == c else zero for c in range(size)) for r in range(size))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    if not size:
        return a
    zero = a[0][0].zero()
    cols = list(zip(*b))
    out = []
    for row in a:
        nz = [(m, x) for m, x in enumerate(row) if x]
        out_row = []
        for col in cols:
            acc = zero
            for m, x in nz:
                y = col[m]
                if y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, c: Laurent) -> Matrix:
    return tuple(tuple(x * c for x in row) for row in a)


def det(m: Matrix) -> Laurent:
    """Determinant by fraction-free (Bareiss) elimination with exact division."""
    size = len(m)
    if size == 0:
        return Laurent.const(1, T_VARS)
    a = [list(row) for row in m]
    sign = 1
    prev = a[0][0].one()
    for k in range(size - 1):
        if not a[k][k]:
            for r in range(k + 1, size):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return a[0][0].zero()
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev)
        prev = a[k][k]
    return a[-1][-1] * sign


def mat_inverse(m: Matrix) -> Matrix:
    """Inverse over the Laurent ring; the determinant must be a unit."""
    size = len(m)
    d = det(m)
    if not d.is_monomial():
        raise NotDivisible("matrix is not invertible over the Laurent ring")
    d_inv = d ** -1
    out = [[None] * size for _ in range(size)]
    for r in range(size):
        for c in range(size):
            minor = tuple(tuple(m[i][j] for j in range(size) if j != c)
                          for i in range(size) if i != r)
            cof = det(minor) if minor else d.one()
            if (r + c) % 2:
                cof = -cof
            out[c][r] = cof * d_inv
    return tuple(tuple(row) for row in out)


def mat_is_identity(m: Matrix) -> bool:
    return all((x == 1) if r == c else x.is_zero()
               for r, row in enumerate(m) for c, x in enumerate(row))


def mat_render(m: Matrix, names=None) -> str:
    return "\n".join("[" + ", ".join(x.render(names) for x in row) + "]" for row in m)


def _product(n_size: int, vars, gens) -> Matrix:
    m = mat_identity(n_size, vars)
    for g in gens:
        m = mat_mul(m, g)
    return m


# Burau


@lru_cache(maxsize=None)
def _burau_gen(n: int, letter: int) -> Matrix:
    t = Laurent.var("t", T_VARS)
    one = t.one()
    i = abs(letter) - 1
    rows = [list(r) for r in mat_identity(n, T_VARS)]
    if letter > 0:
        block = ((one - t, t), (one, one.zero()))
    else:
        ti = t ** -1
        block = ((one.zero(), one), (ti, one - ti))
    for r in range(2):
        for c in range(2):
            rows[i + r][i + c] = block[r][c]
    return tuple(tuple(r) for r in rows)


def burau_matrix(w: BraidWord) -> Matrix:
    return _product(w.n, T_VARS, (_burau_gen(w.n, x) for x in w.letters))


@lru_cache(maxsize=None)
def _reduced_burau_gen(n: int, letter: int) -> Matrix:
    t = Laurent.var("t", T_VARS)
    i = abs(letter)  # 1-based; column i changes
    rows = [list(r) for r in mat_identity(n - 1, T_VARS)]
    if letter > 0:
        column = {i - 1: -t, i: -t, i + 1: -t.one()}
    else:
        ti = t ** -1
        column = {i - 1: -t.one(), i: -ti, i + 1: -ti}
    for r, v in column.items():
        if 1 <= r <= n - 1:
            rows[r - 1][i - 1] = v
    return tuple(tuple(r) for r in rows)


def reduced_burau_matrix(w: BraidWord) -> Matrix:
    return _product(w.n - 1, T_VARS, (_reduced_burau_gen(w.n, x) for x in w.letters))


def alexander_polynomial(w: BraidWord) -> Laurent:
    """Alexander polynomial of the closure, normalised up to units."""
    m = reduced_burau_matrix(w)
    d = det(mat_sub(m, mat_identity(w.n - 1, T_VARS))) if w.n > 1 else Laurent.const(1, T_VARS)
    t = Laurent.var("t", T_VARS)
    denom = sum((t ** k for k in range(w.n)), t.zero())
    return d.divide_exact(denom).normalized_unit()


# Lawrence-Krammer


def lk_basis(n: int) -> list[tuple[int, int]]:
    return [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]


def _lk_columns(n: int, i: int):
    """Image of each basis vector under sigma_i as {target: {(a, b): c}} for c q^a t^b."""
    cols = {}
    for j, k in lk_basis(n):
        if i not in (j - 1, j, k - 1, k):
            img = {(j, k): {(0, 0): 1}}
        elif i == j - 1:
            img = {(i, k): {(1, 0): 1}, (i, j): {(2, 0): 1, (1, 0): -1},
                   (j, k): {(0, 0): 1, (1, 0): -1}}
        elif i == j and i != k - 1:
            img = {(j + 1, k): {(0, 0): 1}}
        elif i == k - 1 and i != j:
            img = {(j, i): {(1, 0): 1}, (j, k): {(0, 0): 1, (1, 0): -1},
                   (i, k): {(1, 1): -1, (0, 1): 1}}
        elif i == k:
            img = {(j, k + 1): {(0, 0): 1}}
        else:  # i == j == k - 1
            img = {(j, k): {(1, 1): -1}}
        cols[(j, k)] = img
    return cols


@lru_cache(maxsize=None)
def _lk_gen(n: int, letter: int) -> Matrix:
    i = abs(letter)
    basis = lk_basis(n)
    index = {b: x for x, b in enumerate(basis)}
    rows = [list(r) for r in mat_identity(len(basis), QT_VARS)]
    zero = Laurent({}, QT_VARS)
    for b in basis:
        for r in range(len(basis)):
            rows[r][index[b]] = zero
    for b, img in _lk_columns(n, i).items():
        for target, coeffs in img.items():
            rows[index[target]][index[b]] = Laurent(coeffs, QT_VARS)
    m = tuple(tuple(r) for r in rows)
    return m if letter > 0 else mat_inverse(m)


def lk_matrix(w: BraidWord) -> Matrix:
    if w.n < 2:
        return ()
    size = w.n * (w.n - 1) // 2
    return _product(size, QT_VARS, (_lk_gen(w.n, x) for x in w.letters))


@lru_cache(maxsize=None)
def lk_numeric_generator(n: int, letter: int, q: int, t: int, p: int) -> np.ndarray:
    m = _lk_gen(n, letter)
    qi, ti = pow(q, -1, p), pow(t, -1, p)
    out = np.zeros((len(m), len(m)), dtype=np.int64)
    for r, row in enumerate(m):
        for c, x in enumerate(row):
            v = 0
            for (a, b), coef in x.terms.items():
                v += coef * pow(q if a >= 0 else qi, abs(a), p) * pow(t if b >= 0 else ti, abs(b), p)
            out[r, c] = v % p
    return out


def lk_faithfulness_probe(n: int, max_len: int, q: int = 7919, t: int = 104729,
                          p: int = 536870909) -> tuple[int, list[BraidWord]]:
    """Search every freely reduced word up to max_len for a nontrivial kernel element.

    Images are evaluated modulo a prime; a word whose image is the identity
    there is checked symbolically and against its normal form.  Returns the
    number of words visited and any nontrivial braid mapped to the identity.
    """
    letters = [x for i in range(1, n) for x in (i, -i)]
    gens = {x: lk_numeric_generator(n, x, q, t, p) for x in letters}
    size = n * (n - 1) // 2
    ident = np.eye(size, dtype=np.int64)
    bad: list[BraidWord] = []
    visited = 0
    stack = [((), ident)]
    while stack:
        word, m = stack.pop()
        for x in letters:
            if word and word[-1] == -x:
                continue
            w2 = word + (x,)
            m2 = (m @ gens[x]) % p
            visited += 1
            if np.array_equal(m2, ident):
                bw = BraidWord(n, w2)
                if not normalize(bw).is_identity() and mat_is_identity(lk_matrix(bw)):
                    bad.append(bw)
            if len(w2) < max_len:
                stack.append((w2, m2))
    return visited, bad


# Artin action


def _artin_letter(rank: int, letter: int) -> list[tuple[int, ...]]:
    i = abs(letter)
    images = [(j,) for j in range(1, rank + 1)]
    if letter > 0:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    else:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    return images


def _substitute(word: tuple[int, ...], images) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        img = images[abs(x) - 1] if x > 0 else tuple(-y for y in reversed(images[abs(x) - 1]))
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def artin_images(w: BraidWord) -> tuple[FreeGroupWord, ...]:
    """Images of x_1..x_n, applying the letters' automorphisms left to right."""
    imgs = [(j,) for j in range(1, w.n + 1)]
    for x in w.letters:
        step = _artin_letter(w.n, x)
        imgs = [_substitute(img, step) for img in imgs]
    return tuple(FreeGroupWord(w.n, img) for img in imgs)


def artin_action(w: BraidWord, x: FreeGroupWord) -> FreeGroupWord:
    if x.rank != w.n:
        raise BraidError("free group rank must equal the strand count")
    imgs = [img.letters for img in artin_images(w)]
    return FreeGroupWord(w.n, _substitute(x.letters, imgs))


def word_oracle_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.n != v.n:
        raise BraidError("braids on different strand counts")
    return artin_images(u) == artin_images(v)


def burau_equal(u: BraidWord, v: BraidWord) -> bool:
    return burau_matrix(u) == burau_matrix(v)


# singular braids


@dataclass(frozen=True)
class SingularBraidWord:
    """Letters are ("s", i, +-1) for sigma_i^+-1 and ("t", i, 1) for a singular crossing."""

    n: int
    letters: tuple[tuple[str, int, int], ...] = ()

    def __post_init__(self):
        for kind, i, e in self.letters:
            if kind not in ("s", "t") or not 1 <= i < self.n or e not in (1, -1):
                raise BraidError(f"bad singular letter {(kind, i, e)}")

    @classmethod
    def parse(cls, text: str) -> SingularBraidWord:
        head, sep, body = text.strip().partition(":")
        if not sep:
            raise ParseError(f"missing ':' in {text!r}")
        try:
            n = int(head)
        except ValueError:
            raise ParseError(f"bad strand count {head!r}") from None
        letters = []
        for tok in body.split():
            if tok.startswith("t"):
                try:
                    letters.append(("t", int(tok[1:]), 1))
                except ValueError:
                    raise ParseError(f"malformed letter {tok!r}") from None
            else:
                try:
                    x = int(tok)
                except ValueError:
                    raise ParseError(f"malformed letter {tok!r}") from None
                if x == 0:
                    raise ParseError("letter 0")
                letters.append(("s", abs(x), 1 if x > 0 else -1))
        return cls(n, tuple(letters))

    def __str__(self):
        toks = [f"t{i}" if k == "t" else str(i * e) for k, i, e in self.letters]
        return f"{self.n}: " + " ".join(toks) if toks else f"{self.n}:"


GroupRingElement = dict  # NormalForm -> int


@lru_cache(maxsize=200_000)
def _times_letter(nf: NormalForm, letter: int) -> NormalForm:
    return multiply(nf, normalize(BraidWord(nf.n, (letter,))))


def desingularize(w: SingularBraidWord) -> GroupRingElement:
    """Image under tau_i -> sigma_i - sigma_i^-1."""
    elem = {identity_nf("classical", w.n): 1}
    for kind, i, e in w.letters:
        nxt: dict = {}
        moves = [(i * e, 1)] if kind == "s" else [(i, 1), (-i, -1)]
        for nf, c in elem.items():
            for letter, sign in moves:
                key = _times_letter(nf, letter)
                nxt[key] = nxt.get(key, 0) + c * sign
        elem = {k: v for k, v in nxt.items() if v}
    return elem


def singular_equal(u: SingularBraidWord, v: SingularBraidWord) -> bool:
    if u.n != v.n:
        raise BraidError("singular braids on different strand counts")
    return desingularize(u) == desingularize(v)
