"""Braid words, permutations and the free-group words the Artin action uses.

A braid word on ``n`` strands is a tuple of nonzero integers; ``i`` stands for
the generator sigma_i and ``-i`` for its inverse.  The text form is
``"n: w"`` with space separated letters, e.g. ``"4: 1 -2 3 3"``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BraidError, ParseError

MAX_STRANDS = 64


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise BraidError(f"strand count must be a positive integer, got {self.n!r}")
        if self.n > MAX_STRANDS:
            raise BraidError(f"strand count {self.n} exceeds the limit {MAX_STRANDS}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.n:
                raise BraidError(f"letter {x} out of range for {self.n} strands")

    @classmethod
    def parse(cls, text: str) -> BraidWord:
        return parse_word(text)

    def __str__(self):
        return format_word(self)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise BraidError(f"cannot multiply braids on {self.n} and {other.n} strands")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.n, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> BraidWord:
        return BraidWord(self.n, tuple(-x for x in self.letters))

    def widen(self, n: int) -> BraidWord:
        """Same letters viewed on ``n >= self.n`` strands."""
        if n < self.n:
            raise BraidError("cannot narrow a braid word")
        return BraidWord(n, self.letters)


def parse_word(text: str) -> BraidWord:
    head, sep, body = text.strip().partition(":")
    if not sep:
        raise ParseError(f"missing ':' in braid word {text!r}")
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"bad strand count {head!r}") from None
    letters = []
    for tok in body.split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise ParseError(f"malformed letter {tok!r}") from None
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    if not w.letters:
        return f"{w.n}:"
    return f"{w.n}: " + " ".join(str(x) for x in w.letters)


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[int] = []
    for x in w.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return BraidWord(w.n, tuple(out))


def permutation_of(w: BraidWord) -> tuple[int, ...]:
    """One-line image of the underlying permutation, 1-based.

    The letters compose as functions with the rightmost applied first, so
    ``permutation_of(u * v)`` is ``permutation_of(u)`` after ``permutation_of(v)``.
    """
    p = list(range(1, w.n + 1))
    # p is the composite so far; appending s_i on the right swaps entries i, i+1
    for x in w.letters:
        i = abs(x) - 1
        p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def delta_word(n: int) -> BraidWord:
    """Half twist (s_{n-1} ... s_1)(s_{n-1} ... s_2) ... (s_{n-1})."""
    letters = []
    for k in range(1, n):
        letters.extend(range(n - 1, k - 1, -1))
    return BraidWord(n, tuple(letters))


def delta_short(n: int) -> BraidWord:
    """delta = s_1 s_2 ... s_{n-1}, an n-th root of the full twist."""
    return BraidWord(n, tuple(range(1, n)))


def alpha_word(n: int) -> BraidWord:
    """alpha = s_1 s_2 ... s_{n-1} s_1, an (n-1)-th root of the full twist."""
    return BraidWord(n, tuple(range(1, n)) + ((1,) if n > 1 else ()))


def tau(w: BraidWord) -> BraidWord:
    """Conjugation by the half twist: sigma_i -> sigma_{n-i}."""
    return BraidWord(w.n, tuple((w.n - abs(x)) * (1 if x > 0 else -1) for x in w.letters))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


def band_letters(s: int, t: int, sign: int = 1) -> list[int]:
    """Classical letters of the band generator joining strands s < t."""
    up = list(range(t - 1, s, -1))
    return up + [s * sign] + [-x for x in reversed(up)]


def pure_generator(s: int, t: int, n: int) -> BraidWord:
    """A_{s,t}: the square of the band generator joining strands s and t."""
    if s > t:
        s, t = t, s
    if s < 1 or t > n or s == t:
        raise BraidError(f"need 1 <= s < t <= n, got s={s} t={t} n={n}")
    up = list(range(t - 1, s, -1))
    return BraidWord(n, tuple(up + [s, s] + [-x for x in reversed(up)]))


def strand_removal(w: BraidWord, k: int) -> BraidWord:
    """Delete the strand starting at position k; the braid must fix it."""
    if not 1 <= k <= w.n:
        raise BraidError(f"strand {k} out of range")
    if w.n < 2:
        raise BraidError("cannot remove the only strand")
    perm = permutation_of(w)
    if perm[k - 1] != k:
        raise BraidError(f"strand {k} is not fixed by the braid")
    pos = k
    out = []
    for x in w.letters:
        i = abs(x)
        if i == pos:
            pos = i + 1
        elif i + 1 == pos:
            pos = i
        elif i > pos:
            out.append(x - 1 if x > 0 else x + 1)
        else:
            out.append(x)
    return BraidWord(w.n - 1, tuple(out))


def connect_sum(u: BraidWord, v: BraidWord) -> BraidWord:
    """Braid whose closure is the connected sum of the two closures."""
    shift = u.n - 1
    letters = u.letters + tuple(x + shift if x > 0 else x - shift for x in v.letters)
    return BraidWord(u.n + v.n - 1, letters)


def direct_sum(u: BraidWord, v: BraidWord) -> BraidWord:
    """Side by side braids; the closure is the split union."""
    shift = u.n
    letters = u.letters + tuple(x + shift if x > 0 else x - shift for x in v.letters)
    return BraidWord(u.n + v.n, letters)


@dataclass(frozen=True)
class FreeGroupWord:
    """Reduced word in the free group on x_1..x_rank (letters +-j)."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        out: list[int] = []
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise BraidError(f"free letter {x} out of range")
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        object.__setattr__(self, "letters", tuple(out))

    @classmethod
    def generator(cls, rank: int, j: int) -> FreeGroupWord:
        return cls(rank, (j,))

    def __mul__(self, other: FreeGroupWord) -> FreeGroupWord:
        return FreeGroupWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeGroupWord:
        return FreeGroupWord(self.rank, tuple(-x for x in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{x}" if x > 0 else f"x{-x}^-1" for x in self.letters)
