"""Left-invariant ordering of braids by handle reduction.

A word is sigma-positive when the lowest generator it uses only appears
positively.  Every braid other than 1 has a sigma-positive or a
sigma-negative representative, never both, and u < v iff u^-1 v is
sigma-positive.  Handle reduction finds such a representative.
"""

from __future__ import annotations

from enum import Enum

from .core import BraidWord
from .errors import BraidError, ResourceCapExceeded

DEFAULT_STEPS = 1_000_000


class OrderResult(Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"

    def __str__(self):
        return self.value


def _next_handle(w: list[int]) -> tuple[int, int] | None:
    """The handle whose right end comes first, as (start, end) positions."""
    for j in range(1, len(w)):
        i = abs(w[j])
        for k in range(j - 1, -1, -1):
            a = abs(w[k])
            if a > i:
                continue
            if a == i and w[k] == -w[j]:
                return k, j
            break
    return None


def handle_reduce(w: BraidWord, max_steps: int = DEFAULT_STEPS) -> BraidWord:
    """An equivalent word without handles."""
    letters = list(w.letters)
    steps = 0
    while True:
        h = _next_handle(letters)
        if h is None:
            return BraidWord(w.n, tuple(letters))
        steps += 1
        if steps > max_steps:
            raise ResourceCapExceeded("handle reduction steps", max_steps)
        k, j = h
        e = 1 if letters[k] > 0 else -1
        i = abs(letters[k])
        middle = []
        for x in letters[k + 1:j]:
            if abs(x) == i + 1:
                d = 1 if x > 0 else -1
                middle += [-e * (i + 1), d * i, e * (i + 1)]
            else:
                middle.append(x)
        letters = letters[:k] + _free_reduce(middle) + letters[j + 1:]


def _free_reduce(xs: list[int]) -> list[int]:
    out: list[int] = []
    for x in xs:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def sign_of_reduced(w: BraidWord) -> int:
    """+1, -1 or 0 for a handle-free word."""
    if not w.letters:
        return 0
    low = min(abs(x) for x in w.letters)
    signs = {x > 0 for x in w.letters if abs(x) == low}
    if len(signs) != 1:
        raise AssertionError("reduced word still has a handle")
    return 1 if signs.pop() else -1


def sigma_sign(w: BraidWord) -> int:
    return sign_of_reduced(handle_reduce(w))


def compare(u: BraidWord, v: BraidWord) -> OrderResult:
    if u.n != v.n:
        raise BraidError("braids on different strand counts")
    s = sigma_sign(u.inverse() * v)
    if s > 0:
        return OrderResult.LESS
    if s < 0:
        return OrderResult.GREATER
    return OrderResult.EQUAL


def is_positive(w: BraidWord) -> bool:
    return sigma_sign(w) > 0


def torsion_probe(w: BraidWord, k: int) -> bool:
    """Check 1 < g < g^2 < ... < g^k (or the reverse chain), so g^k != 1."""
    if k < 1:
        raise BraidError("k must be positive")
    s = sigma_sign(w)
    if s == 0:
        raise BraidError("torsion probe needs a nontrivial braid")
    want = OrderResult.LESS if s > 0 else OrderResult.GREATER
    prev = BraidWord(w.n, ())
    for j in range(1, k + 1):
        cur = w ** j
        if compare(prev, cur) is not want:
            return False
        prev = cur
    return compare(BraidWord(w.n, ()), w ** k) is want
