"""Markov moves on braid words and a syntactic exchange-move detector.

Words are treated cyclically here: only the closure matters, so rotating a
word is always allowed.  The rewriting search uses the braid relations,
far commutation and free cancellation; each three-letter relation variant
is checked once against the normal form before it is used.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import product

from .core import BraidWord
from .errors import BraidError
from .garside import equal

DEFAULT_SEARCH = 20_000


def stabilize(w: BraidWord, sign: int = 1) -> BraidWord:
    if sign not in (1, -1):
        raise BraidError("stabilization sign must be +1 or -1")
    return BraidWord(w.n + 1, w.letters + (sign * w.n,))


def _rotations(letters: tuple[int, ...]):
    for k in range(max(len(letters), 1)):
        yield letters[k:] + letters[:k]


def _destabilize_direct(w: BraidWord) -> BraidWord | None:
    top = w.n - 1
    hits = [k for k, x in enumerate(w.letters) if abs(x) == top]
    if len(hits) != 1:
        return None
    k = hits[0]
    rest = w.letters[k + 1:] + w.letters[:k]
    return BraidWord(w.n - 1, rest)


@lru_cache(maxsize=None)
def _triple_table() -> dict:
    """Equal sign variants of s_a s_b s_a = s_b s_a s_b in B_3, as index patterns."""
    out: dict = {}
    for a, b in ((1, 2), (2, 1)):
        for signs in product((1, -1), repeat=3):
            lhs = (signs[0] * a, signs[1] * b, signs[2] * a)
            for signs2 in product((1, -1), repeat=3):
                rhs = (signs2[0] * b, signs2[1] * a, signs2[2] * b)
                if equal(BraidWord(3, lhs), BraidWord(3, rhs)):
                    out.setdefault(lhs, []).append(rhs)
    return out


def _neighbours(letters: tuple[int, ...]):
    m = len(letters)
    if m > 1:
        yield letters[1:] + letters[:1]
        yield letters[-1:] + letters[:-1]
    table = _triple_table()
    for k in range(m - 1):
        x, y = letters[k], letters[k + 1]
        if x == -y:
            yield letters[:k] + letters[k + 2:]
        elif abs(abs(x) - abs(y)) >= 2:
            yield letters[:k] + (y, x) + letters[k + 2:]
    for k in range(m - 2):
        x, y, z = letters[k:k + 3]
        if abs(x) != abs(z) or abs(abs(x) - abs(y)) != 1:
            continue
        lo = min(abs(x), abs(y)) - 1
        pattern = tuple((abs(v) - lo) * (1 if v > 0 else -1) for v in (x, y, z))
        for rhs in table.get(pattern, ()):
            new = tuple((abs(v) + lo) * (1 if v > 0 else -1) for v in rhs)
            yield letters[:k] + new + letters[k + 3:]
    if m > 1 and letters[0] == -letters[-1]:
        yield letters[1:-1]


def _search(w: BraidWord, goal, limit: int):
    """Breadth-first search over cyclic rewrites that never lengthen the word."""
    start = w.letters
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if goal(cur):
            return cur
        for nxt in _neighbours(cur):
            if nxt not in seen and len(nxt) <= len(start):
                if len(seen) >= limit:
                    return None
                seen.add(nxt)
                queue.append(nxt)
    return None


def destabilize(w: BraidWord, limit: int = DEFAULT_SEARCH) -> BraidWord | None:
    """A braid on one fewer strand with the same closure, if a search finds one."""
    if w.n < 2:
        return None
    for r in _rotations(w.letters):
        got = _destabilize_direct(BraidWord(w.n, r))
        if got is not None:
            return got
    top = w.n - 1
    found = _search(w, lambda ls: sum(abs(x) == top for x in ls) == 1, limit)
    if found is None:
        return None
    return _destabilize_direct(BraidWord(w.n, found))


def shorten(w: BraidWord, limit: int = DEFAULT_SEARCH) -> BraidWord:
    """Shortest word met by the cyclic rewrite search (same closure)."""
    best = w.letters
    start = w.letters
    seen = {start}
    queue = deque([start])
    while queue and len(seen) < limit:
        cur = queue.popleft()
        if len(cur) < len(best):
            best = cur
        for nxt in _neighbours(cur):
            if nxt not in seen and len(nxt) <= len(start):
                seen.add(nxt)
                queue.append(nxt)
    return BraidWord(w.n, best)


def reduce_index(w: BraidWord, limit: int = DEFAULT_SEARCH) -> BraidWord:
    """Destabilize as long as the search succeeds."""
    while True:
        smaller = destabilize(w, limit)
        if smaller is None:
            return w
        w = smaller


def exchange_factorization(w: BraidWord) -> tuple[BraidWord, BraidWord] | None:
    """A rotation of w of the form w1 s_{n-1} w2 s_{n-1}^-1, w1, w2 avoiding s_{n-1}."""
    top = w.n - 1
    if top < 1:
        return None
    for r in _rotations(w.letters):
        if not r or r[-1] != -top:
            continue
        hits = [k for k, x in enumerate(r) if abs(x) == top]
        if len(hits) != 2 or r[hits[0]] != top:
            continue
        k = hits[0]
        return BraidWord(w.n, r[:k]), BraidWord(w.n, r[k + 1:-1])
    return None
