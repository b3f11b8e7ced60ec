"""The fourteen acceptance checks, shared by ``braid selftest`` and the test suite.

Each check returns a :class:`CheckResult`; a check passes when every
assertion inside it holds and it finishes inside its time budget.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Callable

from .conjugacy import are_conjugate, super_summit_set, ultra_summit_set
from .core import BraidWord, alpha_word, delta_short, delta_word, permutation_of
from .diagram import (
    FIGURE_EIGHT, FIVE_TWO, TREFOIL, closure, finger_move, find_reducing_arc, reduce_once,
    seifert_smooth, to_closed_braid,
)
from .dual import catalan, dual_divisors, noncrossing_partitions
from .garside import (
    classical, count_positive_words_of_delta, equal, normalize, staircase_hook_count,
)
from .hecke import (
    HOMFLY_VARS, TRACE_VARS, alexander_from_homfly, homfly, ocneanu_trace,
)
from .laurent import Laurent
from .markov import exchange_factorization, stabilize
from .ordering import OrderResult, compare, is_positive, torsion_probe
from .representations import (
    burau_equal, lk_faithfulness_probe, lk_matrix, mat_identity, mat_is_identity, mat_scale,
    word_oracle_equal,
)
from .skein import homfly_skein


@dataclass
class CheckResult:
    number: int
    title: str
    ok: bool
    elapsed: float
    budget: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.ok and self.elapsed <= self.budget

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        over = "" if self.elapsed <= self.budget else " (over time budget)"
        return (f"criterion {self.number:2d} {status}  {self.title}  "
                f"[{self.elapsed:.3f}s / {self.budget:g}s]{over}  {self.detail}")

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "correct": self.ok, "elapsed_s": round(self.elapsed, 4),
                "budget_s": self.budget, "detail": self.detail}


class CheckFailed(AssertionError):
    pass


def _require(cond: bool, msg: str):
    if not cond:
        raise CheckFailed(msg)


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n < 2:
        return BraidWord(n, ())
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def _perm0(w: BraidWord):
    return tuple(x - 1 for x in permutation_of(w))


def _best_of(fn, repeats: int = 5) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


# 1


def check_left_greedy() -> str:
    w = BraidWord(4, (1, 3, 2, 2, 1, 3, 3, 2, 3, 2))
    nf = normalize(w)
    want = [_perm0(BraidWord(4, f)) for f in ((1, 3, 2, 1), (2, 1, 3, 2), (2,), (2,))]
    _require(nf.inf == 0, f"inf {nf.inf}")
    _require(list(nf.factors) == want, f"factors {nf}")
    t = _best_of(lambda: normalize(w))
    _require(t < 1e-3, f"normalize took {t * 1e3:.3f} ms")
    return f"{nf}; best of 5 = {t * 1e3:.3f} ms"


# 2


def product_formula(n: int) -> int:
    """(n(n-1)/2)! / (1^(n-1) 3^(n-2) 5^(n-3) ... (2n-3)^1)."""
    denom = 1
    for k in range(1, n):
        denom *= (2 * k - 1) ** (n - k)
    return math.factorial(n * (n - 1) // 2) // denom


def check_delta_census() -> str:
    out = []
    for n, want in ((2, 1), (3, 2), (4, 16), (5, 768)):
        got = count_positive_words_of_delta(n)
        _require(got == want, f"n={n}: {got} words, expected {want}")
        _require(staircase_hook_count(n) == want, f"hook count n={n}")
        _require(product_formula(n) == want, f"product formula n={n}")
        out.append(f"n={n}:{got}")
    return " ".join(out)


# 3


def check_simple_counts() -> str:
    for n in range(1, 7):
        _require(len(classical(n).simples()) == math.factorial(n), f"classical simples n={n}")
    for n in range(2, 6):
        k = len(dual_divisors(n))
        nc = sum(1 for _ in noncrossing_partitions(n))
        _require(k == catalan(n) == nc, f"dual simples n={n}: {k}, catalan {catalan(n)}, nc {nc}")
    return "n! for n<=6; Catalan 2,5,14,42 for n=2..5"


# 4


def check_periodic() -> str:
    for n in range(2, 7):
        for name, w in (("delta^n", delta_short(n) ** n), ("alpha^(n-1)", alpha_word(n) ** (n - 1)),
                        ("Delta^2", delta_word(n) ** 2)):
            nf = normalize(w)
            _require((nf.inf, nf.canonical_length) == (2, 0), f"{name} n={n}: {nf}")
    return "n=2..6"


# 5


def _trace_poly(terms) -> Laurent:
    return Laurent(terms, TRACE_VARS)


def check_traces() -> str:
    t = Laurent.var("t", TRACE_VARS)
    z = Laurent.var("z", TRACE_VARS)
    ti = t ** -1
    want1 = (t * t - t + 1) * z + t * (t - 1)
    a = 3 - ti - t
    want2 = a * ti * z * z + a * (ti - 1) * z - (2 - ti - t)
    start = time.perf_counter()
    got1 = ocneanu_trace(BraidWord(2, (1, 1, 1)))
    got2 = ocneanu_trace(BraidWord(3, (1, -2, 1, -2)))
    elapsed = time.perf_counter() - start
    _require(got1 == want1, f"tr(s1^3) = {got1.render()}")
    _require(got2 == want2, f"tr(s1 s2^-1 s1 s2^-1) = {got2.render()}")
    _require(elapsed < 0.01, f"trace evaluation took {elapsed * 1e3:.2f} ms")
    return f"{elapsed * 1e3:.2f} ms"


# 6


def check_homfly_pair() -> str:
    trefoil = Laurent.parse("2*l^2 - l^4 + l^2*m^2", HOMFLY_VARS)
    eight = Laurent.parse("l^-2 - m^2 - 1 + l^2", HOMFLY_VARS)
    cases = ((BraidWord(2, (1, 1, 1)), TREFOIL, trefoil),
             (BraidWord(3, (1, -2, 1, -2)), FIGURE_EIGHT, eight))
    for w, d, want in cases:
        by_trace = homfly(w)
        by_skein = homfly_skein(d)
        by_skein_closure = homfly_skein(closure(w))
        _require(by_trace == want, f"trace gives {by_trace.render()}")
        _require(by_skein == want, f"skein gives {by_skein.render()}")
        _require(by_skein_closure == want, f"skein on closure gives {by_skein_closure.render()}")
    return "trefoil and figure-eight agree by trace and skein"


# 7


def check_markov(count: int = 500, seed: int = 7) -> str:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 4)
        w = random_word(rng, n, rng.randint(0, 8))
        p = homfly(w)
        a = random_word(rng, n, rng.randint(1, 4))
        _require(homfly(a.inverse() * w * a) == p, f"conjugation changed HOMFLY of {w}")
        for sign in (1, -1):
            _require(homfly(stabilize(w, sign)) == p, f"stabilization {sign} changed HOMFLY of {w}")
    return f"{count} braids"


# 8

MORTON = BraidWord(4, (-3, -3, 2, -3, 2, 1, 1, 1, -2, 1, -2))
MORTON_CONJUGATE = BraidWord(4, (-2, -2, 1, -2, 3, 2, 2, 2, -1, 2, -3))


def check_morton() -> str:
    p = homfly(MORTON)
    _require(p == Laurent.const(1, HOMFLY_VARS), f"HOMFLY {p.render()}")
    alex = alexander_from_homfly(p)
    _require(alex == alex.one(), f"Alexander {alex.render()}")
    fac = exchange_factorization(MORTON_CONJUGATE)
    _require(fac is not None, "no exchange factorization found")
    w1, w2 = fac
    _require(w1.letters == (-2, -2, 1, -2) and w2.letters == (2, 2, 2, -1, 2),
             f"factors {w1} / {w2}")
    ok, _ = are_conjugate(MORTON, MORTON_CONJUGATE)
    _require(ok, "X and X' not certified conjugate")
    return f"w1 = {w1}, w2 = {w2}"


# 9

FIVE_TWO_WORD = BraidWord(4, (2, -1, 2, -3, 2, 1, 2, 3, 2))
FIVE_TWO_SHORT = BraidWord(3, (2, -1, 2, 1, 1, 2))


def check_five_two() -> str:
    pic = seifert_smooth(FIVE_TWO)
    _require(pic.n_circles == 4, f"{pic.n_circles} Seifert circles")
    _require(len(pic.arcs) == 5 and all(s > 0 for *_, s in pic.arcs.values()), "arcs")
    _require(pic.height() == 2, f"height {pic.height()}")
    res = to_closed_braid(FIVE_TWO)
    _require(res.moves == 2 and res.heights == [2, 1, 0], f"moves {res.moves}, heights {res.heights}")
    _require(res.braid.n == 4, f"braid on {res.braid.n} strands")
    p = homfly(res.braid)
    _require(p == homfly(FIVE_TWO_WORD) == homfly(FIVE_TWO_SHORT), f"HOMFLY {p.render()}")
    _require(p == homfly_skein(FIVE_TWO), "skein disagrees")
    return f"braid {res.braid}"


# 10


def random_diagram(rng: random.Random, max_n: int = 5, max_len: int = 8, max_fingers: int = 3):
    n = rng.randint(2, max_n)
    w = random_word(rng, n, rng.randint(n - 1, max_len))
    d = closure(w)
    for _ in range(rng.randint(1, max_fingers)):
        face = rng.choice(d.faces)
        if len(face) < 2:
            continue
        (a, la), (b, lb) = rng.sample(face, 2)
        if a == b:
            continue
        d = finger_move(d, a, la, b, lb, over=rng.random() < 0.5)
    return w, d


def check_height_monotone(count: int = 200, seed: int = 10) -> str:
    rng = random.Random(seed)
    total_moves = 0
    for _ in range(count):
        _, d = random_diagram(rng)
        for piece in d.split_components():
            if not piece.crossings:
                continue
            pic = seifert_smooth(piece)
            c = pic.n_circles
            h0 = pic.height()
            h = h0
            moves = 0
            while h:
                arc = find_reducing_arc(pic)
                _require(arc is not None, "positive height without a reducing arc")
                pic = reduce_once(pic, arc)
                _require(pic.height() == h - 1, f"height {h} -> {pic.height()}")
                _require(pic.n_circles == c, "circle count changed")
                h -= 1
                moves += 1
            _require(moves == h0 <= (c - 1) * (c - 2) // 2, f"moves {moves}, h {h0}, circles {c}")
            _require(find_reducing_arc(pic) is None, "reducing arc at height 0")
            total_moves += moves
    return f"{count} diagrams, {total_moves} moves"


# 11


def _scramble(rng: random.Random, w: BraidWord, steps: int) -> BraidWord:
    """Equal word via random relation moves and inserted cancelling pairs."""
    ls = list(w.letters)
    n = w.n
    for _ in range(steps):
        r = rng.random()
        if r < 0.3 and n > 1:
            k = rng.randint(0, len(ls))
            x = rng.choice((1, -1)) * rng.randint(1, n - 1)
            ls[k:k] = [x, -x]
        elif r < 0.6:
            for k in rng.sample(range(max(len(ls) - 1, 0)), max(len(ls) - 1, 0)):
                a, b = ls[k], ls[k + 1]
                if abs(abs(a) - abs(b)) >= 2:
                    ls[k], ls[k + 1] = b, a
                    break
        else:
            for k in rng.sample(range(max(len(ls) - 2, 0)), max(len(ls) - 2, 0)):
                a, b, c = ls[k:k + 3]
                if a == c and a > 0 and b > 0 and abs(a - b) == 1:
                    ls[k:k + 3] = [b, a, b]
                    break
    return BraidWord(n, tuple(ls))


def check_oracles(count: int = 1000, seed: int = 11) -> str:
    rng = random.Random(seed)
    equal_pairs = 0
    for i in range(count):
        n = rng.randint(2, 5)
        u = random_word(rng, n, rng.randint(0, 12))
        if i % 2:
            v = random_word(rng, n, rng.randint(0, 12))
        else:
            v = _scramble(rng, u, 6)
        g = equal(u, v)
        a = word_oracle_equal(u, v)
        _require(g == a, f"garside {g} vs artin {a} on {u} / {v}")
        if n <= 3:
            b = burau_equal(u, v)
            _require(g == b, f"garside {g} vs burau {b} on {u} / {v}")
        equal_pairs += g
    return f"{count} pairs, {equal_pairs} equal"


# 12


def check_conjugacy(count: int = 200, seed: int = 12, brute: int = 100) -> str:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 4)
        w = random_word(rng, n, rng.randint(1, 8))
        a = random_word(rng, n, rng.randint(1, 6))
        v = a.inverse() * w * a
        uss_w, _ = ultra_summit_set(normalize(w))
        uss_v, _ = ultra_summit_set(normalize(v))
        _require(set(uss_w.elements) == set(uss_v.elements), f"USS differ for {w} and {v}")
        ok, cert = are_conjugate(w, v)
        _require(ok and cert.verify(), f"no verified certificate for {w} / {v}")
    agree = 0
    for _ in range(brute):
        u = random_word(rng, 3, rng.randint(0, 6))
        v = random_word(rng, 3, rng.randint(0, 6))
        if rng.random() < 0.3:
            a = random_word(rng, 3, rng.randint(1, 4))
            v = a.inverse() * u * a
        fast, cert = are_conjugate(u, v)
        sss_u, _ = super_summit_set(normalize(u))
        sss_v, _ = super_summit_set(normalize(v))
        slow = set(sss_u.elements) == set(sss_v.elements)
        _require(fast == slow, f"USS says {fast}, SSS says {slow} for {u} / {v}")
        if fast:
            _require(cert.verify(), "certificate failed")
        agree += fast
    return f"{count} conjugate pairs; {brute} oracle pairs ({agree} conjugate)"


# 13


def check_lawrence_krammer(max_len: int = 8) -> str:
    for n in (3, 4):
        for i in range(1, n - 1):
            lhs = lk_matrix(BraidWord(n, (i, i + 1, i)))
            rhs = lk_matrix(BraidWord(n, (i + 1, i, i + 1)))
            _require(lhs == rhs, f"braid relation fails n={n} i={i}")
        for i in range(1, n):
            for j in range(i + 2, n):
                _require(lk_matrix(BraidWord(n, (i, j))) == lk_matrix(BraidWord(n, (j, i))),
                         f"far commutation fails n={n}")
            _require(mat_is_identity(lk_matrix(BraidWord(n, (i, -i)))), "inverse fails")
        size = n * (n - 1) // 2
        scalar = Laurent({(2 * (n - 1), 2): 1}, ("q", "t"))
        want = mat_scale(mat_identity(size, ("q", "t")), scalar)
        _require(lk_matrix(delta_word(n) ** 2) == want, f"full twist image n={n}")
    visited = 0
    for n in (2, 3, 4):
        v, bad = lk_faithfulness_probe(n, max_len)
        _require(not bad, f"kernel candidates {bad[:3]}")
        visited += v
    return f"{visited} reduced words probed"


# 14


def check_ordering(count: int = 500, seed: int = 14) -> str:
    rng = random.Random(seed)
    flip = {OrderResult.LESS: OrderResult.GREATER, OrderResult.GREATER: OrderResult.LESS,
            OrderResult.EQUAL: OrderResult.EQUAL}
    for _ in range(count):
        n = rng.randint(2, 4)
        u, v, x = (random_word(rng, n, rng.randint(0, 8)) for _ in range(3))
        c = compare(u, v)
        _require(compare(x * u, x * v) is c, f"left invariance fails for {u}, {v}, {x}")
        _require(compare(v, u) is flip[c], "antisymmetry fails")
        _require((c is OrderResult.EQUAL) == equal(u, v), "Equal disagrees with equal()")
        cuv, cvx, cux = c, compare(v, x), compare(u, x)
        if cuv is cvx is OrderResult.LESS:
            _require(cux is OrderResult.LESS, "transitivity fails")
        p = BraidWord(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(1, 8))))
        _require(is_positive(p), f"positive word {p} not > 1")
        if not equal(u, BraidWord(n, ())):
            _require(torsion_probe(u, rng.randint(1, 5)), f"torsion probe fails for {u}")
    return f"{count} cases"


CRITERIA: list[tuple[int, str, float, Callable[[], str]]] = [
    (1, "left-greedy normal form", 1.0, check_left_greedy),
    (2, "positive words of Delta", 60.0, check_delta_census),
    (3, "simple element counts", 5.0, check_simple_counts),
    (4, "periodic braids give Delta^2", 1.0, check_periodic),
    (5, "Ocneanu trace values", 1.0, check_traces),
    (6, "HOMFLY by trace and skein", 1.0, check_homfly_pair),
    (7, "Markov invariance of HOMFLY", 60.0, check_markov),
    (8, "Morton's 4-braid", 1.0, check_morton),
    (9, "Yamada-Vogel on 5_2", 1.0, check_five_two),
    (10, "height monotonicity", 60.0, check_height_monotone),
    (11, "word problem oracle concordance", 120.0, check_oracles),
    (12, "conjugacy and summit sets", 300.0, check_conjugacy),
    (13, "Lawrence-Krammer properties", 120.0, check_lawrence_krammer),
    (14, "Dehornoy ordering", 60.0, check_ordering),
]


def run_check(number: int) -> CheckResult:
    for num, title, budget, fn in CRITERIA:
        if num == number:
            start = time.perf_counter()
            try:
                detail = fn()
                ok = True
            except CheckFailed as exc:
                detail = f"failed: {exc}"
                ok = False
            elapsed = time.perf_counter() - start
            return CheckResult(num, title, ok, elapsed, budget, detail)
    raise KeyError(number)


def run_all(numbers=None) -> list[CheckResult]:
    chosen = numbers or [c[0] for c in CRITERIA]
    return [run_check(k) for k in chosen]
