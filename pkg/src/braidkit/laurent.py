"""Multivariate Laurent polynomials with exact integer coefficients.

A polynomial carries its variable registry: an ordered tuple of names and the
subset of names that allow half-integer exponents.  For a half variable the
stored exponent is twice the real one, so ``t^(1/2)`` is stored as 1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping


class RegistryError(ValueError):
    pass


class NotDivisible(ArithmeticError):
    pass


def _render_exponent(stored: int, half: bool) -> str:
    if half:
        if stored % 2:
            return f"({stored}/2)"
        stored //= 2
    return str(stored)


class Laurent:
    __slots__ = ("vars", "half", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None,
                 vars: Iterable[str] = (), half: Iterable[str] = ()):
        self.vars = tuple(vars)
        self.half = frozenset(half)
        k = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                if len(e) != k:
                    raise RegistryError(f"exponent {e} does not match {self.vars}")
                clean[tuple(e)] = clean.get(tuple(e), 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    # construction

    @classmethod
    def const(cls, c: int, vars=(), half=()) -> Laurent:
        vars = tuple(vars)
        return cls({(0,) * len(vars): c}, vars, half)

    @classmethod
    def var(cls, name: str, vars=None, half=(), power: int = 1) -> Laurent:
        """``name**power``; for a half variable ``power`` counts halves."""
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            raise RegistryError(f"{name} not in registry {vars}")
        e = [0] * len(vars)
        e[vars.index(name)] = power
        return cls({tuple(e): 1}, vars, half)

    def zero(self) -> Laurent:
        return Laurent({}, self.vars, self.half)

    def one(self) -> Laurent:
        return Laurent.const(1, self.vars, self.half)

    def same_registry(self, terms) -> Laurent:
        return Laurent(terms, self.vars, self.half)

    # basic queries

    @property
    def registry(self):
        return self.vars, self.half

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * len(self.vars), 0)

    def _index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise RegistryError(f"{var} not in registry {self.vars}") from None

    def degree_range(self, var: str) -> tuple[int, int]:
        """Smallest and largest stored exponent of ``var``."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        i = self._index(var)
        exps = [e[i] for e in self.terms]
        return min(exps), max(exps)

    def breadth(self, var: str):
        lo, hi = self.degree_range(var)
        if var in self.half:
            return Fraction(hi - lo, 2)
        return hi - lo

    # arithmetic

    def _coerce(self, other) -> Laurent:
        if isinstance(other, Laurent):
            if other.vars != self.vars or other.half != self.half:
                if not other.terms or set(other.terms) == {(0,) * len(other.vars)}:
                    return Laurent.const(other.constant_term(), self.vars, self.half)
                if not self.terms or set(self.terms) == {(0,) * len(self.vars)}:
                    raise _SwapRegistry
                raise RegistryError(
                    f"registry mismatch: {self.vars}/{sorted(self.half)} vs "
                    f"{other.vars}/{sorted(other.half)}")
            return other
        if isinstance(other, int):
            return Laurent.const(other, self.vars, self.half)
        raise TypeError(f"cannot combine Laurent with {type(other).__name__}")

    def _binary(self, other, op):
        try:
            o = self._coerce(other)
        except _SwapRegistry:
            me = Laurent.const(self.constant_term(), other.vars, other.half)
            return op(me, other)
        return op(self, o)

    def __add__(self, other):
        def add(a, b):
            t = dict(a.terms)
            for e, c in b.terms.items():
                t[e] = t.get(e, 0) + c
            return a.same_registry(t)
        return self._binary(other, add)

    __radd__ = __add__

    def __neg__(self):
        return self.same_registry({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, (Laurent, int)) else other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.same_registry({e: c * other for e, c in self.terms.items()})

        def mul(a, b):
            t: dict = {}
            for e1, c1 in a.terms.items():
                for e2, c2 in b.terms.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    t[e] = t.get(e, 0) + c1 * c2
            return a.same_registry(t)
        return self._binary(other, mul)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Laurent:
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("negative power of a non-monomial")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise NotDivisible("negative power with non-unit coefficient")
            return self.same_registry({tuple(-x * (-k) for x in e): c ** (-k)})
        result = self.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0,) * len(self.vars): other} if other else {})
        if not isinstance(other, Laurent):
            return NotImplemented
        if self.vars == other.vars and self.half == other.half:
            return self.terms == other.terms
        return not self.terms and not other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, self.half, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # shifting and monomials

    def monomial(self, exps, c: int = 1) -> Laurent:
        return self.same_registry({tuple(exps): c})

    def shift(self, exps) -> Laurent:
        return self.same_registry(
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def leading(self):
        """Lex-largest term as (exponent, coefficient)."""
        e = max(self.terms)
        return e, self.terms[e]

    def trailing(self):
        e = min(self.terms)
        return e, self.terms[e]

    # division

    def divide_exact(self, q: Laurent) -> Laurent:
        """Exact quotient ``self / q``; raises NotDivisible otherwise."""
        q = self._coerce(q)
        if q.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self.zero()
        k = len(self.vars)
        lead_q, lc_q = q.leading()
        lo = [min(e[i] for e in self.terms) - min(e[i] for e in q.terms) for i in range(k)]
        hi = [max(e[i] for e in self.terms) - max(e[i] for e in q.terms) for i in range(k)]
        r = dict(self.terms)
        quot: dict = {}
        while r:
            lead_r = max(r)
            c, rem = divmod(r[lead_r], lc_q)
            if rem:
                raise NotDivisible("coefficient does not divide")
            e = tuple(a - b for a, b in zip(lead_r, lead_q))
            if any(x < l or x > h for x, l, h in zip(e, lo, hi)):
                raise NotDivisible("quotient term out of range")
            quot[e] = c
            for eq, cq in q.terms.items():
                t = tuple(a + b for a, b in zip(e, eq))
                v = r.get(t, 0) - c * cq
                if v:
                    r[t] = v
                else:
                    r.pop(t, None)
        return self.same_registry(quot)

    # substitution

    def substitute(self, values: Mapping[str, Laurent | int], vars=None, half=None) -> Laurent:
        """Replace variables by polynomials in the target registry.

        The target registry defaults to the unsubstituted variables of
        ``self`` followed by any new variables of the values.  Negative powers
        of a non-monomial value are handled by exact division.
        """
        if vars is None:
            vars = [v for v in self.vars if v not in values]
            half = {h for h in self.half if h not in values}
            for val in values.values():
                if isinstance(val, Laurent):
                    for v in val.vars:
                        if v not in vars:
                            vars.append(v)
                    half |= set(val.half)
        vars = tuple(vars)
        half = frozenset(half or ())
        for v in values:
            self._index(v)
        vals = {}
        for name, val in values.items():
            if isinstance(val, int):
                val = Laurent.const(val, vars, half)
            elif val.vars != vars or val.half != half:
                val = val.embed(vars, half)
            vals[name] = val
        for v in self.vars:
            if v not in values and v not in vars:
                raise RegistryError(f"variable {v} missing from target registry")
        # clear negative powers of non-monomial values
        p = self
        denominators = []
        for name, val in vals.items():
            if val.is_monomial() or p.is_zero():
                continue
            lo, _ = p.degree_range(name)
            if lo < 0:
                shift = [0] * len(p.vars)
                i = p._index(name)
                shift[i] = -lo
                if name in p.half and lo % 2:
                    shift[i] += 1
                p = p.shift(shift)
                denominators.append((name, val, shift[i]))
        out = Laurent({}, vars, half)
        cache: dict = {}
        for e, c in p.terms.items():
            term = Laurent.const(c, vars, half)
            mono = [0] * len(vars)
            for name, x in zip(p.vars, e):
                if name in vals:
                    if x:
                        key = (name, x)
                        if key not in cache:
                            cache[key] = _power(vals[name], x, name in p.half)
                        term = term * cache[key]
                else:
                    j = vars.index(name)
                    if (name in p.half) == (name in half):
                        mono[j] += x
                    elif name in half:
                        mono[j] += 2 * x
                    elif x % 2:
                        raise RegistryError(f"half exponent of {name} in integral registry")
                    else:
                        mono[j] += x // 2
            out = out + term.shift(mono)
        for name, val, k in denominators:
            out = out.divide_exact(_power(val, k, name in p.half))
        return out

    def embed(self, vars, half=()) -> Laurent:
        """Re-express in a registry that contains this one."""
        vars = tuple(vars)
        half = frozenset(half)
        idx = []
        for v in self.vars:
            if v not in vars:
                raise RegistryError(f"{v} missing from {vars}")
            if v in self.half and v not in half:
                raise RegistryError(f"{v} loses its half flag")
            idx.append((vars.index(v), 2 if (v in half and v not in self.half) else 1))
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for (j, mult), x in zip(idx, e):
                ne[j] = x * mult
            out[tuple(ne)] = c
        return Laurent(out, vars, half)

    def evaluate(self, values: Mapping[str, Fraction | int]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for name, x in zip(self.vars, e):
                if name in self.half:
                    if x % 2:
                        raise ValueError(f"half power of {name} cannot be evaluated")
                    x //= 2
                term *= Fraction(values[name]) ** x
            total += term
        return total

    # normalisation helpers

    def normalized_unit(self) -> Laurent:
        """Shift to lowest exponent 0 in every variable, positive leading coefficient."""
        if self.is_zero():
            return self
        shift = [-min(e[i] for e in self.terms) for i in range(len(self.vars))]
        p = self.shift(shift)
        if p.leading()[1] < 0:
            p = -p
        return p

    # text

    def render(self, names: Mapping[str, str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or {}
        parts = []
        for e in sorted(self.terms, key=lambda x: tuple(reversed(x))):
            c = self.terms[e]
            factors = []
            for v, x in zip(self.vars, e):
                if x == 0:
                    continue
                half = v in self.half
                name = names.get(v, v)
                if (half and x == 2) or (not half and x == 1):
                    factors.append(name)
                else:
                    factors.append(f"{name}^{_render_exponent(x, half)}")
            mono = "*".join(factors)
            a = abs(c)
            body = (f"{a}*{mono}" if a != 1 else mono) if mono else str(a)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    __str__ = render

    def __repr__(self):
        return f"Laurent({self.render()!r}, vars={self.vars})"

    @classmethod
    def parse(cls, text: str, vars, half=()) -> Laurent:
        vars = tuple(vars)
        half = frozenset(half)
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls({}, vars, half)
        pos = 0
        terms: dict = {}
        factor_re = re.compile(r"(\d+)|([A-Za-z_]\w*)(?:\^(-?\d+|\((-?\d+)/2\)))?")
        while pos < len(s):
            sign = 1
            if s[pos] in "+-":
                sign = -1 if s[pos] == "-" else 1
                pos += 1
            coef = 1
            exps = [0] * len(vars)
            while True:
                m = factor_re.match(s, pos)
                if not m:
                    raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
                pos = m.end()
                if m.group(1):
                    coef *= int(m.group(1))
                else:
                    name = m.group(2)
                    if name not in vars:
                        raise RegistryError(f"unknown variable {name}")
                    j = vars.index(name)
                    ish = name in half
                    if m.group(4) is not None:
                        if not ish:
                            raise RegistryError(f"half exponent on {name}")
                        exps[j] += int(m.group(4))
                    else:
                        x = int(m.group(3)) if m.group(3) is not None else 1
                        exps[j] += 2 * x if ish else x
                if pos < len(s) and s[pos] == "*":
                    pos += 1
                    continue
                break
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + sign * coef
        return cls(terms, vars, half)

    def to_json(self):
        return {
            "vars": list(self.vars),
            "half": sorted(self.half),
            "terms": [[list(e), c] for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data) -> Laurent:
        return cls({tuple(e): c for e, c in data["terms"]}, data["vars"], data.get("half", ()))


class _SwapRegistry(Exception):
    pass


def _power(val: Laurent, stored: int, half: bool) -> Laurent:
    """``val`` raised to the real exponent encoded by ``stored``."""
    if not half:
        return val ** stored
    if stored % 2 == 0:
        return val ** (stored // 2)
    root = _sqrt_monomial(val)
    return root ** stored


def _sqrt_monomial(val: Laurent) -> Laurent:
    if not val.is_monomial():
        raise RegistryError("half power of a non-monomial value")
    (e, c), = val.terms.items()
    if c != 1:
        raise RegistryError("half power of a monomial with coefficient != 1")
    root = []
    for name, x in zip(val.vars, e):
        if x % 2:
            raise RegistryError(f"half power of {name}^{x} needs a half variable")
        root.append(x // 2)
    return val.same_registry({tuple(root): 1})


def poly_ring(*vars: str, half=()):
    """Return generator polynomials for the given registry."""
    return tuple(Laurent.var(v, vars, half) for v in vars)
