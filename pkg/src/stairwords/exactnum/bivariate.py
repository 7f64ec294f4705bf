"""Polynomials and rational functions in two variables ``x`` and ``t``.

``BiPoly`` is a sparse map ``(deg_x, deg_t) -> Fraction``.  For gcd and
exact division it is viewed as a polynomial in ``t`` whose coefficients are
dense ``Poly`` objects in ``x``; the gcd is the content gcd times the
primitive-PRS gcd of the primitive parts (Gauss's lemma over Q[x]).

``BiRatFun`` keeps ``num/den`` coprime, with the denominator scaled so that
its term with the lexicographically smallest ``(deg_x, deg_t)`` key has
coefficient ``1``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import DivisionByZero
from .poly import ONE as PONE
from .poly import ZERO as PZERO
from .poly import Poly, poly_gcd, poly_gcd_many
from .ratfun import RatFun

Exponent = tuple[int, int]


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[(int(key[0]), int(key[1]))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def _raw(cls, terms: dict) -> BiPoly:
        p = object.__new__(cls)
        object.__setattr__(p, "terms", terms)
        return p

    @classmethod
    def const(cls, c) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @classmethod
    def from_poly_x(cls, p: Poly) -> BiPoly:
        return cls._raw({(i, 0): c for i, c in enumerate(p.coeffs) if c})

    @classmethod
    def from_poly_t(cls, p: Poly) -> BiPoly:
        return cls._raw({(0, j): c for j, c in enumerate(p.coeffs) if c})

    @classmethod
    def from_t_coeffs(cls, coeffs: Sequence[Poly]) -> BiPoly:
        out = {}
        for j, p in enumerate(coeffs):
            for i, c in enumerate(p.coeffs):
                if c:
                    out[(i, j)] = c
        return cls._raw(out)

    def t_coeffs(self) -> list[Poly]:
        """Coefficients of ``t^0, t^1, ...`` as polynomials in ``x``."""
        if not self.terms:
            return []
        dt = max(j for _, j in self.terms)
        dx = max(i for i, _ in self.terms)
        rows = [[Fraction(0)] * (dx + 1) for _ in range(dt + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        return [Poly(r) for r in rows]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree_t(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def degree_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def lex_first(self) -> tuple[Exponent, Fraction]:
        key = min(self.terms)
        return key, self.terms[key]

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(("BiPoly", frozenset(self.terms.items())))

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({k: -c for k, c in self.terms.items()})

    def __add__(self, other) -> BiPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> BiPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return BiPoly._raw({})
            return BiPoly._raw({k: c * other for k, c in self.terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        result, base = BiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def subs_t(self, value) -> Poly:
        """Substitute a scalar for ``t``, leaving a polynomial in ``x``."""
        acc = PZERO
        for p in reversed(self.t_coeffs()):
            acc = acc * Fraction(value) + p
        return acc

    def subs_x(self, value) -> Poly:
        """Substitute a scalar for ``x``, leaving a polynomial in ``t``."""
        out: dict[int, Fraction] = {}
        v = Fraction(value)
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, 0) + c * v**i
        top = max(out, default=-1)
        return Poly(out.get(j, 0) for j in range(top + 1))

    def derivative_t(self) -> BiPoly:
        return BiPoly._raw({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def __call__(self, x, t):
        acc = 0
        for (i, j), c in self.terms.items():
            acc = acc + c * x**i * t**j
        return acc

    def exact_div(self, other: BiPoly) -> BiPoly:
        """Quotient of an exact division; ``ValueError`` if it does not divide."""
        if other.is_zero():
            raise DivisionByZero("BiPoly division by zero")
        q, r = _tpoly_divmod(self.t_coeffs(), other.t_coeffs())
        if r is None or any(r):
            raise ValueError("BiPoly division is not exact")
        return BiPoly.from_t_coeffs(q)

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for idx, ((i, j), c) in enumerate(sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("t" if j == 1 else f"t^{j}"),
                ) if s
            )
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if idx == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"BiPoly({self.pretty()})"

    __str__ = pretty


def _coerce(value) -> BiPoly:
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BiPoly.const(value)
    if isinstance(value, Poly):
        return BiPoly.from_poly_x(value)
    return NotImplemented


# -- Q[x][t] helpers (lists of Poly indexed by t-degree) --------------------


def _trim(cs: list[Poly]) -> list[Poly]:
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _tpoly_divmod(a: list[Poly], b: list[Poly]):
    """Divide in Q[x][t]; returns ``(None, None)`` if a leading x-division fails."""
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(rem) - 1 < db:
        return [], rem
    quo = [PZERO] * (len(rem) - db)
    for shift in range(len(rem) - 1 - db, -1, -1):
        lead = rem[shift + db]
        if lead.is_zero():
            continue
        c, r = divmod(lead, lb)
        if r:
            return None, None
        quo[shift] = c
        for i, bi in enumerate(b):
            rem[shift + i] = rem[shift + i] - c * bi
    return _trim(quo), _trim(rem[:db])


def _prem(a: list[Poly], b: list[Poly]) -> list[Poly]:
    # pseudo-remainder, up to a factor that is a power of lc(b)
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [ri * lb for ri in r]
        for i, bi in enumerate(b):
            r[shift + i] = r[shift + i] - lr * bi
        _trim(r)
    return r


def _content(a: list[Poly]) -> Poly:
    return poly_gcd_many(a)


def _primitive(a: list[Poly]) -> list[Poly]:
    c = _content(a)  # monic, so a constant content is exactly 1
    if c.degree <= 0:
        return list(a)
    return [p.exact_div(c) for p in a]


def bipoly_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Greatest common divisor in Q[x, t], scaled so its lex-first term is 1."""
    if a.is_zero():
        return _normalize_unit(b)
    if b.is_zero():
        return _normalize_unit(a)
    A, B = a.t_coeffs(), b.t_coeffs()
    content = poly_gcd(_content(A), _content(B))
    pa, pb = _primitive(A), _primitive(B)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb and len(pb) > 1:
        r = _prem(pa, pb)
        pa, pb = pb, (_primitive(r) if r else [])
    if pb:
        # constant (in t) primitive polynomial: the primitive gcd is trivial
        g = [PONE]
    else:
        g = pa
    return _normalize_unit(BiPoly.from_t_coeffs([p * content for p in g]))


def _normalize_unit(p: BiPoly) -> BiPoly:
    if p.is_zero():
        return p
    _, c = p.lex_first()
    return p if c == 1 else p * (1 / c)


class BiRatFun:
    """Reduced rational function in ``x`` and ``t``."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = _coerce(num) if not isinstance(num, BiPoly) else num
        den = _coerce(den) if not isinstance(den, BiPoly) else den
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("BiRatFun parts must be BiPoly, Poly or scalars")
        if den.is_zero():
            raise DivisionByZero("BiRatFun with zero denominator")
        if num.is_zero():
            num, den = BiPoly._raw({}), BiPoly.const(1)
        else:
            if not _is_monomial_const(den):
                g = bipoly_gcd(num, den)
                if not _is_monomial_const(g):
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            _, c = den.lex_first()
            if c != 1:
                inv = 1 / c
                num, den = num * inv, den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("BiRatFun is immutable")

    @classmethod
    def x(cls) -> BiRatFun:
        return cls(BiPoly.x())

    @classmethod
    def t(cls) -> BiRatFun:
        return cls(BiPoly.t())

    @classmethod
    def from_ratfun(cls, r: RatFun) -> BiRatFun:
        return cls(BiPoly.from_poly_x(r.num), BiPoly.from_poly_x(r.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash(("BiRatFun", self.num, self.den))

    def __neg__(self) -> BiRatFun:
        return _birf_trusted(-self.num, self.den)

    def __add__(self, other) -> BiRatFun:
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return BiRatFun(self.num + other.num, self.den)
        return BiRatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> BiRatFun:
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> BiRatFun:
        return _coerce_rf(other) - self

    def __mul__(self, other) -> BiRatFun:
        if isinstance(other, (int, Fraction)):
            if not other:
                return BiRatFun()
            return _birf_trusted(self.num * other, self.den)
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return BiRatFun()
        return BiRatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> BiRatFun:
        if self.is_zero():
            raise DivisionByZero("inverse of the zero BiRatFun")
        return BiRatFun(self.den, self.num)

    def __truediv__(self, other) -> BiRatFun:
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> BiRatFun:
        return _coerce_rf(other) * self.inverse()

    def __pow__(self, n: int) -> BiRatFun:
        if n < 0:
            return self.inverse() ** (-n)
        return BiRatFun(self.num**n, self.den**n)

    def subs_t(self, value) -> RatFun:
        den = self.den.subs_t(value)
        if den.is_zero():
            raise DivisionByZero(f"denominator vanishes at t = {value}")
        return RatFun(self.num.subs_t(value), den)

    def __call__(self, x, t):
        return self.num(x, t) / self.den(x, t)

    def pretty(self) -> str:
        return f"{self.num.pretty()} / {self.den.pretty()}"

    def __repr__(self) -> str:
        return f"BiRatFun({self.pretty()})"

    __str__ = pretty


def _is_monomial_const(p: BiPoly) -> bool:
    return len(p.terms) == 1 and (0, 0) in p.terms


def _coerce_rf(value) -> BiRatFun:
    if isinstance(value, BiRatFun):
        return value
    if isinstance(value, RatFun):
        return BiRatFun.from_ratfun(value)
    if isinstance(value, (int, Fraction, Poly, BiPoly)):
        return BiRatFun(value)
    return NotImplemented


def _birf_trusted(num: BiPoly, den: BiPoly) -> BiRatFun:
    r = object.__new__(BiRatFun)
    if num.is_zero():
        num, den = BiPoly._raw({}), BiPoly.const(1)
    object.__setattr__(r, "num", num)
    object.__setattr__(r, "den", den)
    return r


def birf_sum(items: Iterable[BiRatFun]) -> BiRatFun:
    acc = BiRatFun()
    for it in items:
        acc = acc + it
    return acc
