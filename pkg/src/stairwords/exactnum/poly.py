"""Dense univariate polynomials over Q.

Coefficients are stored low-to-high as a tuple of ``Fraction``; trailing
zeros are stripped so the zero polynomial is the empty tuple and
``degree == len(coeffs) - 1``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from ..errors import DivisionByZero, ParseError

Scalar = Union[int, Fraction]

_F0 = Fraction(0)


def _strip(cs: list) -> tuple:
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class Poly:
    """Immutable polynomial in the formal variable ``x``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip([Fraction(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> Poly:
        # Trusted constructor: coeffs are Fractions (or ints) with no trailing zeros.
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Poly:
        return cls([0] * n + [c])

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def low_order(self) -> int:
        """Exponent of the lowest nonzero term (``-1`` for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    # -- ring operations ----------------------------------------------------

    def __neg__(self) -> Poly:
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Poly._raw(tuple(c * other for c in self.coeffs))
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [_F0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return Poly._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative exponent for a polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        other = _coerce(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return ZERO, self
        inv_lc = 1 / other.lc
        quo = [Fraction(0)] * (len(rem) - db)
        bc = other.coeffs
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = rem[shift + db] * inv_lc
            quo[shift] = c
            if c:
                for i, bi in enumerate(bc):
                    rem[shift + i] -= c * bi
        return Poly._raw(_strip(quo)), Poly._raw(_strip(rem[:db]))

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ValueError("polynomial division is not exact")
        return q

    def scale(self, c: Scalar) -> Poly:
        return self * Fraction(c)

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        inv = 1 / self.lc
        return Poly._raw(tuple(c * inv for c in self.coeffs))

    def shift(self, n: int) -> Poly:
        """Multiply by ``x**n`` (n >= 0)."""
        if not self.coeffs or n == 0:
            return self
        return Poly._raw((Fraction(0),) * n + self.coeffs)

    def truncate(self, n: int) -> Poly:
        """Reduce modulo ``x**n``."""
        return Poly._raw(_strip(list(self.coeffs[:n])))

    def derivative(self) -> Poly:
        return Poly._raw(_strip([i * c for i, c in enumerate(self.coeffs)][1:]))

    def __call__(self, value):
        """Horner evaluation; ``value`` may be a scalar or any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    # -- text format --------------------------------------------------------

    def to_text(self) -> str:
        """Coefficient-list format, e.g. ``[1, -3/2, 0, 1]``."""
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    @classmethod
    def from_text(cls, text: str) -> Poly:
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ParseError(f"expected a bracketed coefficient list, got {text!r}")
        body = s[1:-1].strip()
        if not body:
            return ZERO
        try:
            return cls(Fraction(tok.strip()) for tok in body.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient in {text!r}") from exc

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> Poly:
        return cls(Fraction(c) for c in data)

    def pretty(self, var: str = "x") -> str:
        """Ascending powers with explicit ``*``: ``1 - 2*x + 3/2*x^2``."""
        if not self.coeffs:
            return "0"
        parts: list[tuple[str, str]] = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    @classmethod
    def from_pretty(cls, text: str, var: str = "x") -> Poly:
        """Inverse of :meth:`pretty` (also accepts ``**`` for powers)."""
        s = text.replace(" ", "").replace("**", "^")
        if not s:
            raise ParseError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        term_re = re.compile(
            rf"([+-])(?:(\d+(?:/\d+)?)(?:\*({re.escape(var)})(?:\^(\d+))?)?"
            rf"|({re.escape(var)})(?:\^(\d+))?)"
        )
        pos, out = 0, {}
        while pos < len(s):
            m = term_re.match(s, pos)
            if not m or m.end() == pos:
                raise ParseError(f"cannot parse polynomial {text!r} at {pos}")
            sign = -1 if m.group(1) == "-" else 1
            if m.group(2) is not None:
                coeff = Fraction(m.group(2))
                exp = 0 if m.group(3) is None else int(m.group(4) or 1)
            else:
                coeff = Fraction(1)
                exp = int(m.group(6) or 1)
            out[exp] = out.get(exp, 0) + sign * coeff
            pos = m.end()
        top = max(out)
        return cls(out.get(i, 0) for i in range(top + 1))

    def __repr__(self) -> str:
        return f"Poly({self.pretty()})"

    __str__ = pretty


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    return NotImplemented


ZERO = Poly._raw(())
ONE = Poly._raw((Fraction(1),))
X = Poly.x()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q (zero only when both inputs are zero)."""
    while b:
        a, b = b, a % b
        b = b.monic()
    return a.monic()


def poly_gcd_many(polys: Iterable[Poly]) -> Poly:
    g = ZERO
    for p in polys:
        g = poly_gcd(g, p)
        if g == ONE:
            break
    return g


def poly_arith(lhs: Poly, rhs: Poly, op: str) -> Poly:
    """Dispatch ``add``/``sub``/``mul`` by name."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown polynomial op {op!r}")
