"""Reduced rational functions in ``x`` over Q.

Canonical form: ``gcd(num, den) == 1`` and the lowest-order nonzero
coefficient of ``den`` is ``+1``.  With this normalization a function that
is a power series at the origin has ``den(0) == 1``, and two equal
rational functions have identical ``(num, den)`` pairs.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DivisionByZero, ParseError
from .poly import ONE, ZERO, Poly, poly_gcd


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num=ZERO, den=ONE):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        if not num.is_zero():
            lead = den.coeffs[den.low_order()]
            if lead != 1:
                num = num * (1 / lead)
                den = den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def x(cls) -> RatFun:
        return cls(Poly.x())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == ONE

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatFun", self.num.coeffs, self.den.coeffs))

    def __neg__(self) -> RatFun:
        return _trusted(-self.num, self.den)

    def __add__(self, other) -> RatFun:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> RatFun:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> RatFun:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> RatFun:
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFun()
            return _trusted(self.num * other, self.den)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        # cross-cancel first to keep intermediate degrees down
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = _div_unit(self.num, g1), _div_unit(other.den, g1)
        n2, d1 = _div_unit(other.num, g2), _div_unit(self.den, g2)
        return _coprime(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> RatFun:
        if self.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other) -> RatFun:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> RatFun:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int) -> RatFun:
        if n < 0:
            return self.inverse() ** (-n)
        return _trusted(self.num**n, self.den**n) if n else RatFun(ONE)

    def __call__(self, value):
        return self.num(value) / self.den(value)

    # -- text format --------------------------------------------------------

    def to_text(self) -> str:
        return f"{self.num.to_text()} / {self.den.to_text()}"

    @classmethod
    def from_text(cls, text: str) -> RatFun:
        if "/" in text and "]" in text:
            left, sep, right = text.partition("] /")
            if sep:
                return cls(Poly.from_text(left + "]"), Poly.from_text(right))
        try:
            return cls(Poly.from_text(text))
        except ParseError:
            raise ParseError(f"expected 'num / den' coefficient lists, got {text!r}")

    def pretty(self, var: str = "x") -> str:
        return f"{self.num.pretty(var)} / {self.den.pretty(var)}"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> RatFun:
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))

    def __repr__(self) -> str:
        return f"RatFun({self.pretty()})"

    __str__ = pretty


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    raise TypeError(f"cannot build a polynomial from {type(value).__name__}")


def _coerce(value) -> RatFun:
    if isinstance(value, RatFun):
        return value
    if isinstance(value, (int, Fraction, Poly)):
        return RatFun(value)
    return NotImplemented


def _div_unit(p: Poly, g: Poly) -> Poly:
    return p if g.degree <= 0 else p.exact_div(g)


def _coprime(num: Poly, den: Poly) -> RatFun:
    # num/den known coprime; only the denominator scaling remains
    if num.is_zero():
        return _trusted(ZERO, ONE)
    lead = den.coeffs[den.low_order()]
    if lead != 1:
        inv = 1 / lead
        num, den = num * inv, den * inv
    return _trusted(num, den)


def _trusted(num: Poly, den: Poly) -> RatFun:
    # num/den already coprime and den already normalized
    r = object.__new__(RatFun)
    if num.is_zero():
        num, den = ZERO, ONE
    object.__setattr__(r, "num", num)
    object.__setattr__(r, "den", den)
    return r


def ratfun_arith(lhs: RatFun, rhs: RatFun, op: str) -> RatFun:
    """Dispatch ``add``/``sub``/``mul``/``div`` by name."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise ValueError(f"unknown rational-function op {op!r}")


def poly_compose_ratfun(p: Poly, arg: RatFun) -> RatFun:
    """Substitute ``arg`` for ``x`` in ``p``.

    Works on the homogenized form ``sum c_i a^i b^(n-i) / b^n`` with
    ``arg = a/b``, so only one reduction happens at the end.
    """
    if p.degree <= 0:
        return RatFun(p)
    a, b = arg.num, arg.den
    n = p.degree
    a_pows = [ONE]
    b_pows = [ONE]
    for _ in range(n):
        a_pows.append(a_pows[-1] * a)
        b_pows.append(b_pows[-1] * b)
    num = ZERO
    for i, c in enumerate(p.coeffs):
        if c:
            num = num + a_pows[i] * b_pows[n - i] * c
    return RatFun(num, b_pows[n])
