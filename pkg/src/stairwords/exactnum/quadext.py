"""Elements ``a + b*s`` of Q(x)[s]/(s^2 - d) for a fixed discriminant ``d``."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DivisionByZero, MismatchedDiscriminant
from .poly import Poly
from .ratfun import RatFun


class QuadExtElem:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        object.__setattr__(self, "a", _rf(a))
        object.__setattr__(self, "b", _rf(b))
        object.__setattr__(self, "d", _rf(d))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExtElem is immutable")

    @classmethod
    def one(cls, d) -> QuadExtElem:
        return cls(1, 0, d)

    @classmethod
    def sqrt_of(cls, d) -> QuadExtElem:
        """The formal square root ``s`` itself."""
        return cls(0, 1, d)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_rational(self) -> bool:
        return self.b.is_zero()

    def _lift(self, other) -> QuadExtElem:
        if isinstance(other, QuadExtElem):
            if other.d != self.d:
                raise MismatchedDiscriminant(
                    f"cannot combine elements over s^2 = {self.d} and s^2 = {other.d}"
                )
            return other
        if isinstance(other, (int, Fraction, Poly, RatFun)):
            return QuadExtElem(other, 0, self.d)
        return NotImplemented

    def __eq__(self, other) -> bool:
        try:
            other = self._lift(other)
        except MismatchedDiscriminant:
            return False
        if other is NotImplemented:
            return other
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def __neg__(self) -> QuadExtElem:
        return QuadExtElem(-self.a, -self.b, self.d)

    def __add__(self, other) -> QuadExtElem:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return QuadExtElem(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __sub__(self, other) -> QuadExtElem:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return QuadExtElem(self.a - other.a, self.b - other.b, self.d)

    def __rsub__(self, other) -> QuadExtElem:
        return self._lift(other) - self

    def __mul__(self, other) -> QuadExtElem:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b, c, e = self.a, self.b, other.a, other.b
        return QuadExtElem(a * c + b * e * self.d, a * e + b * c, self.d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExtElem:
        return QuadExtElem(self.a, -self.b, self.d)

    def norm(self) -> RatFun:
        """``a^2 - b^2 d``, the product with the conjugate."""
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> QuadExtElem:
        n = self.norm()
        if n.is_zero():
            raise DivisionByZero(f"{self!r} has zero norm and is not invertible")
        inv = n.inverse()
        return QuadExtElem(self.a * inv, -self.b * inv, self.d)

    def __truediv__(self, other) -> QuadExtElem:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> QuadExtElem:
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int) -> QuadExtElem:
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExtElem.one(self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __repr__(self) -> str:
        return f"QuadExtElem({self.a} + ({self.b})*s; s^2 = {self.d})"


def _rf(value) -> RatFun:
    return value if isinstance(value, RatFun) else RatFun(value)


def quadext_arith(lhs: QuadExtElem, rhs: QuadExtElem, op: str) -> QuadExtElem:
    if op == "add":
        return lhs + rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise ValueError(f"unknown extension op {op!r}")


def quadext_pow(base: QuadExtElem, n: int) -> QuadExtElem:
    if n < 0:
        raise ValueError("quadext_pow takes a non-negative exponent")
    return base**n
