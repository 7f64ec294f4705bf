"""Chebyshev polynomials of both kinds and symbolic checks of classic identities.

Second-kind polynomials are extended to negative indices by running the
three-term recurrence backwards: ``U_{-1} = 0`` and ``U_{-n-2} = -U_n``.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .exactnum import Poly, QuadExtElem, RatFun
from .report import Case, equality_case

X = Poly.x()
TWO_X = Poly([0, 2])
HALF = Fraction(1, 2)


class ChebyshevTable:
    """Lock-protected memo of ``T_n`` or ``U_n`` for ``n >= 0``."""

    def __init__(self, kind: str):
        if kind not in ("first", "second"):
            raise ValueError(f"kind must be 'first' or 'second', not {kind!r}")
        self.kind = kind
        self._entries = [Poly([1]), X if kind == "first" else TWO_X]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._entries)

    def extend_to(self, n: int) -> None:
        with self._lock:
            e = self._entries
            while len(e) <= n:
                e.append(TWO_X * e[-1] - e[-2])

    def __getitem__(self, n: int) -> Poly:
        if self.kind == "second" and n < 0:
            if n == -1:
                return Poly()
            return -self[-n - 2]
        if n < 0:
            raise IndexError("T_n is only tabulated for n >= 0")
        if n >= len(self._entries):
            self.extend_to(n)
        return self._entries[n]


_U = ChebyshevTable("second")
_T = ChebyshevTable("first")


def chebyshev_u(n: int) -> Poly:
    """Second-kind ``U_n`` for any integer ``n``."""
    return _U[n]


def chebyshev_t(n: int) -> Poly:
    return _T[n]


def verify_product_identity(m: int, n: int) -> Case:
    """Product formula ``2(1-x^2) U_m U_n = U_{m-n} - xU_{m-n-1} - U_{m+n+2} + xU_{m+n+1}``."""
    U = chebyshev_u
    lhs = Poly([2, 0, -2]) * U(m) * U(n)
    rhs = U(m - n) - X * U(m - n - 1) - U(m + n + 2) + X * U(m + n + 1)
    return equality_case(f"product[m={m},n={n}]", "2(1-x^2)U_m U_n = bracket", lhs, rhs)


def verify_power_identity(n: int) -> Case:
    """``(x + sqrt(x^2-1))^n`` against ``(U_n - U_{n-2})/2 + U_{n-1} sqrt(x^2-1)``."""
    d = RatFun(X * X - 1)
    power = QuadExtElem(X, 1, d) ** n
    expected = QuadExtElem(
        RatFun((chebyshev_u(n) - chebyshev_u(n - 2)) * HALF),
        chebyshev_u(n - 1),
        d,
    )
    return equality_case(f"power[n={n}]", "(x+s)^n = (U_n-U_{n-2})/2 + U_{n-1}s", power, expected)


def verify_cassini_identity(n: int) -> Case:
    lhs = chebyshev_u(n) ** 2
    rhs = 1 + chebyshev_u(n - 1) * chebyshev_u(n + 1)
    return equality_case(f"cassini[n={n}]", "U_n^2 = 1 + U_{n-1}U_{n+1}", lhs, rhs)


def verify_pell_identity(k: int) -> Case:
    a, b = chebyshev_u(k - 1), chebyshev_u(k)
    lhs = a * a - TWO_X * a * b + b * b
    return equality_case(f"pell[k={k}]", "U_{k-1}^2 - 2xU_{k-1}U_k + U_k^2 = 1", lhs, Poly([1]))


def verify_t_from_u(n: int) -> Case:
    lhs = chebyshev_t(n)
    rhs = (chebyshev_u(n) - chebyshev_u(n - 2)) * HALF
    return equality_case(f"t-from-u[n={n}]", "T_n = (U_n - U_{n-2})/2", lhs, rhs)
