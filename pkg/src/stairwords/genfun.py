"""Generating functions f_{k,L}(x) for staircase graph words.

Routes to the same rational function, kept independent so they can be
cross-checked:

* ``reconstruct_ratfun`` over transfer-matrix counts (Berlekamp-Massey);
* ``closed_form_gf``: the Chebyshev closed form in ``U_{k-1}(mid)``, ``U_k(mid)``;
* ``assemble_f_from_f11`` fed by ``f11_from_t1``, which evaluates the
  all-ones boundary series at the kernel root ``t1 = mid + sqrt(mid^2 - 1)``
  inside a quadratic extension;
* ``classic_staircase_gf`` for L = 1.

Throughout, ``mid = (1 - x - x^2 - ... - x^(2L-1)) / (2 x^L)`` is half the sum
of the two roots of the kernel polynomial, and ``geom = 1 + x + ... + x^(L-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .chebyshev import chebyshev_u
from .errors import DenominatorVanishes, InsufficientTerms, NonzeroRadicalPart, PoleAtOrigin
from .exactnum import Poly, QuadExtElem, RatFun, poly_compose_ratfun
from .staircase import StaircaseParams, brute_force_count, build_suffix_automaton, count_series, suffix_class_series

X = Poly.x()


# -- series <-> rational functions -----------------------------------------


def ratfun_series(f: RatFun, terms: int) -> list[Fraction]:
    """Taylor coefficients at 0 by running the recurrence defined by ``f.den``."""
    den = f.den
    if not den[0]:
        raise PoleAtOrigin(f"{f} has a pole at x = 0")
    inv0 = 1 / den[0]
    out: list[Fraction] = []
    dc = den.coeffs
    for n in range(terms):
        s = f.num[n]
        for i in range(1, min(n, len(dc) - 1) + 1):
            s -= dc[i] * out[n - i]
        out.append(s * inv0)
    return out


def berlekamp_massey(seq: Sequence) -> tuple[Poly, int]:
    """Shortest linear recurrence over Q.

    Returns the connection polynomial ``C = 1 + c_1 x + ... + c_m x^m`` and
    the linear complexity ``m``: ``sum_i c_i s_{n-i} = 0`` for ``n >= m``.
    """
    s = [Fraction(v) for v in seq]
    C, B = [Fraction(1)], [Fraction(1)]
    m, shift, b = 0, 1, Fraction(1)
    for n in range(len(s)):
        d = s[n]
        for i in range(1, m + 1):
            if i < len(C):
                d += C[i] * s[n - i]
        if d == 0:
            shift += 1
            continue
        coef = d / b
        T = list(C)
        need = len(B) + shift
        if len(C) < need:
            C.extend([Fraction(0)] * (need - len(C)))
        for i, bi in enumerate(B):
            C[i + shift] -= coef * bi
        if 2 * m <= n:
            m, B, b, shift = n + 1 - m, T, d, 1
        else:
            shift += 1
    conn = Poly(C)
    assert conn.degree <= m
    return conn, m


def reconstruct_ratfun(series: Sequence, max_den_degree: int) -> Optional[RatFun]:
    """Smallest rational function whose expansion reproduces ``series``.

    Returns ``None`` when no fit exists whose reduced denominator has degree
    at most ``max_den_degree`` or when the series is too short to pin the
    recurrence down (fewer than twice its linear complexity).
    """
    if len(series) < 2 * max_den_degree + 2:
        raise InsufficientTerms(
            f"need at least {2 * max_den_degree + 2} terms for max_den_degree={max_den_degree}, got {len(series)}"
        )
    conn, complexity = berlekamp_massey(series)
    if 2 * complexity > len(series):
        return None
    num = (Poly(series).truncate(complexity) * conn).truncate(complexity)
    f = RatFun(num, conn)
    if f.den.degree > max_den_degree:
        return None
    if ratfun_series(f, len(series)) != [Fraction(v) for v in series]:
        return None
    return f


def reconstructed_gf(params: StaircaseParams, terms: Optional[int] = None, max_den_degree: Optional[int] = None) -> RatFun:
    """``reconstruct_ratfun`` over transfer counts; the degree bound defaults to the automaton size."""
    tm = build_suffix_automaton(params)
    bound = tm.dim if max_den_degree is None else max_den_degree
    terms = 2 * bound + 2 if terms is None else terms
    f = reconstruct_ratfun(count_series(params, terms, tm), bound)
    if f is None:
        raise ValueError(f"no rational fit with denominator degree <= {bound} for {params}")
    return f


# -- closed form ------------------------------------------------------------


@dataclass(frozen=True)
class ClosedFormContext:
    """Ingredients of the Chebyshev closed form.

    ``num_prev``, ``num_curr`` weight ``U_{k-1}(mid)`` and ``U_k(mid)`` in the
    numerator of the correction ratio, ``den_prev``, ``den_curr`` in its
    denominator, and ``shared`` is the constant added to both.
    """

    params: StaircaseParams
    mid: RatFun
    geom: RatFun
    num_prev: RatFun
    num_curr: RatFun
    shared: RatFun
    den_prev: RatFun
    den_curr: RatFun


def geometric_sum(lo: int, hi: int) -> Poly:
    """``x^lo + ... + x^hi`` (zero when ``hi < lo``)."""
    return Poly([0] * lo + [1] * (hi - lo + 1)) if hi >= lo else Poly()


def kernel_mid(L: int) -> RatFun:
    return RatFun(1 - geometric_sum(1, 2 * L - 1), Poly.monomial(L, 2))


def closed_form_context(params: StaircaseParams) -> ClosedFormContext:
    L = params.L
    m = kernel_mid(L)
    g = RatFun(geometric_sum(0, L - 1))
    m2, g2 = m * m, g * g
    return ClosedFormContext(
        params=params,
        mid=m,
        geom=g,
        num_prev=(4 * m2 + 2 * m - 1) * g2 - 4 * (2 * m2 - 1) * g + 4 * m2 - 2 * (m + 1),
        num_curr=-(1 + 2 * m) * g2 + 4 * g * m - 2 * (m - 1),
        shared=-2 * (m - 1) * (g - 1) - g2,
        den_prev=(2 * m2 - 1) * g2 - 2 * (2 * m2 - m - 1) * g + 2 * m * (m - 1),
        den_curr=2 * (m - 1) * (g - 1) - g2 * m,
    )


def closed_form_ratio(ctx: ClosedFormContext) -> RatFun:
    """The Chebyshev ratio ``(a U_{k-1} + b U_k + c) / (d U_{k-1} + e U_k + c)`` at ``mid``."""
    k = ctx.params.k
    u_prev = poly_compose_ratfun(chebyshev_u(k - 1), ctx.mid)
    u_curr = poly_compose_ratfun(chebyshev_u(k), ctx.mid)
    den = ctx.den_prev * u_prev + ctx.den_curr * u_curr + ctx.shared
    if den.is_zero():
        raise DenominatorVanishes(f"closed-form ratio denominator is identically zero for {ctx.params}")
    return (ctx.num_prev * u_prev + ctx.num_curr * u_curr + ctx.shared) / den


def closed_form_gf(params: StaircaseParams) -> RatFun:
    ctx = closed_form_context(params)
    k, L = params.k, params.L
    ratio = closed_form_ratio(ctx)
    outer = RatFun(1 - Poly([0, 2]) - Poly.monomial(L))
    if outer.is_zero():
        raise DenominatorVanishes("1 - 2x - x^L vanished")
    return ctx.geom / outer * (1 + (k - 3) * RatFun(X) + RatFun(X) * ratio)


def classic_staircase_gf(k: int) -> RatFun:
    """Generating function for ordinary staircase words (L = 1) in its classic Chebyshev form."""
    if k < 2:
        raise ValueError("k must be >= 2")
    arg = RatFun(Poly([1, -1]), Poly([0, 2]))
    u_prev = poly_compose_ratfun(chebyshev_u(k - 1), arg)
    u_curr = poly_compose_ratfun(chebyshev_u(k), arg)
    one_m3x = RatFun(Poly([1, -3]))
    xr = RatFun(X)
    return 1 + k * xr / one_m3x - 2 * xr * xr / (one_m3x * one_m3x) * (u_curr - u_prev - 1) / u_curr


def l1_ratio_display(k: int) -> RatFun:
    """``(U_{k-1} + U_k - 1) / (U_{k-1} - mid*U_k - 1)`` at ``mid = (1-x)/2x``.

    Printed in the literature as the all-ones boundary series for L = 1; it is
    in fact the correction ratio of the closed form, i.e. ``-2 f11 / geom``.
    """
    m = kernel_mid(1)
    u_prev = poly_compose_ratfun(chebyshev_u(k - 1), m)
    u_curr = poly_compose_ratfun(chebyshev_u(k), m)
    return (u_prev + u_curr - 1) / (u_prev - m * u_curr - 1)


def l2_ratio_display(k: int) -> RatFun:
    """The L = 2 display ``((2x^4+2x^3-2)U_{k-1} + 2x^3 U_k + 2x) / ((x^4+2x^3-1)U_{k-1} + (x^3+x^2-x+1)U_k + 2x)``.

    Printed in the literature as the all-ones boundary series for L = 2;
    like :func:`l1_ratio_display` it equals the closed-form correction ratio.
    """
    m = kernel_mid(2)
    u_prev = poly_compose_ratfun(chebyshev_u(k - 1), m)
    u_curr = poly_compose_ratfun(chebyshev_u(k), m)
    two_x = RatFun(Poly([0, 2]))
    num = RatFun(Poly([-2, 0, 0, 2, 2])) * u_prev + RatFun(Poly([0, 0, 0, 2])) * u_curr + two_x
    den = RatFun(Poly([-1, 0, 0, 2, 1])) * u_prev + RatFun(Poly([1, -1, 1, 1])) * u_curr + two_x
    return num / den


# -- the kernel-root route --------------------------------------------------


def kernel_root(L: int) -> QuadExtElem:
    """``t1 = mid + s`` with ``s^2 = mid^2 - 1``."""
    m = kernel_mid(L)
    return QuadExtElem(m, 1, m * m - 1)


def f11_from_t1(params: StaircaseParams) -> RatFun:
    """Generating function of valid words ending in ``L`` copies of letter 1.

    Evaluated from the kernel root in Q(x)[s]; the radical part must cancel.
    """
    k = params.k
    t1 = kernel_root(params.L)
    g = RatFun(geometric_sum(0, params.L - 1))
    head = (t1 - 1 + g) * t1**k
    tail = t1 * (t1 * g - t1 + 1)
    value = -((head - tail) * g) / ((head + t1 * g - t1 + 1) * (1 - t1))
    if not value.is_rational():
        raise NonzeroRadicalPart(f"all-ones series kept a radical part for {params}: {value.b}")
    return value.a


def low_order_poly(params: StaircaseParams) -> Poly:
    """``sum_{i<L} count(i) x^i``: the lengths shorter than the suffix window."""
    return Poly(params.short_count(i) for i in range(params.L))


def assemble_f_from_f11(params: StaircaseParams, f11: RatFun) -> RatFun:
    k, L = params.k, params.L
    extra = Poly.monomial(L, 2**L - 2 - (2**L - 1) * k)
    for i in range(1, L):
        extra = extra + Poly.monomial(i + L, 2**i - 2 - (2**i - 1) * k)
    den = RatFun(Poly.monomial(L) + Poly([-1, 2]))
    return RatFun(low_order_poly(params)) + (RatFun(Poly([0, 2])) * f11 + extra) / den


def assembled_gf(params: StaircaseParams) -> RatFun:
    return assemble_f_from_f11(params, f11_from_t1(params))


def f11_from_counts(params: StaircaseParams, terms: Optional[int] = None) -> RatFun:
    """All-ones boundary series reconstructed from automaton counts."""
    tm = build_suffix_automaton(params)
    terms = 2 * tm.dim + 2 if terms is None else terms
    series = suffix_class_series(params, (1,) * params.L, terms, tm)
    f = reconstruct_ratfun(series, (terms - 2) // 2)
    if f is None:
        raise ValueError(f"no rational fit for the all-ones series of {params}")
    return f


# -- series samples ---------------------------------------------------------


@dataclass(frozen=True)
class SeriesSample:
    params: StaircaseParams
    coefficients: tuple[int, ...]


def series_sample(params: StaircaseParams, terms: int, method: str = "transfer") -> SeriesSample:
    if method == "transfer":
        coeffs = count_series(params, terms)
    elif method == "brute":
        coeffs = [brute_force_count(params, n) for n in range(terms)]
    elif method == "closed":
        raw = ratfun_series(closed_form_gf(params), terms)
        if any(c.denominator != 1 for c in raw):
            raise ValueError("closed form produced a non-integral coefficient")
        coeffs = [int(c) for c in raw]
    else:
        raise ValueError(f"unknown series method {method!r}")
    return SeriesSample(params, tuple(coeffs))
