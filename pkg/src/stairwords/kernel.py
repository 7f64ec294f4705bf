"""The kernel-method linear system behind the closed form.

For ``L >= 2`` the boundary generating functions

    F_o(x, t) = sum_a f_{a+o_1, ..., a+o_L}(x) t^(a-1),   o in {0,1}^L minus all-ones,

satisfy ``A(x, t) F = rhs`` with ``A = I - B``.  Index convention: ``F_o``
sits at position ``sum_i o_i 2^(i-1)`` (0-based, ``o_1`` least significant),
so the all-zeros class is first and ``(0, 1, ..., 1)`` is last.

``det A = -K(x, t) / t`` with ``K = x^L t^2 + (x + ... + x^(2L-1) - 1) t + x^L``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import LimitDoesNotCancel, SingularSystem, UnsupportedL
from .exactnum import BiPoly, BiRatFun, Poly, QuadExtElem, RatFun, bipoly_gcd, birf_sum
from .genfun import f11_from_t1, geometric_sum, kernel_root, low_order_poly
from .report import Case, VerificationReport, equality_case
from .staircase import StaircaseParams

Matrix = tuple[tuple[BiRatFun, ...], ...]

_X = BiRatFun.x()
_T = BiRatFun.t()
_ZERO = BiRatFun()
_ONE = BiRatFun(1)


def _bx(p: Poly) -> BiRatFun:
    return BiRatFun(BiPoly.from_poly_x(p))


def _bt(p: Poly) -> BiRatFun:
    return BiRatFun(BiPoly.from_poly_t(p))


def _as_birf(v) -> BiRatFun:
    if isinstance(v, BiRatFun):
        return v
    if isinstance(v, RatFun):
        return BiRatFun.from_ratfun(v)
    return BiRatFun(v)


def _check_L(L: int) -> None:
    if L < 2:
        raise UnsupportedL(f"the kernel system needs L >= 2 (got L={L}); use the classic L=1 formula instead")


def class_index(offsets: Sequence[int]) -> int:
    """0-based position of the class with offset pattern ``offsets``."""
    return sum(o << i for i, o in enumerate(offsets))


def class_offsets(index: int, L: int) -> tuple[int, ...]:
    return tuple((index >> i) & 1 for i in range(L))


def kernel_polynomial(L: int) -> BiPoly:
    middle = geometric_sum(1, 2 * L - 1) - 1
    out = {(L, 2): 1, (L, 0): 1}
    for i, c in enumerate(middle.coeffs):
        if c:
            out[(i, 1)] = c
    return BiPoly(out)


def kernel_b_matrix(L: int) -> Matrix:
    """``B`` from its case rules (1-based in the comments, 0-based in code)."""
    _check_L(L)
    n, h = 2**L - 1, 2 ** (L - 1)
    B = [[_ZERO] * n for _ in range(n)]
    for j in range(1, n):  # columns 1 .. n-1, 1-based
        row = -(-j // 2)
        B[row - 1][j - 1] = _X
        B[row + h - 1][j - 1] = _X
    B[0][n - 1] = _T * _X
    B[h - 1][n - 1] = _X
    B[h - 1][0] = _X / _T
    return tuple(tuple(r) for r in B)


def combinatorial_matrix(L: int, as_displayed: bool = False) -> Matrix:
    """``B`` read off the suffix recursions under the index convention.

    Each class ``o`` (not all zeros) is reached from the shifted classes
    ``(p, o_1, ..., o_{L-1})`` with ``p`` in ``{0, 1}``; a shift landing on
    all-ones is the all-zeros class moved up one letter (factor ``1/t``), and
    the all-zeros class also sees ``(1, 0, ..., 0)`` and, via the letter
    below, ``t * F_{0,1,...,1}``.  With ``as_displayed=True`` the equation for
    ``(0, ..., 0, 1)`` drops its ``F_{1,0,...,0}`` term, matching the way that
    equation is usually printed.
    """
    _check_L(L)
    n = 2**L - 1
    zeros, ones = (0,) * L, (1,) * L
    B = [[_ZERO] * n for _ in range(n)]
    B[0][class_index(zeros)] = _X
    B[0][class_index((1,) + zeros[1:])] = _X
    B[0][class_index((0,) + ones[1:])] = _T * _X
    last_one = zeros[:-1] + (1,)
    for idx in range(1, n):
        o = class_offsets(idx, L)
        for p in (0, 1):
            shifted = (p,) + o[:-1]
            if shifted == ones:
                B[idx][0] = B[idx][0] + _X / _T
            elif as_displayed and o == last_one and p == 1:
                continue
            else:
                j = class_index(shifted)
                B[idx][j] = B[idx][j] + _X
    return tuple(tuple(r) for r in B)


@dataclass(frozen=True)
class KernelSystem:
    L: int
    A: Matrix
    b: tuple[BiRatFun, ...]
    b_prime: tuple[BiRatFun, ...]
    q: BiRatFun
    r: BiRatFun
    u: BiRatFun
    v: BiRatFun

    @property
    def size(self) -> int:
        return len(self.A)


def build_kernel_system(L: int, q, r, u, v) -> KernelSystem:
    _check_L(L)
    q, r, u, v = (_as_birf(z) for z in (q, r, u, v))
    B = kernel_b_matrix(L)
    n, h = len(B), 2 ** (L - 1)
    A = tuple(tuple((_ONE if i == j else _ZERO) - B[i][j] for j in range(n)) for i in range(n))
    b = (q,) + (r,) * (n - 1)
    bp = [_ZERO] * n
    bp[h - 1] = u
    bp[h] = v
    return KernelSystem(L, A, b, tuple(bp), q, r, u, v)


# -- exact linear algebra over Q(x, t) -------------------------------------


def _clear_row(row: Sequence[BiRatFun]) -> tuple[list[BiPoly], BiPoly]:
    """Scale a row by the lcm of its denominators; returns the entries and the lcm."""
    m = BiPoly.const(1)
    for e in row:
        if not e.is_zero():
            m = m * e.den.exact_div(bipoly_gcd(m, e.den))
    return [e.num * m.exact_div(e.den) if not e.is_zero() else BiPoly() for e in row], m


def bareiss_determinant(M: Sequence[Sequence[BiPoly]]) -> BiPoly:
    """Fraction-free elimination; every division is exact in Q[x, t]."""
    a = [list(r) for r in M]
    n = len(a)
    sign = 1
    prev = BiPoly.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return BiPoly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev) if not num.is_zero() else num
            a[i][k] = BiPoly()
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def kernel_determinant(system: KernelSystem) -> BiRatFun:
    rows, mults = [], BiPoly.const(1)
    for row in system.A:
        cleared, m = _clear_row(row)
        rows.append(cleared)
        mults = mults * m
    return BiRatFun(bareiss_determinant(rows), mults)


def _solve(A: Matrix, rhs_columns: Sequence[Sequence[BiRatFun]]) -> list[list[BiRatFun]]:
    n = len(A)
    m = len(rhs_columns)
    aug = [list(A[i]) + [col[i] for col in rhs_columns] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if not aug[i][k].is_zero()), None)
        if piv is None:
            raise SingularSystem("kernel matrix is singular")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = aug[k][k].inverse()
        aug[k] = [e * inv if not e.is_zero() else e for e in aug[k]]
        for i in range(n):
            if i != k and not aug[i][k].is_zero():
                f = aug[i][k]
                aug[i] = [ei - f * ek if not ek.is_zero() else ei for ei, ek in zip(aug[i], aug[k])]
    return [[aug[i][n + c] for i in range(n)] for c in range(m)]


def solve_kernel_system(system: KernelSystem, rhs="b") -> tuple[BiRatFun, ...]:
    """Solve ``A c = rhs``; ``rhs`` is ``"b"``, ``"b_prime"``, or an explicit vector."""
    if isinstance(rhs, str):
        rhs = {"b": system.b, "b_prime": system.b_prime}[rhs]
    return tuple(_solve(system.A, [tuple(_as_birf(v) for v in rhs)])[0])


# -- closed-form component and sum formulas ---------------------------------


def _mersenne_sum(lo: int, hi: int) -> int:
    return sum(2 ** (j + 1) - 1 for j in range(lo, hi + 1))


def kernel_formulas(L: int, q, r, u, v, variant: str = "printed") -> dict[str, BiRatFun]:
    """Closed forms for the first solution component and the component sums.

    ``variant="printed"`` builds them exactly as they are usually stated;
    ``variant="corrected"`` applies the three repairs that make them agree
    with the exact solve (see README, "Known discrepancies").
    """
    if variant not in ("printed", "corrected"):
        raise ValueError(f"variant must be 'printed' or 'corrected', not {variant!r}")
    _check_L(L)
    q, r, u, v = (_as_birf(z) for z in (q, r, u, v))
    K = BiRatFun(kernel_polynomial(L))
    x, t = _X, _T
    geom = _bx(geometric_sum(0, L - 1))
    tail = _bx(geometric_sum(1, L - 1))  # x + ... + x^(L-1)
    xp = lambda e: _bx(Poly.monomial(e))  # noqa: E731

    first = (q - (t + 1) * r) * tail
    if variant == "corrected":
        first = first - q
    c1 = t * geom * first / K

    c1_prime = -(t * xp(L - 1) * (u + t * v + (t * u + v) * tail)) / K

    sq = _bx(Poly(2 ** (i + 1) - 1 for i in range(L - 1)))
    t2 = r * x * sq
    t1 = r * xp(L) * _bx(Poly(_mersenne_sum(i, L - 2) for i in range(L - 1)))
    t1 = t1 + (q + r * _mersenne_sum(0, L - 2)) * geom
    if variant == "corrected":
        t1 = t1 + r * _bx(Poly(L - 1 - i for i in range(L - 1)))
    t0 = birf_sum(
        Fraction(i) * (q - r) * xp(2 * L - 1 - i) + (i * q + (2**i - i - 1) * r) * xp(i)
        for i in range(1, L)
    )
    sum_c = -(t2 * t * t + t1 * t + t0) / K

    d2 = v * xp(L - 1)
    d1 = v * _bx(geometric_sum(0, 2 * L - 2)) + u * geom
    d1 = d1 - v * xp(L - 1) if variant == "corrected" else d1 + v * xp(L - 1)
    d0 = v * xp(L) * _bx(geometric_sum(0, L - 2))
    sum_c_prime = -(d2 * t * t + d1 * t - d0) / K

    return {"c1": c1, "c1_prime": c1_prime, "sum_c": sum_c, "sum_c_prime": sum_c_prime}


DEFAULT_INSTANTIATIONS: tuple[tuple, ...] = (
    (0, 0, 0, 0),
    (1, 1, 1, 1),
    (1, BiPoly.t(), BiPoly.x(), BiPoly({(0, 2): 1})),
    (BiPoly.x(), BiPoly({(0, 0): 1, (0, 1): 1}), BiPoly.t(), BiPoly({(1, 1): 1})),
)


def verify_kernel_formulas(
    L: int,
    instantiations: Optional[Iterable[tuple]] = None,
    variant: str = "printed",
) -> VerificationReport:
    """Compare the exact solve against :func:`kernel_formulas`, one case per formula and input."""
    report = VerificationReport(f"kernel-formulas[L={L},{variant}]")
    inst = DEFAULT_INSTANTIATIONS if instantiations is None else tuple(instantiations)
    for n_inst, (q, r, u, v) in enumerate(inst):
        sysm = build_kernel_system(L, q, r, u, v)
        c, cp = _solve(sysm.A, [sysm.b, sysm.b_prime])
        actual = {"c1": c[0], "c1_prime": cp[0], "sum_c": birf_sum(c), "sum_c_prime": birf_sum(cp)}
        closed = kernel_formulas(L, q, r, u, v, variant)
        inputs = "; ".join(_as_birf(z).pretty() for z in (q, r, u, v))
        for name in ("c1", "c1_prime", "sum_c", "sum_c_prime"):
            report.add(
                equality_case(
                    f"{name}[L={L},input={n_inst}]",
                    f"solve = {variant} closed form at (q; r; u; v) = ({inputs})",
                    actual[name],
                    closed[name],
                )
            )
    return report


def verify_determinant(L: int) -> Case:
    sysm = build_kernel_system(L, 0, 0, 0, 0)
    det = kernel_determinant(sysm)
    expected = -BiRatFun(kernel_polynomial(L)) / _T
    return equality_case(f"det[L={L}]", "det(I - B) = -K/t", det, expected)


def kernel_root_check(L: int) -> VerificationReport:
    """``K(x, t1)`` must vanish in the quadratic extension; ``K(x, mid)`` must not."""
    report = VerificationReport(f"kernel-root[L={L}]")
    coeffs = [RatFun(p) for p in kernel_polynomial(L).t_coeffs()]
    t1 = kernel_root(L)

    def k_at(z: QuadExtElem) -> QuadExtElem:
        acc = QuadExtElem(0, 0, z.d)
        for c in reversed(coeffs):
            acc = acc * z + c
        return acc

    val = k_at(t1)
    report.add(
        Case(f"root[L={L}]", "K(x, mid + s) = 0", "zero" if val.is_zero() else "nonzero", str(val))
    )
    mid_only = k_at(QuadExtElem(t1.a, 0, t1.d))
    report.add(
        Case(
            f"not-root[L={L}]",
            "K(x, mid) != 0",
            "nonzero-as-expected" if not mid_only.is_zero() else "zero",
            str(mid_only),
        )
    )
    return report


def verify_matrix_structure(L: int) -> VerificationReport:
    """Case-rule ``B`` against the matrix read off the recursions."""
    report = VerificationReport(f"structure[L={L}]")
    rules = kernel_b_matrix(L)
    report.add(equality_case(f"structure[L={L}]", "case rules = recursions", rules, combinatorial_matrix(L)))
    shown = combinatorial_matrix(L, as_displayed=True)
    diff = [(i + 1, j + 1) for i, j in itertools.product(range(len(rules)), repeat=2) if rules[i][j] != shown[i][j]]
    h = 2 ** (L - 1)
    report.add(
        Case(
            f"structure-displayed[L={L}]",
            f"printed recursions differ from case rules only at ({h + 1}, 2)",
            "pass" if diff == [(h + 1, 2)] else "fail",
            str(diff),
        )
    )
    return report


# -- the combinatorial instance ---------------------------------------------


def boundary_rhs(params: StaircaseParams, f11: Optional[RatFun] = None) -> tuple[BiRatFun, ...]:
    """``(q, r, u, v)`` for words over [k]; ``u, v`` carry the all-ones series ``f11``."""
    k, L = params.k, params.L
    xl = _bx(Poly.monomial(L))
    q = xl * _bt(geometric_sum(0, k - 1))
    r = xl * _bt(geometric_sum(0, k - 2))
    f11 = f11_from_t1(params) if f11 is None else f11
    f = BiRatFun.from_ratfun(f11)
    u = -(_X * f) / _T
    v = -(_X * _bt(Poly.monomial(k - 1)) * f)
    return q, r, u, v


def build_combinatorial_system(params: StaircaseParams, f11: Optional[RatFun] = None) -> KernelSystem:
    _check_L(params.L)
    return build_kernel_system(params.L, *boundary_rhs(params, f11))


def _limit_t_to_1(value: BiRatFun) -> RatFun:
    den = value.den.subs_t(1)
    if not den.is_zero():
        return RatFun(value.num.subs_t(1), den)
    num = value.num.subs_t(1)
    if not num.is_zero():
        raise LimitDoesNotCancel("pole at t = 1 in the aggregated boundary sum")
    dden = value.den.derivative_t().subs_t(1)
    if dden.is_zero():
        raise LimitDoesNotCancel("t = 1 is a multiple root of the denominator")
    return RatFun(value.num.derivative_t().subs_t(1), dden)


def aggregate_f(system: KernelSystem, params: StaircaseParams) -> RatFun:
    """Generating function from the solved system: short words plus every class at ``t = 1``."""
    c, cp = _solve(system.A, [system.b, system.b_prime])
    total = birf_sum(c) + birf_sum(cp)
    return RatFun(low_order_poly(params)) + _limit_t_to_1(total)


def kernel_gf(params: StaircaseParams) -> RatFun:
    return aggregate_f(build_combinatorial_system(params), params)


def system_to_json(system: KernelSystem) -> dict:
    return {
        "L": system.L,
        "size": system.size,
        "A": [[str(e) for e in row] for row in system.A],
        "b": [str(e) for e in system.b],
        "b_prime": [str(e) for e in system.b_prime],
    }
