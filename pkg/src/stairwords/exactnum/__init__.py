"""Exact arithmetic tower: Q -> Q[x] -> Q(x), Q[x, t] -> Q(x, t), Q(x)[sqrt d]."""

from fractions import Fraction as ExactScalar

from .bivariate import BiPoly, BiRatFun, bipoly_gcd, birf_sum
from .poly import Poly, poly_arith, poly_gcd
from .quadext import QuadExtElem, quadext_arith, quadext_pow
from .ratfun import RatFun, poly_compose_ratfun, ratfun_arith

X = Poly.x()

__all__ = [
    "ExactScalar",
    "BiPoly",
    "BiRatFun",
    "Poly",
    "QuadExtElem",
    "RatFun",
    "X",
    "bipoly_gcd",
    "birf_sum",
    "poly_arith",
    "poly_compose_ratfun",
    "poly_gcd",
    "quadext_arith",
    "quadext_pow",
    "ratfun_arith",
]
