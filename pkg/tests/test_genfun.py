from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stairwords.errors import InsufficientTerms, PoleAtOrigin
from stairwords.exactnum import Poly, RatFun
from stairwords.genfun import (
    assembled_gf,
    berlekamp_massey,
    classic_staircase_gf,
    closed_form_context,
    closed_form_gf,
    f11_from_counts,
    f11_from_t1,
    geometric_sum,
    kernel_mid,
    l1_ratio_display,
    l2_ratio_display,
    ratfun_series,
    reconstruct_ratfun,
    reconstructed_gf,
    series_sample,
)
from stairwords.staircase import StaircaseParams, count_series, suffix_class_series
from stairwords.suites import load_known_gfs

X = Poly.x()
GRID = [(k, L) for L in (1, 2, 3) for k in range(2, 7)]


def rf(num, den):
    return RatFun(Poly(num), Poly(den))


def test_series_examples():
    assert ratfun_series(rf([1], [1, -2]), 5) == [1, 2, 4, 8, 16]
    assert ratfun_series(rf([1, 1, 1], [1, -2, 0, -1]), 6) == [1, 3, 7, 15, 33, 73]


def test_series_pole():
    with pytest.raises(PoleAtOrigin):
        ratfun_series(rf([1], [0, 1]), 3)


def test_berlekamp_massey_fibonacci():
    conn, length = berlekamp_massey([1, 1, 2, 3, 5, 8, 13, 21])
    assert conn == Poly([1, -1, -1]) and length == 2


def test_reconstruct_powers_of_two():
    assert reconstruct_ratfun([2**n for n in range(16)], 7) == rf([1], [1, -2])


def test_reconstruct_needs_terms():
    with pytest.raises(InsufficientTerms):
        reconstruct_ratfun([1, 2, 4], 4)


def test_reconstruct_no_fit_returns_none():
    # n! satisfies no linear recurrence with constant coefficients
    fact = [1]
    for n in range(1, 12):
        fact.append(fact[-1] * n)
    assert reconstruct_ratfun(fact, 3) is None


def test_reconstruct_k4_l2():
    series = count_series(StaircaseParams(4, 2), 30)
    assert reconstruct_ratfun(series, 14) == rf([1, 1, -1, -3, -1], [1, -3, 1, 1, 1])


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(-4, 4), min_size=1, max_size=4),
    st.lists(st.integers(-4, 4), min_size=0, max_size=4),
)
def test_reconstruct_inverts_series(num, den_tail):
    f = RatFun(Poly(num), Poly([1] + den_tail))
    bound = 5
    assert reconstruct_ratfun(ratfun_series(f, 2 * bound + 2), bound) == f


def test_mid_and_geom():
    assert kernel_mid(2) == RatFun(Poly([1, -1, -1, -1]), Poly([0, 0, 2]))
    assert kernel_mid(1) == rf([1, -1], [0, 2])
    assert geometric_sum(0, 1) == Poly([1, 1])
    ctx = closed_form_context(StaircaseParams(3, 2))
    assert ctx.geom == RatFun(Poly([1, 1])) and ctx.mid == kernel_mid(2)


def test_closed_form_examples():
    assert closed_form_gf(StaircaseParams(2, 2)) == rf([1], [1, -2])
    assert closed_form_gf(StaircaseParams(3, 2)) == rf([1, 1, 1], [1, -2, 0, -1])


@pytest.mark.parametrize("k,L", GRID)
def test_closed_form_matches_counts(k, L):
    p = StaircaseParams(k, L)
    assert ratfun_series(closed_form_gf(p), 16) == count_series(p, 16)


@pytest.mark.parametrize("k,L", GRID)
def test_routes_agree(k, L):
    p = StaircaseParams(k, L)
    closed = closed_form_gf(p)
    assert assembled_gf(p) == closed
    assert reconstructed_gf(p) == closed


@pytest.mark.parametrize("k", range(2, 7))
def test_tabulated_l2(k):
    assert closed_form_gf(StaircaseParams(k, 2)) == load_known_gfs()[k]


def test_fixture_normalization():
    table = load_known_gfs()
    assert sorted(table) == [2, 3, 4, 5, 6]
    assert table[2] == rf([1], [1, -2])
    assert all(f.den.coeffs[0] == 1 for f in table.values())


def test_classic_examples():
    assert classic_staircase_gf(2) == rf([1], [1, -2])
    assert ratfun_series(classic_staircase_gf(3), 6) == [1, 3, 7, 17, 41, 99]


@pytest.mark.parametrize("k", range(2, 7))
def test_classic_is_l1_closed_form(k):
    assert classic_staircase_gf(k) == closed_form_gf(StaircaseParams(k, 1))


def test_all_ones_series_k2_l2():
    p = StaircaseParams(2, 2)
    f11 = f11_from_t1(p)
    assert f11 == rf([0, 0, 1], [1, -2])
    assert ratfun_series(f11, 8) == suffix_class_series(p, (1, 1), 8) == [0, 0, 1, 2, 4, 8, 16, 32]


@pytest.mark.parametrize("k,L", [(k, L) for L in (1, 2, 3) for k in range(2, 6)])
def test_all_ones_series_two_ways(k, L):
    p = StaircaseParams(k, L)
    assert f11_from_t1(p) == f11_from_counts(p)


@pytest.mark.parametrize("k", range(2, 6))
def test_ratio_displays_are_scaled_all_ones_series(k):
    # the tabulated Chebyshev ratios equal -2 f11 / (1 + ... + x^(L-1))
    half_geom = RatFun(Poly([Fraction(1, 2), Fraction(1, 2)]))
    assert f11_from_t1(StaircaseParams(k, 2)) == -half_geom * l2_ratio_display(k)
    assert f11_from_t1(StaircaseParams(k, 1)) == -RatFun(Fraction(1, 2)) * l1_ratio_display(k)


@pytest.mark.parametrize("k,L", GRID)
def test_low_order_coefficients(k, L):
    p = StaircaseParams(k, L)
    coeffs = ratfun_series(closed_form_gf(p), L)
    assert coeffs == [k + (k - 1) * (2**i - 2) for i in range(L)]


def test_series_methods_agree():
    for L in (1, 2, 3):
        for k in range(2, 6):
            p = StaircaseParams(k, L)
            samples = {m: series_sample(p, 11, m).coefficients for m in ("brute", "transfer", "closed")}
            assert samples["brute"] == samples["transfer"] == samples["closed"]
    with pytest.raises(ValueError):
        series_sample(StaircaseParams(2, 1), 3, "guess")
