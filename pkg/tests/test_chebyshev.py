import pytest
from hypothesis import given
from hypothesis import strategies as st

from stairwords.chebyshev import (
    ChebyshevTable,
    chebyshev_t,
    chebyshev_u,
    verify_cassini_identity,
    verify_pell_identity,
    verify_power_identity,
    verify_product_identity,
    verify_t_from_u,
)
from stairwords.exactnum import Poly
from stairwords.report import equality_case


def test_low_order_values():
    assert chebyshev_u(0) == Poly([1])
    assert chebyshev_u(1) == Poly([0, 2])
    assert chebyshev_u(2) == Poly([-1, 0, 4])
    assert chebyshev_t(0) == Poly([1])
    assert chebyshev_t(1) == Poly([0, 1])
    assert chebyshev_t(3) == Poly([0, -3, 0, 4])


def test_signed_indices():
    assert chebyshev_u(-1).is_zero()
    assert chebyshev_u(-2) == -chebyshev_u(0)
    assert chebyshev_u(-5) == -chebyshev_u(3)


@given(st.integers(-30, 30))
def test_recurrence_holds_for_all_indices(n):
    assert chebyshev_u(n + 1) == Poly([0, 2]) * chebyshev_u(n) - chebyshev_u(n - 1)


def test_first_kind_has_no_negative_indices():
    with pytest.raises(IndexError):
        chebyshev_t(-1)


def test_bad_kind():
    with pytest.raises(ValueError):
        ChebyshevTable("third")


def test_product_small_cases():
    c = verify_product_identity(0, 0)
    assert c.outcome == "equal"
    assert verify_product_identity(1, 0).ok


@pytest.mark.parametrize("n", [0, 1, 2, 7])
def test_power_cases(n):
    assert verify_power_identity(n).ok


def test_cassini_and_pell_small():
    assert verify_cassini_identity(0).ok and verify_cassini_identity(1).ok
    assert verify_pell_identity(1).ok and verify_pell_identity(2).ok


def test_full_ranges():
    assert all(verify_product_identity(m, n).ok for m in range(16) for n in range(16))
    assert all(verify_power_identity(n).ok for n in range(21))
    assert all(verify_cassini_identity(n).ok for n in range(16))
    assert all(verify_pell_identity(k).ok for k in range(1, 21))
    assert all(verify_t_from_u(n).ok for n in range(16))


def test_case_lines():
    c = verify_pell_identity(3)
    assert c.case_id == "pell[k=3]" and c.ok
    assert c.line().startswith("PASS  pell[k=3]")
    bad = equality_case("demo", "U_2 = U_1", chebyshev_u(2), chebyshev_u(1))
    assert not bad.ok and bad.line().startswith("FAIL") and "lhs=" in bad.witness
