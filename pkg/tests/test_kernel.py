import pytest

from stairwords.errors import LimitDoesNotCancel, SingularSystem, UnsupportedL
from stairwords.exactnum import BiPoly, BiRatFun, Poly, RatFun
from stairwords.genfun import closed_form_gf, reconstructed_gf
from stairwords.kernel import (
    KernelSystem,
    _limit_t_to_1,
    aggregate_f,
    build_combinatorial_system,
    build_kernel_system,
    class_index,
    class_offsets,
    combinatorial_matrix,
    kernel_b_matrix,
    kernel_determinant,
    kernel_formulas,
    kernel_gf,
    kernel_polynomial,
    kernel_root_check,
    solve_kernel_system,
    system_to_json,
    verify_determinant,
    verify_kernel_formulas,
    verify_matrix_structure,
)
from stairwords.staircase import StaircaseParams

x, t = BiRatFun.x(), BiRatFun.t()
Z = BiRatFun()


def bp(terms):
    return BiPoly(terms)


def test_b_matrix_l2():
    assert kernel_b_matrix(2) == ((x, x, t * x), (x / t, Z, x), (x, x, Z))


def test_b_matrix_l3_nonzero_count():
    B = kernel_b_matrix(3)
    assert len(B) == 7
    assert sum(not e.is_zero() for row in B for e in row) == 15


def test_rhs_vectors():
    s = build_kernel_system(2, 1, t, x, x * t)
    assert s.b == (BiRatFun(1), t, t)
    assert s.b_prime == (Z, x, x * t)
    s3 = build_kernel_system(3, 1, 1, x, t)
    assert s3.b_prime == (Z, Z, Z, x, t, Z, Z)


def test_l1_unsupported():
    with pytest.raises(UnsupportedL):
        build_kernel_system(1, 0, 0, 0, 0)
    with pytest.raises(UnsupportedL):
        build_combinatorial_system(StaircaseParams(3, 1))


def test_index_map():
    assert [class_index(o) for o in [(0, 0), (1, 0), (0, 1)]] == [0, 1, 2]
    assert class_index((1, 1, 0)) == 3 and class_index((0, 0, 1)) == 4 and class_index((0, 1, 1)) == 6
    assert all(class_index(class_offsets(i, 3)) == i for i in range(8))


def test_kernel_polynomial():
    assert kernel_polynomial(2) == bp({(2, 2): 1, (3, 1): 1, (2, 1): 1, (1, 1): 1, (0, 1): -1, (2, 0): 1})


def test_determinant_l2_explicit():
    det = kernel_determinant(build_kernel_system(2, 0, 0, 0, 0))
    K = x * x * t * t + (x**3 + x**2 + x - 1) * t + x * x
    assert det == -K / t


def test_determinant_l3_explicit():
    det = kernel_determinant(build_kernel_system(3, 1, t, x, t * t))
    K = x**3 * t * t + (x + x**2 + x**3 + x**4 + x**5 - 1) * t + x**3
    assert det == -K / t


@pytest.mark.parametrize("L", [2, 3])
def test_determinant_at_t_equal_one(L):
    det = kernel_determinant(build_kernel_system(L, 0, 0, 0, 0))
    expected = -(2 * Poly.monomial(L) + Poly([-1] + [1] * (2 * L - 1)))
    assert det.subs_t(1) == RatFun(expected)
    assert verify_determinant(L).ok


def test_homogeneous_solve():
    assert solve_kernel_system(build_kernel_system(2, 0, 0, 0, 0)) == (Z, Z, Z)


def test_singular_system():
    zero = ((Z, Z), (Z, Z))
    s = KernelSystem(2, zero, (Z, Z), (Z, Z), Z, Z, Z, Z)
    with pytest.raises(SingularSystem):
        solve_kernel_system(s)


def test_solve_satisfies_system():
    s = build_kernel_system(2, 1, t, x, x * t)
    c = solve_kernel_system(s)
    for row, rhs in zip(s.A, s.b):
        assert sum((a * ci for a, ci in zip(row, c)), Z) == rhs


@pytest.mark.parametrize("L", [2, 3])
def test_corrected_formulas_match_solve(L):
    report = verify_kernel_formulas(L, variant="corrected")
    assert report.passed, [c.line() for c in report.failures]
    assert len(report.cases) == 16


def test_printed_formulas_fail_only_where_expected():
    # the first-component formula for b' holds as printed; c1, sum_c and sum_c' need repairs
    report = verify_kernel_formulas(2, variant="printed")
    failing = {c.case_id.split("[")[0] for c in report.failures}
    assert failing == {"c1", "sum_c", "sum_c_prime"}
    passing_nontrivial = [c.case_id for c in report.cases if c.ok and "input=0" not in c.case_id]
    assert all(cid.startswith("c1_prime") for cid in passing_nontrivial)


def test_single_instantiation_c1():
    s = build_kernel_system(2, 1, t, x, x * t)
    c = solve_kernel_system(s)
    cp = solve_kernel_system(s, "b_prime")
    forms = kernel_formulas(2, 1, t, x, x * t, variant="corrected")
    assert c[0] == forms["c1"] and cp[0] == forms["c1_prime"]
    assert sum(cp, Z) == forms["sum_c_prime"]


def test_bad_variant():
    with pytest.raises(ValueError):
        kernel_formulas(2, 0, 0, 0, 0, variant="other")


@pytest.mark.parametrize("L", [2, 3])
def test_root_check(L):
    report = kernel_root_check(L)
    assert [c.outcome for c in report.cases] == ["zero", "nonzero-as-expected"]


@pytest.mark.parametrize("L", [2, 3])
def test_structure(L):
    assert combinatorial_matrix(L) == kernel_b_matrix(L)
    assert verify_matrix_structure(L).passed


def test_first_row_of_word_system():
    s = build_combinatorial_system(StaircaseParams(3, 2))
    assert s.A[0] == (1 - x, -x, -t * x)
    assert s.b[0] == x * x * (1 + t + t * t)
    assert s.b[1] == x * x * (1 + t)


def test_aggregate_examples():
    p2 = StaircaseParams(2, 2)
    assert aggregate_f(build_combinatorial_system(p2), p2) == RatFun(1, Poly([1, -2]))
    assert kernel_gf(StaircaseParams(3, 2)) == RatFun(Poly([1, 1, 1]), Poly([1, -2, 0, -1]))
    p = StaircaseParams(4, 3)
    assert kernel_gf(p) == reconstructed_gf(p)


@pytest.mark.parametrize("k,L", [(k, L) for L in (2, 3) for k in (2, 3, 4)])
def test_aggregate_matches_closed_form(k, L):
    p = StaircaseParams(k, L)
    assert kernel_gf(p) == closed_form_gf(p)


def test_limit_without_cancellation():
    with pytest.raises(LimitDoesNotCancel):
        _limit_t_to_1(BiRatFun(1) / (1 - t))
    assert _limit_t_to_1((1 - t * t) / (1 - t)) == RatFun(2)


def test_json_dump():
    data = system_to_json(build_kernel_system(2, 1, 1, 1, 1))
    assert data["size"] == 3
    assert data["A"][1][0] == "-x / t"
    assert data["b"] == ["1 / 1"] * 3
