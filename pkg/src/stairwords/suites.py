"""Named verification suites, as run by ``stairwords verify``.

Each suite returns a :class:`VerificationReport` whose cases are in a fixed
order, so the text and JSON output are reproducible.
"""

from __future__ import annotations

from importlib import resources
from typing import Callable, Sequence

from .chebyshev import (
    verify_cassini_identity,
    verify_pell_identity,
    verify_power_identity,
    verify_product_identity,
    verify_t_from_u,
)
from .errors import ParseError
from .exactnum import Poly, RatFun
from .genfun import (
    assembled_gf,
    classic_staircase_gf,
    closed_form_gf,
    f11_from_counts,
    f11_from_t1,
    l2_ratio_display,
    ratfun_series,
    reconstructed_gf,
)
from .kernel import (
    kernel_gf,
    kernel_root_check,
    verify_determinant,
    verify_kernel_formulas,
    verify_matrix_structure,
)
from .report import VerificationReport, equality_case
from .staircase import StaircaseParams, brute_force_count, count_series, transfer_count

KNOWN_GF_FILE = "l2_generating_functions.txt"


def load_known_gfs() -> dict[int, RatFun]:
    """The tabulated L = 2 generating functions keyed by k, in canonical form."""
    text = resources.files("stairwords").joinpath("data", KNOWN_GF_FILE).read_text()
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            k, sign, num, den = (part.strip() for part in line.split("|"))
            f = RatFun(Poly.from_text(num), Poly.from_text(den))
            out[int(k)] = -f if sign == "-" else f
        except (ValueError, ParseError) as exc:
            raise ParseError(f"{KNOWN_GF_FILE}:{lineno}: {exc}") from exc
    return out


def counts_suite(ks: Sequence[int] = range(2, 6), Ls: Sequence[int] = (1, 2, 3), max_n: int = 10) -> VerificationReport:
    """Enumeration against the automaton, every length up to ``max_n``."""
    report = VerificationReport("counts")
    for L in Ls:
        for k in ks:
            p = StaircaseParams(k, L)
            for n in range(max_n + 1):
                report.add(
                    equality_case(f"count[k={k},L={L},n={n}]", "brute force = transfer", brute_force_count(p, n), transfer_count(p, n))
                )
    return report


def identities_suite() -> VerificationReport:
    report = VerificationReport("identities")
    for m in range(16):
        for n in range(16):
            report.add(verify_product_identity(m, n))
    for n in range(21):
        report.add(verify_power_identity(n))
    for n in range(16):
        report.add(verify_cassini_identity(n))
    for k in range(1, 21):
        report.add(verify_pell_identity(k))
    for n in range(16):
        report.add(verify_t_from_u(n))
    return report


def known_gf_suite(terms: int = 30, max_den_degree: int = 14) -> VerificationReport:
    """Every route at L = 2 against the tabulated functions."""
    report = VerificationReport("known-gf")
    for k, expected in sorted(load_known_gfs().items()):
        p = StaircaseParams(k, 2)
        routes: list[tuple[str, Callable[[], RatFun]]] = [
            ("closed", lambda: closed_form_gf(p)),
            ("assembled", lambda: assembled_gf(p)),
            ("reconstruct", lambda: reconstructed_gf(p, terms, max_den_degree)),
        ]
        if k <= 4:
            routes.append(("kernel", lambda: kernel_gf(p)))
        for name, route in routes:
            report.add(equality_case(f"known-gf[k={k},{name}]", f"{name} = {expected.pretty()}", route(), expected))
    return report


def closed_form_suite(ks: Sequence[int] = range(2, 7), Ls: Sequence[int] = (1, 2, 3), terms: int = 16) -> VerificationReport:
    report = VerificationReport("closed-form")
    for L in Ls:
        for k in ks:
            p = StaircaseParams(k, L)
            closed = closed_form_gf(p)
            report.add(
                equality_case(
                    f"series[k={k},L={L}]", f"closed form = counts to {terms} terms", ratfun_series(closed, terms), count_series(p, terms)
                )
            )
            report.add(equality_case(f"assembled[k={k},L={L}]", "closed form = kernel-root assembly", closed, assembled_gf(p)))
            if k <= 5:
                report.add(
                    equality_case(f"all-ones[k={k},L={L}]", "kernel root = reconstruction from counts", f11_from_t1(p), f11_from_counts(p))
                )
    for k in ks:
        report.add(
            equality_case(f"classic[k={k}]", "classic L=1 formula = closed form", classic_staircase_gf(k), closed_form_gf(StaircaseParams(k, 1)))
        )
    for k in range(2, 6):
        p = StaircaseParams(k, 2)
        geom = RatFun(Poly([1, 1]))
        report.add(
            equality_case(
                f"ratio-display[k={k}]", "all-ones series = -(1+x)/2 * tabulated ratio", f11_from_t1(p), -geom / 2 * l2_ratio_display(k)
            )
        )
    return report


def kernel_suite(Ls: Sequence[int] = (2, 3), forms: str = "corrected", ks: Sequence[int] = range(2, 5)) -> VerificationReport:
    """Determinant, root, structure, the closed formulas, and the aggregated f."""
    report = VerificationReport(f"kernel[{forms}]")
    for L in Ls:
        report.add(verify_determinant(L))
        report.extend(kernel_root_check(L))
        report.extend(verify_matrix_structure(L))
        report.extend(verify_kernel_formulas(L, variant=forms))
        for k in ks:
            p = StaircaseParams(k, L)
            report.add(equality_case(f"aggregate[k={k},L={L}]", "kernel solve = closed form", kernel_gf(p), closed_form_gf(p)))
    return report


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "counts": counts_suite,
    "identities": identities_suite,
    "known-gf": known_gf_suite,
    "closed-form": closed_form_suite,
    "kernel": kernel_suite,
}
SUITE_ALIASES = {"table1": "known-gf"}


def run_suite(name: str, *, Ls: Sequence[int] = (2, 3), forms: str = "corrected") -> VerificationReport:
    name = SUITE_ALIASES.get(name, name)
    if name == "all":
        report = VerificationReport("all")
        for sub in SUITES:
            report.extend(run_suite(sub, Ls=Ls, forms=forms))
        return report
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if name == "kernel":
        return kernel_suite(Ls=Ls, forms=forms)
    return SUITES[name]()


__all__ = [
    "SUITES",
    "closed_form_suite",
    "counts_suite",
    "identities_suite",
    "kernel_suite",
    "known_gf_suite",
    "load_known_gfs",
    "run_suite",
]
