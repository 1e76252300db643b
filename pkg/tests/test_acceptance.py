"""Acceptance criteria 1-10. Run with ``pytest tests/test_acceptance.py -s``
to see one PASS/FAIL line per criterion."""

import subprocess
import sys
import warnings

import pytest

from hypergamma import applications as app
from hypergamma import constants as cst
from hypergamma import gammafn as gf
from hypergamma import suites
from hypergamma.errors import AccuracyWarning
from hypergamma.residuals import residual


def _worst(records, metric):
    return max((getattr(r, metric) for r in records), default=float("nan"))


def report(capsys, number, title, checks):
    """checks: list of (label, records, metric, limit). Bounds use their passed flag."""
    ok = True
    parts = []
    for label, records, metric, limit in checks:
        assert records, f"criterion {number}: no records for {label}"
        if metric == "bound":
            good = all(r.passed for r in records)
            parts.append(f"{label} n={len(records)} {'ok' if good else 'violated'}")
        else:
            worst = _worst(records, metric)
            good = worst <= limit
            parts.append(f"{label} n={len(records)} max={worst:.2e}<={limit:.0e}")
        ok &= good
    with capsys.disabled():
        print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'} {title}: " + "; ".join(parts))
    return ok


def test_criterion_01_constants_cross_method(capsys):
    agree = cst.method_agreement(range(2, 17))
    vs_pi = [residual(f"pi_2[{m.value}]", cst.pi_n(2, m).value, 3.141592653589793) for m in cst.Method]
    assert report(
        capsys, 1, "pi_n methods agree, pi_2 = pi",
        [("pairwise rel", agree, "rel_residual", 1e-11), ("pi_2 abs", vs_pi, "abs_residual", 1e-13)],
    )


def test_criterion_02_halving(capsys):
    res = gf.halving_residuals(range(2, 13))
    assert report(capsys, 2, "halving formula", [("abs", res, "abs_residual", 1e-11)])


def test_criterion_03_nested_radicals(capsys):
    res = gf.dyadic_residuals(range(1, 6))
    assert report(capsys, 3, "dyadic Gamma routes", [("rel", res, "rel_residual", 1e-10)])


def test_criterion_04_closed_forms(capsys):
    res = gf.closed_form_residuals()
    families = {r.name.split("[")[0] for r in res}
    assert {"closed.one_third", "closed.three_quarters", "closed.one_sixth", "closed.division"} <= families
    assert report(capsys, 4, "closed-form family", [("rel", res, "rel_residual", 1e-10)])


def test_criterion_05_auxiliary(capsys):
    res = gf.auxiliary_residuals(8, 8)
    assert report(capsys, 5, "auxiliary constants", [("abs", res, "abs_residual", 1e-10)])


def test_criterion_06_elastica(capsys):
    products = cst.curva_elastica_products(range(1, 9))
    quarter = [r for r in products if r.name == "elastica_product[n=2]"]
    assert abs(quarter[0].rhs - 0.7853981633974483) < 1e-16
    assert report(
        capsys, 6, "curva elastica products",
        [("abs", products, "abs_residual", 1e-11), ("n=2 is pi/4", quarter, "abs_residual", 1e-11)],
    )


def test_criterion_07_gamma_suite(capsys):
    fe = gf.functional_equation_residuals(suites.FUNCTIONAL_EQUATION_GRID)
    assert len(fe) == 50
    rec, bnd, integ = [], [], []
    for s in (0.5, 1.0, 1.5, 2.5):
        for order in range(4):
            rec.append(gf.derivative_recurrence_residual(order, s))
            bnd.append(gf.boundary_term_residual(order, s))
            integ.append(gf.derivative_integral_residual(order, s))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AccuracyWarning)
        series = [r for s in (0.1, 0.2) for r in gf.shifted_series_residuals(s, 5) if "within_remainder" in r.name]
    assert report(
        capsys, 7, "Gauss-integral suite",
        [
            ("functional equation rel", fe, "rel_residual", 1e-11),
            ("derivative recurrence", rec, "abs_residual", 1e-9),
            ("boundary term", bnd, "abs_residual", 1e-9),
            ("boundary integral", integ, "abs_residual", 1e-9),
            ("series within bound", series, "bound", None),
        ],
    )


def test_criterion_08_trig_suite(capsys):
    trips = suites.round_trip_residuals()
    rot = suites.rotation_residuals(42)
    rotation = [r for r in rot if not r.name.startswith("trig.euler")]
    euler = [r for r in rot if r.name.startswith("trig.euler")]
    cases = {r.name.split("]")[0] for r in rotation if r.name.startswith("rotation[")}
    assert len(cases) == 4
    assert sum(r.name.startswith("rotation[") for r in rotation) == 80
    assert report(
        capsys, 8, "hyperelliptic trig suite",
        [
            ("round trip", trips, "abs_residual", 1e-11),
            ("rotation identity", rotation, "abs_residual", 1e-9),
            ("cos + i sin", euler, "abs_residual", 1e-12),
        ],
    )


def test_criterion_09_applications(capsys):
    sv = app.singular_value_suite()
    singular = [r for r in sv if r.name.startswith("singular_value")]
    eq_agm = [r for r in sv if r.name.startswith("agm_singular")]
    agm = [r for r in app.agm_identity_suite() if r.name.startswith("agm[")]
    ellipse = [r for r in app.superellipse_residuals() if r.name.startswith("superellipse.gamma_vs_radical")]
    ratio = [r for r in app.zeta_ratio_suite() if r.name.startswith("zeta_ratio[s=3/4]")]
    poly = app.polygamma_identity_checks()
    assert (len(singular), len(eq_agm), len(agm), len(ellipse), len(ratio), len(poly)) == (6, 6, 3, 5, 1, 3)
    assert report(
        capsys, 9, "applications suite",
        [
            ("singular values", singular, "abs_residual", 1e-9),
            ("AGM identities", agm, "abs_residual", 1e-9),
            ("AGM at singular moduli", eq_agm, "abs_residual", 1e-9),
            ("superellipse", ellipse, "abs_residual", 1e-9),
            ("zeta ratio", ratio, "abs_residual", 1e-9),
            ("polygamma", poly, "abs_residual", 1e-6),
        ],
    )


def test_criterion_10_determinism(capsys):
    cmd = [sys.executable, "-m", "hypergamma", "verify", "--suite", "all", "--seed", "42", "--format", "json"]
    runs = [subprocess.run(cmd, capture_output=True, timeout=300) for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout and len(runs[0].stdout) > 0
    ok = same and all(r.returncode == 0 for r in runs)
    with capsys.disabled():
        print(
            f"\nACCEPTANCE 10 {'PASS' if ok else 'FAIL'} determinism: "
            f"{len(runs[0].stdout)} bytes, identical={same}, exit codes {[r.returncode for r in runs]}"
        )
    assert ok


@pytest.fixture(autouse=True)
def _quiet():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AccuracyWarning)
        yield
