import math

import pytest

import gstruve


def test_struve_h_reference():
    assert gstruve.struve_h(0, 1) == pytest.approx(0.568656627048287951, abs=1e-14)


def test_f21_reference():
    assert gstruve.f21(1, 0.7, 2.3, -0.6) == pytest.approx(0.858751615385519043, abs=1e-13)


def test_normalized_series_starts_at_one():
    coeffs = gstruve.normalized_n_series(0.5, 1, 1, order=8)
    assert len(coeffs) == 9
    assert coeffs[0] == 1


def test_operator_preserves_normalization_and_recurrence():
    f = [0, 1, 0.3, -0.2j, 0.05]
    g = gstruve.apply_s(0.2, 1, 1, f)
    assert g[0] == 0 and g[1] == 1
    assert gstruve.recurrence_residual(0.2, 1, 1, f) < 1e-12


def test_dominant_closed_form_matches_quadrature():
    z = 0.3 + 0.4j
    q = gstruve.best_dominant_q(1.5, 0.5, -0.25, z)
    h = gstruve.sharp_bound_h(1.5, 0.5, -0.25, z)
    assert abs(q - h) < 1e-12
    assert gstruve.best_dominant_q(1, 1, -1, 0.5) == pytest.approx(4 * math.log(2) - 1, abs=1e-13)


def test_bounds():
    lo, hi = gstruve.re_bounds(1, 0.5, 0.25)
    assert lo == pytest.approx(0.849271710192876290, abs=1e-12)
    assert hi == pytest.approx(1.107425794743160977, abs=1e-12)
    lo, hi = gstruve.re_bounds(1, 1, -1)
    assert math.isinf(hi)
    assert gstruve.radius_positivity(1, 1, 1) == pytest.approx(math.sqrt(2) - 1, abs=1e-14)


def test_membership():
    kw = dict(lambda_=0.1, mu=0.5, p=0.5, b=1, c=1, A=1, B=-1)
    assert gstruve.membership_test([0, 1], **kw)["passed"]
    bad = dict(kw, lambda_=10)
    v = gstruve.membership_test([0, 1, 8], **bad)
    assert not v["passed"]
    assert v["witness"] is not None


def test_errors_raise():
    with pytest.raises(gstruve.GstruveError):
        gstruve.normalized_n_series(-2, 0, 1)
    with pytest.raises(ValueError):
        gstruve.run_suite("nope")


def test_suite_runs():
    assert "recurrence" in gstruve.suite_names()
    assert gstruve.run_suite("radius", seed=3)["passed"]
