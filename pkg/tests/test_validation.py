"""The oracle layer itself: reports, quadrature/MC normalization, GOF checks."""

import json
import time

import numpy as np
import pytest

from multivec import (
    BetaParams,
    CheckReport,
    DegenerateWeights,
    ExtendedShape,
    Kotz,
    MvTParams,
    QuadratureFailure,
    ScaleShapeParams,
    jacobian_check,
    jacobian_grid_check,
    logpdf_mv_beta1,
    logpdf_mv_gengamma,
    logpdf_mv_t,
    mc_normalization,
    pushforward_check,
    quad_normalization,
    run_identity_suite,
    sample_mv_beta1,
    sample_mv_gengamma,
)
from multivec.validation import _pushforward_cases, _uncorrected_beta1_logpdf


# ---------------------------------------------------------------------------
# CheckReport


def test_report_invariant_enforced():
    r = CheckReport.build("x", residual=0.5, tolerance=1.0)
    assert r.passed
    with pytest.raises(ValueError):
        CheckReport(name="x", residual=2.0, tolerance=1.0, passed=True)


def test_report_json_lines():
    r = CheckReport.build("norm-foo", residual=1.25e-7, tolerance=1e-5, details="ok")
    line = r.to_json()
    payload = json.loads(line)
    assert payload["name"] == "norm-foo" and payload["passed"] is True
    assert list(payload) == sorted(payload)
    assert r.to_json() == line


# ---------------------------------------------------------------------------
# quadrature normalization


def _gengamma_logpdf(u):
    p = ScaleShapeParams(shapes=(2.0,), scales=(1.0,))
    return logpdf_mv_gengamma(p, Kotz(r=1.0, q=2.0, s=1.5), u)


def test_quad_gengamma_kotz():
    rep = quad_normalization(_gengamma_logpdf, [(0.0, np.inf)], 1e-6, "gg")
    assert rep.passed and rep.residual <= 1e-6


def test_quad_beta1_k2():
    p = BetaParams(shape=ExtendedShape(alphas=(1.0, 2.0), alpha0=1.5), betas=(1.0, 3.0))
    rep = quad_normalization(
        lambda b: logpdf_mv_beta1(p, b), [(0.0, 1.0), (0.0, 1.0)], 1e-5, "b1"
    )
    assert rep.passed and rep.residual <= 1e-5


def test_quad_detects_mis_scaled_density():
    rep = quad_normalization(
        lambda u: _gengamma_logpdf(u) + np.log(2.0), [(0.0, np.inf)], 1e-6, "gg2x"
    )
    assert not rep.passed
    assert abs(rep.residual - 1.0) < 1e-3


def test_quad_failure_is_an_error():
    def broken(u):
        raise FloatingPointError("boom")

    with pytest.raises(QuadratureFailure):
        quad_normalization(broken, [(0.0, 1.0)], 1e-6, "broken")


# ---------------------------------------------------------------------------
# Monte-Carlo normalization


PT = MvTParams(dims=(1, 1), alpha0=1.5, betas=(1.0, 2.5))
_PROP_VAR = 3.0 * np.array([1.0, 2.5])


def _prop_sample(rng, n):
    return rng.normal(0.0, np.sqrt(_PROP_VAR), size=(n, 2))


def _prop_logpdf(x):
    return -0.5 * np.sum(x * x / _PROP_VAR, axis=-1) - 0.5 * np.sum(np.log(2.0 * np.pi * _PROP_VAR))


def test_mc_pass_and_seed_determinism():
    r1 = mc_normalization(lambda x: logpdf_mv_t(PT, x), _prop_sample, _prop_logpdf, 20_000, 3, "mc")
    r2 = mc_normalization(lambda x: logpdf_mv_t(PT, x), _prop_sample, _prop_logpdf, 20_000, 3, "mc")
    assert r1 == r2
    assert r1.passed and r1.residual <= r1.tolerance


def test_mc_detects_mis_scaled_density():
    r = mc_normalization(
        lambda x: logpdf_mv_t(PT, x) + np.log(2.0), _prop_sample, _prop_logpdf, 20_000, 3, "mc2x"
    )
    assert not r.passed


def test_mc_degenerate_proposal():
    def bad_sample(rng, n):
        return rng.normal(50.0, 0.01, size=(n, 2))

    def bad_logpdf(x):
        return -0.5 * np.sum((x - 50.0) ** 2 / 1e-4, axis=-1) - np.log(2.0 * np.pi * 1e-4)

    with pytest.raises(DegenerateWeights):
        mc_normalization(lambda x: logpdf_mv_t(PT, x), bad_sample, bad_logpdf, 5_000, 0, "bad")


# ---------------------------------------------------------------------------
# Jacobian checks for the ball-to-space map y = (1-||x||^2)^{-1/2} x


def test_jacobian_mc_check():
    for n in (1, 2):
        rep = jacobian_check(n, n_draws=50_000, seed=0)
        assert rep.passed, rep.details


def test_jacobian_grid_check():
    rep = jacobian_grid_check()
    assert rep.passed and rep.residual < 1e-3


def test_identity_suite_fast_mode():
    reports = run_identity_suite(seed=0, n_draws=20_000)
    assert reports and all(r.passed for r in reports)
    # rerun must reproduce byte-identical lines
    again = run_identity_suite(seed=0, n_draws=20_000)
    assert [r.to_json() for r in reports] == [r.to_json() for r in again]


# ---------------------------------------------------------------------------
# pushforward goodness of fit


def test_pushforward_gengamma_passes():
    p = ScaleShapeParams(shapes=(1.5, 2.5), scales=(1.0, 0.5))
    spec = Kotz(r=0.8, q=1.3, s=1.0)
    rep = pushforward_check(
        lambda rng, n: sample_mv_gengamma(p, spec, rng, size=n),
        lambda u: logpdf_mv_gengamma(p, spec, u),
        [(0.0, np.inf), (0.0, np.inf)],
        n_draws=20_000, seed=0, name="gg",
    )
    assert rep.passed, rep.details


def test_pushforward_discriminates_wrong_exponent():
    # the same sampler must reject the density variant whose (1-b_i) exponent
    # drops the alpha0 term; this is the arbiter for the corrected formula
    p = BetaParams(shape=ExtendedShape(alphas=(1.0, 1.5), alpha0=2.0), betas=(1.0, 2.0))
    box = [(0.0, 1.0), (0.0, 1.0)]
    good = pushforward_check(
        lambda rng, n: sample_mv_beta1(p, rng, size=n),
        lambda b: logpdf_mv_beta1(p, b), box, n_draws=20_000, seed=0, name="ok",
    )
    bad = pushforward_check(
        lambda rng, n: sample_mv_beta1(p, rng, size=n),
        lambda b: _uncorrected_beta1_logpdf(p, b), box, n_draws=20_000, seed=0, name="bad",
    )
    assert good.passed
    assert not bad.passed


def test_pushforward_smoke_mode_speed():
    cases = _pushforward_cases(1_000)
    # warm one call so library startup cost is not billed to a family
    _, sampler0, logpdf0, support0 = cases[0]
    pushforward_check(sampler0, logpdf0, support0, n_draws=1_000, seed=0, name="warm")
    for name, sampler, logpdf, support in cases:
        t0 = time.perf_counter()
        pushforward_check(sampler, logpdf, support, n_draws=1_000, seed=0, name=name)
        assert time.perf_counter() - t0 < 1.0, name
