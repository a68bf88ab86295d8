"""Oracle layer: normalization, change-of-variables, and pushforward checks.

Every density formula in this package is accepted only if it passes the
checks here: adaptive quadrature of exp(logpdf) over the declared support
(total dimension <= 3), importance-sampled Monte-Carlo normalization for
higher dimensions, the ball-to-space Jacobian identity, and sampler-vs-
density goodness of fit (marginal KS plus 2-d chi-square).  The suite also
carries a discrimination check: a deliberately uncorrected variant of the
beta-I density must FAIL goodness of fit, demonstrating that the corrected
exponent is required and the tests have power.

Reports are deterministic given (inputs, seed) and serialize as JSON lines.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate, stats
from scipy.interpolate import PchipInterpolator

from .core import ExtendedShape, MvEllipticalParams, Partition, ScaleShapeParams
from .densities import (
    BetaParams,
    GammaLogGammaParams,
    JointScaleParams,
    MixedParams,
    MvTParams,
    logpdf_gamma_loggamma,
    logpdf_gengamma_beta1,
    logpdf_gengamma_beta2,
    logpdf_gengamma_pearson2,
    logpdf_gengamma_pearson7,
    logpdf_mixed_ell_logell,
    logpdf_mv_beta1,
    logpdf_mv_beta2,
    logpdf_mv_elliptical,
    logpdf_mv_gengamma,
    logpdf_mv_log_elliptical,
    logpdf_mv_pearson2,
    logpdf_mv_t,
)
from .errors import DegenerateWeights, ParameterOutOfDomain, QuadratureFailure
from .generators import Bessel, GeneratorSpec, Kotz, PearsonII, PearsonVII, radial_integral_identity_check
from .sampling import (
    make_rng,
    sample_gamma_loggamma,
    sample_gengamma_beta1,
    sample_gengamma_beta2,
    sample_gengamma_pearson2,
    sample_gengamma_pearson7,
    sample_mixed_ell_logell,
    sample_mv_beta1,
    sample_mv_beta2,
    sample_mv_elliptical,
    sample_mv_gengamma,
    sample_mv_log_elliptical,
    sample_mv_pearson2,
    sample_mv_t,
    sample_unit_sphere,
)

__all__ = [
    "CheckReport",
    "quad_normalization",
    "mc_normalization",
    "jacobian_check",
    "jacobian_grid_check",
    "pushforward_check",
    "run_normalization_suite",
    "run_identity_suite",
    "run_pushforward_suite",
    "run_all_suites",
]


@dataclass(frozen=True)
class CheckReport:
    """One validation outcome; ``passed`` is always ``residual <= tolerance``."""

    name: str
    residual: float
    tolerance: float
    passed: bool
    details: str = ""

    def __post_init__(self) -> None:
        if self.passed != (self.residual <= self.tolerance):
            raise ValueError("passed must equal (residual <= tolerance)")

    @classmethod
    def build(cls, name: str, residual: float, tolerance: float, details: str = "") -> "CheckReport":
        return cls(
            name=name,
            residual=float(residual),
            tolerance=float(tolerance),
            passed=bool(residual <= tolerance),
            details=details,
        )

    def to_json(self) -> str:
        payload = {
            "details": self.details,
            "name": self.name,
            "passed": self.passed,
            "residual": float(f"{self.residual:.17g}"),
            "tolerance": float(f"{self.tolerance:.17g}"),
        }
        return json.dumps(payload, sort_keys=True)


# ---------------------------------------------------------------------------
# Normalization by nested adaptive quadrature

Interval = tuple[float, float]


def quad_normalization(
    logpdf: Callable[[np.ndarray], np.ndarray],
    support: Sequence[Interval],
    tol: float,
    name: str = "quad-normalization",
) -> CheckReport:
    """Integrate exp(logpdf) over the support box; residual is |I - 1|.

    Nested adaptive quadrature, innermost axis last; limited to total
    dimension 3 (cost grows exponentially and desk scale suffices for
    formula validation).  Raises QuadratureFailure when the quadrature
    itself does not converge; a normalized-but-wrong density is reported
    as a failed check, not an exception.
    """
    d = len(support)
    if not 1 <= d <= 3:
        raise ParameterOutOfDomain(f"quadrature supports 1 <= dims <= 3, got {d}")

    def f(*coords: float) -> float:
        value = np.asarray(logpdf(np.asarray(coords, dtype=float)))
        return math.exp(float(value.reshape(-1)[0]))

    try:
        if d == 1:
            value, err = integrate.quad(
                f, support[0][0], support[0][1], epsabs=tol * 1e-3, epsrel=1e-9, limit=200
            )
        elif d == 2:
            def inner(x0: float) -> float:
                v, _ = integrate.quad(
                    lambda x1: f(x0, x1), support[1][0], support[1][1],
                    epsabs=tol * 1e-3, epsrel=1e-8, limit=120,
                )
                return v

            value, err = integrate.quad(
                inner, support[0][0], support[0][1], epsabs=tol * 1e-2, epsrel=1e-7, limit=120
            )
        else:
            def inner2(x0: float, x1: float) -> float:
                v, _ = integrate.quad(
                    lambda x2: f(x0, x1, x2), support[2][0], support[2][1],
                    epsabs=tol * 1e-2, epsrel=1e-7, limit=60,
                )
                return v

            def inner1(x0: float) -> float:
                v, _ = integrate.quad(
                    lambda x1: inner2(x0, x1), support[1][0], support[1][1],
                    epsabs=tol * 0.1, epsrel=1e-6, limit=50,
                )
                return v

            value, err = integrate.quad(
                inner1, support[0][0], support[0][1], epsabs=tol * 0.3, epsrel=1e-5, limit=50
            )
    except Exception as exc:  # pragma: no cover - scipy failure path
        raise QuadratureFailure(f"{name}: quadrature did not converge: {exc}") from exc
    if not np.isfinite(value) or err > max(tol, 1e-12) * 10.0:
        raise QuadratureFailure(f"{name}: quadrature error estimate {err} too large")
    residual = abs(value - 1.0)
    return CheckReport.build(
        name, residual, tol, details=f"integral={value:.12g} err_est={err:.3g} dims={d}"
    )


# ---------------------------------------------------------------------------
# Normalization by importance sampling


def mc_normalization(
    logpdf: Callable[[np.ndarray], np.ndarray],
    proposal_sampler: Callable[[np.random.Generator, int], np.ndarray],
    proposal_logpdf: Callable[[np.ndarray], np.ndarray],
    n: int,
    seed: int,
    name: str = "mc-normalization",
) -> CheckReport:
    """Importance-sampling estimate of the total mass; passes when |I-1| <= 3 SE."""
    rng = make_rng(seed)
    x = proposal_sampler(rng, n)
    logw = np.asarray(logpdf(x), dtype=float) - np.asarray(proposal_logpdf(x), dtype=float)
    w = np.exp(logw)
    if not np.all(np.isfinite(w)):
        raise DegenerateWeights("non-finite importance weights")
    total = float(np.sum(w))
    total_sq = float(np.sum(w * w))
    ess = total * total / total_sq if total_sq > 0 else 0.0
    if ess < n / 100.0:
        raise DegenerateWeights(
            f"effective sample size {ess:.1f} below {n / 100:.0f}; proposal too far from target"
        )
    estimate = total / n
    se = float(np.std(w, ddof=1)) / math.sqrt(n)
    residual = abs(estimate - 1.0)
    return CheckReport.build(
        name,
        residual,
        3.0 * se,
        details=f"estimate={estimate:.8f} se={se:.3g} ess={ess:.0f} n={n} seed={seed}",
    )


# ---------------------------------------------------------------------------
# Ball-to-space Jacobian identity


def _chi2_quantile_gof(
    values: np.ndarray, cdf: Callable[[np.ndarray], np.ndarray], bins: int
) -> tuple[float, float]:
    """Equal-probability-bin chi-square GOF; returns (statistic, p-value)."""
    n = values.size
    probs = np.linspace(0.0, 1.0, bins + 1)
    u = np.asarray(cdf(values), dtype=float)
    counts, _ = np.histogram(u, bins=probs)
    expected = n / bins
    stat = float(np.sum((counts - expected) ** 2) / expected)
    return stat, float(stats.chi2.sf(stat, df=bins - 1))


def jacobian_check(n: int, n_draws: int = 100_000, seed: int = 0) -> CheckReport:
    """Verify the unit-ball to whole-space volume-element identity by MC.

    x uniform in the unit n-ball is pushed through y = (1 - ||x||^2)^{-1/2} x.
    Under the claimed volume element (dy) = (1 - ||x||^2)^{-(n/2+1)} (dx),
    the squared norm ||y||^2 must follow BetaPrime(n/2, 1); a chi-square GOF
    with equal-probability bins arbitrates (p > 0.001).  The inverse map
    round-trip is asserted to 1e-12 alongside.
    """
    if n < 1:
        raise ParameterOutOfDomain(f"dimension must be >= 1, got {n}")
    rng = make_rng(seed)
    radius = rng.uniform(0.0, 1.0, size=n_draws) ** (1.0 / n)
    direction = sample_unit_sphere(n, rng, size=n_draws)
    x = radius[:, None] * direction
    sq = np.sum(x * x, axis=1)
    y = x / np.sqrt(1.0 - sq)[:, None]
    # round-trip through the algebraic inverse
    y_sq = np.sum(y * y, axis=1)
    x_back = y / np.sqrt(1.0 + y_sq)[:, None]
    round_trip = float(np.max(np.abs(x_back - x)))
    if round_trip > 1e-12:
        raise AssertionError(f"inverse-map round trip error {round_trip}")
    dist = stats.betaprime(a=n / 2.0, b=1.0)
    stat, p = _chi2_quantile_gof(y_sq, dist.cdf, bins=20)
    return CheckReport.build(
        f"jacobian-ball-map-n{n}",
        1.0 - p,
        1.0 - 0.001,
        details=f"chi2={stat:.2f} p={p:.5f} n_draws={n_draws} seed={seed} roundtrip={round_trip:.2e}",
    )


def jacobian_grid_check(grid_points: int = 201) -> CheckReport:
    """1-d cross-check of the same Jacobian against central differences.

    For n = 1 the map is y = x (1-x^2)^{-1/2} and the claimed volume factor
    is (1-x^2)^{-3/2}; a numerical dy/dx must match it to 1e-3 in sup norm.
    """
    x = np.linspace(-0.9, 0.9, grid_points)
    h = 1e-6
    y = lambda t: t / np.sqrt(1.0 - t * t)
    dy_num = (y(x + h) - y(x - h)) / (2.0 * h)
    dy_formula = (1.0 - x * x) ** -1.5
    residual = float(np.max(np.abs(dy_num - dy_formula)))
    return CheckReport.build(
        "jacobian-1d-grid", residual, 1e-3, details=f"grid={grid_points} sup-norm vs central diff"
    )


# ---------------------------------------------------------------------------
# Sampler-vs-density goodness of fit


def _tensor_pdf(
    logpdf: Callable[[np.ndarray], np.ndarray],
    grids: list[np.ndarray],
) -> np.ndarray:
    mesh = np.meshgrid(*grids, indexing="ij")
    flat = np.column_stack([m.ravel() for m in mesh])
    vals = np.asarray(logpdf(flat), dtype=float).reshape(mesh[0].shape)
    with np.errstate(over="ignore"):
        return np.exp(vals)


def _marginal_cdfs(
    pdf_grid: np.ndarray, grids: list[np.ndarray]
) -> list[PchipInterpolator]:
    """Per-axis CDF interpolants from a tensor pdf, each normalized on its box."""
    d = pdf_grid.ndim
    out = []
    for axis in range(d):
        marg = pdf_grid
        for other in sorted(set(range(d)) - {axis}, reverse=True):
            marg = integrate.simpson(marg, x=grids[other], axis=other)
        cdf = integrate.cumulative_simpson(marg, x=grids[axis], initial=0.0)
        cdf /= cdf[-1]
        cdf = np.maximum.accumulate(np.clip(cdf, 0.0, 1.0))
        # PCHIP needs strictly increasing data on the support of the margin
        keep = np.concatenate([[True], np.diff(cdf) > 0]) | np.concatenate(
            [np.diff(cdf) > 0, [True]]
        )
        out.append(PchipInterpolator(grids[axis][keep], cdf[keep]))
    return out


def _snap_edges(grid: np.ndarray, quantiles: np.ndarray) -> np.ndarray:
    """Indices of quantile-like cell edges snapped to grid nodes, box ends included."""
    idx = np.clip(np.searchsorted(grid, quantiles), 1, grid.size - 2)
    return np.unique(np.concatenate([[0], idx, [grid.size - 1]]))


def _cell_probabilities(
    pdf01: np.ndarray, gx: np.ndarray, gy: np.ndarray,
    ix: np.ndarray, iy: np.ndarray,
) -> np.ndarray:
    """Rectangle probabilities between grid-node edges, by exact CDF differences."""
    cdf = integrate.cumulative_simpson(pdf01, x=gx, initial=0.0, axis=0)
    cdf = integrate.cumulative_simpson(cdf, x=gy, initial=0.0, axis=1)
    corner = cdf[np.ix_(ix, iy)]
    cells = corner[1:, 1:] - corner[:-1, 1:] - corner[1:, :-1] + corner[:-1, :-1]
    return np.maximum(cells, 0.0) / cdf[-1, -1]


def pushforward_check(
    sampler: Callable[[np.random.Generator, int], np.ndarray],
    logpdf: Callable[[np.ndarray], np.ndarray],
    support: Sequence[Interval],
    n_draws: int = 100_000,
    seed: int = 0,
    name: str = "pushforward",
    grid_points: int | None = None,
    chi2_bins: int = 6,
) -> CheckReport:
    """Draws vs density: KS per scalar margin (p > 0.01) and, for two or more
    dimensions, chi-square on the leading 2-d histogram (p > 0.001).

    Marginal CDFs come from Simpson integration of exp(logpdf) on a tensor
    grid over a box that covers the sample with padding; the residual is the
    worst threshold shortfall, so 0 means every sub-check passed.
    """
    rng = make_rng(seed)
    x = np.atleast_2d(np.asarray(sampler(rng, n_draws), dtype=float))
    d = x.shape[1]
    if d != len(support):
        raise ParameterOutOfDomain(f"support has {len(support)} dims, sample has {d}")
    if d > 3:
        raise ParameterOutOfDomain("pushforward grids limited to 3 dims")
    if grid_points is None:
        # CDF bias must stay well under the KS resolution ~ 1/sqrt(n_draws)
        grid_points = {1: 2001, 2: 641, 3: 161}[d]

    grids = []
    for j, (lo, hi) in enumerate(support):
        smin, smax = float(np.min(x[:, j])), float(np.max(x[:, j]))
        span = max(smax - smin, 1e-6)
        # stay strictly inside open support edges: densities may reject the boundary
        glo = smin - 0.1 * span
        if glo <= lo:
            glo = 0.5 * (lo + smin)
        ghi = smax + 0.1 * span
        if ghi >= hi:
            ghi = 0.5 * (hi + smax)
        if lo >= 0.0 and not np.isfinite(hi):
            # positive axes concentrate near 0 with power tails: resolve both
            # ends with geometric spacing instead of a uniform grid
            grids.append(np.geomspace(glo, ghi, grid_points))
        else:
            grids.append(np.linspace(glo, ghi, grid_points))

    pdf_grid = _tensor_pdf(logpdf, grids)
    cdfs = _marginal_cdfs(pdf_grid, grids)

    ks_ps = []
    for j in range(d):
        interp, g = cdfs[j], grids[j]
        res = stats.kstest(
            x[:, j],
            lambda v, interp=interp, g=g: np.clip(interp(np.clip(v, g[0], g[-1])), 0.0, 1.0),
        )
        ks_ps.append(float(res.pvalue))

    chi2_p = None
    if d >= 2:
        pdf01 = pdf_grid
        for other in range(d - 1, 1, -1):
            pdf01 = integrate.simpson(pdf01, x=grids[other], axis=other)
        qs = np.linspace(0.0, 1.0, chi2_bins + 1)[1:-1]
        ix = _snap_edges(grids[0], np.quantile(x[:, 0], qs))
        iy = _snap_edges(grids[1], np.quantile(x[:, 1], qs))
        probs = _cell_probabilities(pdf01, grids[0], grids[1], ix, iy)
        counts, _, _ = np.histogram2d(x[:, 0], x[:, 1], bins=[grids[0][ix], grids[1][iy]])
        expected = n_draws * probs
        mask = expected > 1e-9
        stat = float(np.sum((counts[mask] - expected[mask]) ** 2 / expected[mask]))
        dof = int(mask.sum()) - 1
        chi2_p = float(stats.chi2.sf(stat, df=dof))

    shortfalls = [max(0.0, 0.01 - p) for p in ks_ps]
    if chi2_p is not None:
        shortfalls.append(max(0.0, 0.001 - chi2_p))
    residual = max(shortfalls)
    details = (
        f"ks_p={['%.4f' % p for p in ks_ps]}"
        + (f" chi2_p={chi2_p:.5f}" if chi2_p is not None else "")
        + f" n={n_draws} seed={seed}"
    )
    return CheckReport.build(name, residual, 0.0, details=details)


# ---------------------------------------------------------------------------
# Family registry for the suites

_GAUSS = Kotz(q=1.0, r=0.5, s=1.0)
_INF = math.inf


def _flatten_pair_sampler(fn, p):
    def sampler(rng: np.random.Generator, n: int) -> np.ndarray:
        s0, blocks = fn(p, rng, size=n)
        return np.column_stack([np.asarray(s0), np.atleast_2d(blocks)])

    return sampler


def _pair_logpdf(fn, p):
    def logpdf(x: np.ndarray) -> np.ndarray:
        x = np.atleast_2d(x)
        return fn(p, x[:, 0], x[:, 1:])

    return logpdf


def _uncorrected_beta1_logpdf(p: BetaParams, b: np.ndarray) -> np.ndarray:
    """Beta-I variant whose (1-b_i) exponent omits the alpha0 contribution.

    This is the formula with the transcription slip kept in place: the
    discrimination check requires it to fail goodness of fit, proving the
    corrected exponent is load-bearing.
    """
    corrected = logpdf_mv_beta1(p, b)
    b2 = np.atleast_2d(np.asarray(b, dtype=float))
    inside = np.all((b2 > 0) & (b2 < 1), axis=-1)
    with np.errstate(divide="ignore", invalid="ignore"):
        extra = np.where(inside, p.shape.alpha0 * np.sum(np.log1p(-b2), axis=-1), 0.0)
    out = corrected + extra
    return out if np.asarray(b).ndim > 1 else np.squeeze(out)


def _normalization_cases() -> list[tuple[str, Callable, list[Interval], float]]:
    part2 = Partition(dims=(2,))
    gauss2 = MvEllipticalParams(
        partition=part2, mus=(np.zeros(2),), sigmas=(np.eye(2),)
    )
    pvii1 = MvEllipticalParams(
        partition=Partition(dims=(1,)), mus=(np.zeros(1),), sigmas=(np.eye(1),)
    )
    logell1 = MvEllipticalParams(
        partition=Partition(dims=(1,)), mus=(np.array([0.2]),), sigmas=(np.array([[0.8]]),)
    )
    mixedp = MixedParams(
        base=MvEllipticalParams(
            partition=Partition(dims=(1, 1)),
            mus=(np.array([0.1]), np.array([-0.3])),
            sigmas=(np.array([[1.0]]), np.array([[0.5]])),
        ),
        k1=1,
    )
    mvt = MvTParams(dims=(1, 1), alpha0=1.6, betas=(1.0, 2.5))
    mvp2 = MvTParams(dims=(1, 1), alpha0=1.3, betas=(1.2, 0.7))
    geng = ScaleShapeParams(shapes=(2.0, 1.3), scales=(1.0, 0.6))
    beta_p = BetaParams(shape=ExtendedShape(alphas=(1.0, 2.0), alpha0=1.5), betas=(1.0, 3.0))
    beta2_p = BetaParams(shape=ExtendedShape(alphas=(1.4, 1.1), alpha0=2.2), betas=(1.0, 0.8))
    p7_2 = JointScaleParams(spec=_GAUSS, alpha0=1.5, sigma2s=(1.0, 0.8), dims=(1,))
    p2_2 = JointScaleParams(spec=_GAUSS, alpha0=1.8, sigma2s=(0.9, 1.1), dims=(1,))
    gb1_2 = JointScaleParams(spec=_GAUSS, alpha0=1.4, sigma2s=(1.0, 0.7), alphas=(1.2,))
    beta1_3 = BetaParams(shape=ExtendedShape(alphas=(1.0, 2.0, 1.5), alpha0=2.0), betas=(1.0, 1.0, 1.0))
    gb2_2 = JointScaleParams(
        spec=PearsonVII(r=2.0, q=4.5), alpha0=1.3, sigma2s=(1.0, 0.9), alphas=(1.1,)
    )
    glg = GammaLogGammaParams(spec=_GAUSS, alphas=(1.5,), sigma2s=(0.9,), rhos=(2.0,), delta2s=(1.2,))
    kotz1 = ScaleShapeParams(shapes=(2.0,), scales=(1.0,))

    box = 9.0
    return [
        ("norm-mv-elliptical-gaussian-2d",
         lambda x: logpdf_mv_elliptical(gauss2, _GAUSS, x),
         [(-box, box), (-box, box)], 1e-8),
        ("norm-mv-elliptical-pearson7-1d",
         lambda x: logpdf_mv_elliptical(pvii1, PearsonVII(r=3.0, q=2.2), x),
         [(-_INF, _INF)], 1e-5),
        ("norm-log-elliptical-1d",
         lambda x: logpdf_mv_log_elliptical(logell1, _GAUSS, x),
         [(0.0, _INF)], 1e-5),
        ("norm-mixed-1p1",
         lambda x: logpdf_mixed_ell_logell(mixedp, _GAUSS, x[..., :1], x[..., 1:]),
         [(-box, box), (0.0, _INF)], 1e-5),
        ("norm-mv-t-k2",
         lambda x: logpdf_mv_t(mvt, x),
         [(-_INF, _INF), (-_INF, _INF)], 1e-5),
        ("norm-mv-pearson2-k2",
         lambda x: logpdf_mv_pearson2(mvp2, x),
         [(-1.0, 1.0), (-1.0, 1.0)], 1e-5),
        ("norm-mv-gengamma-kotz-k1",
         lambda x: logpdf_mv_gengamma(kotz1, Kotz(q=1.0, r=2.0, s=1.5), x),
         [(0.0, _INF)], 1e-6),
        ("norm-mv-gengamma-k2",
         lambda x: logpdf_mv_gengamma(geng, Kotz(q=0.8, r=1.0, s=1.2), x),
         [(0.0, _INF), (0.0, _INF)], 1e-5),
        ("norm-mv-beta1-k2",
         lambda x: logpdf_mv_beta1(beta_p, x),
         [(0.0, 1.0), (0.0, 1.0)], 1e-5),
        ("norm-mv-beta2-k2",
         lambda x: logpdf_mv_beta2(beta2_p, x),
         [(0.0, _INF), (0.0, _INF)], 1e-5),
        ("norm-gengamma-pearson7-k1",
         _pair_logpdf(logpdf_gengamma_pearson7, p7_2),
         [(0.0, _INF), (-_INF, _INF)], 1e-4),
        ("norm-mv-beta1-k3-3d",
         lambda x: logpdf_mv_beta1(beta1_3, x),
         [(0.0, 1.0), (0.0, 1.0), (0.0, 1.0)], 1e-4),
        ("norm-gengamma-pearson2-k1",
         _pair_logpdf(logpdf_gengamma_pearson2, p2_2),
         [(0.0, _INF), (-1.0, 1.0)], 1e-4),
        ("norm-gengamma-beta1-k1",
         _pair_logpdf(logpdf_gengamma_beta1, gb1_2),
         [(0.0, _INF), (0.0, 1.0)], 1e-4),
        ("norm-gengamma-beta2-k1",
         _pair_logpdf(logpdf_gengamma_beta2, gb2_2),
         [(0.0, _INF), (0.0, _INF)], 1e-4),
        ("norm-gamma-loggamma-1p1",
         lambda x: logpdf_gamma_loggamma(glg, x[..., :1], x[..., 1:]),
         [(0.0, _INF), (-_INF, _INF)], 1e-4),
    ]


def run_normalization_suite(seed: int = 0) -> list[CheckReport]:
    """Quadrature normalization for every family at total dims <= 3."""
    reports = [
        quad_normalization(logpdf, support, tol, name=name)
        for name, logpdf, support, tol in _normalization_cases()
    ]
    # MC fallback: heavy-tailed t with a deliberately wider Gaussian proposal
    mvt = MvTParams(dims=(1, 1), alpha0=1.5, betas=(1.0, 2.5))
    cov = np.diag([3.0 * b for b in mvt.betas])  # 3x the t variance (E[t_i^2] = beta_i)

    def prop_sample(rng: np.random.Generator, n: int) -> np.ndarray:
        return rng.multivariate_normal(np.zeros(2), cov, size=n)

    prop = stats.multivariate_normal(mean=np.zeros(2), cov=cov)
    reports.append(
        mc_normalization(
            lambda x: logpdf_mv_t(mvt, x),
            prop_sample,
            prop.logpdf,
            n=1_000_000,
            seed=seed,
            name="norm-mc-mv-t-k2",
        )
    )
    return reports


def run_identity_suite(seed: int = 0, n_draws: int = 100_000) -> list[CheckReport]:
    """Radial-integral identity across the generator grid plus the Jacobian checks."""
    reports: list[CheckReport] = []
    grid: list[tuple[str, GeneratorSpec]] = [
        ("kotz-gauss", Kotz(q=1.0, r=0.5, s=1.0)),
        ("kotz", Kotz(q=1.5, r=2.0, s=0.8)),
        ("pearson7", PearsonVII(r=1.0, q=3.0)),
        ("pearson2", PearsonII(q=1.5)),
        ("bessel", Bessel(r=1.0, q=0.3)),
    ]
    for label, spec in grid:
        for n in (1.0, 2.0, 3.0, 4.5):
            if isinstance(spec, PearsonVII) and spec.q <= n / 2.0:
                continue
            if isinstance(spec, Bessel) and not (-n / 2.0 < spec.q < n + 1.0):
                continue
            if isinstance(spec, Kotz) and 2.0 * spec.q + n <= 2.0:
                continue
            for a in (1.0, 2.5):
                residual = radial_integral_identity_check(spec, n, a)
                reports.append(
                    CheckReport.build(
                        f"identity-radial-integral-{label}-n{n:g}-a{a:g}", residual, 1e-6,
                        details="kernel moment integral vs closed-form normalizer",
                    )
                )
    for n in (1, 2, 3):
        for s in range(3):
            reports.append(jacobian_check(n, n_draws=n_draws, seed=seed + 10 * n + s))
    reports.append(jacobian_grid_check())
    return reports


def _pushforward_cases(n_draws: int):
    part2 = Partition(dims=(2,))
    bessel_p = MvEllipticalParams(
        partition=part2, mus=(np.array([0.5, -0.5]),),
        sigmas=(np.array([[1.0, 0.3], [0.3, 0.8]]),),
    )
    logell1 = MvEllipticalParams(
        partition=Partition(dims=(1,)), mus=(np.array([0.2]),), sigmas=(np.array([[0.8]]),)
    )
    mixedp = MixedParams(
        base=MvEllipticalParams(
            partition=Partition(dims=(1, 1)),
            mus=(np.array([0.1]), np.array([-0.3])),
            sigmas=(np.array([[1.0]]), np.array([[0.5]])),
        ),
        k1=1,
    )
    mvt = MvTParams(dims=(1, 1), alpha0=1.6, betas=(1.0, 2.5))
    mvp2 = MvTParams(dims=(1, 1), alpha0=1.3, betas=(1.2, 0.7))
    geng = ScaleShapeParams(shapes=(2.0, 1.3), scales=(1.0, 0.6))
    beta_p = BetaParams(shape=ExtendedShape(alphas=(1.0, 2.0), alpha0=1.5), betas=(1.0, 3.0))
    beta2_p = BetaParams(shape=ExtendedShape(alphas=(1.4, 1.1), alpha0=2.2), betas=(1.0, 0.8))
    p7_2 = JointScaleParams(spec=_GAUSS, alpha0=1.5, sigma2s=(1.0, 0.8), dims=(1,))
    p2_2 = JointScaleParams(spec=_GAUSS, alpha0=1.8, sigma2s=(0.9, 1.1), dims=(1,))
    gb1_2 = JointScaleParams(spec=_GAUSS, alpha0=1.4, sigma2s=(1.0, 0.7), alphas=(1.2,))
    gb2_2 = JointScaleParams(
        spec=PearsonVII(r=2.0, q=4.5), alpha0=1.3, sigma2s=(1.0, 0.9), alphas=(1.1,)
    )
    glg = GammaLogGammaParams(spec=_GAUSS, alphas=(1.5,), sigma2s=(0.9,), rhos=(2.0,), delta2s=(1.2,))
    bessel_spec = Bessel(r=1.0, q=0.3)

    return [
        ("push-mv-elliptical-bessel-2d",
         lambda rng, n: sample_mv_elliptical(bessel_p, bessel_spec, rng, size=n),
         lambda x: logpdf_mv_elliptical(bessel_p, bessel_spec, x),
         [(-_INF, _INF), (-_INF, _INF)]),
        ("push-log-elliptical-1d",
         lambda rng, n: sample_mv_log_elliptical(logell1, _GAUSS, rng, size=n),
         lambda x: logpdf_mv_log_elliptical(logell1, _GAUSS, x),
         [(0.0, _INF)]),
        ("push-mixed-1p1",
         lambda rng, n: sample_mixed_ell_logell(mixedp, _GAUSS, rng, size=n),
         lambda x: logpdf_mixed_ell_logell(mixedp, _GAUSS, x[..., :1], x[..., 1:]),
         [(-_INF, _INF), (0.0, _INF)]),
        ("push-mv-t-k2",
         lambda rng, n: sample_mv_t(mvt, rng, size=n),
         lambda x: logpdf_mv_t(mvt, x),
         [(-_INF, _INF), (-_INF, _INF)]),
        ("push-mv-pearson2-k2",
         lambda rng, n: sample_mv_pearson2(mvp2, rng, size=n),
         lambda x: logpdf_mv_pearson2(mvp2, x),
         [(-1.0, 1.0), (-1.0, 1.0)]),
        ("push-mv-gengamma-k2",
         lambda rng, n: sample_mv_gengamma(geng, Kotz(q=0.8, r=1.0, s=1.2), rng, size=n),
         lambda x: logpdf_mv_gengamma(geng, Kotz(q=0.8, r=1.0, s=1.2), x),
         [(0.0, _INF), (0.0, _INF)]),
        ("push-mv-beta1-k2",
         lambda rng, n: sample_mv_beta1(beta_p, rng, size=n),
         lambda x: logpdf_mv_beta1(beta_p, x),
         [(0.0, 1.0), (0.0, 1.0)]),
        ("push-mv-beta2-k2",
         lambda rng, n: sample_mv_beta2(beta2_p, rng, size=n),
         lambda x: logpdf_mv_beta2(beta2_p, x),
         [(0.0, _INF), (0.0, _INF)]),
        ("push-gengamma-pearson7-k1",
         _flatten_pair_sampler(sample_gengamma_pearson7, p7_2),
         _pair_logpdf(logpdf_gengamma_pearson7, p7_2),
         [(0.0, _INF), (-_INF, _INF)]),
        ("push-gengamma-pearson2-k1",
         _flatten_pair_sampler(sample_gengamma_pearson2, p2_2),
         _pair_logpdf(logpdf_gengamma_pearson2, p2_2),
         [(0.0, _INF), (-1.0, 1.0)]),
        ("push-gengamma-beta1-k1",
         _flatten_pair_sampler(sample_gengamma_beta1, gb1_2),
         _pair_logpdf(logpdf_gengamma_beta1, gb1_2),
         [(0.0, _INF), (0.0, 1.0)]),
        ("push-gengamma-beta2-k1",
         _flatten_pair_sampler(sample_gengamma_beta2, gb2_2),
         _pair_logpdf(logpdf_gengamma_beta2, gb2_2),
         [(0.0, _INF), (0.0, _INF)]),
        ("push-gamma-loggamma-1p1",
         lambda rng, n: sample_gamma_loggamma(glg, rng, size=n),
         lambda x: logpdf_gamma_loggamma(glg, x[..., :1], x[..., 1:]),
         [(0.0, _INF), (-_INF, _INF)]),
    ]


def run_pushforward_suite(seed: int = 0, n_draws: int = 100_000) -> list[CheckReport]:
    """Sampler-vs-density GOF for every family plus the discrimination check."""
    reports: list[CheckReport] = []
    for name, sampler, logpdf, support in _pushforward_cases(n_draws):
        reports.append(
            pushforward_check(
                sampler, logpdf, support, n_draws=n_draws, seed=seed, name=name
            )
        )

    # Discrimination: the beta-I density without the alpha0 exponent term
    # must fail the identical GOF, demonstrating the test has power.
    beta_p = BetaParams(shape=ExtendedShape(alphas=(1.0, 2.0), alpha0=1.5), betas=(1.0, 3.0))
    wrong = pushforward_check(
        lambda rng, n: sample_mv_beta1(beta_p, rng, size=n),
        lambda b: _uncorrected_beta1_logpdf(beta_p, b),
        [(0.0, 1.0), (0.0, 1.0)],
        n_draws=n_draws,
        seed=seed,
        name="push-beta1-uncorrected-exponent-raw",
    )
    reports.append(
        CheckReport.build(
            "discrimination-beta1-uncorrected-exponent",
            0.0 if not wrong.passed else 1.0,
            0.5,
            details=f"uncorrected variant must fail GOF; it reported: {wrong.details}",
        )
    )
    return reports


def run_all_suites(seed: int = 0, n_draws: int = 100_000) -> list[CheckReport]:
    return (
        run_normalization_suite(seed)
        + run_identity_suite(seed, n_draws=n_draws)
        + run_pushforward_suite(seed, n_draws=n_draws)
    )
