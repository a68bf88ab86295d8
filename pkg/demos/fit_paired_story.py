"""
Dependent vs independent fits of a positive paired sample
=========================================================

Generates pairs whose dependence comes entirely from a shared generator
draw, fits both the dependent and the independent model, and shows (a) the
likelihood gap that detects the shared draw, and (b) the exact flat
direction of the dependent likelihood that makes "converged" a subtler
notion than usual.
"""

import numpy as np

from multivec import (
    Kotz,
    KotzGammaDepParams,
    SampleMatrix,
    ScaleShapeParams,
    SuffStats,
    fit_dependent,
    fit_independent,
    loglik_dependent,
    make_rng,
    sample_mv_gengamma,
)

truth = KotzGammaDepParams(sigma1=1.0, sigma2=2.0, alpha=5.0, beta=8.0,
                           r=0.4, q=1.5, s=1.1)
m = 2000

# one draw of a 2m-block dependent vector, reshaped into m pairs
base = ScaleShapeParams(shapes=(truth.alpha,) * m + (truth.beta,) * m,
                        scales=(truth.sigma1**2,) * m + (truth.sigma2**2,) * m)
flat = np.asarray(sample_mv_gengamma(base, Kotz(q=truth.q, r=truth.r, s=truth.s),
                                     make_rng(2024)))
data = SampleMatrix(np.column_stack([flat[:m], flat[m:]]))

dep = fit_dependent(data)
ind = fit_independent(data)

print(f"m = {m} pairs from alpha={truth.alpha}, beta={truth.beta}")
print(f"  dependent   loglik = {dep.loglik:.3f}  converged={dep.converged}")
print(f"  independent loglik = {ind.loglik:.3f}  converged={ind.converged}")
print(f"  gap = {dep.loglik - ind.loglik:.3f} nats in favor of the shared draw")
print(f"  recovered shapes: alpha = {dep.params['alpha']:.3f}, "
      f"beta = {dep.params['beta']:.3f}")

# --- why converged=False is not a defect here ------------------------------
# the dependent likelihood is EXACTLY constant along
#   (sigma1, sigma2, r) -> (sigma1*sqrt(c), sigma2*sqrt(c), r*c**s)
# walked here from the truth point; the identity holds everywhere
stats = SuffStats.from_matrix(data)
print("\nsliding along the flat direction (loglik should not move):")
for c in (0.5, 1.0, 2.0, 8.0):
    moved = KotzGammaDepParams(
        sigma1=truth.sigma1 * np.sqrt(c), sigma2=truth.sigma2 * np.sqrt(c),
        alpha=truth.alpha, beta=truth.beta,
        r=truth.r * c**truth.s, q=truth.q, s=truth.s,
    )
    print(f"  c = {c:<4} loglik = {loglik_dependent(moved, stats):.9f}")
print("an optimizer on this ridge wanders forever; the identified")
print("quantities are s, q + alpha, and r * sigma**(-2s), plus the shapes")
