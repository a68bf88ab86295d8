"""
Density surfaces as plain text
==============================

Builds the paired positive density on a grid (like `multivec grid` does) and
renders a coarse character-cell contour, then shows how the surface tilts as
the generator moves away from Gaussian while the margins stay put.
"""

import numpy as np

from multivec import Kotz, ScaleShapeParams, logpdf_mv_gengamma

SHADES = " .:-=+*#%@"


def ascii_surface(spec, alpha=2.0, beta=2.0, lo=0.1, hi=8.0, steps=33):
    g = np.linspace(lo, hi, steps)
    uu, vv = np.meshgrid(g, g, indexing="ij")
    pts = np.column_stack([uu.ravel(), vv.ravel()])
    base = ScaleShapeParams(shapes=(alpha, beta), scales=(1.0, 1.0))
    with np.errstate(under="ignore"):
        pdf = np.exp(logpdf_mv_gengamma(base, spec, pts)).reshape(steps, steps)
    levels = (pdf / pdf.max() * (len(SHADES) - 1)).astype(int)
    # v runs left-right, u top-bottom (origin at top-left)
    return "\n".join("".join(SHADES[c] for c in row) for row in levels)


print("gaussian generator (independent gamma margins):\n")
print(ascii_surface(Kotz(q=1.0, r=0.5, s=1.0)))

print("\nkotz generator q=3, s=1.4 (same margins' scale, dependent):\n")
print(ascii_surface(Kotz(q=3.0, r=0.5, s=1.4)))

# the numbers behind the pictures: mass along the diagonal vs the axes
base = ScaleShapeParams(shapes=(2.0, 2.0), scales=(1.0, 1.0))
diag = np.array([[2.0, 2.0]])
off = np.array([[0.4, 6.0]])
for label, spec in [("gaussian", Kotz(q=1.0, r=0.5, s=1.0)),
                    ("kotz q=3", Kotz(q=3.0, r=0.5, s=1.4))]:
    ratio = (logpdf_mv_gengamma(base, spec, diag)
             - logpdf_mv_gengamma(base, spec, off))
    print(f"\n{label}: log f(2,2) - log f(0.4,6) = {float(ratio[0]):+.4f}")
print("\nthe non-Gaussian surface concentrates mass where the pair moves")
print("together — that is the dependence a shared generator draw buys")
