"""
Quadrupole moment of the l = 0 states
=====================================

The moment vanishes at q = 1, so it measures the deformation directly.
Print the curves on both regimes together with the small-w law.
"""

import numpy as np

from suqosc import CasimirKind, Regime, quadrupole_sweep
from suqosc.quadrupole import angular_closed_form, angular_factor_w

# Near w = 0 the literal formula cancels; the series does not
for w in (1e-2, 1e-4, 1e-6):
    print(f"w={w:g}: literal {angular_closed_form(w, Regime.REAL_POSITIVE):+.6e}  stable {angular_factor_w(w, Regime.REAL_POSITIVE):+.6e}  (4/15)w^2 {4 / 15 * w * w:+.6e}")

# Increasing and positive on the real axis, decreasing and negative on the circle
for regime, grid in ((Regime.REAL_POSITIVE, np.linspace(0.25, 3.0, 12)), (Regime.UNIT_CIRCLE, np.linspace(0.25, 2.5, 10))):
    print(f"\n{regime.value}")
    for pt in quadrupole_sweep(grid, 0, CasimirKind.CQ, regime):
        cols = "  ".join(f"{r.branch.value}: Q={r.Q:+.5f}" for r in pt.results)
        print(f"  w={pt.w:.3f}  {cols}")
