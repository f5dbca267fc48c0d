"""
Levels that appear and vanish on the unit circle
================================================

For q = exp(i w) the l = 1 admissibility depends on cos w.  Scan w and
print where levels split, merge or disappear.
"""

import math

import numpy as np

from suqosc import CasimirKind, DeformationParameter
from suqosc.casimir import classification_boundary
from suqosc.spectrum import energy

# Where the classification changes, found by bisection in cos w
print("C_q   boundaries:", classification_boundary(1, CasimirKind.CQ, -0.9, -0.55), classification_boundary(1, CasimirKind.CQ, -0.45, -0.1))
print("C'_q  boundaries:", classification_boundary(1, CasimirKind.CQ_PRIME, -0.3, -0.05), classification_boundary(1, CasimirKind.CQ_PRIME, -0.05, 0.3))
print("exact:", (-7 - math.sqrt(17)) / 16, (-7 + math.sqrt(17)) / 16, -1 / 8, 0.0)

# A coarse scan of the l = 1 levels
for w in np.linspace(0.2, 3.0, 15):
    p = DeformationParameter.circle(w)
    row = []
    for kind in CasimirKind:
        levels = energy(0, 1, kind, p)
        row.append(" ".join(f"{lev.branch.value}={lev.energy:.3f}" for lev in levels) or "none")
    print(f"w={w:.2f} cos={math.cos(w):+.3f} | Cq: {row[0]:<32} | C'q: {row[1]}")
