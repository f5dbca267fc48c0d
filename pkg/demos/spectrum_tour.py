"""
The deformed spectrum at q = 4
==============================

Walk through the level structure at a real deformation parameter and
watch the undeformed shells come back as w shrinks.
"""

import math

from suqosc import CasimirKind, DeformationParameter, enumerate_levels
from suqosc.spectrum import closed_form_energy, degeneracy_report, energy

# q = 4 makes [1/2]_q = 2/5, so the numbers stay readable
p = DeformationParameter.real(2 * math.log(2))

# The l = 0 level of C_q splits into a doublet around 2n + 1
for lev in energy(0, 0, CasimirKind.CQ, p):
    print(f"n=0 l=0 {lev.branch.value:>5}: alpha={lev.alpha:.3f}  E={lev.energy:.3f}")

# The explicit formulas agree with the generic root pipeline
for l in range(4):
    generic = [lev.energy for lev in energy(0, l, CasimirKind.CQ, p)]
    closed = [lev.energy for lev in closed_form_energy(0, l, CasimirKind.CQ, p)]
    print(f"l={l}: generic {generic}  closed {closed}")

# C'_q leaves the l = 0 levels alone
print("C'_q l=0:", [lev.energy for lev in enumerate_levels(10, 3, 0, CasimirKind.CQ_PRIME, p)])

# Shrinking w: the lowest shells collapse back onto 2n + l + 3/2
for w in (1.0, 0.3, 0.05, 1e-8):
    levels = enumerate_levels(5.0, 3, 3, CasimirKind.CQ, DeformationParameter.real(w))
    clusters = degeneracy_report(levels, tol_e=1e-6)
    summary = ", ".join(f"{c[0].energy:.4f}x{len(c)}" for c in clusters)
    print(f"w={w:<6g} {summary}")
