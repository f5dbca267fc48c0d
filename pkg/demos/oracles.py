"""
Checking the radial solutions and the algebra
=============================================

Independent checks: quadrature of the wave functions, the radial
equation residual, and the su_q(2) relations on monomials.
"""

import math

from suqosc import CasimirKind, DeformationParameter
from suqosc.algebra import commutator_residuals
from suqosc.casimir import casimir_eigenvalue
from suqosc.quadrature import QuadratureMethod, QuadratureSpec
from suqosc.radial import RadialState, normalization_integral, ode_residual, r2_integral
from suqosc.spectrum import energy

# Both quadrature rules on the minus-branch state, which is singular at r = 0
state = RadialState(3, 0.1)
for method in QuadratureMethod:
    res = normalization_integral(state, QuadratureSpec(method=method))
    print(f"{method.value:>15}: norm={res.value:.15f}  err={res.error:.1e}  evals={res.evaluations}")
print("<r^2> quadrature:", r2_integral(state).value, " closed form:", 2 * 3 + 0.1 + 0.5)

# Every admissible level solves the radial equation
p = DeformationParameter.real(2 * math.log(2))
for l in range(3):
    c = casimir_eigenvalue(l, CasimirKind.CQ, p)
    for lev in energy(1, l, CasimirKind.CQ, p):
        print(f"l={l} {lev.branch.value:>5}: residual {ode_residual(RadialState(1, lev.alpha), lev.energy, c):.1e}")

# [J+, J-] = [2 J3]_q on a few monomials
for s, m in ((1.0, 1), (-0.5, 2), (3.5, -3)):
    r = commutator_residuals(s, m, DeformationParameter.circle(1.2))
    print(f"s={s:+.1f} m={m:+d}: target {r.diag_target:+.6f}  residuals {r.offdiag_max:.1e} {r.diag_err:.1e} {r.j3_err:.1e}")
