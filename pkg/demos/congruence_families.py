"""
Congruence decisions along displacement families
================================================

Kind I orbits displaced by Exp(bB + JT + W + yZ) are congruent exactly
when the reduced displacement rho(-b/2)|T| agrees; the W and y parts
are absorbed by the subgroup action.  The sweep below moves (b, |T|)
along a level set of that invariant and watches the decision flip the
moment the level changes.
"""

import numpy as np

from crorbits import (
    GroupElement,
    OrbitQuery,
    SubalgebraSpec,
    congruence_key,
    congruent_orbits,
    reduced_displacement,
    rho,
    structured_xi,
)

spec = SubalgebraSpec("R", 0, 1, 3)

IOTA = 0.45

print(f"level set rho(-b/2)|T| = {IOTA}")
print(f"{'b':>6} {'|T|':>10} {'key scalar':>12} {'congruent to b=0':>18}")
base = OrbitQuery(spec, GroupElement(structured_xi(spec, T=[IOTA])))
for b in np.linspace(-1.5, 1.5, 7):
    t = IOTA / rho(-b / 2.0)
    q = OrbitQuery(
        spec,
        GroupElement(structured_xi(spec, b=float(b), T=[t], W=[0.3, -0.2], y=0.8)),
    )
    key = congruence_key(spec, q.g)
    print(f"{b:6.2f} {t:10.6f} {key.scalars[0]:12.8f} {congruent_orbits(base, q)!s:>18}")

print()
print("breaking the level set:")
for t in (0.30, 0.45, 0.60):
    q = OrbitQuery(spec, GroupElement(structured_xi(spec, T=[t])))
    verdict = congruent_orbits(base, q)
    print(f"  |T| = {t:4.2f} at b = 0: reduced displacement {reduced_displacement(0.0, t):.6f}, congruent {verdict}")

# kind III keys carry two scalars, the slice norm and |y|; the y sign is a
# reflection symmetry
spec3 = SubalgebraSpec("AR", 0, 1, 3)
up = OrbitQuery(spec3, GroupElement(structured_xi(spec3, W=[0.6, 0.0], y=0.8)))
down = OrbitQuery(spec3, GroupElement(structured_xi(spec3, W=[0.0, 0.6], y=-0.8)))
print()
print(f"kind III reflection pair congruent: {congruent_orbits(up, down)}")
