"""From three points on a line to their tropical CSM cycles.

U_{2,3} is the matroid of three generic vectors in a plane. This script walks
through its flats and characteristic polynomial, its Bergman fan (a tropical
line with three rays), and both CSM cycles. The origin weight is then
recomputed a second way, from the F_p polynomial of the fan.

    python3 demos/01_u23_walkthrough.py
"""

from tropcsm import bergman_structure, csm_cycle, psi_weight, uniform
from tropcsm.cones import Cone
from tropcsm.csm import psi_polynomial
from tropcsm.matroid import beta_invariant, characteristic_polynomial

M = uniform(2, 3)
print("matroid:", M)
for r, level in enumerate(M.flats()):
    print(f"  flats of rank {r}:", [sorted(f) for f in level])
print("characteristic polynomial:", characteristic_polynomial(M))
print("beta invariant:", beta_invariant(M))

S = bergman_structure(M)
print("\nBergman fan in R^2 (chart x_i - x_0):")
for cone, chain in sorted(S.chains.items(), key=lambda cc: cc[0].rays):
    if cone.dim == 1:
        print(f"  ray {cone.rays[0]} <- flat {sorted(chain[0])}")

for k in (1, 0):
    c = csm_cycle(M, k, S)
    print(f"\ncsm_{k}:")
    for cone, w in c.fan.cones:
        where = "origin" if cone.dim == 0 else f"ray {cone.rays[0]}"
        print(f"  {where}: weight {w}")

print("\nsecond route, from the fan alone:")
print("  psi of the whole fan:", psi_polynomial(S.fan))
pw = psi_weight(S.fan, Cone.make(2))
print(f"  divide by (λ-1)^0 and evaluate at 1: {pw.weight}")
