"""Two places where a tempting extension of CSM cycles breaks.

First, the tropical surface dual to a square pyramid. Reading psi weights off
its rays gives -1 everywhere, and that 1-skeleton does not balance. Second,
a 6-ray fan in the plane written as a signed sum of Bergman fans in two ways.
Adding up csm_0 over the pieces gives different answers, so csm_0 cannot be
additive over such decompositions.

    python3 demos/02_counterexamples.py
"""

from tropcsm.reproductions import decomposition_discrepancy, unbalanced_hypersurface

r = unbalanced_hypersurface()
d = r["details"]
print("pyramid hypersurface:", d["two_cones"], "two-dimensional cones")
for ray in d["rays"]:
    print(f"  ray {ray['ray']}: psi = {ray['psi']}, weight {ray['weight']}")
bal = d["balance"]
print(f"  balanced: {bal['balanced']}; residual at {bal['witness_face']} is {bal['residual']}")
print("  status:", r["status"])

r = decomposition_discrepancy()
d = r["details"]
print("\nsix-ray fan = B(U23) + crem(B(U23)) - point = lines - 2 point")
print("  indicator sums agree on probes:", d["first_indicator"] == d["second_indicator"])
print("  first decomposition:", d["first"])
print("  second decomposition:", d["second"])
print(f"  csm_0 totals {d['first']['total']}p vs {d['second']['total']}p; status:", r["status"])
