"""Which power of (λ - 1) turns a star polynomial into a CSM weight?

For every cone of a few Bergman fans we record the order of vanishing of the
star's psi polynomial at 1 and every exponent e for which psi/(λ-1)^e at 1
equals the beta-invariant weight. Exponent e = dim(cone) works for all cones;
e = dim(cone) - 1 does not.

    python3 demos/04_exponent_ledger.py
"""

from tropcsm import fano, graphic, uniform, weight_ledger
from tropcsm.csm import exponent_summary

MATROIDS = {"U23": uniform(2, 3), "U34": uniform(3, 4), "U35": uniform(3, 5),
            "K4": graphic([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), "Fano": fano()}

for name, M in MATROIDS.items():
    ledger = weight_ledger(M)
    print(f"{name}: {len(ledger)} cones")
    seen = set()
    for chain, pw in ledger:
        key = (pw.cone.dim, str(pw.psi), pw.reference)
        if key in seen:
            continue
        seen.add(key)
        print(f"  dim {pw.cone.dim}  psi {str(pw.psi):<22} mult {pw.multiplicity}  "
              f"weight {pw.reference:>3}  working exponents {list(pw.consistent_exponents)}")
    summary = exponent_summary(ledger)
    print("  exponents valid for every cone, by dimension:", summary)
