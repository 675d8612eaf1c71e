"""The tropical Noether identity on dilated simplices and cubes.

For each polytope P we print the lattice invariants and both sides of

    12 (1 + g) = 2 Vol - 3 Area + 3 Perimeter + sum(tau),

then repeat the right side by counting cells of a staircase triangulation
(tetrahedra, boundary triangles, boundary edge segments).

    python3 demos/03_noether_table.py
"""

from tropcsm import cube, dual_census_check, noether_check, simplex, staircase
from tropcsm.noether import ledgers_agree

header = f"{'polytope':<12}{'g':>4}{'Vol':>6}{'Area':>6}{'Per':>5}{'tau':>5}{'lhs':>6}{'rhs':>6}" \
         f"{'census':>8}  agree"
print(header)
print("-" * len(header))
for name, make, ds in (("simplex", simplex, range(1, 7)), ("cube", cube, range(1, 6))):
    for d in ds:
        P = make(d)
        r = noether_check(P)
        c = dual_census_check(P, staircase(P))
        print(f"{f'{d}*{name}':<12}{r.interior_points:>4}{r.normalized_volume:>6}"
              f"{r.total_facet_area:>6}{r.lattice_perimeter:>5}{sum(r.tau_list):>5}"
              f"{r.lhs:>6}{r.rhs:>6}{c.rhs:>8}  {ledgers_agree(r, c, P)}")
