"""Reproductions of the worked examples and counterexamples, as structured checks.

Every check returns a dict with ``name``, ``status`` and ``details``. Status is
``pass`` when the asserted values come out exactly, ``fail`` otherwise, and
``expected-fail`` for counterexamples: there the naive identity is supposed to
break, and the check passes only if it breaks in exactly the documented way.
"""

from .bergman import bergman_fan, parallel_connection_map
from .cones import Cone
from .csm import (csm_cycle, product_check, psi_polynomial, psi_skeleton, psi_weight)
from .fan import WeightedFan, all_faces, degree0, is_balanced
from .matroid import characteristic_polynomial, free, from_bases, uniform
from .noether import (PYRAMID, cube, dual_census_check, hull, hypersurface_fan,
                      ledgers_agree, noether_check, simplex, staircase)
from .polynomial import Polynomial

CREM = ((-1, 0), (0, -1))


def _status(ok, counterexample=False):
    if counterexample:
        return "expected-fail" if ok else "fail"
    return "pass" if ok else "fail"


def _check(name, ok, details, counterexample=False):
    return {"name": name, "status": _status(ok, counterexample), "details": details}


def u23_csm():
    M = uniform(2, 3)
    c0, c1 = csm_cycle(M, 0), csm_cycle(M, 1)
    origin = Cone.make(2)
    rays = {c.rays[0]: w for c, w in c1.fan.cones}
    via_psi = psi_weight(bergman_fan(M), origin).weight
    ok = (degree0(c0.fan) == -1 and via_psi == -1
          and rays == {(1, 1): 1, (-1, 0): 1, (0, -1): 1})
    return _check("U23 CSM cycles", ok, {
        "csm_0_degree": degree0(c0.fan), "csm_0_via_psi": via_psi,
        "csm_1_rays": [{"ray": list(r), "weight": w} for r, w in sorted(rays.items())],
        "expected": {"csm_0_degree": -1, "csm_1": "unit weights on (1,1), (-1,0), (0,-1)"}})


def coloop_polynomial():
    chi = characteristic_polynomial(uniform(1, 1))
    return _check("characteristic polynomial of a single coloop", chi == Polynomial((-1, 1)),
                  {"chi": str(chi), "expected": "λ - 1"})


def loop_gives_empty_fan():
    M = from_bases(3, [(0, 1)])  # element 2 is a loop
    F = bergman_fan(M)
    return _check("matroid with a loop has empty Bergman fan", F.is_empty(),
                  {"cones": len(F.cones)})


def unbalanced_hypersurface():
    """The pyramid's dual fan: psi weights on its rays do not balance."""
    X = hypersurface_fan(hull(PYRAMID))
    expected_psi = Polynomial((2, -3, 1))
    rays = []
    ok = True
    for r in all_faces(X, 1):
        pw = psi_weight(X, r)
        rays.append({"ray": list(r.rays[0]), "psi": str(pw.psi), "weight": pw.weight})
        ok &= pw.psi == expected_psi and pw.weight == -1
    expected_rays = {(0, 0, -1), (-1, 0, 0), (0, -1, 0), (1, 0, 1), (0, 1, 1)}
    ok &= {tuple(r["ray"]) for r in rays} == expected_rays and len(X.cones) == 8
    report = is_balanced(psi_skeleton(X, 1))
    ok &= not report.balanced
    return _check("pyramid hypersurface: psi-weighted 1-skeleton is unbalanced", ok, {
        "two_cones": len(X.cones), "rays": rays, "balance": report.to_json(),
        "naive_identity": "psi weights give a balanced 1-cycle"}, counterexample=True)


def _line_matroid(i):
    """Rank 2 on {0,1,2} with the two elements other than i parallel: a line through 0."""
    j, k = (x for x in range(3) if x != i)
    return from_bases(3, [(i, j), (i, k)])


def _indicator(F, x):
    return int(any(c.contains(x) for c, _ in F.cones))


def decomposition_discrepancy():
    U23, U13 = uniform(2, 3), uniform(1, 3)
    B = bergman_fan(U23)
    crem_B = B.transform(CREM)
    origin = Cone.make(2)
    point = WeightedFan(2, ((origin, 1),), 0)
    lines = [bergman_fan(_line_matroid(i)) for i in range(3)]

    # both signed sums of indicator functions give the same 6-ray fan
    probes = [(0, 0), (1, 1), (-1, -1), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 2), (-2, 1)]
    first_ind = [_indicator(B, x) + _indicator(crem_B, x) - _indicator(point, x) for x in probes]
    second_ind = [sum(_indicator(L, x) for L in lines) - 2 * _indicator(point, x)
                  for x in probes]
    target = [1, 1, 1, 1, 1, 1, 1, 0, 0]

    c0 = degree0(csm_cycle(U23, 0).fan)
    crem_c0 = degree0(csm_cycle(U23, 0).fan.transform(CREM))
    crem_psi = psi_weight(crem_B, origin).weight
    p0 = degree0(csm_cycle(U13, 0).fan)
    first = c0 + crem_c0 - p0
    line_terms = [degree0(csm_cycle(_line_matroid(i), 0).fan) for i in range(3)]
    second = sum(line_terms) - 2 * p0
    ok = (first_ind == target and second_ind == target and crem_c0 == crem_psi == -1
          and first == -3 and second == -2)
    return _check("two decompositions of the 6-ray fan give different csm_0", ok, {
        "indicator_probes": [list(x) for x in probes],
        "first_indicator": first_ind, "second_indicator": second_ind,
        "first": {"csm_0(U23)": c0, "crem(csm_0(U23))": crem_c0,
                  "crem_via_psi": crem_psi, "csm_0(U13)": p0, "total": first},
        "second": {"csm_0(lines)": line_terms, "csm_0(U13)": p0, "total": second},
        "naive_identity": "csm_0 is additive over decompositions"}, counterexample=True)


def psi_examples():
    got = {"U23": str(psi_polynomial(bergman_fan(uniform(2, 3)))),
           "U34": str(psi_polynomial(bergman_fan(uniform(3, 4)))),
           "free4": str(psi_polynomial(bergman_fan(free(4))))}
    ok = (psi_polynomial(bergman_fan(uniform(2, 3))) == Polynomial((-2, 1))
          and psi_polynomial(bergman_fan(uniform(3, 4))) == Polynomial((3, -3, 1))
          and psi_polynomial(bergman_fan(free(4))) == Polynomial.from_roots(1, 1, 1))
    return _check("psi polynomials of Bergman fans", ok, got)


def u34_csm1():
    M = uniform(3, 4)
    c = csm_cycle(M, 1)
    by_size = {}
    for chain, _, w in c.ledger:
        by_size.setdefault(len(chain[0]), set()).add(w)
    bal = is_balanced(c.fan)
    ok = by_size == {1: {-1}, 2: {0}} and bal.balanced and degree0(csm_cycle(M, 0).fan) == 1
    return _check("U34 csm_1 weights and balancing", ok, {
        "weights_by_flat_size": {str(k): sorted(v) for k, v in by_size.items()},
        "balanced": bal.balanced, "csm_0_degree": degree0(csm_cycle(M, 0).fan)})


def product_formula():
    cases = [("U23 . U23", uniform(2, 3), uniform(2, 3)),
             ("free . U23", free(3), uniform(2, 3)),
             ("U34 . U34", uniform(3, 4), uniform(3, 4))]
    out = []
    ok = True
    for label, M, M2 in cases:
        r = product_check(M, M2)
        ok &= r.ok
        out.append({"case": label, "intersection": r.matroid.to_json(),
                    "grades": {str(g): eq for g, (_, _, eq) in sorted(r.grades.items())}})
    u = product_check(uniform(2, 3), uniform(2, 3)).grades[0]
    ok &= degree0(u[0]) == 1 == degree0(u[1])
    return _check("product formula", ok, {"cases": out})


def parallel_connection():
    r = parallel_connection_map(uniform(2, 3), 0, uniform(2, 3), 0)
    return _check("parallel connection of two U23", r.ok and abs(r.determinant) == 1,
                  {k: v for k, v in r.to_json().items() if k != "failures"})


def noether_anchors():
    rows = []
    ok = True
    for label, P, lhs in (("unit simplex", simplex(1), 12), ("4 simplex", simplex(4), 24),
                          ("cube [0,2]^3", cube(2), 24)):
        r = noether_check(P)
        c = dual_census_check(P, staircase(P))
        agree = ledgers_agree(r, c, P)
        ok &= r.holds and c.holds and agree and r.lhs == lhs
        rows.append({"polytope": label, "lhs": r.lhs, "rhs": r.rhs, "census_rhs": c.rhs,
                     "ledgers_agree": agree})
    return _check("Noether identity anchors", ok, {"cases": rows})


ALL_CHECKS = (u23_csm, coloop_polynomial, loop_gives_empty_fan, psi_examples, u34_csm1, unbalanced_hypersurface,
              decomposition_discrepancy, product_formula, parallel_connection, noether_anchors)


def run_all():
    return [check() for check in ALL_CHECKS]
