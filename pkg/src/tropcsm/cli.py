"""Command-line interface: every command prints one JSON report on stdout.

Exit codes: 0 when every checked identity holds, 1 when one fails, 2 for
usage or input errors (with a JSON diagnostic on stderr).
"""

import argparse
import json
import random
import sys
import time

from . import io
from .bergman import bergman_structure
from .csm import csm_cycle, exponent_summary, gl_invariance, psi_weight, weight_ledger
from .fan import FanError, is_balanced, recession_cycle, stable_intersection
from .matroid import beta_invariant, characteristic_polynomial, reduced_characteristic_polynomial
from .noether import NoetherError, dual_census_check, ledgers_agree, noether_check, staircase
from .reproductions import run_all

SCHEMA = 1
DEFAULT_SEED = 0


def _flats(M):
    return [[sorted(f) for f in level] for level in M.flats()]


def _chain(chain):
    return [sorted(f) for f in chain]


def _matroid(path):
    return io.matroid_from_json(io.load(path))


# -- commands -----------------------------------------------------------------

def cmd_matroid_info(args):
    M = _matroid(args.file)
    chi = characteristic_polynomial(M)
    out = {"n": M.n, "rank": M.rank, "loops": sorted(M.loops), "flats_by_rank": _flats(M),
           "characteristic_polynomial": str(chi),
           "characteristic_coefficients": list(chi.coefficients)}
    if not M.loops and M.rank > 0:
        red = reduced_characteristic_polynomial(M)
        out["reduced_characteristic_polynomial"] = str(red)
        out["reduced_coefficients"] = list(red.coefficients)
    out["beta"] = beta_invariant(M)
    return {"matroid": M.to_json()}, out, True


def cmd_bergman_build(args):
    M = _matroid(args.file)
    S = bergman_structure(M)
    extra = [{"chain": _chain(S.chains[c])} for c, _ in S.fan.cones]
    return {"matroid": M.to_json()}, S.fan.to_json(extra), True


def _csm_json(M, k, S):
    c = csm_cycle(M, k, S)
    cones = []
    for chain, cone, w in c.ledger:
        pw = psi_weight(S.fan, cone, reference=w)
        row = {"chain": _chain(chain)}
        row.update(cone.to_json())
        row.update({"def_weight": w, "psi_weight": pw.weight, "psi": str(pw.psi),
                    "root_multiplicity": pw.multiplicity, "exponent": pw.exponent})
        cones.append(row)
    ok = all(r["def_weight"] == r["psi_weight"] for r in cones)
    return {"k": k, "cycle": c.fan.to_json(), "cones": cones}, ok


def cmd_csm_compute(args):
    M = _matroid(args.file)
    S = bergman_structure(M)
    if M.loops:
        return {"matroid": M.to_json(), "k": args.k}, {"cycles": [], "note": "matroid has a loop"}, True
    ks = [args.k] if args.k is not None else list(range(M.rank))
    cycles, ok = [], True
    for k in ks:
        j, good = _csm_json(M, k, S)
        cycles.append(j)
        ok &= good
    return {"matroid": M.to_json(), "k": args.k}, {"cycles": cycles}, ok


def cmd_csm_verify(args):
    M = _matroid(args.file)
    rng = random.Random(args.seed)
    ledger = weight_ledger(M)
    rows = [{"chain": _chain(ch), "dim": pw.cone.dim, **pw.to_json()} for ch, pw in ledger]
    agree = all(pw.agrees for _, pw in ledger)
    summary = exponent_summary(ledger)
    exponent_ok = all(k in v for k, v in summary.items())
    balance = {}
    if not M.loops:
        S = bergman_structure(M)
        for k in range(M.rank):
            balance[str(k)] = is_balanced(csm_cycle(M, k, S).fan).to_json()
    bal_ok = all(b["balanced"] for b in balance.values())
    inv = gl_invariance(M, args.transforms, rng) if not M.loops else None
    out = {"ledger": rows, "def_equals_psi": agree,
           "consistent_exponents_by_dim": {str(k): v for k, v in summary.items()},
           "exponent_equals_dim": exponent_ok, "balancing": balance,
           "gl_invariance": inv.to_json() if inv else None}
    ok = agree and exponent_ok and bal_ok and (inv is None or inv.ok)
    return {"matroid": M.to_json(), "seed": args.seed, "transforms": args.transforms}, out, ok


def _fan(path):
    return io.fan_from_json(io.load(path))


def cmd_fan_balance(args):
    F = _fan(args.file)
    rep = is_balanced(F)
    return {"fan": F.to_json()}, rep.to_json(), rep.balanced


def cmd_fan_intersect(args):
    A, B = _fan(args.a), _fan(args.b)
    C = stable_intersection(A, B)
    rep = is_balanced(C)
    out = {"intersection": C.to_json(), "balanced": rep.balanced}
    return {"a": A.to_json(), "b": B.to_json()}, out, rep.balanced


def cmd_fan_recession(args):
    A = io.cycle_from_json(io.load(args.file))
    R = recession_cycle(A)
    rep = is_balanced(R)
    return {"cycle": io.cycle_to_json(A)}, {"recession": R.to_json(), "balanced": rep.balanced}, \
        rep.balanced


def cmd_noether_check(args):
    P = io.polytope_from_json(io.load(args.polytope))
    rep = noether_check(P)
    out = {"noether": rep.to_json()}
    T = None
    if args.triangulation:
        T = io.triangulation_from_json(io.load(args.triangulation))
    elif args.staircase:
        T = staircase(P)
        if T is None:
            raise io.InputError("no-staircase",
                                "built-in triangulations exist only for d·simplex and [0,d]^3")
    ok = rep.holds
    if T is not None:
        census = dual_census_check(P, T)
        agree = ledgers_agree(rep, census, P)
        out["census"] = census.to_json()
        out["ledgers_agree"] = agree
        out["validity"] = "unimodular triangulation verified"
        ok = ok and census.holds and agree
    else:
        out["validity"] = "outside guaranteed validity (no unimodular triangulation supplied)"
    return {"polytope": P.to_json(), "triangulation": T.to_json() if T else None}, out, ok


def cmd_paperchecks(args):
    checks = run_all()
    ok = all(c["status"] != "fail" for c in checks)
    return {}, {"checks": checks}, ok


# -- driver ---------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="tropcsm", description=__doc__.splitlines()[0])
    p.add_argument("--timing", action="store_true", help="report wall time on stderr")
    sub = p.add_subparsers(dest="group", required=True)

    m = sub.add_parser("matroid").add_subparsers(dest="action", required=True)
    a = m.add_parser("info", help="flats, characteristic polynomials, beta invariant")
    a.add_argument("file")
    a.set_defaults(func=cmd_matroid_info)

    b = sub.add_parser("bergman").add_subparsers(dest="action", required=True)
    a = b.add_parser("build", help="Bergman fan with chain annotations")
    a.add_argument("file")
    a.set_defaults(func=cmd_bergman_build)

    c = sub.add_parser("csm").add_subparsers(dest="action", required=True)
    a = c.add_parser("compute", help="CSM cycles with a per-cone ledger")
    a.add_argument("file")
    a.add_argument("-k", type=int, default=None)
    a.set_defaults(func=cmd_csm_compute)
    a = c.add_parser("verify", help="beta formula vs psi oracle, balancing, GL invariance")
    a.add_argument("file")
    a.add_argument("--seed", type=int, default=DEFAULT_SEED)
    a.add_argument("--transforms", type=int, default=50)
    a.set_defaults(func=cmd_csm_verify)

    f = sub.add_parser("fan").add_subparsers(dest="action", required=True)
    a = f.add_parser("balance")
    a.add_argument("file")
    a.set_defaults(func=cmd_fan_balance)
    a = f.add_parser("intersect")
    a.add_argument("a")
    a.add_argument("b")
    a.set_defaults(func=cmd_fan_intersect)
    a = f.add_parser("recession")
    a.add_argument("file")
    a.set_defaults(func=cmd_fan_recession)

    n = sub.add_parser("noether").add_subparsers(dest="action", required=True)
    a = n.add_parser("check")
    a.add_argument("polytope")
    g = a.add_mutually_exclusive_group()
    g.add_argument("--triangulation")
    g.add_argument("--staircase", action="store_true")
    a.set_defaults(func=cmd_noether_check)

    a = sub.add_parser("paperchecks", help="reproduce the worked examples and counterexamples")
    a.set_defaults(func=cmd_paperchecks)
    return p


def _command_name(args):
    return " ".join(x for x in (args.group, getattr(args, "action", None)) if x)


def _error(code, message):
    print(json.dumps({"schema": SCHEMA, "error": code, "message": message}), file=sys.stderr)
    return 2


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    start = time.perf_counter()
    try:
        inputs, results, ok = args.func(args)
    except io.InputError as e:
        return _error(e.code, str(e))
    except (FanError, NoetherError, ValueError) as e:
        return _error(type(e).__name__, str(e))
    report = {"schema": SCHEMA, "command": _command_name(args), "inputs": inputs,
              "results": results, "verdict": "pass" if ok else "fail"}
    out.write(json.dumps(report, indent=2, sort_keys=False) + "\n")
    if args.timing:
        print(json.dumps({"wall_time_s": round(time.perf_counter() - start, 3)}), file=sys.stderr)
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
