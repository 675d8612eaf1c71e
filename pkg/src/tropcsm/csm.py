"""CSM cycles of matroids: the beta-invariant formula and the F_p-polynomial oracle."""

import random
from dataclasses import dataclass, field

from . import lattice as la
from .bergman import bergman_structure
from .fan import (ConeNotInFan, FanError, WeightedFan, all_faces, cycles_equal, fp_dimension,
                  stable_intersection, star_fp_dimension)
from .matroid import Matroid, beta_invariant, direct_sum, minor, uniform
from .polynomial import Polynomial


class KOutOfRange(ValueError):
    pass


class EmptyFan(FanError):
    pass


class NotMatroidalIntersection(FanError):
    pass


@dataclass
class CsmCycle:
    matroid: Matroid
    k: int
    fan: WeightedFan
    ledger: list = field(default_factory=list)  # (chain, cone, weight), zero weights included

    def weight(self, cone):
        return self.fan.weight(cone)


def chain_weight(M, chain, k=None, cache=None):
    """Signed product of beta invariants of the minors between consecutive flats."""
    d = M.rank - 1
    k = len(chain) if k is None else k
    flats = [frozenset()] + list(chain) + [M.ground]
    out = (-1) ** (d - k)
    for lo, hi in zip(flats, flats[1:]):
        key = (lo, hi)
        if cache is not None and key in cache:
            b = cache[key]
        else:
            b = beta_invariant(minor(M, hi, lo))
            if cache is not None:
                cache[key] = b
        out *= b
        if out == 0:
            break
    return out


def csm_cycle(M, k, structure=None):
    d = M.rank - 1
    amb = max(M.n - 1, 0)
    if M.loops or M.rank == 0:
        return CsmCycle(M, k, WeightedFan(amb, (), max(k, 0)))
    if not 0 <= k <= d:
        raise KOutOfRange(f"k={k} outside 0..{d}")
    S = structure or bergman_structure(M)
    cache = {}
    ledger = []
    cells = []
    for cone, chain in sorted(S.cones_of_dim(k), key=lambda cc: (cc[0].rays, cc[0].lineality)):
        w = chain_weight(M, chain, k, cache)
        ledger.append((chain, cone, w))
        if w:
            cells.append((cone, w))
    return CsmCycle(M, k, WeightedFan(amb, tuple(cells), k), ledger)


def csm_total(M):
    if M.loops:
        return []
    S = bergman_structure(M)
    return [csm_cycle(M, k, S) for k in range(M.rank)]


# -- the F_p oracle ---------------------------------------------------------

def _alternating(d, dims):
    return Polynomial(tuple((-1) ** (d - j) * dims(d - j) for j in range(d + 1)))


def psi_polynomial(F):
    """sum_i (-1)^i dim F_i(F) λ^(d-i) with d = dim F."""
    if F.is_empty():
        raise EmptyFan("psi is defined for nonempty fans only")
    return _alternating(F.dim, lambda i: fp_dimension(F, i))


def star_psi_polynomial(F, cone):
    """psi of the star of ``cone`` in ``F`` (same value as via :func:`star_fan`)."""
    return _alternating(F.dim, lambda i: star_fp_dimension(F, cone, i))


@dataclass
class PsiWeight:
    """Weight read off the star polynomial at a cone.

    ``multiplicity`` is the exact order of vanishing of psi at λ = 1;
    ``exponent`` is the power of (λ - 1) divided out before evaluating.
    ``consistent_exponents`` lists every e in 0..multiplicity whose
    quotient-at-1 reproduces ``reference`` (when one is supplied).
    """

    cone: object
    psi: Polynomial
    multiplicity: int
    exponent: int
    weight: int
    reference: int = None
    consistent_exponents: tuple = ()

    @property
    def agrees(self):
        return self.reference is None or self.reference == self.weight

    def to_json(self):
        return {"psi": str(self.psi), "multiplicity": self.multiplicity,
                "exponent": self.exponent, "psi_weight": self.weight,
                "def_weight": self.reference,
                "consistent_exponents": list(self.consistent_exponents)}


def _quotient_at_one(psi, e):
    return psi.deflate(e)(1)


def psi_weight(F, cone, exponent=None, reference=None):
    """Weight of ``cone`` from the psi polynomial of its star in ``F``.

    By default divides by (λ - 1)^dim(cone), the power that reproduces the
    beta-invariant weights (see README for the k versus k - 1 question).
    """
    psi = star_psi_polynomial(F, cone)
    t = psi.root_multiplicity(1)
    e = cone.dim if exponent is None else exponent
    if t is not None and t < e:
        raise ArithmeticError(f"star polynomial {psi} is not divisible by (λ-1)^{e}")
    w = _quotient_at_one(psi, e) if t is not None else 0
    consistent = ()
    if reference is not None and t is not None:
        consistent = tuple(x for x in range(t + 1) if _quotient_at_one(psi, x) == reference)
    return PsiWeight(cone, psi, t, e, w, reference, consistent)


def csm_weight_via_psi(M, cone, structure=None):
    S = structure or bergman_structure(M)
    if cone not in S.chains:
        raise ConeNotInFan(f"{cone} is not a cone of the Bergman fan")
    ref = chain_weight(M, S.chains[cone])
    return psi_weight(S.fan, cone, reference=ref)


def weight_ledger(M):
    """Per-cone comparison of the beta formula and the psi oracle for every cone."""
    if M.loops or M.rank == 0:
        return []
    S = bergman_structure(M)
    out = []
    cache = {}
    for cone, chain in sorted(S.chains.items(), key=lambda cc: (cc[0].dim, cc[0].rays)):
        ref = chain_weight(M, chain, cache=cache)
        pw = psi_weight(S.fan, cone, reference=ref)
        out.append((chain, pw))
    return out


def exponent_summary(ledger):
    """Per cone dimension: the exponents that work uniformly across all cones."""
    by_dim = {}
    for _, pw in ledger:
        k = pw.cone.dim
        cur = set(pw.consistent_exponents)
        by_dim[k] = cur if k not in by_dim else by_dim[k] & cur
    return {k: sorted(v) for k, v in sorted(by_dim.items())}


# -- product formula ------------------------------------------------------

def _graded(cycles, n):
    return {c.k: c.fan for c in cycles}


def intersect_total(left, right, ambient):
    """Graded stable intersection of two formal sums of cycles."""
    out = {}
    for i, A in left.items():
        for j, B in right.items():
            g = i + j - ambient
            if g < 0 or A.is_empty() or B.is_empty():
                continue
            piece = stable_intersection(A, B)
            out[g] = out[g] + piece if g in out else piece
    return out


def catalog(n_elements, extra=()):
    """Small Bergman-fan catalog on a fixed ground set: uniform matroids and two-block sums."""
    out = list(extra)
    for r in range(1, n_elements + 1):
        out.append(uniform(r, n_elements))
    for k in range(1, n_elements):
        for r1 in range(1, k + 1):
            for r2 in range(1, n_elements - k + 1):
                out.append(direct_sum(uniform(r1, k), uniform(r2, n_elements - k)))
    seen, uniq = set(), []
    for M in out:
        if M not in seen:
            seen.add(M)
            uniq.append(M)
    return uniq


def recognize(F, candidates):
    for M in candidates:
        if M.loops or M.rank - 1 != F.dim:
            continue
        if cycles_equal(F, bergman_structure(M).fan):
            return M
    return None


@dataclass
class ProductReport:
    matroid: Matroid
    grades: dict  # grade -> (lhs fan, rhs fan, equal)

    @property
    def ok(self):
        return all(eq for _, _, eq in self.grades.values())

    def to_json(self):
        return {"intersection_matroid": self.matroid.to_json(),
                "grades": {str(g): {"lhs": lhs.to_json(), "rhs": rhs.to_json(), "equal": eq}
                           for g, (lhs, rhs, eq) in sorted(self.grades.items())},
                "ok": self.ok}


def product_check(M, M2, intersection_matroid=None):
    """Compare csm(M) . csm(M2) with csm(Σ_M . Σ_M2), grade by grade."""
    if M.n != M2.n:
        raise NotMatroidalIntersection("matroids must share the ground set size")
    n = M.n - 1
    meet = stable_intersection(bergman_structure(M).fan, bergman_structure(M2).fan)
    extra = [x for x in (intersection_matroid, M, M2) if x is not None]
    N = recognize(meet, catalog(M.n, extra))
    if N is None:
        raise NotMatroidalIntersection("stable intersection is not a recognized matroid fan")
    lhs = intersect_total(_graded(csm_total(M), n), _graded(csm_total(M2), n), n)
    rhs = _graded(csm_total(N), n)
    grades = {}
    for g in sorted(set(lhs) | set(rhs)):
        a = lhs.get(g, WeightedFan(n, (), g))
        b = rhs.get(g, WeightedFan(n, (), g))
        grades[g] = (a.merged(), b.merged(), cycles_equal(a, b))
    return ProductReport(N, grades)


def psi_skeleton(F, k):
    """Weighted k-skeleton of ``F`` with the psi-derived weights."""
    cells = []
    for tau in all_faces(F, k):
        cells.append((tau, psi_weight(F, tau).weight))
    return WeightedFan(F.ambient_dim, tuple(cells), k)


@dataclass
class InvarianceReport:
    matroid: Matroid
    transforms: int
    cones: int
    mismatches: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

    def to_json(self):
        return {"transforms": self.transforms, "cones_per_transform": self.cones,
                "mismatches": self.mismatches[:10], "ok": self.ok}


def gl_invariance(M, transforms=50, rng=None):
    """psi weights of every cone survive random unimodular changes of coordinates."""
    rng = rng or random.Random(0)
    S = bergman_structure(M)
    n = S.fan.ambient_dim
    base = {c: psi_weight(S.fan, c).weight for c in S.chains}
    bad = []
    for t in range(transforms):
        U = la.random_unimodular(n, rng)
        G = S.fan.transform(U)
        for c, w in base.items():
            w2 = psi_weight(G, c.transform(U)).weight
            if w2 != w:
                bad.append({"transform": t, "matrix": [list(r) for r in U],
                            "cone": c.to_json(), "before": w, "after": w2})
    return InvarianceReport(M, transforms, len(base), bad)
