"""Weighted fans (tropical fan cycles) and the operations on them."""

import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb

from . import lattice as la
from .cones import Cone, intersect


class FanError(ValueError):
    pass


class ConeNotInFan(FanError):
    pass


class NotPure(FanError):
    pass


class DimensionMismatch(FanError):
    pass


class GenericityFailure(FanError):
    pass


class RecessionNotFan(FanError):
    pass


class NotZeroDimensional(FanError):
    pass


@dataclass(frozen=True)
class WeightedFan:
    """Maximal cones with integer weights.

    ``dim`` is the common dimension of the weighted cones. Zero weights may be
    stored; balancing and degree ignore them.
    """

    ambient_dim: int
    cones: tuple = ()
    dim: int = None

    def __post_init__(self):
        cones = tuple((c, int(w)) for c, w in self.cones)
        object.__setattr__(self, "cones", cones)
        if self.dim is None:
            dims = {c.dim for c, _ in cones}
            object.__setattr__(self, "dim", dims.pop() if len(dims) == 1 else
                               (max(dims) if dims else 0))
        for c, _ in cones:
            if c.ambient_dim != self.ambient_dim:
                raise DimensionMismatch(
                    f"cone in ambient dimension {c.ambient_dim}, fan in {self.ambient_dim}")

    @classmethod
    def unit(cls, ambient_dim, cones, dim=None):
        return cls(ambient_dim, tuple((c, 1) for c in cones), dim)

    def is_empty(self):
        return not self.cones

    def is_pure(self):
        return all(c.dim == self.dim for c, w in self.cones if w)

    def support_cones(self):
        return [(c, w) for c, w in self.cones if w]

    def weight(self, cone):
        return sum(w for c, w in self.cones if c == cone)

    def merged(self):
        """Add up weights of identical cones and drop zero weights."""
        acc = defaultdict(int)
        for c, w in self.cones:
            acc[c] += w
        cones = tuple(sorted(((c, w) for c, w in acc.items() if w),
                             key=lambda cw: (cw[0].rays, cw[0].lineality)))
        return WeightedFan(self.ambient_dim, cones, self.dim)

    def scaled(self, k):
        return WeightedFan(self.ambient_dim, tuple((c, w * k) for c, w in self.cones), self.dim)

    def __add__(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("cannot add fans in different ambient spaces")
        if self.cones and other.cones and self.dim != other.dim:
            raise DimensionMismatch(f"cannot add cycles of dimension {self.dim} and {other.dim}")
        dim = self.dim if self.cones else other.dim
        return WeightedFan(self.ambient_dim, self.cones + other.cones, dim).merged()

    @cached_property
    def _ray_index(self):
        index = defaultdict(set)
        for i, (c, _) in enumerate(self.cones):
            for r in c.rays:
                index[r].add(i)
        return index

    def cones_with_face(self, tau):
        """Indices of the stored cones having ``tau`` as a face."""
        if tau.rays:
            sets = [self._ray_index.get(r, set()) for r in tau.rays]
            cand = set.intersection(*sets)
        else:
            cand = range(len(self.cones))
        return [i for i in sorted(cand) if tau.is_face_of(self.cones[i][0])]

    def transform(self, U):
        return WeightedFan(len(U), tuple((c.transform(U), w) for c, w in self.cones), self.dim)

    def lineality(self):
        spaces = {c.lineality for c, _ in self.cones}
        if len(spaces) == 1:
            return list(spaces.pop())
        return []

    def to_json(self, extra=None):
        cells = []
        for i, (c, w) in enumerate(self.cones):
            cell = c.to_json()
            cell["weight"] = w
            if extra:
                cell.update(extra[i])
            cells.append(cell)
        return {"ambient_dim": self.ambient_dim, "dim": self.dim, "cells": cells}


@dataclass(frozen=True)
class PolyhedralCycle:
    """Cells ``conv(points) + cone`` with integer weights.

    The common case is a single apex point per cell.
    """

    ambient_dim: int
    cells: tuple = ()
    dim: int = None

    def __post_init__(self):
        cells = tuple((tuple(tuple(Fraction(x) for x in p) for p in pts), c, int(w))
                      for pts, c, w in self.cells)
        object.__setattr__(self, "cells", cells)
        if self.dim is None:
            object.__setattr__(self, "dim", max((self.cell_dim(i) for i in range(len(cells))),
                                                default=0))

    def cell_dim(self, i):
        pts, c, _ = self.cells[i]
        diffs = [la.integral([a - b for a, b in zip(p, pts[0])]) for p in pts[1:]
                 if any(a != b for a, b in zip(p, pts[0]))]
        return la.rank(diffs + c.generators)


def fan_of_cones(ambient_dim, cones, weight=1):
    return WeightedFan(ambient_dim, tuple((c, weight) for c in cones))


# -- stars -------------------------------------------------------------------

def star_fan(F, tau):
    """Star of the cone ``tau`` in ``F``.

    Each maximal cone containing ``tau`` as a face contributes ``sigma + span(tau)``.
    """
    out = []
    for i in F.cones_with_face(tau):
        sigma, w = F.cones[i]
        out.append((sigma.localized_at(tau), w))
    if not out:
        raise ConeNotInFan(f"{tau} is not a face of any cone of the fan")
    return WeightedFan(F.ambient_dim, tuple(out), F.dim)


def all_faces(F, dim):
    seen = set()
    out = []
    for sigma, _ in F.cones:
        for f in sigma.faces(dim):
            if f not in seen:
                seen.add(f)
                out.append(f)
    return out


# -- balancing ---------------------------------------------------------------

@dataclass
class BalanceReport:
    balanced: bool
    face: Cone = None
    residual: tuple = None
    faces_checked: int = 0

    def __bool__(self):
        return self.balanced

    def to_json(self):
        out = {"balanced": self.balanced, "faces_checked": self.faces_checked}
        if not self.balanced:
            out["witness_face"] = self.face.to_json()
            out["residual"] = list(self.residual)
        return out


def is_balanced(F):
    """Check the balancing condition at every codimension-one face."""
    cones = F.support_cones()
    if not cones:
        return BalanceReport(True)
    k = F.dim
    if any(c.dim != k for c, _ in cones):
        raise NotPure(f"weighted cones of dimensions {sorted({c.dim for c, _ in cones})}")
    if k == 0:
        return BalanceReport(True)
    n = F.ambient_dim
    sums = {}
    for sigma, w in cones:
        for tau in sigma.facets():
            direction = next(r for r in sigma.rays if r not in tau.rays)
            if sigma.is_unimodular:
                u = direction  # generators form a basis of the saturated lattice
            else:
                u = la.quotient_generator(tau.generators, sigma.generators, direction, n)
            acc = sums.setdefault(tau, [0] * n)
            for i in range(n):
                acc[i] += w * u[i]
    for tau in sorted(sums, key=lambda c: (c.rays, c.lineality)):
        res = tuple(sums[tau])
        if any(res) and not la.in_span(tau.generators, res):
            return BalanceReport(False, tau, res, len(sums))
    return BalanceReport(True, faces_checked=len(sums))


# -- F_p spaces --------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _wedge_rows(cone, p):
    n = cone.ambient_dim
    rows = {la.wedge(sub, n) for sub in combinations(cone.span_basis, p)}
    return tuple(sorted(w for w in rows if any(w)))


def _fp_of_cones(cones, p):
    if cones and any(c.dim == c.ambient_dim for c in cones):
        return comb(cones[0].ambient_dim, p)  # the wedges of a full-dimensional cone span everything
    rows = (w for sigma in cones if sigma.dim >= p for w in _wedge_rows(sigma, p))
    return la.rank_tall(rows, comb(cones[0].ambient_dim, p)) if cones else 0


def fp_dimension(F, p):
    """Dimension of the span of p-fold wedges of vectors sharing a cone of ``F``."""
    if F.is_empty():
        return 0
    if p == 0:
        return 1
    return _fp_of_cones([c for c, _ in F.cones], p)


def star_fp_dimension(F, tau, p):
    """fp_dimension of the star of ``tau`` without building it.

    A cone sigma containing tau and its localization sigma + span(tau) have the
    same linear span, so their wedge spaces coincide.
    """
    cones = [F.cones[i][0] for i in F.cones_with_face(tau)]
    if not cones:
        raise ConeNotInFan(f"{tau} is not a face of any cone of the fan")
    return 1 if p == 0 else _fp_of_cones(cones, p)


def degree0(Z):
    if Z.cones and Z.dim != 0:
        raise NotZeroDimensional(f"cycle has dimension {Z.dim}")
    return sum(w for _, w in Z.cones)


# -- recession ---------------------------------------------------------------

def recession_cycle(A):
    """Fan of recession cones of the top-dimensional cells, weights summed."""
    k = A.dim
    acc = defaultdict(int)
    for i, (_, c, w) in enumerate(A.cells):
        if A.cell_dim(i) == k and c.dim == k:
            acc[c] += w
    cones = [c for c, w in acc.items() if w]
    for a, b in combinations(cones, 2):
        if intersect(a, b).dim == k:
            raise RecessionNotFan(f"recession cones {a} and {b} overlap in dimension {k}")
    return WeightedFan(A.ambient_dim, tuple((c, acc[c]) for c in cones), k).merged()


# -- stable intersection -----------------------------------------------------

def displacement_vectors(n, budget=32):
    """Deterministic rational vectors on the moment curve with growing denominators."""
    for t in range(budget):
        s = Fraction(-(2 * t + 3), 7 + 5 * t)
        yield tuple(s ** (i + 1) for i in range(n))


def _pair_meets_displaced(sigma, sigma2, x, v, n):
    """Does sigma meet sigma2 + eps*v near x for small eps > 0?

    Equivalent to v lying in T_x(sigma) - T_x(sigma2). Raises GenericityFailure
    when v sits on a hyperplane spanned by generators (then the answer is not
    stable under perturbation).
    """
    gens = list(sigma.rays) + [tuple(-c for c in r) for r in sigma2.rays]
    for l in list(sigma.lineality) + list(sigma2.lineality) + [x]:
        gens.append(tuple(l))
        gens.append(tuple(-c for c in l))
    gens = [g for g in gens if any(g)]
    vi = la.integral(v)
    for sub in combinations(gens, n - 1):
        if la.rank(list(sub)) == n - 1 and la.det(list(sub) + [vi]) == 0:
            raise GenericityFailure("displacement vector lies on a generator hyperplane")
    for sub in combinations(gens, n):
        if la.det(list(sub)) == 0:
            continue
        c = la.solve(list(sub), vi)
        if all(ci > 0 for ci in c):
            return True
    return False


def stable_intersection(A, B, budget=32):
    """Stable intersection by the fan displacement rule."""
    if A.ambient_dim != B.ambient_dim:
        raise DimensionMismatch("fans live in different ambient spaces")
    n = A.ambient_dim
    target = A.dim + B.dim - n
    if A.is_empty() or B.is_empty() or target < 0:
        return WeightedFan(n, (), max(target, 0))
    candidates = []
    for sigma, w in A.support_cones():
        for sigma2, w2 in B.support_cones():
            if la.rank(sigma.generators + sigma2.generators) != n:
                continue
            tau = intersect(sigma, sigma2)
            if tau.dim != target:
                continue
            index = la.lattice_index(la.saturation(sigma.generators, n) +
                                     la.saturation(sigma2.generators, n), n)
            candidates.append((sigma, sigma2, tau, w * w2 * index))
    if n == 0:
        return WeightedFan(0, tuple((tau, m) for _, _, tau, m in candidates), 0).merged()
    for v in displacement_vectors(n, budget):
        try:
            out = []
            for sigma, sigma2, tau, m in candidates:
                x = tau.relative_interior_point()
                if _pair_meets_displaced(sigma, sigma2, x, v, n):
                    out.append((tau, m))
            return WeightedFan(n, tuple(out), target).merged()
        except GenericityFailure:
            continue
    raise GenericityFailure(f"no generic displacement found in {budget} attempts")


# -- support containment ------------------------------------------------------

def covers(cones, Q):
    """Is the cone ``Q`` contained in the union of ``cones`` (cones of one fan)?

    The pieces ``sigma ∩ Q`` of full dimension must close up: every facet of a
    piece either lies on the boundary of ``Q`` or is shared with another piece.
    """
    if any(c.contains_cone(Q) for c in cones):
        return True
    k = Q.dim
    pieces = [p for p in (intersect(c, Q) for c in cones) if p.dim == k]
    if not pieces:
        return False
    q_ineqs, _ = Q.inequalities
    walls = defaultdict(int)
    for p in pieces:
        for f in p.facets():
            if any(all(la.dot(y, g) == 0 for g in f.generators) for y in q_ineqs):
                continue
            walls[f] += 1
    return all(m == 2 for m in walls.values())


# -- comparison up to refinement ---------------------------------------------

def _relint_sample(cone, rng):
    n = cone.ambient_dim
    x = [0] * n
    for r in cone.rays:
        c = rng.randint(1, 10 ** 6)
        for i in range(n):
            x[i] += c * r[i]
    for v in cone.lineality:
        c = rng.randint(-10 ** 6, 10 ** 6)
        for i in range(n):
            x[i] += c * v[i]
    return tuple(x)


def _same_span(a, b):
    return a.dim == b.dim and la.rank(a.generators + b.generators) == a.dim


def weight_at(F, x, reference):
    """Weight of ``F`` at a generic point ``x`` of the cone ``reference``.

    Returns ``None`` if ``x`` is not generic enough to decide.
    """
    total = 0
    for c, w in F.support_cones():
        if not c.contains(x):
            continue
        if not c.contains_relint(x) or not _same_span(c, reference):
            return None
        total += w
    return total


def cycles_equal(A, B, seed=0, tries=20):
    """Equality of weighted cycles up to common refinement.

    Compares the weight functions at certified-generic points of every
    weighted cell of either cycle.
    """
    if A.ambient_dim != B.ambient_dim:
        return False
    A, B = A.merged(), B.merged()
    if not A.cones and not B.cones:
        return True
    if A.cones and B.cones and A.dim != B.dim:
        return False
    rng = random.Random(seed)
    for ref, _ in A.cones + B.cones:
        for _ in range(tries):
            x = _relint_sample(ref, rng)
            wa, wb = weight_at(A, x, ref), weight_at(B, x, ref)
            if wa is not None and wb is not None:
                break
        else:
            raise GenericityFailure(f"could not find a generic point in {ref}")
        if wa != wb:
            return False
    return True
