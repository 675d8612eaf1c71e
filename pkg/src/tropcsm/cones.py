"""Rational polyhedral cones over the integer lattice, in canonical form.

A cone is ``cone(rays) + span(lineality)``. The canonical form keeps the
lineality as a primitive-integer reduced echelon basis and every ray reduced
modulo the lineality (zero at the lineality pivots), primitive, extreme and
sorted. Two cones are equal exactly when their canonical forms are.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import gcd

from . import lattice as la


class ConeError(ValueError):
    pass


def in_generated_cone(rays, lineality, v):
    """Exact membership of ``v`` in cone(rays) + span(lineality) (Carathéodory search)."""
    lin = list(lineality)
    if la.rank(lin + list(rays) + [v]) > la.rank(lin + list(rays)):
        return False
    # quotient by the lineality
    if lin:
        R, piv = la.rref(lin)
        rays = [la.reduce_mod_rref(r, R, piv) for r in rays]
        v = la.reduce_mod_rref(v, R, piv)
    if not any(v):
        return True
    rays = [r for r in rays if any(r)]
    d = la.rank([la.integral(r) for r in rays]) if rays else 0
    for size in range(1, d + 1):
        for sub in combinations(rays, size):
            if la.rank([la.integral(r) for r in sub]) < size:
                continue
            c = la.solve(list(sub), v)
            if c is not None and all(x >= 0 for x in c):
                return True
    return False


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    rays: tuple
    lineality: tuple = ()

    @classmethod
    def make(cls, ambient_dim, rays=(), lineality=(), simplicial_hint=False, exact_lineality=False):
        """Canonicalize generators into a :class:`Cone`.

        ``simplicial_hint`` promises the rays are independent modulo the
        lineality, which skips redundancy and hidden-lineality detection.
        ``exact_lineality`` promises the given lineality is the whole of it.
        """
        n = ambient_dim
        lin = [tuple(int(x) for x in v) for v in lineality if any(v)]
        rays = [tuple(int(x) for x in r) for r in rays if any(r)]
        for v in list(rays) + lin:
            if len(v) != n:
                raise ConeError(f"generator {v} has wrong length for ambient dimension {n}")
        if not (simplicial_hint or exact_lineality) and rays:
            lin, rays = cls._expose_lineality(lin, rays)
        lin_basis = cls._lineality_basis(lin, n)
        if lin_basis:
            R, piv = la.rref(lin_basis, n)
            reduced = []
            for r in rays:
                v = la.reduce_mod_rref(r, R, piv)
                if any(v):
                    reduced.append(la.integral(v))
            rays = reduced
        else:
            rays = [la.primitive(r) for r in rays]
        rays = sorted(set(rays))
        if not simplicial_hint and len(rays) > 1:
            rays = cls._drop_redundant(rays, lin_basis)
        return cls(n, tuple(rays), tuple(lin_basis))

    @staticmethod
    def _lineality_basis(lin, n):
        if not lin:
            return []
        R, _ = la.rref(lin, n)
        return sorted(la.integral(r) for r in R)

    @staticmethod
    def _expose_lineality(lin, rays):
        # a ray whose negative lies in the cone spans a line of the cone
        changed = True
        lin = list(lin)
        rays = list(rays)
        while changed:
            changed = False
            for r in rays:
                if la.in_span(lin, r):
                    continue
                neg = tuple(-x for x in r)
                if in_generated_cone(rays, lin, neg):
                    lin.append(r)
                    changed = True
                    break
            rays = [r for r in rays if not la.in_span(lin, r)]
        return lin, rays

    @staticmethod
    def _drop_redundant(rays, lin):
        rays = list(rays)
        i = 0
        while i < len(rays):
            others = rays[:i] + rays[i + 1:]
            if others and in_generated_cone(others, lin, rays[i]):
                rays = others
            else:
                i += 1
        return rays

    # -- basic invariants --------------------------------------------------

    @cached_property
    def dim(self):
        return la.rank(list(self.rays) + list(self.lineality))

    @property
    def generators(self):
        return list(self.rays) + list(self.lineality)

    @cached_property
    def span_basis(self):
        return la.independent_subset(self.generators)

    @cached_property
    def is_unimodular(self):
        """Simplicial, with rays and lineality basis a basis of the saturated lattice."""
        if not self.is_simplicial:
            return False
        g = 0
        for w in la.wedge(self.generators, self.ambient_dim):
            g = gcd(g, w)
            if g == 1:
                return True
        return g == 1

    @cached_property
    def is_simplicial(self):
        return self.dim == len(self.rays) + len(self.lineality)

    def relative_interior_point(self):
        n = self.ambient_dim
        return tuple(sum(r[i] for r in self.rays) for i in range(n))

    def transform(self, U):
        """Image under the integer matrix ``U`` (acting on column vectors)."""
        m = len(U)
        rays = [la.matvec(U, r) for r in self.rays]
        lin = [la.matvec(U, v) for v in self.lineality]
        return Cone.make(m, rays, lin)

    def with_lineality(self, extra):
        return Cone.make(self.ambient_dim, self.rays, list(self.lineality) + list(extra))

    def localized_at(self, face):
        """``self + span(face)`` for a face: its lineality is exactly span(face)."""
        rays = [r for r in self.rays if r not in face.rays]
        return Cone.make(self.ambient_dim, rays, list(self.lineality) + list(face.rays),
                         simplicial_hint=self.is_simplicial, exact_lineality=True)

    # -- facial structure ---------------------------------------------------

    @cached_property
    def _facets(self):
        """List of (inward normal, rays on facet)."""
        n = self.ambient_dim
        lin = list(self.lineality)
        k = self.dim
        m = k - len(lin)  # dimension of the pointed part
        if m <= 0:
            return ()
        span_perp = la.nullspace(self.span_basis, n)
        seen = {}
        for sub in combinations(self.rays, m - 1):
            if la.rank(list(sub) + lin) != k - 1:
                continue
            cands = la.nullspace(list(sub) + lin, n)
            y = next((c for c in cands if la.rank(span_perp + [c]) > len(span_perp)), None)
            if y is None:
                continue
            vals = [la.dot(y, r) for r in self.rays]
            if all(v >= 0 for v in vals):
                pass
            elif all(v <= 0 for v in vals):
                y = tuple(-c for c in y)
                vals = [-v for v in vals]
            else:
                continue
            on = tuple(r for r, v in zip(self.rays, vals) if v == 0)
            if on not in seen:
                seen[on] = y
        return tuple((y, on) for on, y in seen.items())

    def facets(self):
        if self.is_simplicial:
            if not self.rays:
                return []
            return [Cone(self.ambient_dim, self.rays[:i] + self.rays[i + 1:], self.lineality)
                    for i in range(len(self.rays))]
        return [Cone(self.ambient_dim, on, self.lineality) for _, on in self._facets]

    @cached_property
    def inequalities(self):
        """``(ineqs, eqs)``: the cone is {x : y.x >= 0 for ineqs, y.x = 0 for eqs}."""
        eqs = la.nullspace(self.span_basis, self.ambient_dim) if self.span_basis else \
            la.identity(self.ambient_dim)
        return tuple(y for y, _ in self._facets), tuple(eqs)

    def contains(self, x):
        ineqs, eqs = self.inequalities
        return all(la.dot(e, x) == 0 for e in eqs) and all(la.dot(y, x) >= 0 for y in ineqs)

    def contains_relint(self, x):
        ineqs, eqs = self.inequalities
        return all(la.dot(e, x) == 0 for e in eqs) and all(la.dot(y, x) > 0 for y in ineqs)

    def contains_cone(self, other):
        return all(self.contains(r) for r in other.rays) and \
            all(self.contains(v) and self.contains(tuple(-c for c in v)) for v in other.lineality)

    def is_face_of(self, other):
        if self.lineality != other.lineality or not set(self.rays) <= set(other.rays):
            return False
        if self == other or other.is_simplicial:
            return True
        on = set(other.rays)
        for facet in other.faces_containing(self):
            on &= set(facet.rays)
        return on == set(self.rays)

    def faces_containing(self, face):
        return [f for f in self.facets() if set(face.rays) <= set(f.rays)]

    def faces(self, dim):
        """All faces of the given dimension (including the cone itself)."""
        if dim == self.dim:
            return [self]
        if dim > self.dim or dim < len(self.lineality):
            return []
        out = set()
        frontier = {self}
        for _ in range(self.dim - dim):
            frontier = {f for c in frontier for f in c.facets()}
        out |= frontier
        return sorted(out, key=lambda c: (c.rays, c.lineality))

    # -- serialization ------------------------------------------------------

    def to_json(self):
        return {"rays": [list(r) for r in self.rays], "lineality": [list(v) for v in self.lineality]}


def intersect(a, b):
    """Exact intersection of two cones in the same ambient space."""
    if a.ambient_dim != b.ambient_dim:
        raise ConeError("ambient dimensions differ")
    n = a.ambient_dim
    ia, ea = a.inequalities
    ib, eb = b.inequalities
    return from_inequalities(n, list(ia) + list(ib), list(ea) + list(eb))


def from_inequalities(n, ineqs, eqs):
    """Cone {x : y.x >= 0 (ineqs), y.x = 0 (eqs)} in V-representation."""
    ineqs = [tuple(y) for y in ineqs if any(y)]
    eqs = [tuple(y) for y in eqs if any(y)]
    lin = la.nullspace(ineqs + eqs, n) if (ineqs or eqs) else la.identity(n)
    # restrict to the orthogonal complement of the lineality to get a pointed cone
    eqs2 = eqs + list(lin)
    base_rank = la.rank(eqs2) if eqs2 else 0
    need = n - 1 - base_rank
    rays = set()
    if need >= 0:
        for sub in combinations(ineqs, need):
            rows = eqs2 + list(sub)
            if la.rank(rows) != n - 1:
                continue
            ker = la.nullspace(rows, n)
            if len(ker) != 1:
                continue
            r = ker[0]
            for cand in (r, tuple(-x for x in r)):
                if all(la.dot(y, cand) >= 0 for y in ineqs):
                    rays.add(cand)
    return Cone.make(n, sorted(rays), lin)
