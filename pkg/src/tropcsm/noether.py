"""Noether's formula for tropical surfaces dual to a lattice polytope in R^3.

The identity checked is

    12 (1 + #interior lattice points) = 2 Vol - 3 Area + 3 Peri + sum_i tau_i

with Vol = 3! Euclidean volume, Area = sum of facet areas at 2! times the area
in the facet's lattice, Peri = sum of lattice lengths of edges, and tau_i read
off from  sum_{F'} L(F_i ∩ F') n_{F'} = -tau_i n_{F_i}.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from math import gcd

from . import lattice as la


class NoetherError(ValueError):
    pass


class DegenerateInput(NoetherError):
    pass


class NonProportional(NoetherError):
    pass


class NotUnimodular(NoetherError):
    pass


class NotCovering(NoetherError):
    pass


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _det3(u, v, w):
    return la.dot(_cross(u, v), w)


def _order_cycle(points, normal):
    """Order coplanar convex-position points counterclockwise seen from ``normal``."""
    pts = sorted(points)
    start = pts[0]
    rest = pts[1:]

    # gift wrapping: exact, no angles
    cycle = [start]
    cur = start
    while True:
        cand = None
        for p in pts:
            if p == cur:
                continue
            if cand is None:
                cand = p
                continue
            s = la.dot(_cross(_sub(cand, cur), _sub(p, cur)), normal)
            if s < 0 or (s == 0 and sum(x * x for x in _sub(p, cur)) >
                         sum(x * x for x in _sub(cand, cur))):
                cand = p
        if cand == start:
            break
        cycle.append(cand)
        cur = cand
        if len(cycle) > len(rest) + 1:
            raise DegenerateInput("facet vertex cycle did not close")
    return tuple(cycle)


@dataclass(frozen=True)
class Facet:
    normal: tuple  # primitive, outward
    value: int  # normal . x <= value on the polytope
    cycle: tuple  # vertices, counterclockwise seen from outside


@dataclass(frozen=True)
class Edge:
    endpoints: tuple
    facets: tuple  # indices of the two facets meeting along it

    @property
    def length(self):
        a, b = self.endpoints
        return gcd(*_sub(b, a))


@dataclass(frozen=True)
class LatticePolytope3:
    vertices: tuple
    facets: tuple
    edges: tuple

    def contains(self, x, strict=False):
        if strict:
            return all(la.dot(f.normal, x) < f.value for f in self.facets)
        return all(la.dot(f.normal, x) <= f.value for f in self.facets)

    @cached_property
    def bounding_box(self):
        return tuple((min(v[i] for v in self.vertices), max(v[i] for v in self.vertices))
                     for i in range(3))

    def lattice_points(self):
        (a0, a1), (b0, b1), (c0, c1) = self.bounding_box
        return [(x, y, z) for x in range(a0, a1 + 1) for y in range(b0, b1 + 1)
                for z in range(c0, c1 + 1) if self.contains((x, y, z))]

    def to_json(self):
        return {"vertices": [list(v) for v in self.vertices]}


def hull(points):
    """Exact convex hull of integer points in R^3."""
    pts = sorted({tuple(int(c) for c in p) for p in points})
    if any(len(p) != 3 for p in pts):
        raise DegenerateInput("points must be integer triples")
    if len(pts) < 4 or la.rank([_sub(p, pts[0]) for p in pts[1:]]) < 3:
        raise DegenerateInput("points do not span R^3 affinely")
    planes = {}
    for a, b, c in combinations(pts, 3):
        n = _cross(_sub(b, a), _sub(c, a))
        if not any(n):
            continue
        n = la.primitive(n)
        vals = [la.dot(n, p) for p in pts]
        h = la.dot(n, a)
        if all(v <= h for v in vals):
            planes[n] = h
        elif all(v >= h for v in vals):
            planes[tuple(-x for x in n)] = -h
    facets = []
    for n, h in sorted(planes.items()):
        on = [p for p in pts if la.dot(n, p) == h]
        cyc = _order_cycle(on, n)
        # drop points in the middle of a side
        keep = [cyc[i] for i in range(len(cyc))
                if any(_cross(_sub(cyc[i], cyc[i - 1]), _sub(cyc[(i + 1) % len(cyc)], cyc[i])))]
        facets.append(Facet(n, h, tuple(keep)))
    verts = sorted({v for f in facets for v in f.cycle})
    edges = {}
    for i, f in enumerate(facets):
        m = len(f.cycle)
        for j in range(m):
            key = tuple(sorted((f.cycle[j], f.cycle[(j + 1) % m])))
            edges.setdefault(key, []).append(i)
    edge_list = []
    for key, owners in sorted(edges.items()):
        if len(owners) != 2:
            raise DegenerateInput(f"edge {key} bounds {len(owners)} facets")
        edge_list.append(Edge(key, tuple(owners)))
    return LatticePolytope3(tuple(verts), tuple(facets), tuple(edge_list))


def simplex(d=1):
    return hull([(0, 0, 0), (d, 0, 0), (0, d, 0), (0, 0, d)])


def cube(d=1):
    return hull([(x, y, z) for x in (0, d) for y in (0, d) for z in (0, d)])


# -- invariants ---------------------------------------------------------------

def normalized_volume(P):
    """3! times the Euclidean volume: cone over each facet from a fixed base vertex."""
    base = P.vertices[0]
    total = 0
    for f in P.facets:
        v0 = f.cycle[0]
        for a, b in zip(f.cycle[1:], f.cycle[2:]):
            total += _det3(_sub(v0, base), _sub(a, base), _sub(b, base))
    return abs(total)


def facet_area(P, facet):
    """2! times the area of ``facet`` in its own lattice.

    The summed cross products equal (twice the Euclidean area) times the unit
    normal, and a primitive normal n has length equal to the covolume of the
    plane lattice, so the vector is exactly (lattice area) · n.
    """
    f = P.facets[facet] if isinstance(facet, int) else facet
    v0 = f.cycle[0]
    s = [0, 0, 0]
    for a, b in zip(f.cycle[1:], f.cycle[2:]):
        c = _cross(_sub(a, v0), _sub(b, v0))
        for i in range(3):
            s[i] += c[i]
    i = next(i for i in range(3) if f.normal[i])
    area, rem = divmod(s[i], f.normal[i])
    if rem or tuple(area * x for x in f.normal) != tuple(s):
        raise DegenerateInput("facet area vector is not a multiple of its normal")
    return area


def total_area(P):
    return sum(facet_area(P, f) for f in P.facets)


def lattice_perimeter(P):
    return sum(e.length for e in P.edges)


def tau(P, i):
    """The integer with sum over neighbours of L(F_i ∩ F') n_{F'} = -tau n_{F_i}."""
    acc = [0, 0, 0]
    for e in P.edges:
        if i in e.facets:
            j = e.facets[0] if e.facets[1] == i else e.facets[1]
            for k in range(3):
                acc[k] += e.length * P.facets[j].normal[k]
    n = P.facets[i].normal
    k = next(k for k in range(3) if n[k])
    t, rem = divmod(-acc[k], n[k])
    if rem or tuple(-t * x for x in n) != tuple(acc):
        raise NonProportional(f"neighbour sum {tuple(acc)} is not a multiple of normal {n}")
    return t


def interior_points(P):
    (a0, a1), (b0, b1), (c0, c1) = P.bounding_box
    return sum(1 for x in range(a0, a1 + 1) for y in range(b0, b1 + 1)
               for z in range(c0, c1 + 1) if P.contains((x, y, z), strict=True))


def is_delzant(P):
    """Every vertex meets exactly three edges whose primitive directions form a basis."""
    for v in P.vertices:
        dirs = [la.primitive(_sub(e.endpoints[1] if e.endpoints[0] == v else e.endpoints[0], v))
                for e in P.edges if v in e.endpoints]
        if len(dirs) != 3 or abs(_det3(*dirs)) != 1:
            return False
    return True


@dataclass
class NoetherReport:
    interior_points: int
    normalized_volume: int
    total_facet_area: int
    lattice_perimeter: int
    tau_list: list
    lhs: int
    rhs: int
    delzant: bool

    @property
    def holds(self):
        return self.lhs == self.rhs

    def to_json(self):
        return {"interior_points": self.interior_points,
                "normalized_volume": self.normalized_volume,
                "total_facet_area": self.total_facet_area,
                "lattice_perimeter": self.lattice_perimeter,
                "tau_list": list(self.tau_list), "lhs": self.lhs, "rhs": self.rhs,
                "holds": self.holds, "delzant": self.delzant}


def noether_check(P):
    g = interior_points(P)
    vol = normalized_volume(P)
    area = total_area(P)
    peri = lattice_perimeter(P)
    taus = [tau(P, i) for i in range(len(P.facets))]
    lhs = 12 * (1 + g)
    rhs = 2 * vol - 3 * area + 3 * peri + sum(taus)
    return NoetherReport(g, vol, area, peri, taus, lhs, rhs, is_delzant(P))


# -- unimodular triangulations --------------------------------------------------

@dataclass(frozen=True)
class UnimodularTriangulation:
    points: tuple
    tetrahedra: tuple

    def to_json(self):
        return {"points": [list(p) for p in self.points],
                "tets": [list(t) for t in self.tetrahedra]}


def _freudenthal(d, keep=None):
    idx = {}
    pts = []

    def point(p):
        if p not in idx:
            idx[p] = len(pts)
            pts.append(p)
        return idx[p]

    tets = []
    for x in range(d):
        for y in range(d):
            for z in range(d):
                for perm in permutations(range(3)):
                    cur = [x, y, z]
                    verts = [tuple(cur)]
                    for axis in perm:
                        cur[axis] += 1
                        verts.append(tuple(cur))
                    if keep is None or all(keep(v) for v in verts):
                        tets.append(verts)
    return pts, tets, point


def staircase_cube(d):
    """Freudenthal (staircase) triangulation of [0,d]^3 into 6 d^3 tetrahedra."""
    pts, tets, point = _freudenthal(d)
    quads = tuple(tuple(point(v) for v in t) for t in tets)
    return UnimodularTriangulation(tuple(pts), quads)


def staircase_simplex(d):
    """Staircase triangulation of d·(unit simplex) into d^3 tetrahedra.

    The chamber x >= y >= z of [0,d]^3 is a union of staircase cells and maps
    onto d·simplex by the unimodular map (x, y, z) -> (x - y, y - z, z).
    """
    pts, tets, point = _freudenthal(d, keep=lambda v: v[0] >= v[1] >= v[2])
    quads = tuple(tuple(point((v[0] - v[1], v[1] - v[2], v[2])) for v in t) for t in tets)
    return UnimodularTriangulation(tuple(pts), quads)


def staircase(P):
    """Built-in triangulation when ``P`` is a dilated unit simplex or a cube at the origin."""
    verts = set(P.vertices)
    lo = [b[0] for b in P.bounding_box]
    if lo != [0, 0, 0]:
        return None
    d = P.bounding_box[0][1]
    if verts == set(simplex(d).vertices):
        return staircase_simplex(d)
    if verts == set(cube(d).vertices):
        return staircase_cube(d)
    return None


def _on_common_facet(P, pts):
    return [i for i, f in enumerate(P.facets) if all(la.dot(f.normal, p) == f.value for p in pts)]


def validate_triangulation(P, T):
    """Raise unless ``T`` is a unimodular triangulation of ``P``.

    Checks: every tetrahedron is unimodular with vertices in P; the tetrahedra
    add up to the volume of P; every triangle is shared by two tetrahedra on
    opposite sides, unless it lies in the boundary, where it has exactly one.
    """
    pts = T.points
    for p in pts:
        if not P.contains(p):
            raise NotCovering(f"point {p} lies outside the polytope")
    faces = {}
    for t in T.tetrahedra:
        a, b, c, d = (pts[i] for i in t)
        det = _det3(_sub(b, a), _sub(c, a), _sub(d, a))
        if abs(det) != 1:
            raise NotUnimodular(f"tetrahedron {list(t)} has determinant {det}")
        for tri in combinations(sorted(t), 3):
            apex = next(i for i in t if i not in tri)
            faces.setdefault(tri, []).append(apex)
    if len(T.tetrahedra) != normalized_volume(P):
        raise NotCovering(f"{len(T.tetrahedra)} unimodular tetrahedra for volume "
                          f"{normalized_volume(P)}")
    for tri, apexes in faces.items():
        p, q, r = (pts[i] for i in tri)
        boundary = bool(_on_common_facet(P, (p, q, r)))
        if boundary:
            if len(apexes) != 1:
                raise NotCovering(f"boundary triangle {list(tri)} used {len(apexes)} times")
            continue
        if len(apexes) != 2:
            raise NotCovering(f"interior triangle {list(tri)} used {len(apexes)} times")
        n = _cross(_sub(q, p), _sub(r, p))
        s = [la.dot(n, _sub(pts[x], p)) for x in apexes]
        if s[0] * s[1] >= 0:
            raise NotCovering(f"tetrahedra on triangle {list(tri)} overlap")


@dataclass
class CensusReport:
    tetrahedra: int
    facet_triangles: int
    edge_segments: int
    tau_sum: int
    lhs: int
    rhs: int
    facet_triangles_by_facet: list = field(default_factory=list)

    @property
    def holds(self):
        return self.lhs == self.rhs

    def to_json(self):
        return {"sedentarity_0_vertices": self.tetrahedra,
                "sedentarity_1_vertices": self.facet_triangles,
                "sedentarity_2_vertices": self.edge_segments,
                "facet_triangles_by_facet": list(self.facet_triangles_by_facet),
                "tau_sum": self.tau_sum, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def dual_census_check(P, T):
    """Count vertices of the dual tropical surface by sedentarity and evaluate the formula."""
    validate_triangulation(P, T)
    pts = T.points
    tris = {tri for t in T.tetrahedra for tri in combinations(sorted(t), 3)}
    per_facet = [0] * len(P.facets)
    for tri in tris:
        for i in _on_common_facet(P, [pts[x] for x in tri]):
            per_facet[i] += 1
    segs = {s for t in T.tetrahedra for s in combinations(sorted(t), 2)}
    on_edges = 0
    for s in segs:
        if len(_on_common_facet(P, [pts[x] for x in s])) >= 2:
            on_edges += 1
    taus = sum(tau(P, i) for i in range(len(P.facets)))
    n_tets = len(T.tetrahedra)
    n_tri = sum(per_facet)
    rhs = 2 * n_tets - 3 * n_tri + 3 * on_edges + taus
    lhs = 12 * (1 + interior_points(P))
    return CensusReport(n_tets, n_tri, on_edges, taus, lhs, rhs, per_facet)


def ledgers_agree(report, census, P):
    """The census counts match the lattice invariants term by term."""
    return (report.normalized_volume == census.tetrahedra
            and report.total_facet_area == census.facet_triangles
            and report.lattice_perimeter == census.edge_segments
            and sum(report.tau_list) == census.tau_sum
            and [facet_area(P, f) for f in P.facets] == census.facet_triangles_by_facet
            and report.lhs == census.lhs and report.rhs == census.rhs)


# -- the dual tropical hypersurface fan --------------------------------------

def hypersurface_fan(P):
    """Codimension-one skeleton of the outer normal fan of ``P``.

    Each edge of ``P`` gives the 2-cone spanned by the outer normals of its two
    facets, weighted by the lattice length of the edge.
    """
    from .cones import Cone
    from .fan import WeightedFan

    cells = []
    for e in P.edges:
        a, b = (P.facets[i].normal for i in e.facets)
        cells.append((Cone.make(3, [a, b]), e.length))
    return WeightedFan(3, tuple(cells), 2)


PYRAMID = ((0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (0, 0, 1))
