"""Bergman fans of matroids in the chart that drops coordinate 0.

Coordinates: a vector ``x`` of R^{n} (one entry per ground-set element) is sent
to ``(x_1 - x_0, ..., x_{n-1} - x_0)`` in R^{n-1}; the section is
``y -> (0, y)``. The cone of a chain of flats ``F_1 < ... < F_k`` is
``-cone(e_{F_1}, ..., e_{F_k})`` modulo the all-ones line, so the support is
cut out by circuits on which the maximum coordinate is attained twice.
"""

import random
from dataclasses import dataclass, field

from . import lattice as la
from .cones import Cone
from .fan import DimensionMismatch, WeightedFan, covers
from .matroid import LoopInput, _parallel_layout, parallel_connection


def project(x):
    """R^n / R·1 -> R^{n-1}: subtract coordinate 0 from the others."""
    return tuple(xi - x[0] for xi in x[1:])


def lift(y):
    return (0,) + tuple(y)


def flat_ray(n, flat):
    """Primitive generator of the ray of a proper nonempty flat: image of -e_F."""
    return project(tuple(-1 if i in flat else 0 for i in range(n)))


@dataclass
class BergmanFan:
    """A Bergman fan together with the chain of flats behind every cone."""

    matroid: object
    fan: WeightedFan
    chains: dict = field(default_factory=dict)  # Cone -> tuple of flats
    ray_flat: dict = field(default_factory=dict)  # ray -> flat

    def cones_of_dim(self, k):
        return [(c, ch) for c, ch in self.chains.items() if c.dim == k]

    def chain_of(self, cone):
        return self.chains[cone]


def _proper_flats(M):
    full = M.ground
    return [f for f in M.flat_list() if f and f != full]


def maximal_chains(M):
    """Maximal chains of proper nonempty flats, by depth-first search over covers."""
    levels = M.flats()
    covers = {}
    for lo, hi in zip(levels, levels[1:]):
        for f in lo:
            covers[f] = [g for g in hi if f < g]
    full = M.ground
    out = []

    def walk(f, chain):
        if f == full:
            out.append(tuple(chain[:-1]) if chain else ())
            return
        for g in covers.get(f, []):
            walk(g, chain + [g])

    walk(levels[0][0], [])
    return out


def all_chains(M):
    """Every chain of proper nonempty flats (including the empty chain)."""
    proper = _proper_flats(M)
    above = {f: [g for g in proper if f < g] for f in proper}
    out = [()]

    def walk(chain):
        for g in (above[chain[-1]] if chain else proper):
            nxt = chain + (g,)
            out.append(nxt)
            walk(nxt)

    walk(())
    return out


def bergman_fan(M):
    """Fine Bergman fan of ``M`` with unit weights, as a :class:`WeightedFan`."""
    return bergman_structure(M).fan


def bergman_structure(M):
    n = M.n
    amb = max(n - 1, 0)
    if M.loops or M.rank == 0:  # rank 0: no fan of dimension -1
        return BergmanFan(M, WeightedFan(amb, (), max(M.rank - 1, 0)))
    proper = _proper_flats(M)
    ray_flat = {}
    for f in proper:
        ray_flat[la.primitive(flat_ray(n, f))] = f
    chains = {}
    for ch in all_chains(M):
        rays = [la.primitive(flat_ray(n, f)) for f in ch]
        chains[Cone.make(amb, rays, simplicial_hint=True)] = ch
    maxi = [Cone.make(amb, [la.primitive(flat_ray(n, f)) for f in ch], simplicial_hint=True)
            for ch in maximal_chains(M)]
    fan = WeightedFan.unit(amb, maxi, M.rank - 1)
    return BergmanFan(M, fan, chains, ray_flat)


def support_contains(M, x):
    """Circuit criterion: max of the lifted coordinates over every circuit is attained twice."""
    if len(x) != M.n - 1:
        raise DimensionMismatch(f"point has {len(x)} coordinates, expected {M.n - 1}")
    if M.loops:
        return False
    y = lift(x)
    for c in M.circuits:
        vals = [y[i] for i in c]
        top = max(vals)
        if vals.count(top) < 2:
            return False
    return True


# -- parallel connection map -------------------------------------------------

@dataclass
class ParallelConnectionReport:
    matrix: list
    determinant: int
    cones_forward: bool
    cones_backward: bool
    samples_forward: bool
    samples_backward: bool
    samples_per_cone: int
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return (abs(self.determinant) == 1 and self.cones_forward and self.cones_backward
                and self.samples_forward and self.samples_backward)

    def to_json(self):
        return {"matrix": [list(r) for r in self.matrix], "determinant": self.determinant,
                "cones_forward": self.cones_forward, "cones_backward": self.cones_backward,
                "samples_forward": self.samples_forward,
                "samples_backward": self.samples_backward,
                "samples_per_cone": self.samples_per_cone, "failures": self.failures[:10],
                "ok": self.ok}


def parallel_connection_matrix(M1, p1, M2, p2):
    """Matrix of the linear isomorphism from the parallel connection's space to the product.

    In the quotient, every element other than the glued one keeps its vector and
    the glued element goes to the sum of the two basepoint vectors.
    """
    N, to1, to2 = _parallel_layout(M1, p1, M2, p2)
    n1, n2 = M1.n, M2.n
    cols = []
    for i in range(1, N):  # basis vector e_i of the chart is the class of e_i
        img1 = [0] * n1
        img2 = [0] * n2
        if i in to1:
            img1[to1[i]] = 1
        if i in to2:
            img2[to2[i]] = 1
        cols.append(project(img1) + project(img2))
    return la.transpose(cols)


def _product_fan_cones(B1, B2):
    n1, n2 = B1.ambient_dim, B2.ambient_dim
    out = []
    for c1, _ in B1.cones:
        for c2, _ in B2.cones:
            rays = [r + (0,) * n2 for r in c1.rays] + [(0,) * n1 + r for r in c2.rays]
            lin = [v + (0,) * n2 for v in c1.lineality] + [(0,) * n1 + v for v in c2.lineality]
            out.append(Cone.make(n1 + n2, rays, lin, simplicial_hint=True))
    return out


def _inverse(U):
    n = len(U)
    cols = []
    for j in range(n):
        e = tuple(int(i == j) for i in range(n))
        cols.append(la.solve([tuple(U[r][c] for r in range(n)) for c in range(n)], e))
    return [tuple(int(cols[j][i]) for j in range(n)) for i in range(n)]


def _interior_samples(cone, count, rng, spread=20):
    n = cone.ambient_dim
    for _ in range(count):
        coeffs = [rng.randint(1, spread) for _ in cone.rays]
        yield tuple(sum(c * r[i] for c, r in zip(coeffs, cone.rays)) for i in range(n))


def parallel_connection_map(M1, p1, M2, p2, samples=1000, seed=0):
    """Verify that the gluing map identifies Bergman supports of P(M1, M2) and M1 x M2."""
    if M1.loops or M2.loops:
        raise LoopInput("parallel connection needs loopless factors")
    P = parallel_connection(M1, p1, M2, p2)
    U = parallel_connection_matrix(M1, p1, M2, p2)
    d = la.det(U)
    BP = bergman_fan(P)
    B1, B2 = bergman_fan(M1), bergman_fan(M2)
    prod = _product_fan_cones(B1, B2)
    k1 = M1.n - 1
    failures = []

    def in_product(z):
        return support_contains(M1, z[:k1]) and support_contains(M2, z[k1:])

    fwd = True
    for c, _ in BP.cones:
        img = Cone.make(len(U), [la.matvec(U, r) for r in c.rays])
        if not covers(prod, img):
            fwd = False
            failures.append({"direction": "forward", "cone": c.to_json()})
    Uinv = _inverse(U) if abs(d) == 1 else None
    back = Uinv is not None
    if Uinv is not None:
        for q in prod:
            img = Cone.make(len(U), [la.matvec(Uinv, r) for r in q.rays])
            if not covers([c for c, _ in BP.cones], img):
                back = False
                failures.append({"direction": "backward", "cone": q.to_json()})
    rng = random.Random(seed)
    sf = True
    for c, _ in BP.cones:
        for x in _interior_samples(c, samples, rng):
            if not support_contains(P, x) or not in_product(la.matvec(U, x)):
                sf = False
                failures.append({"direction": "forward-sample", "point": list(x)})
                break
    sb = Uinv is not None
    if Uinv is not None:
        for q in prod:
            for z in _interior_samples(q, samples, rng):
                if not in_product(z) or not support_contains(P, la.matvec(Uinv, z)):
                    sb = False
                    failures.append({"direction": "backward-sample", "point": list(z)})
                    break
    return ParallelConnectionReport(U, d, fwd, back, sf, sb, samples, failures)
