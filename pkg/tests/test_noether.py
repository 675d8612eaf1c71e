import random
from itertools import product

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from oracles import interior_points_in_simplex, lattice_points_in_simplex, simplex_interior
from tropcsm.fan import is_balanced
from tropcsm.noether import (PYRAMID, DegenerateInput, NotCovering, NotUnimodular,
                             UnimodularTriangulation, cube, dual_census_check, facet_area,
                             hull, hypersurface_fan, interior_points, is_delzant,
                             lattice_perimeter, ledgers_agree, noether_check, normalized_volume,
                             simplex, staircase, staircase_cube, staircase_simplex, tau,
                             total_area, validate_triangulation)


def random_hulls(count, seed=11, box=3):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        pts = [tuple(rng.randint(0, box) for _ in range(3)) for _ in range(rng.randint(4, 9))]
        try:
            out.append((pts, hull(pts)))
        except DegenerateInput:
            continue
    return out


HULLS = random_hulls(25)


def scipy_lattice_points(pts, strict=False):
    H = ConvexHull(np.array(pts, dtype=float))
    lo, hi = np.min(pts, axis=0), np.max(pts, axis=0)
    eps = 1e-9
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        vals = H.equations[:, :3] @ np.array(x, dtype=float) + H.equations[:, 3]
        if (vals < -eps).all() if strict else (vals <= eps).all():
            out.append(x)
    return out


# -- hull ---------------------------------------------------------------------------

def test_hull_counts():
    assert (len(simplex(1).facets), len(simplex(1).edges)) == (4, 6)
    assert (len(cube(1).facets), len(cube(1).edges)) == (6, 12)
    assert len(hull(PYRAMID).facets) == 5


def test_coplanar_points_rejected():
    with pytest.raises(DegenerateInput):
        hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])


def test_hull_drops_non_vertices():
    P = hull([(x, y, z) for x in range(3) for y in range(3) for z in range(3)])
    assert len(P.vertices) == 8 and all(len(f.cycle) == 4 for f in P.facets)


@pytest.mark.parametrize("i", range(len(HULLS)))
def test_random_hull_matches_scipy(i):
    pts, P = HULLS[i]
    assert normalized_volume(P) == round(6 * ConvexHull(np.array(pts, dtype=float)).volume)
    assert sorted(P.lattice_points()) == sorted(scipy_lattice_points(pts))
    assert interior_points(P) == len(scipy_lattice_points(pts, strict=True))


@pytest.mark.parametrize("i", range(len(HULLS)))
def test_facet_area_matches_pick(i):
    # normalized area of a lattice polygon in its plane lattice is 2i + b - 2
    _, P = HULLS[i]
    pts = P.lattice_points()
    for f in P.facets:
        on = [x for x in pts if sum(a * b for a, b in zip(f.normal, x)) == f.value]
        cyc = f.cycle
        boundary = set()
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            for x in on:
                d1 = [x[k] - a[k] for k in range(3)]
                d2 = [b[k] - a[k] for k in range(3)]
                cross = np.cross(d1, d2)
                if not cross.any() and 0 <= np.dot(d1, d2) <= np.dot(d2, d2):
                    boundary.add(x)
        interior = len(on) - len(boundary)
        assert facet_area(P, f) == 2 * interior + len(boundary) - 2


# -- invariants -----------------------------------------------------------------------

def test_volume_examples():
    assert normalized_volume(simplex(1)) == 1
    for d in range(1, 6):
        assert normalized_volume(cube(d)) == 6 * d ** 3
        assert normalized_volume(simplex(d)) == d ** 3


def test_area_and_perimeter_examples():
    for d in range(1, 6):
        S = simplex(d)
        diag = next(f for f in S.facets if f.normal == (1, 1, 1))
        assert facet_area(S, diag) == d ** 2
        C = cube(d)
        assert all(facet_area(C, f) == 2 * d ** 2 for f in C.facets)
        assert total_area(C) == 12 * d ** 2
        assert lattice_perimeter(C) == 12 * d
        assert total_area(S) == 4 * d ** 2 and lattice_perimeter(S) == 6 * d


def test_tau_examples():
    for d in range(1, 6):
        S, C = simplex(d), cube(d)
        assert [tau(S, i) for i in range(4)] == [d] * 4
        assert [tau(C, i) for i in range(6)] == [0] * 6


@pytest.mark.parametrize("d", range(1, 7))
def test_simplex_points_match_ehrhart(d):
    P = simplex(d)
    assert len(P.lattice_points()) == lattice_points_in_simplex(d)
    assert interior_points(P) == interior_points_in_simplex(d) == simplex_interior(d)


def test_interior_examples():
    assert interior_points(simplex(3)) == 0
    assert interior_points(simplex(4)) == 1
    assert interior_points(cube(2)) == 1


def test_delzant():
    assert is_delzant(cube(2)) and is_delzant(simplex(3))
    assert not is_delzant(hull(PYRAMID))


# -- the identity ----------------------------------------------------------------------

@pytest.mark.parametrize("P,value", [(simplex(4), 24), (cube(2), 24), (simplex(1), 12)],
                         ids=["4-simplex", "cube2", "unit"])
def test_noether_examples(P, value):
    r = noether_check(P)
    assert r.holds and r.lhs == r.rhs == value


@pytest.mark.parametrize("d", range(1, 7))
def test_simplex_census(d):
    P = simplex(d)
    c = dual_census_check(P, staircase_simplex(d))
    assert (c.tetrahedra, c.facet_triangles, c.edge_segments) == (d ** 3, 4 * d ** 2, 6 * d)
    assert c.holds and ledgers_agree(noether_check(P), c, P)


@pytest.mark.parametrize("d", range(1, 6))
def test_cube_census(d):
    P = cube(d)
    c = dual_census_check(P, staircase_cube(d))
    assert (c.tetrahedra, c.facet_triangles, c.edge_segments) == (6 * d ** 3, 12 * d ** 2, 12 * d)
    assert c.holds and ledgers_agree(noether_check(P), c, P)


def test_staircase_recognition():
    assert staircase(simplex(3)) is not None and staircase(cube(2)) is not None
    assert staircase(hull(PYRAMID)) is None


def test_non_unimodular_tetrahedron():
    P = hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 3)])
    T = UnimodularTriangulation(((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 3)), ((0, 1, 2, 3),))
    with pytest.raises(NotUnimodular):
        validate_triangulation(P, T)


def test_missing_tetrahedron_detected():
    T = staircase_cube(1)
    with pytest.raises(NotCovering):
        validate_triangulation(cube(1), UnimodularTriangulation(T.points, T.tetrahedra[1:]))


def test_pyramid_hypersurface_fan():
    X = hypersurface_fan(hull(PYRAMID))
    assert len(X.cones) == 8 and is_balanced(X).balanced
