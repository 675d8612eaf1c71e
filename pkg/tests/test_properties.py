"""Property-based checks on randomly generated inputs."""

import random

import networkx as nx
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import beta_from_chi, chi_deletion_contraction
from tropcsm import lattice as la
from tropcsm.bergman import bergman_fan, support_contains
from tropcsm.cones import Cone
from tropcsm.csm import csm_cycle, psi_polynomial
from tropcsm.fan import WeightedFan, degree0, is_balanced, stable_intersection
from tropcsm.matroid import beta_invariant, graphic, uniform
from tropcsm.polynomial import Polynomial

edge_lists = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(
    lambda e: e[0] != e[1]), min_size=1, max_size=7)


def connected(edges):
    G = nx.MultiGraph(edges)
    return nx.is_connected(G)


@settings(max_examples=40, deadline=None)
@given(edge_lists)
def test_graphic_psi_is_reduced_chi(edges):
    assume(connected(edges))
    M = graphic(edges)
    assume(not M.loops and M.rank > 0)
    chi = Polynomial(chi_deletion_contraction(M.n, M.bases))
    q, rem = chi.divide_by_linear(1)
    assert rem == 0 and psi_polynomial(bergman_fan(M)) == q
    assert beta_invariant(M) == beta_from_chi(chi.coefficients, M.rank)


@settings(max_examples=25, deadline=None)
@given(edge_lists)
def test_graphic_csm_balanced_with_degree_law(edges):
    assume(connected(edges))
    M = graphic(edges)
    assume(not M.loops and M.rank > 0)
    for k in range(M.rank):
        assert is_balanced(csm_cycle(M, k).fan).balanced
    assert degree0(csm_cycle(M, 0).fan) == (-1) ** (M.rank - 1) * beta_invariant(M)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([(2, 3), (2, 4), (3, 4), (3, 5)]))
def test_balancing_survives_unimodular_change(seed, rn):
    F = bergman_fan(uniform(*rn))
    U = la.random_unimodular(F.ambient_dim, random.Random(seed))
    assert is_balanced(F.transform(U)).balanced


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
       st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_lines_meet_with_determinant_multiplicity(u, v):
    assume(any(u) and any(v) and la.det([u, v]) != 0)
    u, v = la.primitive(u), la.primitive(v)
    A = WeightedFan(2, ((Cone.make(2, [], [u]), 1),), 1)
    B = WeightedFan(2, ((Cone.make(2, [], [v]), 1),), 1)
    assert degree0(stable_intersection(A, B)) == abs(la.det([u, v]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_circuit_criterion_matches_cones_on_small_points(x):
    M = uniform(3, 4)
    y = tuple(x)
    assert support_contains(M, y) == any(c.contains(y) for c, _ in bergman_fan(M).cones)
