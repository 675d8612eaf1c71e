import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import q_det, q_rank
from tropcsm import lattice as la
from tropcsm.polynomial import Polynomial

small_int = st.integers(-6, 6)


def matrices(rows, cols):
    return st.lists(st.lists(small_int, min_size=cols, max_size=cols), min_size=rows,
                    max_size=rows)


@pytest.mark.parametrize("v,expect", [((2, 4), (1, 2)), ((-3, 6, -9), (-1, 2, -3)),
                                      ((0, 5), (0, 1))])
def test_primitive(v, expect):
    assert la.primitive(v) == expect


def test_primitive_zero():
    with pytest.raises(la.ZeroVector):
        la.primitive((0, 0))


def test_integral_clears_denominators():
    from fractions import Fraction as Q
    assert la.integral((Q(1, 2), Q(-1, 3))) == (3, -2)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda m: st.integers(1, 5).flatmap(
    lambda n: matrices(m, n))))
def test_rank_matches_sympy(A):
    assert la.rank(A) == q_rank(A)
    assert la.rank_tall(A, len(A[0])) == q_rank(A)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: matrices(n, n)))
def test_det_matches_sympy(A):
    assert la.det(A) == q_det(A)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 5).flatmap(
    lambda n: matrices(m, n))))
def test_hermite_is_unimodular_row_reduction(A):
    H, U = la.hermite(A, track=True)
    assert abs(la.det(U)) == 1
    assert [tuple(r) for r in la.matmul(U, A)] == H
    assert la.rank([h for h in H if any(h)] or [[0] * len(A[0])]) == q_rank(A)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.integers(2, 5).flatmap(
    lambda n: matrices(m, n))))
def test_integer_kernel(A):
    n = len(A[0])
    K = la.integer_kernel(A, n)
    assert len(K) == n - q_rank(A)
    for k in K:
        assert all(la.dot(r, k) == 0 for r in A)
    # saturated: the kernel basis spans a lattice of index 1 in its saturation
    if K:
        assert la.lattice_index(K, n) == 1


def test_lattice_index_examples():
    assert la.lattice_index([(2, 0), (0, 1)], 2) == 2
    assert la.lattice_index([(1, 1), (1, -1)], 2) == 2
    assert la.lattice_index([(2, 2, 0)], 3) == 2
    assert la.lattice_index([(1, 0, 0), (0, 1, 0)], 3) == 1


def test_saturation():
    S = la.saturation([(2, 2, 0), (0, 0, 3)], 3)
    assert la.lattice_index(S, 3) == 1 and len(S) == 2
    for v in ((1, 1, 0), (0, 0, 1)):
        assert la.in_span(S, v)


def test_wedge_entries_are_maximal_minors():
    vs = [(1, 2, 3), (0, 1, 4)]
    w = la.wedge(vs, 3)
    M = sympy.Matrix(vs)
    minors = [M.extract([0, 1], list(c)).det() for c in ((0, 1), (0, 2), (1, 2))]
    assert sorted(map(abs, w)) == sorted(map(abs, minors))


def test_quotient_generator_non_unimodular():
    # face spanned by (1,0); the cone adds (1,2): primitive generator of Z^2 / Z(1,0)
    # pointing toward (1,2) is (0,1) up to the face
    u = la.quotient_generator([(1, 0)], [(1, 0), (1, 2)], (1, 2), 2)
    assert u[1] == 1


def test_random_unimodular_has_unit_determinant():
    rng = random.Random(3)
    for n in range(1, 6):
        for _ in range(20):
            assert abs(la.det(la.random_unimodular(n, rng))) == 1


def test_solve_roundtrip():
    cols = [(1, 0, 1), (0, 2, 1)]
    x = la.solve(cols, (3, 4, 5))
    assert list(x) == [3, 2]


# -- polynomials ------------------------------------------------------------------

def test_polynomial_arithmetic():
    p = Polynomial((2, -3, 1))
    assert p == Polynomial.from_roots(1, 2)
    assert p(1) == 0 and p(0) == 2
    assert str(p) == "λ^2 - 3λ + 2"
    assert p - p == Polynomial()
    assert (p * 2).coefficients == (4, -6, 2)
    assert Polynomial((-1, 1)) ** 3 == Polynomial.from_roots(1, 1, 1)


def test_root_multiplicity_and_deflate():
    p = Polynomial.from_roots(1, 1, 2)
    assert p.root_multiplicity(1) == 2
    assert p.deflate(2) == Polynomial((-2, 1))
    with pytest.raises(ArithmeticError):
        p.deflate(3)
    assert Polynomial().root_multiplicity() is None


@settings(max_examples=100, deadline=None)
@given(st.lists(small_int, min_size=1, max_size=6), small_int)
def test_synthetic_division_matches_sympy(coeffs, root):
    lam = sympy.Symbol("x")
    p = Polynomial(tuple(coeffs))
    q, r = p.divide_by_linear(root)
    P = sum(c * lam ** i for i, c in enumerate(coeffs))
    Q, R = sympy.div(P, lam - root, lam)
    assert r == int(R)
    assert sympy.expand(sum(c * lam ** i for i, c in enumerate(q.coefficients)) - Q) == 0
