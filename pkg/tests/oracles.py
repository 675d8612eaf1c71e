"""Independent reference computations used to derive expected values.

Nothing here imports the package's algorithms beyond plain data types; each
oracle recomputes its quantity from first principles by a different route.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

import networkx as nx
import sympy


def brute_rank(bases, subset):
    s = frozenset(subset)
    return max(len(s & b) for b in bases)


def brute_flats(n, bases):
    """Closed sets by testing every subset of the ground set."""
    out = set()
    for size in range(n + 1):
        for c in combinations(range(n), size):
            r = brute_rank(bases, c)
            if all(brute_rank(bases, c + (x,)) > r for x in range(n) if x not in c):
                out.add(frozenset(c))
    return out


def chi_deletion_contraction(n, bases):
    """Characteristic polynomial (coefficients, low degree first) by deletion-contraction.

    chi_M = chi_{M\\e} - chi_{M/e} for e neither loop nor coloop,
    chi = 0 with a loop, chi_M = (λ - 1) chi_{M/e} for a coloop e.
    """
    bases = frozenset(frozenset(b) for b in bases)

    @lru_cache(maxsize=None)
    def chi(ground, bases):
        if not ground:
            return (1,)
        e = min(ground)
        rest = ground - {e}
        if all(e not in b for b in bases):  # loop
            return (0,)
        if all(e in b for b in bases):  # coloop
            c = chi(rest, frozenset(b - {e} for b in bases))
            return _poly_mul(c, (-1, 1))
        dele = frozenset(b for b in bases if e not in b)
        con = frozenset(b - {e} for b in bases if e in b)
        return _poly_sub(chi(rest, dele), chi(rest, con))

    return _trim(chi(frozenset(range(n)), bases))


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    m = max(len(a), len(b))
    a = list(a) + [0] * (m - len(a))
    b = list(b) + [0] * (m - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def poly_mul(a, b):
    return _poly_mul(a, b)


def beta_from_chi(chi, rank):
    """(-1)^(r-1) * (chi / (λ-1))(1) = (-1)^(r-1) chi'(1) (l'Hôpital on the simple root)."""
    deriv = sum(i * c for i, c in enumerate(chi))
    return (-1) ** (rank - 1) * deriv


def graph_rank(edges, subset):
    """Rank of an edge subset in the cycle matroid: vertices minus components."""
    G = nx.MultiGraph()
    for i in subset:
        G.add_edge(*edges[i])
    return G.number_of_nodes() - nx.number_connected_components(G) if G.number_of_nodes() else 0


def q_rank(rows):
    return sympy.Matrix(rows).rank() if rows else 0


def q_det(rows):
    return int(sympy.Matrix(rows).det())


def simplex_points(d):
    return comb(d + 3, 3)


def simplex_interior(d):
    return comb(d - 1, 3) if d >= 4 else 0


def lattice_points_in_simplex(d):
    return sum(1 for x in range(d + 1) for y in range(d + 1) for z in range(d + 1)
               if x + y + z <= d)


def interior_points_in_simplex(d):
    return sum(1 for x in range(1, d) for y in range(1, d) for z in range(1, d) if x + y + z < d)


def to_fraction(v):
    return tuple(Fraction(x) for x in v)
