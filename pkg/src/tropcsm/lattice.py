"""Exact integer and rational linear algebra on plain Python lists.

Vectors are tuples of ``int`` (or ``Fraction`` where noted); matrices are
sequences of row vectors. Everything here is exact.
"""

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd


class ZeroVector(ValueError):
    pass


def primitive(v):
    """Divide an integer vector by the gcd of its entries, keeping the sign."""
    g = reduce(gcd, v, 0)
    if g == 0:
        raise ZeroVector(f"zero vector has no primitive direction: {tuple(v)}")
    return tuple(x // g for x in v)


def integral(v):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    v = [Fraction(x) for x in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in v), 1)
    return primitive([int(x * den) for x in v])


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def matvec(A, v):
    return tuple(dot(row, v) for row in A)


def matmul(A, B):
    cols = list(zip(*B))
    return [tuple(dot(row, c) for c in cols) for row in A]


def transpose(A):
    return [tuple(c) for c in zip(*A)]


def identity(n):
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def _as_int_row(r):
    if all(isinstance(x, int) for x in r):
        return list(r)
    return list(integral(r)) if any(r) else [0] * len(r)


def rank(rows):
    """Rank over Q by fraction-free (Bareiss) elimination."""
    M = [_as_int_row(r) for r in rows if any(r)]
    if not M:
        return 0
    m, n = len(M), len(M[0])
    r, prev = 0, 1
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for i in range(r + 1, m):
            a = M[i][c]
            row_i, row_r = M[i], M[r]
            for j in range(c + 1, n):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank_tall(rows, ncols):
    """Rank of many integer rows with few columns: incremental echelon with early exit."""
    basis = {}  # pivot column -> primitive row with that leading column
    seen = set()
    for row in rows:
        row = tuple(row)
        if row in seen:
            continue
        seen.add(row)
        v = list(row)
        for j in range(ncols):
            if not v[j]:
                continue
            b = basis.get(j)
            if b is None:
                g = 0
                for x in v:
                    g = gcd(g, x)
                basis[j] = [x // g for x in v]
                break
            a, c = b[j], v[j]
            v = [a * x - c * y for x, y in zip(v, b)]
        if len(basis) == ncols:
            break
    return len(basis)


def det(M):
    """Determinant of a square integer matrix (Bareiss)."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = M
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rref(rows, ncols=None):
    """Reduced row echelon form over Q. Returns (rows, pivot_columns)."""
    M = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def nullspace(rows, n):
    """Integer basis (primitive vectors) of {x in Q^n : A x = 0}."""
    R, pivots = rref(rows, n) if rows else ([], [])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(integral(x))
    return basis


def solve(columns, b):
    """Unique rational coefficients c with sum c_i * columns[i] = b, or None.

    The columns must be linearly independent.
    """
    n = len(b)
    k = len(columns)
    aug = [[columns[j][i] for j in range(k)] + [b[i]] for i in range(n)]
    R, pivots = rref(aug, k + 1)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, p in zip(R, pivots):
        coeffs[p] = row[k]
    return coeffs


def in_span(vectors, v):
    return rank(list(vectors) + [v]) == rank(vectors)


def reduce_mod_rref(v, R, pivots):
    """Kill the pivot coordinates of v using the rational RREF rows R."""
    v = [Fraction(x) for x in v]
    for row, p in zip(R, pivots):
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def _xgcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite(rows, ncols=None, track=False):
    """Row-style Hermite normal form by unimodular row operations.

    Returns ``(H, U)`` where ``H`` lists all rows of ``U @ A`` (zero rows at the
    bottom) and ``U`` is unimodular; ``U`` is ``None`` unless ``track``.
    Pivots are positive and entries above a pivot are reduced into
    ``[0, pivot)``.
    """
    A = [list(r) for r in rows]
    m = len(A)
    if ncols is None:
        ncols = len(A[0]) if A else 0
    U = [list(r) for r in identity(m)] if track else None
    r = 0
    for c in range(ncols):
        if r == m:
            break
        nz = [i for i in range(r, m) if A[i][c]]
        if not nz:
            continue
        # fold every nonzero entry of column c into row r via 2x2 gcd steps
        if A[r][c] == 0:
            A[r], A[nz[0]] = A[nz[0]], A[r]
            if track:
                U[r], U[nz[0]] = U[nz[0]], U[r]
        for i in range(r + 1, m):
            if A[i][c] == 0:
                continue
            a, b = A[r][c], A[i][c]
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            new_r = [x * s + y * t for s, t in zip(A[r], A[i])]
            new_i = [-q * s + p * t for s, t in zip(A[r], A[i])]
            A[r], A[i] = new_r, new_i
            if track:
                ur = [x * s + y * t for s, t in zip(U[r], U[i])]
                ui = [-q * s + p * t for s, t in zip(U[r], U[i])]
                U[r], U[i] = ur, ui
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
            if track:
                U[r] = [-x for x in U[r]]
        piv = A[r][c]
        for i in range(r):
            f = A[i][c] // piv
            if f:
                A[i] = [s - f * t for s, t in zip(A[i], A[r])]
                if track:
                    U[i] = [s - f * t for s, t in zip(U[i], U[r])]
        r += 1
    H = [tuple(x) for x in A]
    return H, ([tuple(x) for x in U] if track else None)


def integer_kernel(rows, n):
    """Basis of the lattice {x in Z^n : A x = 0}; it is saturated by construction."""
    if not rows:
        return identity(n)
    At = transpose(rows)  # n rows
    H, U = hermite(At, track=True)
    return [U[i] for i in range(n) if not any(H[i])]


def saturation(gens, n):
    """Basis of span_R(gens) ∩ Z^n."""
    gens = [g for g in gens if any(g)]
    if not gens:
        return []
    perp = integer_kernel(gens, n)
    if not perp:
        return identity(n)
    return integer_kernel(perp, n)


def lattice_index(gens, n):
    """Index of the lattice spanned by ``gens`` inside its saturation."""
    gens = [g for g in gens if any(g)]
    if not gens:
        return 1
    H, _ = hermite(gens, n)
    H = [h for h in H if any(h)]
    sat = saturation(gens, n)
    # both are bases of rank-r lattices in the same r-space; compare covolumes
    # through coordinates in the saturated basis
    coords = [solve(sat, h) for h in H]
    M = [[int(c) for c in row] for row in coords]
    return abs(det(M))


def wedge(vectors, n):
    """Plücker coordinates of v_1 ∧ ... ∧ v_p, indexed by sorted p-subsets of range(n)."""
    p = len(vectors)
    if p == 0:
        return (1,)
    cols = list(zip(*vectors))
    return tuple(det([cols[i] for i in idx]) for idx in combinations(range(n), p))


def independent_subset(vectors):
    """Greedy maximal linearly independent sublist."""
    chosen = []
    for v in vectors:
        if any(v) and rank(chosen + [v]) > len(chosen):
            chosen.append(v)
    return chosen


def unit_functional_preimage(g):
    """Integer vector y with g . y = 1 for a primitive integer vector g."""
    y = [0] * len(g)
    cur, coeffs = 0, {}
    for i, gi in enumerate(g):
        if not gi:
            continue
        s = 1 if gi > 0 else -1
        if cur == 0:
            cur, coeffs = abs(gi), {i: s}
            continue
        d, a, b = _xgcd(cur, abs(gi))
        coeffs = {j: a * c for j, c in coeffs.items()}
        coeffs[i] = b * s
        cur = d
    if cur != 1:
        raise ValueError(f"vector {tuple(g)} is not primitive")
    for i, c in coeffs.items():
        y[i] = c
    return tuple(y)


def quotient_generator(face_gens, cone_gens, direction, n):
    """Lattice point of span(cone) generating N_cone / N_face, on the side of ``direction``.

    ``span(face)`` must be a hyperplane in ``span(cone)`` and ``direction`` a
    vector of the cone outside that hyperplane.
    """
    big = saturation(cone_gens, n)
    small = saturation(face_gens, n)
    k = len(big)
    if len(small) != k - 1:
        raise ValueError("face does not have codimension one in cone")
    coords = [[int(c) for c in solve(big, s)] for s in small]
    normal = integer_kernel(coords, k)
    if len(normal) != 1:
        raise ValueError("face lattice is not of corank one")
    g = normal[0]
    side = dot(g, solve(big, direction))
    if side == 0:
        raise ValueError("direction lies in the face span")
    y = unit_functional_preimage(g)
    if side < 0:
        y = tuple(-c for c in y)
    return tuple(sum(y[i] * big[i][j] for i in range(k)) for j in range(n))


def random_unimodular(n, rng, steps=None, spread=3):
    """Random matrix in GL_n(Z): a signed permutation times elementary row operations."""
    steps = 4 * n if steps is None else steps
    perm = list(range(n))
    rng.shuffle(perm)
    U = [[(rng.choice((-1, 1)) if perm[i] == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-spread, spread)
        for k in range(n):
            U[i][k] += c * U[j][k]
    return [tuple(r) for r in U]
