"""Matroids given by an explicit basis family.

Ground sets are ``range(n)``. Subsets are handled internally as bitmasks and
exposed as ``frozenset``. Sizes up to roughly a dozen elements are intended.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .polynomial import Polynomial


class MatroidError(ValueError):
    pass


class EmptyBases(MatroidError):
    pass


class UnequalCardinality(MatroidError):
    pass


class ExchangeViolation(MatroidError):
    pass


class SubsetViolation(MatroidError):
    pass


class LoopInput(MatroidError):
    pass


def _mask(s):
    m = 0
    for x in s:
        m |= 1 << x
    return m


def _members(m):
    out, i = [], 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def _submasks(m):
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


@dataclass(frozen=True, eq=False)
class Matroid:
    """A matroid on ``{0, ..., n-1}``.

    ``labels`` records, for minors and other derived matroids, which element of
    the parent each element came from. It does not take part in equality.
    """

    n: int
    bases: frozenset
    labels: tuple = field(default=None, compare=False)

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.n == other.n and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, bases={len(self.bases)})"

    # -- internal bitmask views -------------------------------------------

    @cached_property
    def _basis_masks(self):
        return frozenset(_mask(b) for b in self.bases)

    @cached_property
    def _independent(self):
        out = set()
        for b in self._basis_masks:
            out.update(_submasks(b))
        return frozenset(out)

    @property
    def ground(self):
        return frozenset(range(self.n))

    @cached_property
    def rank(self):
        return len(next(iter(self.bases)))

    def _rank_mask(self, m):
        ind = self._independent
        cur = 0
        for x in _members(m):
            trial = cur | (1 << x)
            if trial in ind:
                cur = trial
        return bin(cur).count("1")

    def _closure_mask(self, m):
        r = self._rank_mask(m)
        out = m
        for x in range(self.n):
            if not (m >> x) & 1 and self._rank_mask(m | (1 << x)) == r:
                out |= 1 << x
        return out

    # -- public queries ------------------------------------------------------

    def rank_of(self, subset):
        return self._rank_mask(_mask(subset))

    def closure(self, subset):
        return frozenset(_members(self._closure_mask(_mask(subset))))

    def is_independent(self, subset):
        return _mask(subset) in self._independent

    @cached_property
    def _flat_masks(self):
        bottom = self._closure_mask(0)
        levels = [[bottom]]
        seen = {bottom}
        full = (1 << self.n) - 1
        while levels[-1] != [full] and levels[-1]:
            nxt = []
            for f in levels[-1]:
                for x in range(self.n):
                    if not (f >> x) & 1:
                        g = self._closure_mask(f | (1 << x))
                        if g not in seen:
                            seen.add(g)
                            nxt.append(g)
            if not nxt:
                break
            levels.append(sorted(nxt))
        return levels

    def flats(self):
        """All flats, grouped by rank (list index = rank offset from the bottom flat)."""
        return [[frozenset(_members(f)) for f in level] for level in self._flat_masks]

    def flat_list(self):
        return [f for level in self.flats() for f in level]

    @cached_property
    def loops(self):
        return frozenset(_members(self._closure_mask(0)))

    def is_loopless(self):
        return not self.loops

    @cached_property
    def coloops(self):
        return frozenset(x for x in range(self.n) if all((b >> x) & 1 for b in self._basis_masks))

    @cached_property
    def circuits(self):
        ind = self._independent
        out = []
        for size in range(1, self.rank + 2):
            for c in combinations(range(self.n), size):
                m = _mask(c)
                if m in ind:
                    continue
                if all((m & ~(1 << x)) in ind for x in c):
                    out.append(frozenset(c))
        return tuple(out)

    def to_json(self):
        return {"n": self.n, "bases": sorted(sorted(b) for b in self.bases)}

    @classmethod
    def from_json(cls, data):
        return from_bases(data["n"], data["bases"])


def from_bases(n, bases, validate=True):
    """Build a matroid from a basis family, checking the axioms exhaustively."""
    if n < 0:
        raise MatroidError("ground set size must be nonnegative")
    fam = []
    for b in bases:
        s = frozenset(int(x) for x in b)
        if any(x < 0 or x >= n for x in s):
            raise SubsetViolation(f"basis {sorted(s)} is not a subset of range({n})")
        fam.append(s)
    fam = frozenset(fam)
    if not fam:
        raise EmptyBases("a matroid needs at least one basis")
    if validate:
        sizes = {}
        for b in fam:
            sizes.setdefault(len(b), b)
        if len(sizes) > 1:
            (k1, b1), (k2, b2) = list(sizes.items())[:2]
            raise UnequalCardinality(
                f"bases {sorted(b1)} and {sorted(b2)} have sizes {k1} and {k2}")
        for b1 in fam:
            for b2 in fam:
                if b1 == b2:
                    continue
                for x in b1 - b2:
                    if not any((b1 - {x}) | {y} in fam for y in b2 - b1):
                        raise ExchangeViolation(
                            f"no exchange for x={x} between bases {sorted(b1)} and {sorted(b2)}")
    return Matroid(n, fam)


# -- constructors -------------------------------------------------------------

def uniform(r, n):
    if not 0 <= r <= n:
        raise MatroidError(f"U_{{{r},{n}}} needs 0 <= r <= n")
    return Matroid(n, frozenset(frozenset(c) for c in combinations(range(n), r)))


def free(n):
    return uniform(n, n)


def graphic(edges, vertices=None):
    """Cycle matroid of a multigraph given as a list of vertex pairs."""
    edges = [tuple(e) for e in edges]
    if vertices is None:
        vertices = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(vertices)}

    def forest_rank(sel):
        parent = list(range(len(vertices)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        r = 0
        for i in sel:
            a, b = find(index[edges[i][0]]), find(index[edges[i][1]])
            if a != b:
                parent[a] = b
                r += 1
        return r

    r = forest_rank(range(len(edges)))
    bases = frozenset(frozenset(c) for c in combinations(range(len(edges)), r)
                      if forest_rank(c) == r)
    return Matroid(len(edges), bases)


# Columns of the 3x7 matrix over GF(2) whose nonzero points give the Fano plane.
FANO_LINES = ((0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2))


def _from_dependent_triples(lines):
    bases = frozenset(frozenset(c) for c in combinations(range(7), 3)
                      if frozenset(c) not in {frozenset(l) for l in lines})
    return Matroid(7, bases)


def fano():
    return _from_dependent_triples(FANO_LINES)


def non_fano():
    """Fano plane with one line relaxed to a basis."""
    return _from_dependent_triples(FANO_LINES[:-1])


# -- minors and sums ---------------------------------------------------------

def minor(M, restrict_to, contract_by=()):
    """``M | restrict_to / contract_by`` relabelled to ``0..m-1``.

    ``labels`` on the result maps each new element to its label in ``M``.
    """
    R, C = frozenset(restrict_to), frozenset(contract_by)
    if not C <= R or not R <= M.ground:
        raise SubsetViolation(f"need contract_by ⊆ restrict_to ⊆ ground set, got {sorted(C)}, {sorted(R)}")
    keep = sorted(R - C)
    relabel = {x: i for i, x in enumerate(keep)}
    # a basis of C, extended to a basis of R
    ind = M._independent
    basis_c = 0
    for x in sorted(C):
        if basis_c | (1 << x) in ind:
            basis_c |= 1 << x
    rR = M._rank_mask(_mask(R))
    rC = bin(basis_c).count("1")
    out = set()
    for sub in combinations(keep, rR - rC):
        if (_mask(sub) | basis_c) in ind:
            out.add(frozenset(relabel[x] for x in sub))
    return Matroid(len(keep), frozenset(out), labels=tuple(keep))


def restriction(M, subset):
    return minor(M, subset, ())


def contraction(M, subset):
    return minor(M, M.ground, subset)


def deletion(M, subset):
    return minor(M, M.ground - frozenset(subset), ())


def direct_sum(M1, M2):
    shift = M1.n
    bases = frozenset(b1 | frozenset(x + shift for x in b2) for b1 in M1.bases for b2 in M2.bases)
    return Matroid(M1.n + M2.n, bases)


# -- parallel connection -----------------------------------------------------

def _parallel_layout(M1, p1, M2, p2):
    """Label map of the parallel connection: p -> 0, then E1 - p1, then E2 - p2."""
    rest1 = [x for x in range(M1.n) if x != p1]
    rest2 = [x for x in range(M2.n) if x != p2]
    to1 = {0: p1}
    to2 = {0: p2}
    for i, x in enumerate(rest1, start=1):
        to1[i] = x
    for i, x in enumerate(rest2, start=1 + len(rest1)):
        to2[i] = x
    return 1 + len(rest1) + len(rest2), to1, to2


def _bases_from_independent(n, is_independent):
    best = 0
    sets = []
    for size in range(n, -1, -1):
        sets = [frozenset(c) for c in combinations(range(n), size) if is_independent(c)]
        if sets:
            best = size
            break
    return frozenset(sets), best


def _parallel_via_flats(M1, p1, M2, p2):
    N, to1, to2 = _parallel_layout(M1, p1, M2, p2)
    flats1 = {f for f in M1.flat_list()}
    flats2 = {f for f in M2.flat_list()}
    flat_masks = []
    for m in range(1 << N):
        elems = _members(m)
        a = frozenset(to1[e] for e in elems if e in to1)
        b = frozenset(to2[e] for e in elems if e in to2)
        if a in flats1 and b in flats2:
            flat_masks.append(m)
    full = (1 << N) - 1

    def close(m):
        out = full
        for f in flat_masks:
            if f & m == m:
                out &= f
        return out

    def independent(c):
        m = _mask(c)
        return all(not (close(m & ~(1 << x)) >> x) & 1 for x in c)

    bases, _ = _bases_from_independent(N, independent)
    return Matroid(N, bases)


def _parallel_via_circuits(M1, p1, M2, p2):
    N, to1, to2 = _parallel_layout(M1, p1, M2, p2)
    from1 = {v: k for k, v in to1.items()}
    from2 = {v: k for k, v in to2.items()}
    circuits = set()
    for c in M1.circuits:
        circuits.add(_mask(from1[x] for x in c))
    for c in M2.circuits:
        circuits.add(_mask(from2[x] for x in c))
    through1 = [frozenset(from1[x] for x in c if x != p1) for c in M1.circuits if p1 in c]
    through2 = [frozenset(from2[x] for x in c if x != p2) for c in M2.circuits if p2 in c]
    for i1 in through1:
        for i2 in through2:
            circuits.add(_mask(i1 | i2))

    def independent(c):
        m = _mask(c)
        return not any(k & m == k for k in circuits)

    bases, _ = _bases_from_independent(N, independent)
    return Matroid(N, bases)


def parallel_connection(M1, p1, M2, p2):
    """Parallel connection glued at ``p1 ~ p2``; the glued element is labelled 0.

    Built from the flats description and cross-checked against the circuits
    description; a mismatch raises ``MatroidError``.
    """
    for M, p in ((M1, p1), (M2, p2)):
        if M.loops:
            raise LoopInput(f"factor has loops {sorted(M.loops)}")
        if not 0 <= p < M.n:
            raise SubsetViolation(f"basepoint {p} outside ground set")
    P = _parallel_via_flats(M1, p1, M2, p2)
    Q = _parallel_via_circuits(M1, p1, M2, p2)
    if P != Q:
        raise MatroidError("flats and circuits descriptions of the parallel connection disagree")
    N, to1, to2 = _parallel_layout(M1, p1, M2, p2)
    return Matroid(P.n, P.bases, labels=tuple((to1.get(i), to2.get(i)) for i in range(N)))


# -- polynomials and invariants ----------------------------------------------

def mobius_from_bottom(M):
    """Möbius function mu(bottom, F) on the lattice of flats, keyed by flat."""
    levels = M._flat_masks
    mu = {}
    ordered = [f for level in levels for f in level]
    bottom = ordered[0]
    for f in ordered:
        if f == bottom:
            mu[f] = 1
            continue
        mu[f] = -sum(v for g, v in mu.items() if g & f == g and g != f)
    return {frozenset(_members(f)): v for f, v in mu.items()}


def characteristic_polynomial(M):
    """chi_M(λ) = sum over flats F of mu(∅, F) λ^(r - r(F)); zero if M has a loop."""
    if M.loops:
        return Polynomial()
    r = M.rank
    total = Polynomial()
    for f, mu in mobius_from_bottom(M).items():
        total = total + Polynomial.monomial(r - M.rank_of(f), mu)
    return total


def reduced_characteristic_polynomial(M):
    chi = characteristic_polynomial(M)
    if chi.is_zero():
        return chi
    if M.rank == 0:
        raise MatroidError("the reduced characteristic polynomial needs rank >= 1")
    return chi.deflate(1)


def beta_invariant(M):
    """Crapo's beta: (-1)^(r-1) times the reduced characteristic polynomial at 1."""
    if M.loops or M.n == 0:
        return 0
    return (-1) ** (M.rank - 1) * reduced_characteristic_polynomial(M)(1)
