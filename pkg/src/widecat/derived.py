"""Bounded complexes of finitely generated free modules (homological grading).

These are exactly the perfect complexes, so every complex built here is a
small object of the derived category by construction.
"""

from itertools import combinations

from .freemod import (
    FPModule,
    _subquotient,
    matrix_product,
    minimal_free_resolution,
    prune,
    syzygies,
)
from .polyring import RingMismatch
from .spectrum import ClosedLocus, check_supported, support_of


class NotAComplex(ValueError):
    name = "not-a-complex"


class NotAChainMap(ValueError):
    name = "not-a-chain-map"


def _zero_matrix(ring, rows, cols):
    return [[ring.zero] * cols for _ in range(rows)]


def _is_zero_matrix(M):
    return not any(any(row) for row in M)


class FreeComplex:
    """``ranks[n]`` is the rank of ``C_n``; ``diffs[n]`` is ``d_n: C_n -> C_{n-1}``."""

    def __init__(self, ring, ranks, diffs=None):
        self.ring = ring
        self.ranks = {n: r for n, r in ranks.items() if r}
        self.diffs = {}
        for n, mat in (diffs or {}).items():
            mat = [[ring.canonical(ring(a)) for a in row] for row in mat]
            if len(mat) != self.rank(n - 1) or any(len(row) != self.rank(n) for row in mat):
                raise NotAComplex(f"d_{n} has the wrong shape")
            if not _is_zero_matrix(mat):
                self.diffs[n] = mat
        for n in self.diffs:
            if n + 1 in self.diffs and not _is_zero_matrix(
                matrix_product(ring, self.diffs[n], self.diffs[n + 1])
            ):
                raise NotAComplex(f"d_{n} o d_{n + 1} != 0")

    @classmethod
    def from_list(cls, ring, lowest, ranks, diffs):
        """``diffs[i]`` is ``d_{lowest+i+1}``."""
        rk = {lowest + i: r for i, r in enumerate(ranks)}
        return cls(ring, rk, {lowest + i + 1: m for i, m in enumerate(diffs)})

    def rank(self, n):
        return self.ranks.get(n, 0)

    def d(self, n):
        return self.diffs.get(n) or _zero_matrix(self.ring, self.rank(n - 1), self.rank(n))

    def degrees(self):
        return sorted(self.ranks)

    @property
    def lowest(self):
        return min(self.ranks, default=0)

    @property
    def highest(self):
        return max(self.ranks, default=-1)

    def __eq__(self, other):
        return (
            isinstance(other, FreeComplex)
            and self.ring == other.ring
            and self.ranks == other.ranks
            and self.diffs == other.diffs
        )

    def __repr__(self):
        parts = [f"C_{n}=R^{self.rank(n)}" for n in self.degrees()]
        return "FreeComplex(" + ", ".join(parts) + ")"

    def homology(self, n):
        return homology(self, n)


def homology(X, n):
    """``H_n = ker d_n / im d_{n+1}``, pruned."""
    ring = X.ring
    r = X.rank(n)
    if r == 0:
        return FPModule.zero(ring)
    dn = X.d(n)
    cols_n = [[row[j] for row in dn] for j in range(r)]
    K = syzygies(ring, cols_n, X.rank(n - 1))
    up = X.d(n + 1)
    im = [[row[j] for row in up] for j in range(X.rank(n + 1))]
    return prune(_subquotient(ring, K, im, r))


def s0(ring, n=1):
    """``R^n`` concentrated in degree 0."""
    return FreeComplex(ring, {0: n})


def shift(X, k):
    """``(Sigma^k X)_n = X_{n-k}`` with differential ``(-1)^k d``."""
    ring = X.ring
    sign = -1 if k % 2 else 1
    diffs = {n + k: [[sign * a for a in row] for row in m] for n, m in X.diffs.items()}
    return FreeComplex(ring, {n + k: r for n, r in X.ranks.items()}, diffs)


class ChainMap:
    """``maps[n]`` is the matrix of ``f_n: X_n -> Y_n``; missing degrees are zero."""

    def __init__(self, source, target, maps):
        if source.ring != target.ring:
            raise RingMismatch(f"{source.ring} vs {target.ring}")
        ring = source.ring
        self.source, self.target = source, target
        self.maps = {}
        for n, m in maps.items():
            m = [[ring.canonical(ring(a)) for a in row] for row in m]
            if len(m) != target.rank(n) or any(len(row) != source.rank(n) for row in m):
                raise NotAChainMap(f"f_{n} has the wrong shape")
            self.maps[n] = m
        degs = set(source.ranks) | set(target.ranks)
        for n in degs | {d + 1 for d in degs}:
            lhs = matrix_product(ring, target.d(n), self.f(n))
            rhs = matrix_product(ring, self.f(n - 1), source.d(n))
            if not _is_zero_matrix(_sub(ring, lhs, rhs)):
                raise NotAChainMap(f"d f != f d in degree {n}")

    def f(self, n):
        return self.maps.get(n) or _zero_matrix(self.source.ring, self.target.rank(n), self.source.rank(n))


def _sub(ring, A, B):
    if not A:
        return []
    return [[ring.canonical(a - b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def cone(f):
    """``Cone_n = X_{n-1} + Y_n``, ``d(x, y) = (-d x, f x + d y)``."""
    X, Y = f.source, f.target
    ring = X.ring
    degs = {n + 1 for n in X.ranks} | set(Y.ranks)
    ranks = {n: X.rank(n - 1) + Y.rank(n) for n in degs}
    diffs = {}
    for n in degs:
        if n - 1 not in degs:
            continue
        dx = X.d(n - 1)
        dy = Y.d(n)
        fx = f.f(n - 1)
        top = [[-a for a in row] + [ring.zero] * Y.rank(n) for row in dx]
        bottom = [fx[i] + dy[i] for i in range(Y.rank(n - 1))]
        diffs[n] = top + bottom
    return FreeComplex(ring, ranks, diffs)


def presentation_complex(M):
    """``R^m --A--> R^n`` in degrees 1, 0; ``H_0`` is ``M``."""
    ring = M.ring
    m = len(M.relations)
    if m == 0:
        return FreeComplex(ring, {0: M.ngens})
    return FreeComplex(ring, {0: M.ngens, 1: m}, {1: M.matrix()})


def perfectize(M, cap=16):
    """Minimal free resolution of a graded module as a complex quasi-isomorphic to ``S^0 M``."""
    res = minimal_free_resolution(M, cap)
    ranks = {k: r for k, r in enumerate(res.ranks)}
    diffs = {k + 1: m for k, m in enumerate(res.maps)}
    return FreeComplex(M.ring, ranks, diffs)


def koszul(elements, ring):
    """Koszul complex on ``elements``: ``C_i`` has basis the ``i``-subsets."""
    fs = [ring(f) for f in elements]
    k = len(fs)
    if k == 0:
        raise ValueError("koszul needs at least one element")
    bases = [list(combinations(range(k), i)) for i in range(k + 1)]
    ranks = {i: len(bases[i]) for i in range(k + 1)}
    diffs = {}
    for i in range(1, k + 1):
        index = {S: r for r, S in enumerate(bases[i - 1])}
        mat = _zero_matrix(ring, len(bases[i - 1]), len(bases[i]))
        for c, S in enumerate(bases[i]):
            for pos, j in enumerate(S):
                sign = 1 if pos % 2 == 0 else -1
                mat[index[S[:pos] + S[pos + 1:]]][c] = sign * fs[j]
        diffs[i] = mat
    return FreeComplex(ring, ranks, diffs)


def support_of_complex(X):
    """Union of the supports of the homology modules."""
    loc = ClosedLocus.empty(X.ring)
    for n in X.degrees():
        H = homology(X, n)
        if H.ngens:
            loc = loc.union(support_of(H))
    return loc


class ThickSubcat:
    """Thick subcategory of perfect complexes classified by ``datum``."""

    def __init__(self, ring, generators, datum):
        self.ring = ring
        self.generators = tuple(generators)
        self.datum = datum

    def __repr__(self):
        return f"thick[{self.ring}]{{datum {self.datum}, {len(self.generators)} generators}}"


def thick_generated_by(generators, ring):
    check_supported(ring)
    loc = ClosedLocus.empty(ring)
    for X in generators:
        if X.ring != ring:
            raise RingMismatch(f"{X.ring} vs {ring}")
        loc = loc.union(support_of_complex(X))
    return ThickSubcat(ring, generators, loc)


def member_thick(X, T):
    """``X`` lies in ``T`` iff its homological support lies in the datum."""
    check_supported(T.ring)
    if X.ring != T.ring:
        raise RingMismatch(f"{X.ring} vs {T.ring}")
    return support_of_complex(X).contained_in(T.datum)
