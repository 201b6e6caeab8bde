"""Finitely presented modules, module maps and free resolutions.

A module is ``coker(A)`` for a presentation ``A: R^m -> R^n`` whose ``m``
columns are the relations.  Everything works over a ``PolyRing`` (possibly a
quotient k[x]/a) or an ``IntegerRing`` (ZZ or ZZ/n); quotient rings are
handled by lifting to the ambient ring and appending ``g * e_i`` for every
modulus generator ``g``.
"""

from itertools import combinations

from .polyring import PolyRing, RingMismatch


class InvalidMap(ValueError):
    name = "invalid-map"


class PdBoundExceeded(ArithmeticError):
    """The resolution did not stop within the cap.

    Either the projective dimension is infinite or the cap is too small; the
    two cases are not told apart.
    """

    name = "pd-bound-exceeded"


class NotGraded(ValueError):
    name = "not-graded"


def _canon(ring, vec):
    return tuple(ring.canonical(a) for a in vec)


def _lifted(ring, cols, rank):
    out = [list(c) for c in cols]
    for g in ring.modulus_gens():
        for i in range(rank):
            out.append([g if k == i else ring.zero for k in range(rank)])
    return out


def _rows(cols, rank):
    return [[c[i] for c in cols] for i in range(rank)]


def syzygies(ring, cols, rank):
    """Columns generating ``ker(R^m -> R^rank)`` for the map with the given columns."""
    m = len(cols)
    if m == 0:
        return []
    allcols = _lifted(ring, cols, rank)
    out, seen = [], set()
    for v in ring.syzygies(_rows(allcols, rank), len(allcols)):
        w = _canon(ring, v[:m])
        if any(w) and w not in seen:
            seen.add(w)
            out.append(list(w))
    return out


def submodule(ring, vectors, rank):
    """Membership oracle for the submodule of ``R^rank`` spanned by ``vectors``."""
    return ring.submodule(_lifted(ring, vectors, rank), rank)


def matrix_apply(ring, F, vec):
    return [ring.canonical(sum((a * b for a, b in zip(row, vec)), ring.zero)) for row in F]


def matrix_product(ring, A, B):
    """``A @ B`` for row-major matrices; ``B`` given with at least one row or as ``[]``."""
    if not A:
        return []
    ncols = len(B[0]) if B else 0
    return [
        [ring.canonical(sum((row[k] * B[k][j] for k in range(len(B))), ring.zero)) for j in range(ncols)]
        for row in A
    ]


class FPModule:
    """``coker`` of a presentation; optionally graded by generator degrees."""

    def __init__(self, ring, ngens, relations=(), degrees=None):
        self.ring = ring
        self.ngens = ngens
        rels = []
        for r in relations:
            r = _canon(ring, r)
            if len(r) != ngens:
                raise ValueError(f"relation of length {len(r)} in a module with {ngens} generators")
            rels.append(r)
        self.relations = tuple(rels)
        self.degrees = tuple(degrees) if degrees is not None else None
        if self.degrees is not None and len(self.degrees) != ngens:
            raise ValueError("one degree per generator required")
        self._sub = None

    # constructors -------------------------------------------------------
    @classmethod
    def free(cls, ring, n, degrees=None):
        return cls(ring, n, (), degrees if degrees is not None else _default_degrees(ring, n))

    @classmethod
    def zero(cls, ring):
        return cls(ring, 0, (), ())

    @classmethod
    def cyclic(cls, ring, gens):
        """``R/(gens)``; graded when the generators are homogeneous."""
        rels = [[ring(g)] for g in gens]
        degs = (0,) if isinstance(ring, PolyRing) else None
        M = cls(ring, 1, rels, degs)
        if degs is not None and not M.is_homogeneous():
            M.degrees = None
        return M

    @classmethod
    def from_matrix(cls, ring, rows, degrees=None):
        """Module presented by a row-major ``n x m`` matrix."""
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged presentation matrix")
        cols = [[rows[i][j] for i in range(n)] for j in range(m)]
        return cls(ring, n, cols, degrees)

    # views --------------------------------------------------------------
    def matrix(self):
        return _rows(self.relations, self.ngens)

    def __eq__(self, other):
        return (
            isinstance(other, FPModule)
            and self.ring == other.ring
            and self.ngens == other.ngens
            and self.relations == other.relations
            and self.degrees == other.degrees
        )

    def __hash__(self):
        return hash((self.ring, self.ngens, self.relations, self.degrees))

    def __repr__(self):
        rows = self.matrix()
        body = "; ".join(", ".join(map(str, r)) for r in rows)
        return f"coker[{self.ngens}x{len(self.relations)}: {body}]"

    def relation_module(self):
        if self._sub is None:
            self._sub = submodule(self.ring, self.relations, self.ngens)
        return self._sub

    def is_zero_element(self, vec):
        return self.relation_module().contains(list(vec))

    def is_zero(self):
        return all(
            self.is_zero_element([self.ring.one if k == i else self.ring.zero for k in range(self.ngens)])
            for i in range(self.ngens)
        )

    def is_graded(self):
        return self.degrees is not None and self.is_homogeneous()

    def is_homogeneous(self):
        if self.degrees is None or not isinstance(self.ring, PolyRing):
            return False
        if any(not g.is_homogeneous() for g in self.ring.modulus_gens()):
            return False
        try:
            for c in self.relations:
                column_degree(self.ring, c, self.degrees)
        except NotGraded:
            return False
        return True

    def relation_degrees(self):
        return [column_degree(self.ring, c, self.degrees) for c in self.relations]

    def prune(self):
        return prune(self)


def _default_degrees(ring, n):
    return (0,) * n if isinstance(ring, PolyRing) else None


def column_degree(ring, col, degrees):
    """Degree of a homogeneous column, or ``None`` for the zero column."""
    deg = None
    for a, d in zip(col, degrees):
        if not a:
            continue
        if not a.is_homogeneous():
            raise NotGraded(f"entry {a} is not homogeneous")
        e = a.total_degree() + d
        if deg is None:
            deg = e
        elif deg != e:
            raise NotGraded("column is not homogeneous")
    return deg


def prune(M):
    """Cancel unit entries of the presentation and drop trivial relations.

    The result is isomorphic to ``M`` but its generators differ.
    """
    ring = M.ring
    n = M.ngens
    cols = [list(c) for c in M.relations]
    degs = list(M.degrees) if M.degrees is not None else None
    while True:
        hit = next(
            ((j, i) for j, c in enumerate(cols) for i in range(n) if c[i] and ring.is_unit(c[i])),
            None,
        )
        if hit is None:
            break
        j, i = hit
        piv = cols[j]
        inv = ring.unit_inverse(piv[i])
        new = []
        for k, r in enumerate(cols):
            if k == j:
                continue
            f = r[i] * inv
            new.append([ring.canonical(r[l] - f * piv[l]) for l in range(n) if l != i])
        cols = new
        n -= 1
        if degs is not None:
            degs.pop(i)
    out, seen = [], set()
    for c in cols:
        c = _canon(ring, c)
        if any(c) and c not in seen:
            seen.add(c)
            out.append(c)
    return FPModule(ring, n, out, degs)


class ModuleMap:
    """``matrix`` has one column per domain generator (its image in the codomain)."""

    def __init__(self, domain, codomain, matrix, check=True):
        if domain.ring != codomain.ring:
            raise RingMismatch(f"{domain.ring} vs {codomain.ring}")
        self.domain = domain
        self.codomain = codomain
        ring = domain.ring
        self.matrix = [[ring.canonical(ring(a)) for a in row] for row in matrix]
        if len(self.matrix) != codomain.ngens or any(len(r) != domain.ngens for r in self.matrix):
            raise InvalidMap("matrix shape does not match the generator counts")
        if check:
            for rel in domain.relations:
                if not codomain.is_zero_element(matrix_apply(ring, self.matrix, rel)):
                    raise InvalidMap("map does not respect the domain relations")

    @property
    def ring(self):
        return self.domain.ring

    def columns(self):
        return [[row[j] for row in self.matrix] for j in range(self.domain.ngens)]

    @classmethod
    def multiplication(cls, M, r):
        ring = M.ring
        r = ring(r)
        mat = [[r if i == j else ring.zero for j in range(M.ngens)] for i in range(M.ngens)]
        return cls(M, M, mat)

    @classmethod
    def identity(cls, M):
        return cls.multiplication(M, M.ring.one)


def cokernel(f):
    """Presented by ``[codomain relations | f's matrix]``."""
    N = f.codomain
    return FPModule(f.ring, N.ngens, list(N.relations) + f.columns(), N.degrees)


def _preimage_generators(f):
    """Generators (in the domain's free module) of ``f^{-1}(0)``."""
    ring = f.ring
    n = f.domain.ngens
    cols = f.columns() + list(f.codomain.relations)
    return [v[:n] for v in syzygies(ring, cols, f.codomain.ngens) if any(v[:n])]


def _subquotient(ring, gens, rels, rank, degrees=None):
    """Presentation of ``(span(gens) + span(rels)) / span(rels)`` inside ``R^rank``."""
    s = len(gens)
    pres = [v[:s] for v in syzygies(ring, list(gens) + list(rels), rank)]
    degs = None
    if degrees is not None:
        try:
            degs = [column_degree(ring, g, degrees) for g in gens]
        except NotGraded:
            degs = None
        if degs is not None and any(d is None for d in degs):
            degs = None
    return FPModule(ring, s, [p for p in pres if any(p)], degs)


def kernel(f, minimize=True):
    """``ker f`` presented on the syzygy-lifted generators."""
    ring = f.ring
    K = _preimage_generators(f)
    M = _subquotient(ring, K, f.domain.relations, f.domain.ngens, f.domain.degrees)
    return prune(M) if minimize else M


def image(f, minimize=True):
    ring = f.ring
    n = f.domain.ngens
    pres = [v[:n] for v in syzygies(ring, f.columns() + list(f.codomain.relations), f.codomain.ngens)]
    M = FPModule(ring, n, [p for p in pres if any(p)], f.domain.degrees)
    return prune(M) if minimize else M


def direct_sum(M, N):
    if M.ring != N.ring:
        raise RingMismatch(f"{M.ring} vs {N.ring}")
    ring = M.ring
    zm, zn = [ring.zero] * M.ngens, [ring.zero] * N.ngens
    rels = [list(r) + zn for r in M.relations] + [zm + list(r) for r in N.relations]
    degs = M.degrees + N.degrees if M.degrees is not None and N.degrees is not None else None
    return FPModule(ring, M.ngens + N.ngens, rels, degs)


def annihilator(M):
    """Intersection over generators of ``(relations : e_i)``."""
    ring = M.ring
    ann = ring.ideal([1])
    for i in range(M.ngens):
        e = [ring.one if k == i else ring.zero for k in range(M.ngens)]
        coeffs = [v[0] for v in syzygies(ring, [e] + list(M.relations), M.ngens)]
        ann = ann.intersection(ring.ideal(coeffs))
    return ann


def maximal_minors(ring, rows):
    """All ``n x n`` minors of an ``n x m`` matrix (Laplace along rows, memoised)."""
    n = len(rows)
    m = len(rows[0]) if n else 0
    if n == 0:
        return [ring.one]
    if m < n:
        return []
    layer = {(): ring.one}
    for k in range(n):
        nxt = {}
        row = rows[k]
        for S in combinations(range(m), k + 1):
            total = ring.zero
            for pos, j in enumerate(S):
                a = row[j]
                if not a:
                    continue
                sub = layer.get(S[:pos] + S[pos + 1:])
                if sub is None or not sub:
                    continue
                term = a * sub
                total = total + term if (k - pos) % 2 == 0 else total - term
            if total:
                nxt[S] = total
        layer = nxt
    return [ring.canonical(v) for v in layer.values()]


def fitting0(M):
    """Zeroth Fitting ideal: the ideal of maximal minors of the presentation."""
    ring = M.ring
    P = prune(M)
    return ring.ideal([v for v in maximal_minors(ring, P.matrix()) if v])


class FreeResolution:
    """``maps[k]`` is the matrix of ``F_{k+1} -> F_k``; ``degrees[k]`` grades ``F_k``."""

    def __init__(self, ring, ranks, maps, degrees=None, minimal=False):
        self.ring = ring
        self.ranks = list(ranks)
        self.maps = [list(map(list, m)) for m in maps]
        self.degrees = degrees
        self.minimal = minimal

    @property
    def length(self):
        return len(self.maps)

    def composites_vanish(self):
        for a, b in zip(self.maps, self.maps[1:]):
            for row in matrix_product(self.ring, a, b):
                if any(row):
                    return False
        return True

    def entries_in_maximal_ideal(self):
        return all(
            not a or not any(not any(e) for e in a.terms)
            for m in self.maps
            for row in m
            for a in row
        )

    def __repr__(self):
        return f"FreeResolution(ranks={self.ranks}, minimal={self.minimal})"


def _minimal_generators(ring, vecs, degs, rank):
    order = sorted(range(len(vecs)), key=lambda k: degs[k])
    kept = []
    sub = None
    for k in order:
        v = vecs[k]
        if not any(v):
            continue
        if sub is not None and sub.contains(v):
            continue
        kept.append(k)
        sub = submodule(ring, [vecs[i] for i in kept], rank)
    return [vecs[k] for k in kept], [degs[k] for k in kept]


def minimal_free_resolution(M, max_length=16):
    """Graded minimal free resolution; raises ``PdBoundExceeded`` past ``max_length`` maps."""
    if not M.is_graded():
        raise NotGraded("minimal resolutions need a homogeneous presentation and degrees")
    ring = M.ring
    P = prune(M)
    rank = P.ngens
    degs = list(P.degrees)
    cols, cdegs = _minimal_generators(ring, [list(c) for c in P.relations], P.relation_degrees(), rank)
    ranks, maps, degrees = [rank], [], [degs]
    while cols:
        if len(maps) == max_length:
            raise PdBoundExceeded(f"resolution longer than {max_length}")
        maps.append(_rows(cols, rank))
        ranks.append(len(cols))
        degrees.append(cdegs)
        prev_rank, prev_degs = len(cols), cdegs
        syz = syzygies(ring, cols, rank)
        sdegs = [column_degree(ring, v, prev_degs) for v in syz]
        cols, cdegs = _minimal_generators(ring, syz, sdegs, prev_rank)
        rank = prev_rank
    return FreeResolution(ring, ranks, maps, degrees, minimal=True)


def free_resolution(M, max_length=16):
    """Ungraded resolution by iterated syzygies; not minimal in general."""
    ring = M.ring
    P = prune(M)
    rank = P.ngens
    cols = [list(c) for c in P.relations]
    ranks, maps = [rank], []
    while cols:
        if len(maps) == max_length:
            raise PdBoundExceeded(f"resolution longer than {max_length}")
        maps.append(_rows(cols, rank))
        ranks.append(len(cols))
        rank = len(cols)
        cols = syzygies(ring, cols, rank)
    return FreeResolution(ring, ranks, maps, None, minimal=False)


def projective_dimension(M, cap=16):
    """Length of the minimal resolution of a graded module (0 for free, -1 for zero)."""
    res = minimal_free_resolution(M, cap)
    if res.ranks == [0]:
        return -1
    return res.length


def acts_trivially(ideal_gens, M):
    """Whether every element of ``ideal_gens`` annihilates ``M``."""
    ring = M.ring
    for g in ideal_gens:
        for i in range(M.ngens):
            v = [ring(g) if k == i else ring.zero for k in range(M.ngens)]
            if not M.is_zero_element(v):
                return False
    return True


def base_change(M, ring):
    """``M`` tensored down to a quotient ring sharing the ambient ring."""
    return FPModule(ring, M.ngens, [[ring(a) for a in r] for r in M.relations], M.degrees)


def restrict_scalars(M, ring):
    """View a module over a quotient ring as a module over ``ring``."""
    rels = _lifted(M.ring, M.relations, M.ngens)
    return FPModule(ring, M.ngens, [[ring(a) for a in r] for r in rels], M.degrees)
