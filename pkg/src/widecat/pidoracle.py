"""Brute-force ground truth for wide subcategories of finite abelian groups.

Groups are kept in primary form (a sorted tuple of prime powers).  Maps are
integer matrices between the cyclic factors; kernels and cokernels come from
Smith normal forms, extensions from an exhaustive subgroup scan.  The closure
tower D0 (kernel/cokernel closure of the generators), D1, D2, ... (iterated
extensions) runs inside the finite universe of groups of order <= bound, and
its limit is compared with the support prediction.
"""

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import gcd, prod

from .exactarith import factorize, integer_kernel, is_prime, smith_normal_form


class OracleError(ValueError):
    name = "oracle-bound-exceeded"


@dataclass(frozen=True, order=True)
class FinAbGroup:
    """Finite abelian group as a sorted tuple of prime-power cyclic orders."""

    factors: tuple = ()

    def __post_init__(self):
        for q in self.factors:
            f = factorize(q) if q > 1 else {}
            if len(f) != 1:
                raise ValueError(f"{q} is not a prime power > 1")
        if tuple(sorted(self.factors)) != self.factors:
            object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @classmethod
    def from_orders(cls, orders):
        """Group ``+ Z/n_i``; orders 0 are rejected and 1 is dropped."""
        out = []
        for n in orders:
            n = abs(int(n))
            if n == 0:
                raise ValueError("infinite cyclic factor")
            for p, e in factorize(n).items():
                out.append(p**e)
        return cls(tuple(sorted(out)))

    @classmethod
    def from_partitions(cls, parts):
        """``{p: (e1, e2, ...)}``."""
        return cls(tuple(sorted(p**e for p, es in parts.items() for e in es if e)))

    @classmethod
    def parse(cls, text):
        """``0``, ``Z/4``, ``Z/2 + Z/6``, ``Z/2^3``."""
        text = text.strip()
        if text in ("0", ""):
            return cls()
        orders = []
        for part in text.split("+"):
            part = part.strip()
            if not part.startswith("Z/"):
                raise ValueError(f"expected Z/n, got {part!r}")
            body = part[2:]
            if "^" in body:
                b, k = body.split("^", 1)
                orders.append(int(b) ** int(k))
            else:
                orders.append(int(body))
        if any(n < 1 for n in orders):
            raise ValueError("cyclic orders must be positive")
        return cls.from_orders([n for n in orders if n > 1])

    @property
    def order(self):
        return prod(self.factors)

    @property
    def exponent(self):
        e = 1
        for q in self.factors:
            e = e * q // gcd(e, q)
        return e

    @property
    def primes(self):
        return frozenset(next(iter(factorize(q))) for q in self.factors)

    def partition(self, p):
        """Exponents of the ``p``-primary part, descending."""
        out = []
        for q in self.factors:
            f = factorize(q)
            if p in f:
                out.append(f[p])
        return tuple(sorted(out, reverse=True))

    def is_module_over(self, modulus):
        return modulus == 0 or modulus % self.exponent == 0

    def to_module(self, ring):
        from .freemod import FPModule

        n = len(self.factors)
        rels = [[q if k == i else 0 for k in range(n)] for i, q in enumerate(self.factors)]
        return FPModule(ring, n, rels)

    def __str__(self):
        return " + ".join(f"Z/{q}" for q in self.factors) or "0"


def group_from_invariants(diag):
    """Group ``+ Z/d_i`` from SNF diagonal entries (units dropped, 0 rejected)."""
    return FinAbGroup.from_orders([d for d in diag if abs(d) != 1])


def _partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def groups_of_order(n):
    f = sorted(factorize(n).items()) if n > 1 else []
    choices = [[(p, lam) for lam in _partitions(e)] for p, e in f]
    out = []
    for combo in product(*choices):
        out.append(FinAbGroup.from_partitions(dict(combo)))
    return sorted(out)


def enumerate_groups(bound, modulus=0):
    """All groups of order ``<= bound`` (exponent dividing ``modulus`` when nonzero)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out = []
    for n in range(1, bound + 1):
        out.extend(G for G in groups_of_order(n) if G.is_module_over(modulus))
    return out


# -- homomorphisms ------------------------------------------------------------

@dataclass(frozen=True)
class GroupHom:
    """``matrix[j][i]``: image of the i-th cyclic generator of ``source`` in factor j of ``target``."""

    source: FinAbGroup
    target: FinAbGroup
    matrix: tuple


def hom_count(A, B):
    return prod(gcd(a, b) for a in A.factors for b in B.factors)


def _entry_choices(a, b):
    step = b // gcd(a, b)
    return range(0, b, step)


def all_homs(A, B, limit=None):
    """Every homomorphism ``A -> B`` exactly once."""
    if limit is not None and hom_count(A, B) > limit:
        raise OracleError(f"{hom_count(A, B)} homomorphisms {A} -> {B} exceed {limit}")
    r, s = len(A.factors), len(B.factors)
    cells = [_entry_choices(A.factors[i], B.factors[j]) for j in range(s) for i in range(r)]
    for vals in product(*cells):
        yield GroupHom(A, B, tuple(tuple(vals[j * r:(j + 1) * r]) for j in range(s)))


def random_hom(A, B, rng):
    r, s = len(A.factors), len(B.factors)
    mat = tuple(
        tuple(rng.choice(_entry_choices(A.factors[i], B.factors[j])) for i in range(r))
        for j in range(s)
    )
    return GroupHom(A, B, mat)


def compose(g, f):
    """``g o f``."""
    if f.target != g.source:
        raise ValueError("maps are not composable")
    A, C = f.source, g.target
    mat = tuple(
        tuple(
            sum(g.matrix[k][j] * f.matrix[j][i] for j in range(len(f.target.factors))) % C.factors[k]
            for i in range(len(A.factors))
        )
        for k in range(len(C.factors))
    )
    return GroupHom(A, C, mat)


def identity_hom(A):
    n = len(A.factors)
    return GroupHom(A, A, tuple(tuple(int(i == j) for i in range(n)) for j in range(n)))


def cokernel_of(f):
    """``B / im f`` via the SNF of ``[diag(b) | H]``."""
    B = f.target
    s = len(B.factors)
    if s == 0:
        return FinAbGroup()
    rows = [
        [B.factors[j] if k == j else 0 for k in range(s)] + list(f.matrix[j]) for j in range(s)
    ]
    _, D, _ = smith_normal_form(rows)
    return group_from_invariants([D[i][i] for i in range(s)])


def kernel_of(f):
    """``ker f`` as ``L / diag(a)``, ``L`` the preimage lattice of ``im diag(b)``."""
    A, B = f.source, f.target
    r, s = len(A.factors), len(B.factors)
    if r == 0:
        return FinAbGroup()
    if s == 0:
        return A
    big = [list(f.matrix[j]) + [B.factors[j] if k == j else 0 for k in range(s)] for j in range(s)]
    K = integer_kernel(big, r + s)
    span = [row for row in K[:r]]
    # L is full rank; bring its spanning set to diagonal form
    U, D, _ = smith_normal_form(span)
    d = [D[i][i] for i in range(r)]
    # coordinates of a_i e_i in the basis U^{-1} diag(d)
    C = [[U[k][i] * A.factors[i] // d[k] for i in range(r)] for k in range(r)]
    _, D2, _ = smith_normal_form(C)
    return group_from_invariants([D2[i][i] for i in range(r)])


# -- element-level view (independent of SNF) -------------------------------------

class _Elements:
    """Elements of a group as mixed-radix indices with an addition table."""

    def __init__(self, G):
        self.G = G
        self.mods = G.factors
        self.n = G.order
        self.vecs = list(product(*[range(q) for q in self.mods])) if self.mods else [()]
        self.index = {v: k for k, v in enumerate(self.vecs)}
        self.add = [
            [self.index[tuple((a + b) % q for a, b, q in zip(u, v, self.mods))] for v in self.vecs]
            for u in self.vecs
        ]

    def mul(self, m, x):
        return self.index[tuple(m * a % q for a, q in zip(self.vecs[x], self.mods))]


def _type_from_counts(p, count, total):
    """Partition of a p-group from ``count(k) = |G[p^k]|``."""
    parts = []
    prev = 0
    k = 1
    acc = 1
    while acc < total:
        c = count(k)
        a = _logp(c, p)
        ge = a - prev
        if ge == 0:
            break
        parts.append(ge)
        prev = a
        acc = c
        k += 1
    # parts[k-1] = number of parts >= k; conjugate it
    lam = []
    for i in range(parts[0] if parts else 0):
        lam.append(sum(1 for g in parts if g > i))
    return tuple(lam)


def _logp(n, p):
    e = 0
    while n > 1:
        n //= p
        e += 1
    return e


def subgroup_types(G):
    """All pairs ``(H, G/H)`` up to isomorphism, by scanning every subgroup of ``G``."""
    return _subgroup_types_cached(G)


@lru_cache(maxsize=None)
def _subgroup_types_cached(G):
    if G.order > 4096:
        raise OracleError(f"subgroup scan of {G} is too large")
    E = _Elements(G)
    primes = sorted(G.primes)
    zero = E.index[tuple(0 for _ in G.factors)]
    start = 1 << zero
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for H in frontier:
            members = [x for x in range(E.n) if H >> x & 1]
            for g in range(E.n):
                if H >> g & 1:
                    continue
                K = H
                cur = g
                while not (K >> cur & 1):
                    for h in members:
                        K |= 1 << E.add[h][cur]
                    cur = E.add[cur][g]
                if K not in seen:
                    seen.add(K)
                    nxt.append(K)
        frontier = nxt
    out = set()
    for H in seen:
        members = [x for x in range(E.n) if H >> x & 1]
        size = len(members)
        sub, quo = {}, {}
        for p in primes:
            pa = _pp(G.order, p)
            ph = _pp(size, p)
            sub[p] = _type_from_counts(
                p, lambda k: sum(1 for x in members if E.mul(p**k, x) == zero), ph
            )
            quo[p] = _type_from_counts(
                p,
                lambda k: sum(1 for y in range(E.n) if H >> E.mul(p**k, y) & 1) // size,
                pa // ph,
            )
        out.add((FinAbGroup.from_partitions(sub), FinAbGroup.from_partitions(quo)))
    return frozenset(out)


def _pp(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def _primary(G, p):
    return FinAbGroup(tuple(q for q in G.factors if q % p == 0))


def all_extensions(quotient, sub, bound, modulus=0, per_prime=True):
    """Every ``E`` (up to iso) with a subgroup ``~ sub`` whose quotient is ``~ quotient``."""
    n = quotient.order * sub.order
    if n > bound:
        raise OracleError(f"extension order {n} exceeds bound {bound}")
    if not per_prime:
        return frozenset(
            E for E in groups_of_order(n)
            if E.is_module_over(modulus) and (sub, quotient) in subgroup_types(E)
        )
    primes = sorted(quotient.primes | sub.primes)
    per = []
    for p in primes:
        Q, S = _primary(quotient, p), _primary(sub, p)
        cands = [
            E for E in groups_of_order(Q.order * S.order)
            if (S, Q) in subgroup_types(E)
        ]
        per.append(cands)
    out = set()
    for combo in product(*per):
        E = FinAbGroup(tuple(sorted(q for G in combo for q in G.factors)))
        if E.is_module_over(modulus):
            out.add(E)
    return frozenset(out)


# -- closure tower ----------------------------------------------------------------

def kernel_cokernel_closure(gens, hom_limit=200_000):
    cur = set(gens)
    done = set()
    while True:
        new = set(cur)
        for A in sorted(cur):
            for B in sorted(cur):
                if (A, B) in done:
                    continue
                done.add((A, B))
                for f in all_homs(A, B, hom_limit):
                    new.add(kernel_of(f))
                    new.add(cokernel_of(f))
        if new == cur:
            return frozenset(cur)
        cur = new


@dataclass
class ClosureReport:
    generators: tuple
    bound: int
    modulus: int
    tower: list
    stabilized: bool
    predicted: frozenset
    equal: bool
    witnesses: dict = field(default_factory=dict)
    missing: tuple = ()
    extra: tuple = ()

    @property
    def closure(self):
        return self.tower[-1]

    def to_json(self):
        return {
            "generators": [str(g) for g in self.generators],
            "bound": self.bound,
            "modulus": self.modulus,
            "tower_sizes": [len(D) for D in self.tower],
            "tower": [sorted(str(G) for G in sorted(D)) for D in self.tower],
            "stabilized": self.stabilized,
            "predicted": [str(G) for G in sorted(self.predicted)],
            "equal": self.equal,
            "missing": [str(G) for G in self.missing],
            "extra": [str(G) for G in self.extra],
        }


def predicted_closure(gens, bound, modulus=0):
    """Groups in the universe whose support lies in the generators' support."""
    support = frozenset().union(*(G.primes for G in gens)) if gens else frozenset()
    return frozenset(G for G in enumerate_groups(bound, modulus) if G.primes <= support)


def closure_tower(gens, bound=64, modulus=0, max_steps=64):
    gens = tuple(sorted(set(gens)))
    for G in gens:
        if G.order > bound:
            raise OracleError(f"generator {G} exceeds bound {bound}")
        if not G.is_module_over(modulus):
            raise OracleError(f"generator {G} is not a ZZ/{modulus}-module")
    D0 = kernel_cokernel_closure(gens) if gens else frozenset()
    tower = [D0]
    witnesses = {}
    stabilized = False
    for _ in range(max_steps):
        cur = tower[-1]
        new = set(cur)
        members = sorted(cur)
        for Ms in members:
            for Mq in members:
                if Ms.order * Mq.order > bound:
                    continue
                for E in sorted(all_extensions(Mq, Ms, bound, modulus)):
                    if E not in new:
                        new.add(E)
                        witnesses[E] = (Ms, Mq, len(tower))
        if new == cur:
            stabilized = True
            break
        tower.append(frozenset(new))
    predicted = predicted_closure(gens, bound, modulus)
    final = tower[-1]
    return ClosureReport(
        generators=gens,
        bound=bound,
        modulus=modulus,
        tower=tower,
        stabilized=stabilized,
        predicted=predicted,
        equal=stabilized and final == predicted,
        witnesses=witnesses,
        missing=tuple(sorted(predicted - final)),
        extra=tuple(sorted(final - predicted)),
    )


def verify_witnesses(report):
    """Re-check that each new member of ``D_n`` extends two members of ``D_{n-1}``."""
    bad = []
    for E, (Ms, Mq, level) in report.witnesses.items():
        prev = report.tower[level - 1]
        if Ms not in prev or Mq not in prev or E not in all_extensions(
            Mq, Ms, report.bound, report.modulus
        ):
            bad.append(E)
    return bad


@dataclass
class SnakeReport:
    samples: int
    violations: list

    @property
    def ok(self):
        return not self.violations


def snake_closure_checks(report, sample_size=200, level=1, seed=0):
    """Random maps between members of ``D_level`` must have kernel and cokernel in ``D_level``."""
    rng = random.Random(seed)
    D = sorted(report.tower[min(level, len(report.tower) - 1)])
    bad = []
    for _ in range(sample_size):
        M, N = rng.choice(D), rng.choice(D)
        f = random_hom(M, N, rng)
        D_set = report.tower[min(level, len(report.tower) - 1)]
        k, c = kernel_of(f), cokernel_of(f)
        if k not in D_set or c not in D_set:
            bad.append((f, k, c))
    return SnakeReport(sample_size, bad)


def is_prime_power(n):
    f = factorize(n) if n > 1 else {}
    return len(f) == 1 and is_prime(next(iter(f)))
