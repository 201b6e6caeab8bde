"""Multivariate polynomials over QQ or GF(p), reduced Groebner bases and
ideal arithmetic.

A ``PolyRing`` may carry a modulus ideal, in which case it describes the
quotient ring k[x]/a.  Polynomials are always stored as ambient polynomials;
an ideal of a quotient ring is stored as the reduced Groebner basis of its
preimage in k[x], which makes equality of ideals a comparison of bases.

The same Buchberger engine serves ideals and submodules of free modules.
Submodule terms are ``(position, exponent)`` pairs compared
position-over-term, position 0 largest.
"""

import heapq
import re
from fractions import Fraction
from functools import lru_cache

from .exactarith import QQ, PrimeField, RationalField


class ParseError(ValueError):
    """Malformed text input; carries a 1-based line and column."""

    name = "parse-error"

    def __init__(self, message, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


class RingMismatch(ValueError):
    name = "ring-mismatch"


# -- monomial orders ---------------------------------------------------------

def _grevlex(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def order_key(order):
    """Sort key realising a monomial order: larger key = larger monomial."""
    if order == "lex":
        return lambda e: e
    if order == "grevlex":
        return _grevlex
    if order.startswith("elim:"):
        k = int(order[5:])
        return lambda e: (_grevlex(e[:k]), _grevlex(e[k:]))
    raise ValueError(f"unknown monomial order {order!r}")


class PolyRing:
    """k[x1..xn] with a monomial order, optionally modulo an ideal."""

    def __init__(self, field, variables, order="grevlex", modulus=None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")
        self.field = field
        self.vars = variables
        self.nvars = len(variables)
        self.order = order
        self._keyfn = order_key(order)
        self._keys = {}
        self.modulus = None
        self._ambient = self
        if modulus is not None:
            gens = list(modulus.gens if isinstance(modulus, IdealGB) else modulus)
            amb = PolyRing(field, variables, order)
            gb = buchberger([amb(g) for g in gens], amb)
            if gb.gens:
                self.modulus = gb
                self._ambient = amb

    # identity -----------------------------------------------------------
    def _ident(self):
        mod = self.modulus.gens if self.modulus is not None else ()
        return (self.field, self.vars, self.order, mod)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def same_ambient(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.vars == other.vars
            and self.order == other.order
        )

    def __repr__(self):
        s = f"{self.field.name}[{','.join(self.vars)}]"
        if self.modulus is not None:
            s += "/(" + ", ".join(map(str, self.modulus.gens)) + ")"
        return s + " " + self.order

    @property
    def ambient(self):
        return self._ambient

    def quotient(self, ideal_gens):
        """The ring ``self / (ideal_gens)``; the modulus accumulates."""
        gens = [self.ambient(g) for g in ideal_gens]
        if self.modulus is not None:
            gens += list(self.modulus.gens)
        return PolyRing(self.field, self.vars, self.order, gens)

    def key(self, e):
        k = self._keys.get(e)
        if k is None:
            k = self._keys[e] = self._keyfn(e)
        return k

    # elements -----------------------------------------------------------
    def __call__(self, value):
        if isinstance(value, Poly):
            if value.ring is self:
                return value
            if value.ring.nvars != self.nvars or value.ring.field != self.field:
                raise RingMismatch(f"cannot move {value} from {value.ring} to {self}")
            return Poly(self, value.terms)
        if isinstance(value, str):
            return parse_poly(value, self)
        c = self.field(value)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    @property
    def zero(self):
        return Poly(self, {})

    @property
    def one(self):
        return self(1)

    def gens(self):
        return [self.var(v) for v in self.vars]

    def var(self, name):
        i = self.vars.index(name)
        e = tuple(int(j == i) for j in range(self.nvars))
        return Poly(self, {e: self.field(1)})

    def monomial(self, exp, coeff=1):
        c = self.field(coeff)
        return Poly(self, {tuple(exp): c} if c else {})

    def canonical(self, f):
        """Normal form of ``f`` modulo the ring's modulus."""
        f = self(f)
        if self.modulus is None:
            return f
        return Poly(self, normal_form(f, self.modulus).terms)

    def is_unit(self, f):
        """Nonzero constants only; units such as ``1 + y`` mod ``y^2`` are not detected."""
        f = self.canonical(f)
        return len(f.terms) == 1 and not any(next(iter(f.terms)))

    def unit_inverse(self, f):
        f = self.canonical(f)
        return self(self.field.inv(f.terms[(0,) * self.nvars]))

    def modulus_gens(self):
        return [self(g) for g in self.modulus.gens] if self.modulus is not None else []

    def ideal(self, gens):
        """Ideal generated by ``gens``, as the GB of its preimage."""
        return buchberger([self(g) for g in gens], self)

    def extended(self, name, position="first", order=None):
        """Ring with one fresh variable (no modulus)."""
        while name in self.vars:
            name = "_" + name
        vs = (name,) + self.vars if position == "first" else self.vars + (name,)
        return PolyRing(self.field, vs, order or self.order)

    # submodules ---------------------------------------------------------
    def syzygies(self, A, ncols):
        """Generators of the kernel of ``A: R^ncols -> R^len(A)`` over the ambient ring."""
        return syzygy_vectors(self.ambient, A, ncols)

    def submodule(self, vectors, rank):
        return SubmoduleGB(self.ambient, vectors, rank)

    def degree(self, f):
        return max((sum(e) for e in f.terms), default=-1)


class Poly:
    """Sparse polynomial ``{exponent tuple: coefficient}`` with no zero entries."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring and not self.ring.same_ambient(other.ring):
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.terms
        c = self.ring.field(other)
        return {(0,) * self.ring.nvars: c} if c else {}

    def __add__(self, other):
        t = dict(self.terms)
        red = self.ring.field.char
        for e, c in self._coerce(other).items():
            v = t.get(e, 0) + c
            if red:
                v %= red
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        red = self.ring.field.char
        return Poly(self.ring, {e: (-c % red if red else -c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = self.ring(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        red = self.ring.field.char
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) + c1 * c2
                if red:
                    v %= red
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return Poly(self.ring, t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant() or not other:
                return exact_division(self, other)
            other = other.terms[(0,) * self.ring.nvars]
        inv = self.ring.field.inv(self.ring.field(other))
        return self * inv

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out, base = self.ring.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.same_ambient(other.ring) and self.terms == other.terms
        try:
            return self.terms == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def lead(self):
        """Leading exponent; raises on the zero polynomial."""
        return max(self.terms, key=self.ring.key)

    def lc(self):
        return self.terms[self.lead()]

    def monic(self):
        if not self.terms:
            return self
        return self * self.ring.field.inv(self.lc())

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def __repr__(self):
        return poly_to_str(self)

    __str__ = __repr__


def _coeff_str(c):
    return str(c)


def poly_to_str(f):
    if not f.terms:
        return "0"
    parts = []
    for e, c in f.sorted_terms():
        mono = "*".join(
            v if k == 1 else f"{v}^{k}" for v, k in zip(f.ring.vars, e) if k
        )
        neg = False
        if isinstance(c, Fraction) and c < 0:
            neg, c = True, -c
        cs = _coeff_str(c)
        if mono:
            body = mono if c == 1 else f"{cs}*{mono}"
        else:
            body = cs
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


# -- Groebner engine -----------------------------------------------------------
#
# Engine elements are dicts from terms to coefficients.  A term is an
# exponent tuple (ideal case) or a (position, exponent) pair (module case).

class _IdealTerms:
    def __init__(self, ring):
        self.ring = ring
        self.char = ring.field.char
        self.inv = ring.field.inv

    def key(self, t):
        return self.ring.key(t)

    def divides(self, a, b):
        return all(x <= y for x, y in zip(a, b))

    def quo(self, b, a):
        return tuple(y - x for x, y in zip(a, b))

    def mul(self, t, m):
        return tuple(x + y for x, y in zip(t, m))

    def lcm(self, a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    def coprime(self, a, b):
        return not any(x and y for x, y in zip(a, b))

    def deg(self, t):
        return sum(t)


class _ModuleTerms(_IdealTerms):
    def key(self, t):
        return (-t[0], self.ring.key(t[1]))

    def divides(self, a, b):
        return a[0] == b[0] and all(x <= y for x, y in zip(a[1], b[1]))

    def quo(self, b, a):
        return tuple(y - x for x, y in zip(a[1], b[1]))

    def mul(self, t, m):
        return (t[0], tuple(x + y for x, y in zip(t[1], m)))

    def lcm(self, a, b):
        if a[0] != b[0]:
            return None
        return (a[0], tuple(max(x, y) for x, y in zip(a[1], b[1])))

    def coprime(self, a, b):
        # the product criterion is unsound for submodules
        return False

    def deg(self, t):
        return sum(t[1])


def _lead(T, f):
    return max(f, key=T.key)


def _axpy(T, f, c, m, g):
    """``f - c * m * g`` as a new dict."""
    out = dict(f)
    char = T.char
    for t, a in g.items():
        s = T.mul(t, m)
        v = out.get(s, 0) - c * a
        if char:
            v %= char
        if v:
            out[s] = v
        else:
            out.pop(s, None)
    return out


def _monic(T, f):
    if not f:
        return f
    inv = T.inv(f[_lead(T, f)])
    char = T.char
    if char:
        return {t: c * inv % char for t, c in f.items()}
    return {t: c * inv for t, c in f.items()}


def _reduce(T, f, G, leads):
    """Full normal form of ``f`` against monic ``G`` (with cached leads)."""
    rem = {}
    p = dict(f)
    while p:
        t = _lead(T, p)
        c = p[t]
        for g, lg in zip(G, leads):
            if T.divides(lg, t):
                p = _axpy(T, p, c, T.quo(t, lg), g)
                break
        else:
            rem[t] = c
            del p[t]
    return rem


def _spoly(T, f, lf, g, lg):
    lcm = T.lcm(lf, lg)
    out = {}
    char = T.char
    for t, a in f.items():
        out[T.mul(t, T.quo(lcm, lf))] = a
    for t, a in g.items():
        s = T.mul(t, T.quo(lcm, lg))
        v = out.get(s, 0) - a
        if char:
            v %= char
        if v:
            out[s] = v
        else:
            out.pop(s, None)
    return out


def _groebner(T, polys):
    """Reduced Groebner basis of engine elements, sorted by descending lead."""
    G, leads = [], []
    pairs, pending, seq = [], set(), 0

    def add(h):
        nonlocal seq
        h = _monic(T, h)
        lh = _lead(T, h)
        k = len(G)
        for i, li in enumerate(leads):
            lcm = T.lcm(li, lh)
            if lcm is None:
                continue
            heapq.heappush(pairs, (T.deg(lcm), seq, i, k))
            pending.add((i, k))
            seq += 1
        G.append(h)
        leads.append(lh)

    for f in polys:
        if f:
            add(f)
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        if T.coprime(li, lj):
            continue
        lcm = T.lcm(li, lj)
        if any(
            k != i and k != j
            and T.divides(lk, lcm)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k, lk in enumerate(leads)
        ):
            continue
        h = _reduce(T, _spoly(T, G[i], li, G[j], lj), G, leads)
        if h:
            add(h)
    return _interreduce(T, G, leads)


def _interreduce(T, G, leads):
    idx = sorted(range(len(G)), key=lambda i: T.key(leads[i]))
    keep = []
    for pos, i in enumerate(idx):
        if any(T.divides(leads[j], leads[i]) for j in idx[:pos]):
            continue
        keep.append(i)
    basis = [G[i] for i in keep]
    bl = [leads[i] for i in keep]
    out = []
    for n, g in enumerate(basis):
        others = basis[:n] + basis[n + 1:]
        ol = bl[:n] + bl[n + 1:]
        tail = {t: c for t, c in g.items() if t != bl[n]}
        r = _reduce(T, tail, others, ol)
        r[bl[n]] = g[bl[n]]
        out.append(_monic(T, r))
    out.sort(key=lambda f: T.key(_lead(T, f)), reverse=True)
    return out


# -- ideals ---------------------------------------------------------------------

class IdealGB:
    """An ideal stored as a reduced Groebner basis (of its preimage in k[x])."""

    __slots__ = ("ring", "gens", "_hash")

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = tuple(gens)
        self._hash = None

    def __eq__(self, other):
        return isinstance(other, IdealGB) and self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.gens))
        return self._hash

    def is_zero(self):
        if self.ring.modulus is not None:
            return self.gens == self.ring.modulus.gens
        return not self.gens

    def is_unit(self):
        return len(self.gens) == 1 and self.gens[0].is_constant()

    def contains(self, f):
        return not normal_form(f, self)

    def sum(self, other):
        return ideal_sum(self, other)

    def product(self, other):
        return ideal_product(self, other)

    def intersection(self, other):
        return ideal_intersection(self, other)

    def radical_contains(self, other):
        """``other`` lies in the radical of ``self``."""
        return ideal_radical_contains(self, other)

    def visible_gens(self):
        """Generators reduced modulo the ring's modulus, zeros dropped."""
        if self.ring.modulus is None:
            return list(self.gens)
        out = []
        for g in self.gens:
            r = normal_form(g, self.ring.modulus)
            if r and r not in out:
                out.append(Poly(self.ring, r.terms))
        return out

    def __repr__(self):
        return "(" + ", ".join(map(str, self.visible_gens())) + ")"


def buchberger(gens, ring):
    """Reduced Groebner basis of the ideal generated by ``gens`` in ``ring``.

    Over a quotient ring the modulus generators are added, so the result is
    the basis of the preimage ideal.  Output order is descending by leading
    monomial.
    """
    amb = ring.ambient
    T = _IdealTerms(amb)
    polys = [dict(amb(g).terms) for g in gens]
    if ring.modulus is not None:
        polys += [dict(g.terms) for g in ring.modulus.gens]
    basis = _groebner(T, polys)
    return IdealGB(ring, [Poly(ring, b) for b in basis])


def normal_form(f, ideal):
    """Canonical representative of ``f`` modulo ``ideal``."""
    ring = ideal.ring
    f = ring(f)
    if not ideal.gens:
        return f
    T = _IdealTerms(ring.ambient)
    G = [g.terms for g in ideal.gens]
    leads = [g.lead() for g in ideal.gens]
    return Poly(ring, _reduce(T, f.terms, G, leads))


def _check_same(a, b):
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")


def ideal_sum(a, b):
    _check_same(a, b)
    return buchberger(list(a.gens) + list(b.gens), a.ring)


def ideal_product(a, b):
    _check_same(a, b)
    return buchberger([f * g for f in a.gens for g in b.gens], a.ring)


def ideal_intersection(a, b):
    _check_same(a, b)
    ring = a.ring
    if a.is_unit():
        return b
    if b.is_unit():
        return a
    ext = ring.extended("t", "first", order="elim:1")
    t = ext.var(ext.vars[0])

    def lift(f):
        return Poly(ext, {(0,) + e: c for e, c in f.terms.items()})

    gens = [t * lift(f) for f in a.gens] + [(1 - t) * lift(g) for g in b.gens]
    gb = buchberger(gens, ext)
    kept = [
        Poly(ring.ambient, {e[1:]: c for e, c in g.terms.items()})
        for g in gb.gens
        if all(e[0] == 0 for e in g.terms)
    ]
    return buchberger(kept, ring)


def exact_division(f, g):
    """``f / g`` when ``g`` divides ``f`` in the polynomial ring."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    ring = f.ring
    T = _IdealTerms(ring.ambient)
    lg = g.lead()
    inv = ring.field.inv(g.terms[lg])
    char = ring.field.char
    p = dict(f.terms)
    q = {}
    while p:
        t = _lead(T, p)
        if not T.divides(lg, t):
            raise ValueError(f"{g} does not divide {f}")
        m = T.quo(t, lg)
        c = p[t] * inv
        if char:
            c %= char
        q[m] = c
        p = _axpy(T, p, c, m, g.terms)
    return Poly(ring, q)


def ideal_quotient(a, f):
    """``a : f`` for a single polynomial ``f``."""
    ring = a.ring
    f = ring(f)
    if not f:
        return ring.ideal([1])
    amb = ring.ambient
    inter = ideal_intersection(IdealGB(amb, [amb(g) for g in a.gens]), buchberger([f], amb))
    return buchberger([exact_division(g, amb(f)) for g in inter.gens], ring)


def ideal_op(kind, a, b):
    if kind == "sum":
        return ideal_sum(a, b)
    if kind == "product":
        return ideal_product(a, b)
    if kind == "intersection":
        return ideal_intersection(a, b)
    if kind == "quotient":
        if isinstance(b, IdealGB):
            raise TypeError("quotient takes a single polynomial")
        return ideal_quotient(a, b)
    raise ValueError(f"unknown ideal operation {kind!r}")


@lru_cache(maxsize=1 << 16)
def radical_member(f, ideal):
    """Decide ``f in sqrt(ideal)`` via 1 in ideal + (1 - t*f)."""
    ring = ideal.ring
    f = ring(f)
    if ideal.is_unit() or not normal_form(f, ideal):
        return True
    if f.is_constant():
        return False
    ext = ring.extended("t", "last", order="grevlex")
    t = ext.var(ext.vars[-1])

    def lift(p):
        return Poly(ext, {e + (0,): c for e, c in p.terms.items()})

    gb = buchberger([lift(g) for g in ideal.gens] + [1 - t * lift(f)], ext)
    return gb.is_unit()


def ideal_radical_contains(a, b):
    """``b`` is contained in the radical of ``a`` (i.e. V(a) is inside V(b))."""
    _check_same(a, b)
    return all(radical_member(g, a) for g in b.gens)


# -- submodules -------------------------------------------------------------------

def _vec_to_engine(vec):
    out = {}
    for pos, p in enumerate(vec):
        for e, c in p.terms.items():
            out[(pos, e)] = c
    return out


def _engine_to_vec(ring, d, rank, offset=0):
    parts = [dict() for _ in range(rank)]
    for (pos, e), c in d.items():
        parts[pos - offset][e] = c
    return [Poly(ring, p) for p in parts]


class SubmoduleGB:
    """Reduced POT Groebner basis of a submodule of ``R^rank``."""

    def __init__(self, ring, vectors, rank):
        self.ring = ring
        self.rank = rank
        self.T = _ModuleTerms(ring)
        self.basis = _groebner(self.T, [_vec_to_engine([ring(p) for p in v]) for v in vectors])
        self.leads = [_lead(self.T, b) for b in self.basis]

    def reduce(self, vec):
        d = _reduce(self.T, _vec_to_engine([self.ring(p) for p in vec]), self.basis, self.leads)
        return _engine_to_vec(self.ring, d, self.rank)

    def contains(self, vec):
        return not _reduce(self.T, _vec_to_engine([self.ring(p) for p in vec]), self.basis, self.leads)

    def vectors(self):
        return [_engine_to_vec(self.ring, b, self.rank) for b in self.basis]


def syzygy_vectors(ring, A, ncols):
    """Generators of ``ker(A: R^ncols -> R^n)`` for an ``n x ncols`` matrix.

    Eliminates the first ``n`` coordinates of the augmented columns
    ``(A e_j, e_j)`` under a position-over-term order.
    """
    n = len(A)
    if ncols == 0:
        return []
    vecs = []
    for j in range(ncols):
        v = [ring(A[i][j]) for i in range(n)]
        v += [ring.one if k == j else ring.zero for k in range(ncols)]
        vecs.append(v)
    T = _ModuleTerms(ring)
    basis = _groebner(T, [_vec_to_engine(v) for v in vecs])
    out = []
    for b in basis:
        if _lead(T, b)[0] >= n:
            out.append(_engine_to_vec(ring, b, ncols, offset=n))
    return out


# -- text syntax -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text):
    pos, toks = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1):
            toks.append(("num", m.group(1), m.start(1)))
        elif m.group(2):
            toks.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            if m.group(3) not in "+-*/^()":
                raise ParseError(f"unexpected character {m.group(3)!r}", text, m.start(3))
            toks.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _PolyParser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty polynomial")
        f = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return f

    def expr(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        f = self.term()
        f = f if sign == 1 else -f
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()
            g = self.factor()
            if op[1] == "*":
                f = f * g
            else:
                if not g or not g.is_constant():
                    self.fail("division only by nonzero constants", op)
                f = f / g
        return f

    def factor(self):
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("exponent must be a non-negative integer", tok)
            return base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.ring(int(val))
        if kind == "name":
            if val not in self.ring.vars:
                self.fail(f"unknown variable {val!r}", tok)
            return self.ring.var(val)
        if val == "(":
            f = self.expr()
            if self.take()[1] != ")":
                self.fail("expected ')'", self.toks[self.i - 1])
            return f
        self.fail(f"unexpected {val or 'end of input'!r}", tok)


def parse_poly(text, ring, offset_text=None):
    """Parse ``x^2 + 3/2*x*y - 1`` style text into a ``Poly`` of ``ring``."""
    return _PolyParser(text, ring).parse()


def parse_poly_list(text, ring):
    """Comma separated polynomials; commas inside parentheses are kept."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((start, text[start:i]))
            start = i + 1
    parts.append((start, text[start:]))
    out = []
    for off, s in parts:
        if not s.strip():
            if len(parts) == 1:
                return []
            raise ParseError("empty list entry", text, off)
        try:
            out.append(parse_poly(s, ring))
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" at line", 1)[0], text, off + _col_offset(exc)) from None
    return out


def _col_offset(exc):
    return exc.column - 1


__all__ = [
    "PolyRing", "Poly", "IdealGB", "SubmoduleGB", "ParseError", "RingMismatch",
    "QQ", "PrimeField", "RationalField", "buchberger", "normal_form", "ideal_op",
    "ideal_sum", "ideal_product", "ideal_intersection", "ideal_quotient",
    "radical_member", "ideal_radical_contains", "syzygy_vectors", "parse_poly",
    "parse_poly_list", "exact_division",
]
