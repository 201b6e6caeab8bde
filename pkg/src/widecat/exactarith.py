"""Exact scalars over ZZ, QQ and GF(p), plus integer matrix normal forms.

Matrices are plain lists of rows of Python ints. Every function here
returns fresh lists and never mutates its arguments.
"""

from fractions import Fraction
from math import gcd


class ExactArithError(ValueError):
    name = "dimension-mismatch"


class RationalField:
    """The field QQ; elements are ``fractions.Fraction``."""

    char = 0
    name = "QQ"

    def __call__(self, value):
        return Fraction(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) with elements stored as ints in ``range(p)``."""

    def __init__(self, p):
        p = int(p)
        if p < 2 or p >= 2**31 or not is_prime(p):
            raise ValueError(f"GF(p) needs a prime below 2^31, got {p}")
        self.char = p
        self.name = f"Fp({p})"

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.char) % self.char
        return int(value) % self.char

    def inv(self, a):
        a %= self.char
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.char)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.char == self.char

    def __hash__(self):
        return hash(("Fp", self.char))

    def __repr__(self):
        return self.name


QQ = RationalField()


def GF(p):
    return PrimeField(p)


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n):
    """Prime factorization of a positive int as ``{p: e}``."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n):
    return frozenset(factorize(n)) if n else frozenset()


def radical(n):
    """Product of the distinct primes dividing ``n``; ``radical(0) == 0``."""
    if n == 0:
        return 0
    r = 1
    for p in factorize(n):
        r *= p
    return r


def xgcd(a, b):
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x, nx, y, ny = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
    if a < 0:
        a, x, y = -a, -x, -y
    return a, x, y


# -- integer matrices --------------------------------------------------------

def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def matmul(A, B):
    if not A:
        return []
    inner = len(B)
    if any(len(row) != inner for row in A):
        raise ExactArithError("inner dimensions differ")
    cols = len(B[0]) if B else 0
    return [[sum(row[k] * B[k][j] for k in range(inner)) for j in range(cols)] for row in A]


def matvec(A, x):
    if any(len(row) != len(x) for row in A):
        raise ExactArithError("matrix/vector dimensions differ")
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def det(A):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def smith_normal_form(A, cols=None):
    """Smith normal form ``(U, D, V)`` with ``U @ A @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with non-negative
    entries and ``d1 | d2 | ...``.  The pivot at each stage is the entry of
    smallest nonzero absolute value in the remaining block, ties broken by
    (row, col) order, so the output is reproducible.  ``cols`` is only needed
    when ``A`` has no rows.
    """
    m = len(A)
    n = len(A[0]) if m else (cols or 0)
    D = [list(map(int, row)) for row in A]
    if any(len(row) != n for row in D):
        raise ExactArithError("ragged matrix")
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for s in range(min(m, n)):
        while True:
            best = None
            for i in range(s, m):
                for j in range(s, n):
                    v = abs(D[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            if best is None:
                return U, D, V
            _, pi, pj = best
            swap_rows(s, pi)
            swap_cols(s, pj)
            p = D[s][s]
            dirty = False
            for i in range(s + 1, m):
                if D[i][s]:
                    add_row(s, i, -(D[i][s] // p))
                    dirty = dirty or D[i][s] != 0
            for j in range(s + 1, n):
                if D[s][j]:
                    add_col(s, j, -(D[s][j] // p))
                    dirty = dirty or D[s][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(s + 1, m) for j in range(s + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, s, 1)
        if D[s][s] < 0:
            D[s] = [-a for a in D[s]]
            U[s] = [-a for a in U[s]]
    return U, D, V


def snf_diagonal(A, cols=None):
    _, D, _ = smith_normal_form(A, cols)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def integer_rank(A):
    return sum(1 for d in snf_diagonal(A) if d)


def solve_linear_z(A, b, cols=None):
    """Integer solution ``x`` of ``A x = b``, or ``None`` when there is none."""
    m = len(A)
    n = len(A[0]) if m else (cols or 0)
    if len(b) != m:
        raise ExactArithError(f"right-hand side has length {len(b)}, expected {m}")
    if m == 0:
        return [0] * n
    U, D, V = smith_normal_form(A)
    c = matvec(U, [int(v) for v in b])
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i]:
                return None
        elif c[i] % d:
            return None
        else:
            y[i] = c[i] // d
    return matvec(V, y)


def integer_kernel(A, cols):
    """Columns of the returned ``cols x k`` matrix span ``ker(A)`` over ZZ."""
    if not A:
        return identity(cols)
    _, D, V = smith_normal_form(A)
    r = sum(1 for i in range(min(len(D), cols)) if D[i][i])
    return [row[r:] for row in V]


# -- ZZ and ZZ/n as base rings -------------------------------------------------

class IntegerRing:
    """ZZ (``modulus == 0``) or ZZ/n, with the interface the module layer uses.

    Elements are Python ints; ideals are stored by the non-negative generator
    of their preimage in ZZ, so ``(a)`` in ZZ/n is kept as ``gcd(a, n)``.
    """

    field = None

    def __init__(self, modulus=0):
        modulus = abs(int(modulus))
        if modulus == 1:
            raise ValueError("ZZ/1 is the zero ring")
        self.n = modulus

    def __eq__(self, other):
        return isinstance(other, IntegerRing) and other.n == self.n

    def __hash__(self):
        return hash(("ZZ", self.n))

    def __repr__(self):
        return f"ZZ/{self.n}" if self.n else "ZZ"

    @property
    def ambient(self):
        return IntegerRing(0)

    def __call__(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            value = value.numerator
        return int(value)

    zero = 0
    one = 1

    def canonical(self, a):
        return a % self.n if self.n else int(a)

    def is_unit(self, a):
        if self.n:
            return gcd(self.canonical(a), self.n) == 1
        return a in (1, -1)

    def unit_inverse(self, a):
        if not self.n:
            return a
        return pow(a, -1, self.n)

    def modulus_gens(self):
        return [self.n] if self.n else []

    def ideal(self, gens):
        g = self.n
        for a in gens:
            g = gcd(g, int(a))
        return IntIdeal(self, g)

    def syzygies(self, A, ncols):
        K = integer_kernel([list(map(int, row)) for row in A], ncols)
        return [[K[i][j] for i in range(ncols)] for j in range(len(K[0]) if K else 0)]

    def submodule(self, vectors, rank):
        return _IntSubmodule(vectors, rank)

    def degree(self, a):
        return 0 if a else -1


class _IntSubmodule:
    def __init__(self, vectors, rank):
        self.rank = rank
        self.rows = [[int(v[i]) for v in vectors] for i in range(rank)]
        self.ncols = len(vectors)

    def contains(self, vec):
        if not any(vec):
            return True
        if self.ncols == 0:
            return False
        return solve_linear_z(self.rows, [int(a) for a in vec]) is not None


class IntIdeal:
    """Ideal ``(g)`` of ZZ or ZZ/n; for ZZ/n, ``g`` divides n."""

    __slots__ = ("ring", "g")

    def __init__(self, ring, g):
        self.ring = ring
        self.g = abs(int(g))

    def __eq__(self, other):
        return isinstance(other, IntIdeal) and self.ring == other.ring and self.g == other.g

    def __hash__(self):
        return hash((self.ring, self.g))

    @property
    def gens(self):
        return (self.g,) if self.g else ()

    def visible_gens(self):
        return [self.g] if self.g != self.ring.n else []

    def is_unit(self):
        return self.g == 1

    def is_zero(self):
        return self.g == self.ring.n

    def contains(self, a):
        return a % self.g == 0 if self.g else a == 0

    def sum(self, other):
        return IntIdeal(self.ring, gcd(self.g, other.g))

    def product(self, other):
        return self.ring.ideal([self.g * other.g])

    def intersection(self, other):
        if not self.g or not other.g:
            return IntIdeal(self.ring, 0)
        return self.ring.ideal([self.g * other.g // gcd(self.g, other.g)])

    def radical_contains(self, other):
        """``other`` lies in the radical of ``self``."""
        if self.g == 0:
            return other.g == 0
        return other.g % radical(self.g) == 0

    def __repr__(self):
        return f"({self.g})"
