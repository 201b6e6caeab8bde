"""Closed loci V(a) up to radical, their open complements, and point sets
of Spec ZZ.

A ``ClosedLocus`` stores one finitely generated ideal; a finite union of
loci is the locus of the product ideal, so every datum built from finitely
many modules fits in a single ideal.  Infinite unions are not representable.
"""

import re

from .exactarith import is_prime
from .freemod import fitting0
from .polyring import ParseError, RingMismatch


class ClosedLocus:
    """``V(ideal)``; two loci are equal when each ideal lies in the other's radical."""

    __slots__ = ("ring", "ideal")

    def __init__(self, ideal):
        self.ring = ideal.ring
        self.ideal = ideal

    @classmethod
    def of(cls, ring, gens):
        return cls(ring.ideal(gens))

    @classmethod
    def empty(cls, ring):
        return cls(ring.ideal([1]))

    @classmethod
    def whole(cls, ring):
        return cls(ring.ideal([]))

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def contained_in(self, other):
        self._check(other)
        return self.ideal.radical_contains(other.ideal)

    def union(self, other):
        self._check(other)
        return ClosedLocus(self.ideal.product(other.ideal))

    def intersect(self, other):
        self._check(other)
        return ClosedLocus(self.ideal.sum(other.ideal))

    def is_empty(self):
        return self.ideal.is_unit()

    def is_whole(self):
        return self.contained_in(ClosedLocus.whole(self.ring)) and ClosedLocus.whole(
            self.ring
        ).contained_in(self)

    def __eq__(self, other):
        if not isinstance(other, ClosedLocus) or self.ring != other.ring:
            return False
        return self.contained_in(other) and other.contained_in(self)

    def __hash__(self):
        return hash(self.ring)

    def __le__(self, other):
        return self.contained_in(other)

    def __repr__(self):
        gens = self.ideal.visible_gens()
        return "V(" + (", ".join(map(str, gens)) if gens else "0") + ")"


def union(a, b):
    return a.union(b)


def intersect(a, b):
    return a.intersect(b)


def contained_in(a, b):
    return a.contained_in(b)


def support_of(M):
    """``supp M = V(Fitt_0 M)``."""
    return ClosedLocus(fitting0(M))


class OrderIdealView:
    """The open set ``Spec R \\ V(a)``, kept through its complement."""

    __slots__ = ("complement",)

    def __init__(self, complement):
        self.complement = complement

    def __eq__(self, other):
        return isinstance(other, OrderIdealView) and self.complement == other.complement

    def __hash__(self):
        return hash(self.complement)

    def contains_view(self, other):
        # larger open set <-> smaller closed complement
        return self.complement.contained_in(other.complement)

    def __repr__(self):
        return f"Spec R \\ {self.complement}"


class SpecZSet:
    """A subset of Spec ZZ: finitely or cofinitely many primes, plus the generic point."""

    __slots__ = ("cofinite", "primes", "generic")

    def __init__(self, primes=(), cofinite=False, generic=False):
        primes = frozenset(int(p) for p in primes)
        bad = sorted(p for p in primes if not is_prime(p))
        if bad:
            raise ValueError(f"not prime: {bad}")
        self.cofinite = bool(cofinite)
        self.primes = primes
        self.generic = bool(generic)

    def __eq__(self, other):
        return (
            isinstance(other, SpecZSet)
            and (self.cofinite, self.primes, self.generic)
            == (other.cofinite, other.primes, other.generic)
        )

    def __hash__(self):
        return hash((self.cofinite, self.primes, self.generic))

    def member(self, point):
        """``point`` is a rational prime or 0 for the generic point."""
        if point == 0:
            return self.generic
        return (point in self.primes) != self.cofinite

    def complement(self):
        return SpecZSet(self.primes, not self.cofinite, not self.generic)

    def union(self, other):
        g = self.generic or other.generic
        a, b = self.primes, other.primes
        if not self.cofinite and not other.cofinite:
            return SpecZSet(a | b, False, g)
        if self.cofinite and other.cofinite:
            return SpecZSet(a & b, True, g)
        fin, cof = (a, b) if other.cofinite else (b, a)
        return SpecZSet(cof - fin, True, g)

    def intersect(self, other):
        return self.complement().union(other.complement()).complement()

    def issubset(self, other):
        return self.union(other) == other

    def __repr__(self):
        body = "{" + ",".join(map(str, sorted(self.primes))) + "}"
        return ("~" if self.cofinite else "") + body + ("+generic" if self.generic else "")


_SPECZ = re.compile(r"^\s*(~?)\s*\{([^}]*)\}\s*(\+\s*generic)?\s*$")


def parse_specz(text):
    m = _SPECZ.match(text)
    if m is None:
        raise ParseError("expected {p,...}, ~{p,...} or a trailing +generic", text, 0)
    items = [s.strip() for s in m.group(2).split(",") if s.strip()]
    for s in items:
        if not s.isdigit():
            raise ParseError(f"not a prime: {s!r}", text, text.find(s))
    return SpecZSet([int(s) for s in items], bool(m.group(1)), bool(m.group(3)))


class UnsupportedRing(ValueError):
    """Support-based decisions are only sound on the classified ring class."""

    name = "unsupported-ring"


def check_supported(ring):
    from .exactarith import IntegerRing, PrimeField, RationalField
    from .polyring import PolyRing

    if isinstance(ring, IntegerRing):
        return ring
    if isinstance(ring, PolyRing) and isinstance(ring.field, (RationalField, PrimeField)):
        return ring
    raise UnsupportedRing(f"no classification available over {ring!r}")
