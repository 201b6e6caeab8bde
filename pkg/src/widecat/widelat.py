"""Wide subcategories of finitely presented modules, kept as classifying data.

A ``WideSubcat`` is the category ``{M finitely presented : supp M in datum}``
together with a list of generators whose supports cover the datum.  On the
supported rings (polynomial rings over QQ or GF(p), their quotients by
finitely generated ideals, ZZ and ZZ/n) every wide subcategory has this
form, so membership and lattice operations reduce to locus comparisons.
"""

import re
from dataclasses import dataclass, field

from .derived import ThickSubcat, homology, koszul, s0, support_of_complex
from .freemod import FPModule, acts_trivially, base_change, restrict_scalars
from .polyring import PolyRing, RingMismatch
from .spectrum import ClosedLocus, OrderIdealView, SpecZSet, check_supported, support_of

FLAVORS = ("wide", "serre", "torsion")


class WideSubcat:
    def __init__(self, ring, generators, datum, flavor="wide"):
        if flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {flavor!r}")
        self.ring = ring
        self.generators = tuple(generators)
        self.datum = datum
        self.flavor = flavor

    def with_flavor(self, flavor):
        return WideSubcat(self.ring, self.generators, self.datum, flavor)

    def contains(self, M):
        return member(M, self)

    def __le__(self, other):
        return self.datum.contained_in(other.datum)

    def __eq__(self, other):
        return isinstance(other, WideSubcat) and self.datum == other.datum

    def __hash__(self):
        return hash(self.ring)

    def __repr__(self):
        return f"{self.flavor}[{self.ring}]{{datum {self.datum}}}"


def wide_generated_by(generators, ring):
    check_supported(ring)
    loc = ClosedLocus.empty(ring)
    for M in generators:
        if M.ring != ring:
            raise RingMismatch(f"{M.ring} vs {ring}")
        loc = loc.union(support_of(M))
    return WideSubcat(ring, generators, loc)


def from_datum(datum, flavor="wide"):
    """The subcategory classified by ``datum``, generated by ``R/a``."""
    ring = datum.ring
    gens = [] if datum.is_empty() else [FPModule.cyclic(ring, datum.ideal.visible_gens())]
    return WideSubcat(ring, gens, datum, flavor)


def zero_subcategory(ring):
    return WideSubcat(ring, [], ClosedLocus.empty(ring))


def all_finitely_presented(ring):
    return wide_generated_by([FPModule.free(ring, 1)], ring)


def member(M, W):
    check_supported(W.ring)
    if M.ring != W.ring:
        raise RingMismatch(f"{M.ring} vs {W.ring}")
    return support_of(M).contained_in(W.datum)


def join(a, b):
    return WideSubcat(a.ring, a.generators + b.generators, a.datum.union(b.datum))


def meet(a, b):
    return from_datum(a.datum.intersect(b.datum))


def complexes_with_homology_in(W):
    """Thick subcategory of complexes whose homology lies in ``W``."""
    check_supported(W.ring)
    ring = W.ring
    if W.datum.is_empty():
        gens = []
    else:
        ideal_gens = W.datum.ideal.visible_gens()
        gens = [koszul(ideal_gens, ring)] if ideal_gens else [s0(ring)]
    return ThickSubcat(ring, gens, W.datum)


def wide_from_homology(T):
    """Wide subcategory generated by all homology of ``T``'s generators."""
    check_supported(T.ring)
    ring = T.ring
    mods = []
    loc = ClosedLocus.empty(ring)
    for X in T.generators:
        for n in X.degrees():
            H = homology(X, n)
            if H.ngens:
                mods.append(H)
                loc = loc.union(support_of(H))
    return WideSubcat(ring, mods, loc)


def thick_member_datum(T, W):
    """Adjunction side ``T <= f(W)``."""
    return T.datum.contained_in(W.datum)


def _check_quotient(big, small):
    if not isinstance(big, PolyRing) or not isinstance(small, PolyRing) or not big.same_ambient(small):
        raise RingMismatch(f"{small} is not a quotient of {big}")
    if big.modulus is not None:
        for g in big.modulus.gens:
            if not small.ideal([]).contains(g):
                raise RingMismatch(f"{small} is not a quotient of {big}")


def inflate_from_quotient(W, ring):
    """Wide subcategory of ``ring``-modules generated by ``W`` (a category over ``ring/a``)."""
    check_supported(ring)
    _check_quotient(ring, W.ring)
    datum = ClosedLocus(ring.ideal(list(W.datum.ideal.gens)))
    gens = [restrict_scalars(M, ring) for M in W.generators]
    return WideSubcat(ring, gens, datum, W.flavor)


def restrict_to_quotient(W, quotient_ring):
    """Members of ``W`` killed by the modulus of ``quotient_ring``."""
    check_supported(quotient_ring)
    _check_quotient(W.ring, quotient_ring)
    datum = ClosedLocus(quotient_ring.ideal(list(W.datum.ideal.gens)))
    gens = [base_change(M, quotient_ring) for M in W.generators]
    return WideSubcat(quotient_ring, gens, datum, W.flavor)


def killed_by(M, ideal_gens):
    """Module-level test for ``v``: the ideal acts trivially on ``M``."""
    return acts_trivially(ideal_gens, M)


def vanishing_primes(W):
    """Primes where every member localises to zero: the complement of the datum."""
    return OrderIdealView(W.datum)


def torsion_theory_vanishing_on(view):
    """Torsion theory of modules vanishing at every prime of ``view``."""
    return from_datum(view.complement, "torsion")


def torsion_and_serre_views(W):
    """(torsion view, serre view); on the supported rings they share one datum."""
    return W.with_flavor("torsion"), W.with_flavor("serre")


# -- coproduct-closed wide subcategories of abelian groups ----------------------

_SUMMAND = re.compile(r"^\s*(?:(Q)|(Z)_\((\d+)\)|(Z)/(\d+)(?:\^(\d+))?|(Z))\s*$")


@dataclass(frozen=True)
class ZSummand:
    """One of ``Z``, ``Q``, ``Z_(p)`` or ``Z/p^k``."""

    tag: str
    p: int = 0
    k: int = 0

    def __post_init__(self):
        from .exactarith import is_prime

        if self.tag not in ("Z", "Q", "Z_(p)", "Z/p^k"):
            raise ValueError(f"unknown summand {self.tag!r}")
        if self.tag in ("Z_(p)", "Z/p^k") and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.tag == "Z/p^k" and self.k < 1:
            raise ValueError("need k >= 1")

    def point_support(self):
        """Points ``q`` (0 = generic) where ``k_q (x)^L summand`` is nonzero."""
        if self.tag == "Z":
            return SpecZSet((), cofinite=True, generic=True)
        if self.tag == "Q":
            return SpecZSet((), generic=True)
        if self.tag == "Z_(p)":
            return SpecZSet((self.p,), generic=True)
        return SpecZSet((self.p,))

    def __str__(self):
        if self.tag == "Z/p^k":
            return f"Z/{self.p}^{self.k}" if self.k > 1 else f"Z/{self.p}"
        if self.tag == "Z_(p)":
            return f"Z_({self.p})"
        return self.tag


@dataclass(frozen=True)
class ZModuleDescriptor:
    summands: tuple = field(default_factory=tuple)

    @classmethod
    def parse(cls, text):
        from .exactarith import factorize
        from .polyring import ParseError

        out = []
        pos = 0
        for part in text.split("+"):
            m = _SUMMAND.match(part)
            if m is None:
                raise ParseError(f"unknown summand {part.strip()!r}", text, pos)
            if m.group(1):
                out.append(ZSummand("Q"))
            elif m.group(2):
                out.append(ZSummand("Z_(p)", int(m.group(3))))
            elif m.group(4):
                base = int(m.group(5))
                k = int(m.group(6) or 1)
                if base < 2:
                    raise ParseError("cyclic order must exceed 1", text, pos)
                # Z/n splits into its primary parts
                for p, e in sorted(factorize(base ** k).items()):
                    out.append(ZSummand("Z/p^k", p, e))
            else:
                out.append(ZSummand("Z"))
            pos += len(part) + 1
        return cls(tuple(out))

    def point_support(self):
        s = SpecZSet()
        for t in self.summands:
            s = s.union(t.point_support())
        return s

    def __str__(self):
        return " + ".join(map(str, self.summands)) or "0"


@dataclass(frozen=True)
class CoproductWideSubcatZ:
    """Coproduct-closed wide subcategory of abelian groups generated by ``k_p``, ``p`` in ``points``."""

    points: SpecZSet


def member_coproduct_z(M, A):
    """Every summand's point support lies in ``A``."""
    return all(t.point_support().issubset(A.points) for t in M.summands)
