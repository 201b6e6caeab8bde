import pytest
from hypothesis import given, settings, strategies as st

from widecat.exactarith import GF, IntegerRing
from widecat.freemod import FPModule, direct_sum
from widecat.polyring import ParseError, PolyRing, RingMismatch
from widecat.spectrum import (
    ClosedLocus,
    OrderIdealView,
    SpecZSet,
    UnsupportedRing,
    check_supported,
    parse_specz,
    support_of,
)


def V(R, *gens):
    return ClosedLocus.of(R, [R(g) for g in gens])


def test_locus_equality_is_up_to_radical(qxy):
    assert V(qxy, "x^2") == V(qxy, "x")
    assert V(qxy, "x^2", "y") == V(qxy, "x", "y^3")
    assert V(qxy, "x") != V(qxy, "y")


def test_union_and_intersection(qxy):
    R = qxy
    assert V(R, "x").union(V(R, "y")) == V(R, "x*y")
    assert V(R, "x").intersect(V(R, "y")) == V(R, "x", "y")
    assert V(R, "x", "y").contained_in(V(R, "x"))
    assert not V(R, "x").contained_in(V(R, "x", "y"))


def test_empty_and_whole(qxy):
    R = qxy
    assert ClosedLocus.empty(R).is_empty()
    assert ClosedLocus.whole(R).is_whole()
    assert V(R, "x^2+1", "x").is_empty()
    assert not V(R, "x").is_whole()
    assert repr(ClosedLocus.whole(R)) == "V(0)"


def test_support_of_modules(qxy):
    R = qxy
    M = direct_sum(FPModule.cyclic(R, [R("x")]), FPModule.cyclic(R, [R("y")]))
    assert support_of(M) == V(R, "x*y")
    assert support_of(FPModule.free(R, 1)).is_whole()
    assert support_of(FPModule.zero(R)).is_empty()


def test_support_over_integers():
    Z = IntegerRing()
    assert support_of(FPModule.cyclic(Z, [12])) == ClosedLocus.of(Z, [6])
    assert support_of(FPModule.free(Z, 1)).is_whole()


def test_mismatched_rings(qxy):
    other = PolyRing(GF(3), ["x", "y"])
    with pytest.raises(RingMismatch):
        V(qxy, "x").union(V(other, "x"))


def test_open_view(qxy):
    a = OrderIdealView(V(qxy, "x"))
    b = OrderIdealView(V(qxy, "x", "y"))
    # removing less leaves a larger open set
    assert b.contains_view(a)
    assert not a.contains_view(b)


def test_check_supported():
    assert check_supported(IntegerRing(6))
    with pytest.raises(UnsupportedRing) as exc:
        check_supported(object())
    assert exc.value.name == "unsupported-ring"


def test_specz_operations():
    a = parse_specz("{2,3}")
    b = parse_specz("~{3}+generic")
    assert a.union(b) == parse_specz("~{}+generic")
    assert a.intersect(b) == parse_specz("{2}")
    assert a.complement() == parse_specz("~{2,3}+generic")
    assert b.member(0) and not b.member(3) and b.member(101)
    assert parse_specz("{2}").issubset(a)


def test_specz_parse_errors():
    with pytest.raises(ParseError):
        parse_specz("{2,x}")
    with pytest.raises(ParseError):
        parse_specz("2,3")
    with pytest.raises(ValueError):
        SpecZSet([4])


primes = st.sets(st.sampled_from([2, 3, 5, 7, 11]), max_size=3)
specz = st.builds(SpecZSet, primes, st.booleans(), st.booleans())


@settings(max_examples=200, deadline=None)
@given(specz, specz, specz)
def test_specz_boolean_algebra(a, b, c):
    assert a.union(b) == b.union(a)
    assert a.intersect(b.union(c)) == a.intersect(b).union(a.intersect(c))
    assert a.union(a.complement()) == SpecZSet((), True, True)
    assert a.intersect(a.complement()) == SpecZSet()
    assert a.complement().complement() == a
    for p in (0, 2, 3, 13):
        assert a.union(b).member(p) == (a.member(p) or b.member(p))
        assert a.intersect(b).member(p) == (a.member(p) and b.member(p))


pool = ["x", "y", "x*y", "x^2", "x-1", "x+y", "y^2-x"]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(pool), st.sampled_from(pool), st.sampled_from(pool))
def test_locus_lattice_properties(qxy, f, g, h):
    A, B, C = V(qxy, f), V(qxy, g), V(qxy, h)
    assert A.union(B) == B.union(A)
    assert A.intersect(B.union(C)) == A.intersect(B).union(A.intersect(C))
    assert A.contained_in(A.union(B))
