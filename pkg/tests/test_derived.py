import pytest

from widecat.derived import (
    ChainMap,
    FreeComplex,
    NotAChainMap,
    NotAComplex,
    cone,
    homology,
    koszul,
    member_thick,
    perfectize,
    presentation_complex,
    s0,
    shift,
    support_of_complex,
    thick_generated_by,
)
from widecat.exactarith import IntegerRing
from widecat.freemod import FPModule, annihilator
from widecat.spectrum import ClosedLocus


def test_koszul_homology(qxy):
    R = qxy
    K = koszul([R("x"), R("y")], R)
    assert [K.rank(n) for n in range(3)] == [1, 2, 1]
    assert annihilator(homology(K, 0)).gens == R.ideal([R("x"), R("y")]).gens
    assert homology(K, 1).is_zero() and homology(K, 2).is_zero()
    assert support_of_complex(K) == ClosedLocus.of(R, ["x", "y"])


def test_koszul_on_non_regular_sequence(qxy):
    R = qxy
    K = koszul([R("x"), R("x")], R)
    H1 = homology(K, 1)
    assert not H1.is_zero()
    assert annihilator(H1).gens == R.ideal([R("x")]).gens


def test_not_a_complex(qxy):
    R = qxy
    with pytest.raises(NotAComplex) as exc:
        FreeComplex(R, {0: 1, 1: 1, 2: 1}, {1: [[R("x")]], 2: [[R("y")]]})
    assert exc.value.name == "not-a-complex"
    with pytest.raises(NotAComplex):
        FreeComplex(R, {0: 1, 1: 2}, {1: [[R("x")]]})


def test_presentation_complex_h0(qxy):
    R = qxy
    M = FPModule.from_matrix(R, [[R("x"), R("y")]])
    P = presentation_complex(M)
    assert annihilator(homology(P, 0)).gens == annihilator(M).gens
    H1 = homology(P, 1)
    assert H1.ngens == 1


def test_perfectize_is_resolution(qxy):
    R = qxy
    M = FPModule.cyclic(R, [R("x^2"), R("x*y")])
    X = perfectize(M)
    assert annihilator(homology(X, 0)).gens == annihilator(M).gens
    assert all(homology(X, n).is_zero() for n in X.degrees() if n > 0)


def test_cone_of_identity_is_acyclic(qxy):
    R = qxy
    K = koszul([R("x"), R("y")], R)
    ident = ChainMap(K, K, {n: [[R.one if i == j else R.zero for j in range(K.rank(n))] for i in range(K.rank(n))] for n in K.degrees()})
    C = cone(ident)
    assert all(homology(C, n).is_zero() for n in C.degrees())


def test_cone_of_multiplication(qxy):
    R = qxy
    S = s0(R)
    f = ChainMap(S, S, {0: [[R("x")]]})
    C = cone(f)
    assert annihilator(homology(C, 0)).gens == R.ideal([R("x")]).gens
    assert homology(C, 1).is_zero()


def test_bad_chain_map(qxy):
    R = qxy
    K = koszul([R("x")], R)
    with pytest.raises(NotAChainMap) as exc:
        ChainMap(K, K, {0: [[R.one]], 1: [[R.zero]]})
    assert exc.value.name == "not-a-chain-map"


def test_shift(qxy):
    R = qxy
    K = koszul([R("x"), R("y")], R)
    S = shift(K, 1)
    assert S.rank(1) == 1 and S.rank(3) == 1
    assert S.d(2) == [[-a for a in row] for row in K.d(1)]
    assert annihilator(homology(S, 1)).gens == annihilator(homology(K, 0)).gens


def test_thick_membership(qxy):
    R = qxy
    T = thick_generated_by([koszul([R("x")], R)], R)
    assert member_thick(koszul([R("x"), R("y")], R), T)
    assert not member_thick(koszul([R("y")], R), T)
    assert not member_thick(s0(R), T)


def test_integer_complexes():
    Z = IntegerRing()
    X = FreeComplex(Z, {0: 1, 1: 1}, {1: [[6]]})
    assert annihilator(homology(X, 0)).g == 6
    assert homology(X, 1).is_zero()
