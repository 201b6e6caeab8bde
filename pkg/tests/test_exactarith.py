from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from widecat.exactarith import (
    GF,
    QQ,
    ExactArithError,
    IntegerRing,
    det,
    factorize,
    integer_kernel,
    matmul,
    matvec,
    radical,
    smith_normal_form,
    snf_diagonal,
    solve_linear_z,
    xgcd,
)

small_matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=m, max_size=m
        )
    )
)


def _is_diagonal_chain(D):
    m, n = len(D), len(D[0])
    diag = [D[i][i] for i in range(min(m, n))]
    off = all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    nonneg = all(d >= 0 for d in diag)
    chain = all(diag[i + 1] % diag[i] == 0 if diag[i] else diag[i + 1] == 0 for i in range(len(diag) - 1))
    return off and nonneg and chain


# values frozen from sympy's smith_normal_form
@pytest.mark.parametrize(
    "A, diag",
    [
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
        ([[6, 0], [0, 4]], [2, 12]),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], [1, 3, 0]),
    ],
)
def test_snf_known_values(A, diag):
    U, D, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == D
    assert snf_diagonal(A) == diag


@settings(max_examples=500, deadline=None)
@given(small_matrices)
def test_snf_factorization_and_unimodularity(A):
    U, D, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    assert _is_diagonal_chain(D)


@settings(max_examples=100, deadline=None)
@given(small_matrices)
def test_snf_agrees_with_sympy(A):
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    S = sympy_snf(Matrix(A), domain=ZZ)
    ref = sorted(abs(int(S[i, i])) for i in range(min(S.shape)))
    ours = sorted(snf_diagonal(A))
    assert ours == ref


def test_snf_is_deterministic():
    A = [[4, 6, 2], [2, 8, 10], [0, 2, 4]]
    assert smith_normal_form(A) == smith_normal_form([row[:] for row in A])


def test_snf_does_not_mutate():
    A = [[2, 3], [4, 5]]
    smith_normal_form(A)
    assert A == [[2, 3], [4, 5]]


def test_solve_linear_z_examples():
    assert solve_linear_z([[2, 0], [0, 3]], [4, 9]) == [2, 3]
    assert solve_linear_z([[2]], [3]) is None
    x = solve_linear_z([[2, 3]], [1])
    assert 2 * x[0] + 3 * x[1] == 1


@settings(max_examples=200, deadline=None)
@given(small_matrices, st.data())
def test_solve_linear_z_roundtrip(A, data):
    x = data.draw(st.lists(st.integers(-5, 5), min_size=len(A[0]), max_size=len(A[0])))
    b = matvec(A, x)
    sol = solve_linear_z(A, b)
    assert sol is not None and matvec(A, sol) == b


def test_solve_linear_z_rejects_bad_shape():
    with pytest.raises(ExactArithError) as exc:
        solve_linear_z([[1, 2]], [1, 2])
    assert exc.value.name == "dimension-mismatch"


@settings(max_examples=200, deadline=None)
@given(small_matrices)
def test_integer_kernel_spans_kernel(A):
    n = len(A[0])
    K = integer_kernel(A, n)
    cols = [[K[i][j] for i in range(n)] for j in range(len(K[0]) if K else 0)]
    for c in cols:
        assert matvec(A, c) == [0] * len(A)
    # every small kernel vector lies in the span
    for v in product(range(-2, 3), repeat=n):
        if matvec(A, list(v)) == [0] * len(A) and any(v):
            assert solve_linear_z(K, list(v)) is not None


def test_det_matches_permutation_expansion():
    from itertools import permutations

    A = [[2, -1, 3], [0, 4, 1], [5, 2, -2]]

    def sign(p):
        s = 1
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                if p[i] > p[j]:
                    s = -s
        return s

    ref = sum(sign(p) * A[0][p[0]] * A[1][p[1]] * A[2][p[2]] for p in permutations(range(3)))
    assert det(A) == ref


def test_number_theory_helpers():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert radical(72) == 6
    assert radical(0) == 0
    g, a, b = xgcd(240, 46)
    assert g == 2 and 240 * a + 46 * b == 2


def test_fields():
    assert QQ("3/4") == Fraction(3, 4)
    F = GF(7)
    assert F(Fraction(1, 3)) == 5
    assert F.inv(3) == 5
    with pytest.raises(ValueError):
        GF(8)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_integer_ring_ideals():
    Z = IntegerRing()
    Z12 = IntegerRing(12)
    assert Z.ideal([12, 18]).g == 6
    assert Z12.ideal([8]).g == 4
    assert Z12.ideal([5]).is_unit()
    assert Z12.ideal([0]).is_zero()
    assert Z.ideal([4]).radical_contains(Z.ideal([2]))
    assert not Z.ideal([4]).radical_contains(Z.ideal([3]))
    assert Z.ideal([0]).radical_contains(Z.ideal([0]))
    assert Z.ideal([6]).intersection(Z.ideal([4])).g == 12
    assert Z12.is_unit(5) and not Z12.is_unit(4)
    with pytest.raises(ValueError):
        IntegerRing(1)
