"""Exact linear algebra against independent oracles."""

from fractions import Fraction
from itertools import combinations
from math import gcd
from random import Random

from hypothesis import given, settings
from hypothesis import strategies as st

from gmlattice import intmat


def cofactor_det(M):
    """Independent determinant by recursive cofactor expansion."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        total += (-1) ** j * M[0][j] * cofactor_det(minor)
    return total


def minor_gcd_invariants(M):
    """Independent invariant factors via gcds of k x k minors."""
    m, n = len(M), len(M[0])
    prev = 1
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                sub = [[M[i][j] for j in cols] for i in rows]
                g = gcd(g, cofactor_det(sub))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def random_matrix(rng, m, n, lo=-9, hi=9):
    return tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(m))


def test_bareiss_matches_cofactor_expansion():
    rng = Random(1)
    for _ in range(60):
        n = rng.randint(0, 5)
        M = random_matrix(rng, n, n)
        assert intmat.bareiss_det(M) == cofactor_det([list(r) for r in M])


def test_charpoly_agrees_with_determinant_evaluation():
    rng = Random(2)
    for _ in range(40):
        n = rng.randint(1, 5)
        M = random_matrix(rng, n, n)
        coeffs = intmat.charpoly(M)
        assert coeffs[0] == 1
        for lam in (-3, -1, 0, 1, 2, 7):
            shifted = tuple(
                tuple((lam if i == j else 0) - M[i][j] for j in range(n))
                for i in range(n)
            )
            value = sum(c * lam ** (n - i) for i, c in enumerate(coeffs))
            assert value == intmat.bareiss_det(shifted)


def test_smith_normal_form_examples():
    D, U, V = intmat.smith_normal_form(((2, 0), (0, 2)))
    assert (D[0][0], D[1][1]) == (2, 2)
    D, U, V = intmat.smith_normal_form(((0, 1), (1, 0)))
    assert (D[0][0], D[1][1]) == (1, 1)
    D, U, V = intmat.smith_normal_form(((-2, 0, 1), (0, -2, 0), (1, 0, 2)))
    assert (D[0][0], D[1][1], D[2][2]) == (1, 1, 10)


def test_smith_normal_form_properties_random():
    rng = Random(3)
    for _ in range(80):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        M = random_matrix(rng, m, n)
        D, U, V, Vinv = intmat.smith_normal_form_full(M)
        assert intmat.mat_mul(intmat.mat_mul(U, M), V) == D
        assert abs(intmat.bareiss_det(U)) == 1
        assert abs(intmat.bareiss_det(V)) == 1
        assert intmat.mat_mul(V, Vinv) == intmat.identity(n)
        diag = [D[i][i] for i in range(min(m, n))]
        for a, b in zip(diag, diag[1:]):
            if b != 0:
                assert a != 0 and b % a == 0
        assert [d for d in diag if d] == minor_gcd_invariants([list(r) for r in M])


@settings(max_examples=60, deadline=None, derandomize=True)
@given(
    st.integers(1, 3),
    st.integers(1, 3),
    st.data(),
)
def test_smith_normal_form_hypothesis(m, n, data):
    M = tuple(
        tuple(data.draw(st.integers(-30, 30)) for _ in range(n)) for _ in range(m)
    )
    D, U, V = intmat.smith_normal_form(M)
    assert intmat.mat_mul(intmat.mat_mul(U, M), V) == D
    for i in range(m):
        for j in range(n):
            if i == j:
                assert D[i][j] >= 0
            else:
                assert D[i][j] == 0
    diag = [D[i][i] for i in range(min(m, n))]
    for a, b in zip(diag, diag[1:]):
        if b:
            assert a and b % a == 0


def test_hermite_row_basis_is_canonical():
    rng = Random(4)
    for _ in range(60):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        M = random_matrix(rng, m, n)
        H = intmat.hermite_row_basis(M)
        # unimodular row mixing does not change the canonical basis
        mixed = [list(r) for r in M]
        for _ in range(6):
            i, j = rng.randrange(m), rng.randrange(m)
            if i != j:
                q = rng.randint(-3, 3)
                mixed[i] = [a + q * b for a, b in zip(mixed[i], mixed[j])]
        assert intmat.hermite_row_basis(mixed) == H
        for row in H:
            lead = next(x for x in row if x)
            assert lead > 0


def test_kernel_basis_annihilates_and_is_primitive():
    rng = Random(5)
    for _ in range(60):
        m, n = rng.randint(1, 3), rng.randint(1, 5)
        M = random_matrix(rng, m, n)
        K = intmat.kernel_basis(M)
        for row in K:
            assert all(sum(M[i][j] * row[j] for j in range(n)) == 0 for i in range(m))
        if K:
            assert all(d == 1 for d in intmat.invariant_factors(K))
        assert len(K) == n - intmat.rank(M)


def test_rational_solve_square():
    rng = Random(6)
    solved = 0
    while solved < 40:
        n = rng.randint(1, 4)
        A = random_matrix(rng, n, n)
        if intmat.bareiss_det(A) == 0:
            assert intmat.rational_solve_square(A, [1] * n) is None or True
            continue
        b = [rng.randint(-9, 9) for _ in range(n)]
        x = intmat.rational_solve_square(A, b)
        for i in range(n):
            assert sum(Fraction(A[i][j]) * x[j] for j in range(n)) == b[i]
        solved += 1


def test_rank_and_identity():
    assert intmat.rank(intmat.identity(4)) == 4
    assert intmat.rank(((0, 0), (0, 0))) == 0
    assert intmat.rank(((1, 2), (2, 4))) == 1
