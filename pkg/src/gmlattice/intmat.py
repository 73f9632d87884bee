"""Exact linear algebra over Z and Q: determinants, characteristic polynomials,
Smith and Hermite normal forms, integer kernels.

All routines take and return immutable tuples of tuples of Python ints, so
results are hashable and safe to share between threads.  No floating point is
used anywhere.
"""

from fractions import Fraction
from operator import index as _int

Matrix = tuple[tuple[int, ...], ...]

__all__ = [
    "bareiss_det",
    "charpoly",
    "hermite_row_basis",
    "identity",
    "kernel_basis",
    "mat_mul",
    "mat_vec",
    "rank",
    "rational_solve_square",
    "smith_normal_form",
    "smith_normal_form_full",
    "to_matrix",
    "transpose",
]


def to_matrix(rows) -> Matrix:
    """Freeze rows into an integer matrix; rejects non-integral entries."""
    return tuple(tuple(_int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(M: Matrix) -> Matrix:
    return tuple(zip(*M)) if M else ()


def mat_mul(A, B) -> Matrix:
    Bt = list(zip(*B))
    return tuple(
        tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A
    )


def mat_vec(A, v) -> tuple[int, ...]:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def bareiss_det(M: Matrix) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(M)
    if n == 0:
        return 1
    a = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def charpoly(M: Matrix) -> list[int]:
    """Coefficients [1, c1, ..., cn] of det(x*I - M), exactly.

    Faddeev-LeVerrier recursion; the divisions by k are exact for integer
    matrices because the characteristic polynomial is monic integral.
    """
    n = len(M)
    coeffs = [1]
    N = identity(n)
    for k in range(1, n + 1):
        N = mat_mul(M, N)
        tr = sum(N[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact"
        c = q
        coeffs.append(c)
        if k < n:
            N = tuple(
                tuple(N[i][j] + (c if i == j else 0) for j in range(n))
                for i in range(n)
            )
    return coeffs


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _addmul_row(a, dst, src, q):
    if q:
        row_s = a[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], row_s)]


def _negate_row(a, i):
    a[i] = [-x for x in a[i]]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def _addmul_col(a, dst, src, q):
    if q:
        for row in a:
            row[dst] += q * row[src]


def _negate_col(a, i):
    for row in a:
        row[i] = -row[i]


def smith_normal_form_full(M: Matrix):
    """Return (D, U, V, Vinv) with U*M*V = D diagonal, d1 | d2 | ... >= 0.

    U and V are unimodular; Vinv is the exact inverse of V (tracked through
    the column operations, never computed by matrix inversion).
    """
    m = len(M)
    n = len(M[0]) if m else 0
    a = [list(row) for row in M]
    u = [list(row) for row in identity(m)]
    v = [list(row) for row in identity(n)]
    vinv = [list(row) for row in identity(n)]

    def row_swap(i, j):
        _swap_rows(a, i, j)
        _swap_rows(u, i, j)

    def row_addmul(dst, src, q):
        _addmul_row(a, dst, src, q)
        _addmul_row(u, dst, src, q)

    def row_negate(i):
        _negate_row(a, i)
        _negate_row(u, i)

    def col_swap(i, j):
        _swap_cols(a, i, j)
        _swap_cols(v, i, j)
        _swap_rows(vinv, i, j)

    def col_addmul(dst, src, q):
        # A <- A*C with C = I + q*E[src,dst]; C^-1 acts on vinv rows.
        _addmul_col(a, dst, src, q)
        _addmul_col(v, dst, src, q)
        _addmul_row(vinv, src, dst, -q)

    def col_negate(i):
        _negate_col(a, i)
        _negate_col(v, i)
        _negate_row(vinv, i)

    t = 0
    while t < min(m, n):
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            # clear column t below and above, Euclid-style
            dirty = False
            for i in range(m):
                if i != t and a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_addmul(i, t, -q)
                    if a[i][t]:
                        row_swap(i, t)
                        dirty = True
            if dirty:
                continue
            for j in range(n):
                if j != t and a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_addmul(j, t, -q)
                    if a[t][j]:
                        col_swap(j, t)
                        dirty = True
            if dirty:
                continue
            # divisibility: pivot must divide the rest of the block
            fix = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        fix = i
                        break
                if fix is not None:
                    break
            if fix is None:
                break
            row_addmul(t, fix, 1)
        if a[t][t] < 0:
            row_negate(t)
        t += 1

    D = to_matrix(a)
    return D, to_matrix(u), to_matrix(v), to_matrix(vinv)


def smith_normal_form(M: Matrix):
    """Smith normal form (D, U, V) with U*M*V = D, U and V unimodular."""
    D, U, V, _ = smith_normal_form_full(M)
    return D, U, V


def invariant_factors(M: Matrix) -> list[int]:
    D, _, _, _ = smith_normal_form_full(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def rank(M: Matrix) -> int:
    if not M or not M[0]:
        return 0
    return len(invariant_factors(M))


def hermite_row_basis(rows) -> Matrix:
    """Canonical basis (row-style Hermite normal form) of the row module.

    Pivots positive, entries above each pivot reduced to [0, pivot); zero
    rows dropped.  Two generating sets of the same module map to identical
    output, which is what makes enumeration results reproducible.
    """
    a = [list(map(int, row)) for row in rows if any(row)]
    if not a:
        return ()
    n = len(a[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(a)):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, len(a)):
            while a[i][c]:
                q = a[r][c] // a[i][c]
                a[r] = [x - q * y for x, y in zip(a[r], a[i])]
                a[r], a[i] = a[i], a[r]
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return to_matrix(row for row in a[:r] if any(row))


def kernel_basis(M: Matrix) -> Matrix:
    """Primitive basis of {x in Z^n : M x = 0}, as canonical HNF rows.

    The kernel of the Smith decomposition is spanned by the columns of V
    past the rank; since V is unimodular that span is automatically
    saturated in Z^n.
    """
    if not M:
        return identity(0)
    n = len(M[0])
    D, _, V, _ = smith_normal_form_full(M)
    r = len([1 for i in range(min(len(D), n)) if D[i][i]])
    cols = [tuple(V[i][j] for i in range(n)) for j in range(r, n)]
    return hermite_row_basis(cols)


def rational_solve_square(A, b) -> list[Fraction] | None:
    """Solve A x = b exactly for square nonsingular A; None if singular."""
    n = len(A)
    a = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]
