"""Integral lattices presented by Gram matrices: invariants, sublattices,
bounded vector search, and small-rank isometry testing.

A lattice here is a free Z-module of finite rank with an integer-valued
symmetric bilinear form, carried entirely by its Gram matrix.  Vectors are
plain tuples of ints in the lattice basis.  Every operation is a pure
function on immutable values.
"""

from dataclasses import dataclass, field
from itertools import product
from math import gcd, isqrt
import re

from .errors import (
    DegenerateLatticeError,
    InvalidTwistError,
    LatticeError,
    UnsupportedRankError,
)
from . import intmat
from .intmat import Matrix

__all__ = [
    "GramLattice",
    "IsometryResult",
    "Sublattice",
    "determinant",
    "direct_sum",
    "enumerate_vectors",
    "find_hyperbolic_plane",
    "format_gram_text",
    "is_isometric_small",
    "mukai_sign_reversed",
    "orthogonal_complement",
    "parse_gram_text",
    "saturate",
    "signature",
    "standard_lattice",
    "twist",
]


@dataclass(frozen=True)
class GramLattice:
    """A lattice given by its symmetric integer Gram matrix."""

    gram: Matrix
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        g = intmat.to_matrix(self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(row) != n for row in g):
            raise LatticeError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if g[i][j] != g[j][i]:
                    raise LatticeError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def is_degenerate(self) -> bool:
        return determinant(self) == 0

    def norm(self, v) -> int:
        """v . v under the bilinear form."""
        return self.pairing(v, v)

    def pairing(self, v, w) -> int:
        if len(v) != self.rank or len(w) != self.rank:
            raise LatticeError("vector length must equal the lattice rank")
        gw = intmat.mat_vec(self.gram, w)
        return sum(a * b for a, b in zip(v, gw))

    def to_dict(self) -> dict:
        d = {"gram": [list(row) for row in self.gram]}
        if self.name:
            d["name"] = self.name
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GramLattice":
        return cls(intmat.to_matrix(d["gram"]), name=d.get("name"))


def determinant(L: GramLattice) -> int:
    """Exact determinant of the Gram matrix (fraction-free elimination)."""
    return intmat.bareiss_det(L.gram)


def signature(L: GramLattice) -> tuple[int, int, int]:
    """Inertia (positive, negative, null) of the form.

    Count sign variations of the exact characteristic polynomial p(x) and of
    p(-x); Descartes' rule is exact here because a symmetric matrix has only
    real eigenvalues.  The null count is the multiplicity of the root 0.
    """
    coeffs = intmat.charpoly(L.gram)
    null = 0
    while null < len(coeffs) - 1 and coeffs[-1 - null] == 0:
        null += 1

    def variations(cs):
        signs = [c for c in cs if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))

    pos = variations(coeffs)
    neg_coeffs = [c if (len(coeffs) - 1 - i) % 2 == 0 else -c for i, c in enumerate(coeffs)]
    neg = variations(neg_coeffs)
    return (pos, neg, null)


def twist(L: GramLattice, m: int) -> GramLattice:
    """The lattice L(m): same module, form multiplied by m."""
    if m == 0:
        raise InvalidTwistError("twist by 0 is not a lattice")
    name = f"{L.name}({m})" if L.name else None
    return GramLattice(tuple(tuple(m * x for x in row) for row in L.gram), name=name)


def direct_sum(*lattices: GramLattice) -> GramLattice:
    n = sum(L.rank for L in lattices)
    rows = []
    offset = 0
    for L in lattices:
        for row in L.gram:
            rows.append((0,) * offset + row + (0,) * (n - offset - L.rank))
        offset += L.rank
    return GramLattice(tuple(rows))


_U_GRAM = ((0, 1), (1, 0))

# Gram of E8 in root basis (Cartan matrix); nodes 1-2-3-4-5-6-7 in a chain
# with node 8 attached to node 5.  Even, positive definite, determinant 1.
_E8_GRAM = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, -1),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, 0, 0, -1, 0, 0, 2),
)

_I_RS = re.compile(r"^I\((\d+),(\d+)\)$")


def _diag(entries) -> GramLattice:
    n = len(entries)
    return GramLattice(
        tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))
    )


def standard_lattice(name: str, twist_by: int = 1) -> GramLattice:
    """Named standard lattices, with the form multiplied by ``twist_by``.

    Supported names: "U" (hyperbolic plane), "E8", "I(r,s)" (odd diagonal
    lattice), "Lambda" (E8^2 + U^2 + I(2,0)(2), the rank-22 vanishing
    lattice of signature (20,2)) and "LambdaTilde" (U^4 + E8(-1)^2, the
    rank-24 even unimodular lattice of signature (4,20)).
    """
    if twist_by == 0:
        raise InvalidTwistError("twist by 0 is not a lattice")
    key = name.strip()
    if key == "U":
        base = GramLattice(_U_GRAM, name="U")
    elif key == "E8":
        base = GramLattice(_E8_GRAM, name="E8")
    elif key == "Lambda":
        e8 = GramLattice(_E8_GRAM)
        u = GramLattice(_U_GRAM)
        base = direct_sum(e8, e8, u, u, _diag((2, 2)))
        base = GramLattice(base.gram, name="Lambda")
    elif key == "LambdaTilde":
        u = GramLattice(_U_GRAM)
        e8m = twist(GramLattice(_E8_GRAM), -1)
        base = direct_sum(u, u, u, u, e8m, e8m)
        base = GramLattice(base.gram, name="LambdaTilde")
    else:
        m = _I_RS.match(key)
        if not m:
            raise LatticeError(f"unknown standard lattice {name!r}")
        r, s = int(m.group(1)), int(m.group(2))
        base = _diag((1,) * r + (-1,) * s)
        base = GramLattice(base.gram, name=f"I({r},{s})")
    if twist_by == 1:
        return base
    out = twist(base, twist_by)
    return GramLattice(out.gram, name=f"{base.name}({twist_by})")


def mukai_sign_reversed() -> GramLattice:
    """U^4 + E8^2: the sign-reversed rank-24 Mukai lattice.

    Isometric to twist(standard_lattice("LambdaTilde"), -1) because
    U(-1) = U; presented with positive hyperbolic blocks so that the
    standard basis vectors u_i, v_i of the first two planes pair to +1.
    Even, unimodular, signature (20, 4).
    """
    u = GramLattice(_U_GRAM)
    e8 = GramLattice(_E8_GRAM)
    L = direct_sum(u, u, u, u, e8, e8)
    return GramLattice(L.gram, name="LambdaTilde(-1)")


# ---------------------------------------------------------------------------
# sublattices


@dataclass(frozen=True)
class Sublattice:
    """A sublattice of ``ambient`` spanned by the rows of ``basis``."""

    ambient: GramLattice
    basis: Matrix

    def __post_init__(self):
        b = intmat.to_matrix(self.basis)
        object.__setattr__(self, "basis", b)
        n = self.ambient.rank
        if any(len(row) != n for row in b):
            raise LatticeError("basis vectors must have the ambient rank")
        if b and intmat.rank(b) != len(b):
            raise LatticeError("basis vectors must be linearly independent over Q")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def gram(self) -> GramLattice:
        """Induced Gram matrix B G B^T."""
        g = self.ambient.gram
        rows = tuple(
            tuple(self.ambient.pairing(v, w) for w in self.basis) for v in self.basis
        )
        return GramLattice(rows)

    def is_primitive(self) -> bool:
        """True iff every invariant factor of the coordinate matrix is 1."""
        if not self.basis:
            return True
        return all(d == 1 for d in intmat.invariant_factors(self.basis))


def orthogonal_complement(L: GramLattice, S: Sublattice) -> Sublattice:
    """The primitive sublattice of everything orthogonal to S.

    Computed as the integer kernel of B*G via the Smith decomposition, so
    the result is saturated; its basis is in canonical Hermite form.
    """
    if S.ambient != L:
        raise LatticeError("sublattice does not live in the given lattice")
    if not S.basis:
        return Sublattice(L, intmat.identity(L.rank))
    M = intmat.mat_mul(S.basis, L.gram)
    return Sublattice(L, intmat.kernel_basis(M))


def saturate(L: GramLattice, S: Sublattice) -> tuple[Sublattice, int]:
    """Primitive closure of S (rational span intersected with L) and index.

    The index i satisfies det(S) = i^2 * det(saturation).
    """
    if S.ambient != L:
        raise LatticeError("sublattice does not live in the given lattice")
    if not S.basis:
        return S, 1
    D, _, _, Vinv = intmat.smith_normal_form_full(S.basis)
    r = S.rank
    factors = [D[i][i] for i in range(r)]
    sat_rows = intmat.hermite_row_basis(Vinv[:r])
    index = 1
    for d in factors:
        index *= d
    return Sublattice(L, sat_rows), index


# ---------------------------------------------------------------------------
# bounded vector search


def _norm_solutions(G, target, bounds):
    """Yield all x with |x_i| <= bounds[i] and x.G.x == target, in
    lexicographic order.

    The last coordinate is found by solving the induced integer quadratic
    instead of scanning, which keeps boxes of radius ~30 instant.
    """
    n = len(G)
    if n == 0:
        if target == 0:
            yield ()
        return
    last = n - 1
    a = G[last][last]
    rng = [range(-b, b + 1) for b in bounds[:-1]]
    zb = bounds[-1]
    for prefix in product(*rng):
        qp = 0
        for i in range(last):
            xi = prefix[i]
            if xi:
                row = G[i]
                qp += xi * (
                    row[i] * xi
                    + 2 * sum(row[j] * prefix[j] for j in range(i + 1, last))
                )
        lin = sum(G[i][last] * prefix[i] for i in range(last))
        b = 2 * lin
        c = qp - target
        if a == 0:
            if b == 0:
                if c == 0:
                    for z in range(-zb, zb + 1):
                        yield prefix + (z,)
            else:
                if c % b == 0:
                    z = -c // b
                    if -zb <= z <= zb:
                        yield prefix + (z,)
        else:
            disc = b * b - 4 * a * c
            if disc < 0:
                continue
            s = isqrt(disc)
            if s * s != disc:
                continue
            roots = set()
            for num in (-b - s, -b + s):
                if num % (2 * a) == 0:
                    z = num // (2 * a)
                    if -zb <= z <= zb:
                        roots.add(z)
            for z in sorted(roots):
                yield prefix + (z,)


def enumerate_vectors(L: GramLattice, target_norm: int, coord_bound: int) -> list[tuple]:
    """All vectors with |coords| <= coord_bound and given norm, in
    lexicographic order.  Exhaustive within the box.
    """
    if coord_bound < 1:
        raise LatticeError("coord_bound must be >= 1")
    return list(_norm_solutions(L.gram, target_norm, [coord_bound] * L.rank))


def _canonical_sign(v):
    for x in v:
        if x > 0:
            return v
        if x < 0:
            return tuple(-y for y in v)
    return v


def _first_dual_pair(L, c, bound):
    """First u with u . c == 1, ordered by growing sup-norm then lex."""
    n = L.rank
    last = n - 1
    cl = c[last]
    for shell in range(1, bound + 1):
        rng = [range(-shell, shell + 1)] * last
        for prefix in product(*rng):
            acc = sum(c[i] * prefix[i] for i in range(last))
            if cl == 0:
                if acc == 1 and max(abs(x) for x in prefix) == shell:
                    return prefix + (0,)
            else:
                rem = 1 - acc
                if rem % cl == 0:
                    z = rem // cl
                    if abs(z) > shell:
                        continue
                    u = prefix + (z,)
                    if max(abs(x) for x in u) == shell:
                        return u
    return None


def find_hyperbolic_plane(L: GramLattice, coord_bound: int):
    """A pair (v, w) with v.v = w.w = 0 and v.w = 1, or None.

    Isotropic candidates are taken in order of growing sup-norm (sign
    normalized, then lexicographic); for the first candidate v admitting a
    box vector u with v.u = 1, the returned partner is w = u - (u.u/2) v,
    integral because L is even.  None means no pair was found within the
    box, not that none exists.
    """
    if not L.is_even():
        raise LatticeError("hyperbolic plane search requires an even lattice")
    if coord_bound < 1:
        raise LatticeError("coord_bound must be >= 1")
    seen = set()
    candidates = []
    for v in _norm_solutions(L.gram, 0, [coord_bound] * L.rank):
        if not any(v):
            continue
        cv = _canonical_sign(v)
        if cv in seen:
            continue
        seen.add(cv)
        candidates.append(cv)
    candidates.sort(key=lambda v: (max(abs(x) for x in v), v))
    for v in candidates:
        c = intmat.mat_vec(L.gram, v)
        g = 0
        for x in c:
            g = gcd(g, x)
        if g != 1:
            continue
        u = _first_dual_pair(L, c, coord_bound)
        if u is None:
            continue
        uu = L.norm(u)
        half = uu // 2
        w = tuple(x - half * y for x, y in zip(u, v))
        return (v, w)
    return None


# ---------------------------------------------------------------------------
# small-rank isometry search


@dataclass(frozen=True)
class IsometryResult:
    """Outcome of a bounded isometry search.

    status is "isometric" (with witness matrix T, columns = images of the
    basis, T^t G1 T = G2), "not-isometric" (proven: invariant mismatch or
    exhausted complete search), or "inconclusive" (bounded search over an
    indefinite lattice hit its box without deciding).
    """

    status: str
    matrix: Matrix | None = None

    def __bool__(self) -> bool:
        return self.status == "isometric"


def _definite_norm_vectors(G, target):
    """All v with v.G.v == target for positive definite G (complete)."""
    n = len(G)
    det = intmat.bareiss_det(G)
    bounds = []
    for i in range(n):
        minor = tuple(
            tuple(G[r][c] for c in range(n) if c != i) for r in range(n) if r != i
        )
        adj = intmat.bareiss_det(minor)
        bounds.append(isqrt((target * adj) // det))
    return list(_norm_solutions(G, target, bounds))


def is_isometric_small(
    L1: GramLattice,
    L2: GramLattice,
    rank_cap: int = 6,
    coord_bound: int = 10,
    det_cap: int = 10**6,
) -> IsometryResult:
    """Search for a unimodular T with T^t G1 T = G2 by backtracking over
    vectors of matching norms and pairings.

    Complete (hence a proof either way) for definite lattices; for
    indefinite ones the search is confined to |coords| <= coord_bound and
    reports "inconclusive" when the box is exhausted.
    """
    n = L1.rank
    if n > rank_cap or L2.rank > rank_cap:
        raise UnsupportedRankError(f"isometry search capped at rank {rank_cap}")
    if n != L2.rank:
        return IsometryResult("not-isometric")
    d1, d2 = determinant(L1), determinant(L2)
    if d1 == 0 or d2 == 0:
        raise DegenerateLatticeError("isometry search requires nondegenerate lattices")
    if d1 != d2 or L1.is_even() != L2.is_even() or signature(L1) != signature(L2):
        return IsometryResult("not-isometric")
    if n == 0:
        return IsometryResult("isometric", ())
    sig = signature(L1)
    definite = sig[0] == n or sig[1] == n
    if not definite and (abs(d1) > det_cap or abs(d2) > det_cap):
        return IsometryResult("inconclusive")

    G1, G2 = L1.gram, L2.gram
    if definite and sig[1] == n:
        G1 = tuple(tuple(-x for x in row) for row in G1)
        G2 = tuple(tuple(-x for x in row) for row in G2)

    pools = []
    for j in range(n):
        t = G2[j][j]
        if definite:
            if t <= 0:
                return IsometryResult("not-isometric")
            pools.append(_definite_norm_vectors(G1, t))
        else:
            pools.append(list(_norm_solutions(G1, t, [coord_bound] * n)))

    cols: list[tuple] = []

    def pair(x, y):
        gy = intmat.mat_vec(G1, y)
        return sum(a * b for a, b in zip(x, gy))

    def extend(j):
        for cand in pools[j]:
            if all(pair(cols[i], cand) == G2[i][j] for i in range(j)):
                cols.append(cand)
                if j + 1 == n:
                    return True
                if extend(j + 1):
                    return True
                cols.pop()
        return False

    if extend(0):
        T = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        return IsometryResult("isometric", T)
    return IsometryResult("not-isometric" if definite else "inconclusive")


# ---------------------------------------------------------------------------
# text format


def format_gram_text(L: GramLattice) -> str:
    """Rank on the first line, then the Gram rows, space separated."""
    lines = [str(L.rank)]
    lines.extend(" ".join(str(x) for x in row) for row in L.gram)
    return "\n".join(lines) + "\n"


def parse_gram_text(text: str) -> GramLattice:
    tokens = text.split()
    if not tokens:
        raise LatticeError("empty Gram text")
    try:
        r = int(tokens[0])
        entries = [int(t) for t in tokens[1:]]
    except ValueError as exc:
        raise LatticeError(f"malformed Gram text: {exc}") from None
    if r < 0 or len(entries) != r * r:
        raise LatticeError("Gram text must contain rank and rank*rank integers")
    rows = tuple(tuple(entries[i * r : (i + 1) * r]) for i in range(r))
    return GramLattice(rows)
