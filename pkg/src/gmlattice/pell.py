"""Pell-type equations n^2 - m*a^2 = c solved through continued fractions.

The negative Pell equation P_m(-1) is solvable exactly when the continued
fraction of sqrt(m) has odd period (plus the degenerate case m = 1); the
fundamental solution is read off the convergent just before the period ends.
General small right-hand sides are covered by the classical bound on
fundamental-class representatives in terms of the unit of P_m(1).
"""

from dataclasses import dataclass
from math import isqrt

from .arith import is_square
from .errors import DomainError, SquareInputError

__all__ = [
    "PellSolution",
    "cf_sqrt",
    "negative_pell",
    "pell_general",
    "pell_unit",
]


@dataclass(frozen=True)
class PellSolution:
    """Non-negative integers with n^2 - m*a^2 = c."""

    n: int
    a: int
    m: int
    c: int

    def __post_init__(self):
        if self.n * self.n - self.m * self.a * self.a != self.c:
            raise DomainError(
                f"({self.n}, {self.a}) does not solve n^2 - {self.m} a^2 = {self.c}"
            )

    def as_pair(self) -> tuple[int, int]:
        return (self.n, self.a)

    def to_dict(self) -> dict:
        return {"n": self.n, "a": self.a}


def cf_sqrt(m: int) -> tuple[int, list[int]]:
    """Continued fraction sqrt(m) = [a0; period...], minimal period.

    Classical recurrence on (m_k, d_k); the period of sqrt(m) closes exactly
    at the first partial quotient equal to 2*a0.
    """
    if m < 2:
        raise DomainError("cf_sqrt expects m >= 2")
    if is_square(m):
        raise SquareInputError(f"sqrt({m}) is an integer, no period")
    a0 = isqrt(m)
    period = []
    mm, dd, a = 0, 1, a0
    while True:
        mm = dd * a - mm
        dd = (m - mm * mm) // dd
        a = (a0 + mm) // dd
        period.append(a)
        if a == 2 * a0:
            return a0, period


def _convergent(a0: int, period: list[int], idx: int) -> tuple[int, int]:
    """(numerator, denominator) of the idx-th convergent, idx 0 = a0."""
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    for i in range(idx):
        q = period[i % len(period)]
        h_prev, h = h, q * h + h_prev
        k_prev, k = k, q * k + k_prev
    return h, k


def pell_unit(m: int) -> tuple[int, int]:
    """Fundamental solution (x1, y1) of x^2 - m*y^2 = 1, m >= 2 non-square."""
    a0, period = cf_sqrt(m)
    ell = len(period)
    idx = ell - 1 if ell % 2 == 0 else 2 * ell - 1
    x, y = _convergent(a0, period, idx)
    assert x * x - m * y * y == 1
    return x, y


def negative_pell(m: int) -> PellSolution | None:
    """Fundamental solution of n^2 - m*a^2 = -1, or None if unsolvable.

    Perfect squares are handled outside the continued-fraction path:
    n^2 - s^2 a^2 = -1 factors as (n - sa)(n + sa) = -1, solvable only for
    s = 1 with (n, a) = (0, 1).
    """
    if m < 1:
        raise DomainError("negative_pell expects m >= 1")
    if m == 1:
        return PellSolution(0, 1, 1, -1)
    if is_square(m):
        return None
    a0, period = cf_sqrt(m)
    ell = len(period)
    if ell % 2 == 0:
        return None
    n, a = _convergent(a0, period, ell - 1)
    return PellSolution(n, a, m, -1)


def _square_pell(s: int, c: int) -> list[PellSolution]:
    """All non-negative solutions of n^2 - s^2 a^2 = c via (n-sa)(n+sa) = c."""
    sols = set()
    for e in range(1, isqrt(abs(c)) + 1):
        if abs(c) % e:
            continue
        f = abs(c) // e
        pairs = [(e, f), (-f, -e)] if c > 0 else [(-e, f), (-f, e)]
        for lo, hi in pairs:
            if (lo + hi) % 2:
                continue
            n = (lo + hi) // 2
            diff = hi - lo
            if n < 0 or diff % (2 * s):
                continue
            sols.add((n, diff // (2 * s)))
    return [PellSolution(n, a, s * s, c) for n, a in sorted(sols)]


def pell_general(m: int, c: int, cap: int = 10**6) -> list[PellSolution]:
    """Fundamental-class representatives of n^2 - m*a^2 = c with n, a >= 0.

    An empty list means the equation is unsolvable.  The representatives
    satisfy 0 <= n <= sqrt(|c| (x1 + 1) / 2) with (x1, y1) the fundamental
    unit of P_m(1).  For c^2 < m every primitive solution appears among
    the continued-fraction convergents of sqrt(m) (two full periods
    suffice), so huge fundamental units cost nothing; the direct scan up
    to the unit bound is used only when |c| >= sqrt(m), where the bound is
    small.  Perfect-square m reduces to factoring c, which also covers the
    P_{2d}(5) check at d = 2 where 2d = 4.
    """
    if m < 1:
        raise DomainError("pell_general expects m >= 1")
    if c == 0:
        raise DomainError("pell_general expects c != 0")
    if abs(c) > cap:
        raise DomainError(f"|c| exceeds the configured cap {cap}")
    if is_square(m):
        return _square_pell(isqrt(m), c)
    x1, _ = pell_unit(m)
    n_bound = isqrt((abs(c) * (x1 + 1)) // 2) + 1
    sols = set()
    if c > 0 and is_square(c):
        sols.add((isqrt(c), 0))
    if c < 0 and (-c) % m == 0 and is_square((-c) // m):
        sols.add((0, isqrt((-c) // m)))
    if c * c < m:
        a0, period = cf_sqrt(m)
        ell = len(period)
        for g in range(1, isqrt(abs(c)) + 1):
            if c % (g * g):
                continue
            target = c // (g * g)
            h_prev, h = 1, a0
            q_prev, q = 0, 1
            for k in range(2 * ell + 2):
                if h * h - m * q * q == target:
                    sols.add((g * h, g * q))
                step = period[k % ell]
                h_prev, h = h, step * h + h_prev
                q_prev, q = q, step * q + q_prev
        sols = {s for s in sols if s[0] <= n_bound}
    else:
        if n_bound > 2 * 10**6:
            raise DomainError(
                "scan bound too large: |c| >= sqrt(m) with a huge fundamental unit"
            )
        for n in range(0, n_bound + 1):
            r = n * n - c
            if r < 0 or r % m:
                continue
            q2 = r // m
            a = isqrt(q2)
            if a * a == q2:
                sols.add((n, a))
    return [PellSolution(n, a, m, c) for n, a in sorted(sols)]
