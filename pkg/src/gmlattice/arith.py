"""Elementary exact number theory: factorization, primality, sums of two squares.

Everything here works on unbounded Python integers; the scales involved
(discriminants up to a few thousand, search caps up to 10**6) make trial
division and deterministic Miller-Rabin entirely adequate.
"""

from math import isqrt

__all__ = [
    "factorize",
    "is_prime",
    "is_square",
    "sum_of_two_squares",
    "two_square_decomposition",
    "xgcd",
]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division, {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def sum_of_two_squares(n: int) -> bool:
    """True iff n = x**2 + y**2 for some integers x, y.

    Criterion: every prime = 3 (mod 4) divides n to an even power.
    """
    if n < 0:
        return False
    if n == 0:
        return True
    return all(e % 2 == 0 for p, e in factorize(n).items() if p % 4 == 3)


def two_square_decomposition(n: int) -> tuple[int, int] | None:
    """A pair (x, y) with x <= y and x**2 + y**2 = n, or None.

    Direct scan over x <= isqrt(n/2); n here is never larger than a few
    times 10**6 so this stays instant.
    """
    if n < 0:
        return None
    x = 0
    while 2 * x * x <= n:
        r = n - x * x
        y = isqrt(r)
        if y * y == r:
            return (x, y)
        x += 1
    return None
