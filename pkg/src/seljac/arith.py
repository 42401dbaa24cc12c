"""Small exact integer helpers shared across the package."""
from __future__ import annotations

import math
from fractions import Fraction


def extended_gcd(n: int, q: int) -> tuple[int, int, int]:
    """Return (g, u, v) with u*n + v*q = g = gcd(n, q) > 0.

    Raises ValueError when both arguments are zero.
    """
    if n == 0 and q == 0:
        raise ValueError("gcd(0, 0) is undefined")
    old_r, r = n, q
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_u, u = u, old_u - k * u
        old_v, v = v, old_v - k * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Decompose q as p**r with p prime, r >= 1; None if q is not of that form."""
    if q < 2:
        return None
    p = None
    m = q
    if m % 2 == 0:
        p = 2
    else:
        d = 3
        while d * d <= m:
            if m % d == 0:
                p = d
                break
            d += 2
        else:
            return q, 1  # q itself is prime
    r = 0
    while m % p == 0:
        m //= p
        r += 1
    if m != 1:
        return None
    return p, r


def euler_phi_prime_power(p: int, r: int) -> int:
    """phi(p**r) = p**r - p**(r-1)."""
    return p**r - p ** (r - 1)


def prime_powers_upto(limit: int) -> list[tuple[int, int, int]]:
    """All (q, p, r) with q = p**r <= limit, sorted by q."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for m in range(2, math.isqrt(limit) + 1):
        if sieve[m]:
            step = len(range(m * m, limit + 1, m))
            sieve[m * m :: m] = bytes(step)
    out = []
    for p in range(2, limit + 1):
        if not sieve[p]:
            continue
        q, r = p, 1
        while q <= limit:
            out.append((q, p, r))
            q *= p
            r += 1
    out.sort()
    return out


def is_perfect_square(m: int) -> bool:
    if m < 0:
        return False
    s = math.isqrt(m)
    return s * s == m


def fraction_is_square(x: Fraction | int) -> bool:
    """Is x a square in Q? Zero counts as a square."""
    x = Fraction(x)
    if x < 0:
        return False
    return is_perfect_square(x.numerator) and is_perfect_square(x.denominator)


def fraction_sqrt(x: Fraction | int) -> Fraction:
    """Exact square root of a rational square (raises if x is not one)."""
    x = Fraction(x)
    if not fraction_is_square(x):
        raise ValueError(f"{x} is not a rational square")
    return Fraction(math.isqrt(x.numerator), math.isqrt(x.denominator))
