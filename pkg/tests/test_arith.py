import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from seljac.arith import (
    euler_phi_prime_power,
    extended_gcd,
    fraction_is_square,
    fraction_sqrt,
    is_perfect_square,
    is_prime,
    prime_power,
    prime_powers_upto,
)


def test_extended_gcd_fixtures():
    g, u, v = extended_gcd(3, 4)
    assert g == 1 and u * 3 + v * 4 == 1
    g, u, v = extended_gcd(4, 9)
    assert g == 1 and u * 4 + v * 9 == 1
    g, u, v = extended_gcd(12, 18)
    assert g == 6 and u * 12 + v * 18 == 6
    assert extended_gcd(0, 5)[0] == 5
    assert extended_gcd(5, 0)[0] == 5


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_extended_gcd_bezout(a, b):
    if a == 0 and b == 0:
        with pytest.raises(ValueError):
            extended_gcd(0, 0)
        return
    g, u, v = extended_gcd(a, b)
    assert u * a + v * b == g
    assert g > 0 and a % g == 0 and b % g == 0


def test_extended_gcd_seeded_bulk():
    rng = random.Random(1234)
    for _ in range(10_000):
        a = rng.randint(-10**6, 10**6)
        b = rng.randint(-10**6, 10**6)
        if a == 0 and b == 0:
            continue
        g, u, v = extended_gcd(a, b)
        assert u * a + v * b == g


def test_is_prime_matches_sympy():
    for m in range(-3, 500):
        assert is_prime(m) == sympy.isprime(m)
    for m in (10**9 + 7, 10**9 + 6, 2**31 - 1):
        assert is_prime(m) == sympy.isprime(m)


@pytest.mark.parametrize(
    "q,expected",
    [
        (2, (2, 1)),
        (3, (3, 1)),
        (4, (2, 2)),
        (8, (2, 3)),
        (9, (3, 2)),
        (125, (5, 3)),
        (2048, (2, 11)),
        (1, None),
        (0, None),
        (-8, None),
        (6, None),
        (12, None),
        (100, None),
    ],
)
def test_prime_power(q, expected):
    assert prime_power(q) == expected


def test_euler_phi_prime_power():
    assert euler_phi_prime_power(2, 1) == 1
    assert euler_phi_prime_power(2, 2) == 2
    assert euler_phi_prime_power(3, 2) == 6
    assert euler_phi_prime_power(5, 3) == 100
    for p, r in ((2, 5), (3, 3), (7, 2)):
        assert euler_phi_prime_power(p, r) == sympy.totient(p**r)


def test_prime_powers_upto():
    assert prime_powers_upto(10) == [
        (2, 2, 1),
        (3, 3, 1),
        (4, 2, 2),
        (5, 5, 1),
        (7, 7, 1),
        (8, 2, 3),
        (9, 3, 2),
    ]
    assert prime_powers_upto(1) == []
    listed = prime_powers_upto(300)
    assert [q for q, _, _ in listed] == sorted(q for q, _, _ in listed)
    for q, p, r in listed:
        assert p**r == q and sympy.isprime(p)
    assert {q for q, _, _ in listed} == {
        m for m in range(2, 301) if len(sympy.factorint(m)) == 1
    }


def test_is_perfect_square():
    squares = {k * k for k in range(100)}
    for m in range(-5, 10_000):
        assert is_perfect_square(m) == (m in squares)


def test_fraction_square_helpers():
    assert fraction_is_square(Fraction(4, 9))
    assert fraction_sqrt(Fraction(4, 9)) == Fraction(2, 3)
    assert fraction_is_square(Fraction(0))
    assert fraction_sqrt(Fraction(0)) == 0
    assert not fraction_is_square(Fraction(-4, 9))
    assert not fraction_is_square(Fraction(2))
    assert not fraction_is_square(Fraction(4, 8))  # reduces to 1/2


@given(st.fractions(max_denominator=10**6))
def test_fraction_sqrt_roundtrip(r):
    sq = r * r
    assert fraction_is_square(sq)
    assert fraction_sqrt(sq) == abs(r)
