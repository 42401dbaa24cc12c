"""Interior lattice points of the (n, q) Newton triangle and the induced
eigenvalue bookkeeping on a superelliptic curve's holomorphic differentials.

For y^q = f(x), deg f = n, gcd(n, q) = 1, q a prime power, the forms
x^(j-1) dx / y^(q-i) indexed by interior lattice points (j, i) of the
triangle q*j + n*i < n*q (j, i >= 1) are a basis of the holomorphic
differentials, so the genus is the interior point count (n-1)(q-1)/2.
The order-q automorphism multiplies y by a primitive root of unity; the
form indexed by (j, i) picks up exponent i, and the eigenvalue with
exponent -i appears with multiplicity floor(n*i/q).
"""
from __future__ import annotations

from dataclasses import dataclass

from .arith import euler_phi_prime_power, extended_gcd, prime_power


def validate_pair(n: int, q: int) -> tuple[int, int]:
    """Check n >= 3, q = p**r, gcd(n, q) = 1; return (p, r)."""
    if n < 3:
        raise ValueError(f"degree n must be >= 3, got {n}")
    pr = prime_power(q)
    if pr is None:
        raise ValueError(f"q must be a prime power >= 2, got {q}")
    g, _, _ = extended_gcd(n, q)
    if g != 1:
        raise ValueError(f"n and q must be coprime, got gcd({n}, {q}) = {g}")
    return pr


@dataclass(frozen=True)
class NewtonTriangle:
    n: int
    q: int

    def __post_init__(self):
        validate_pair(self.n, self.q)


@dataclass(frozen=True)
class BasisDifferential:
    """Interior point (j, i): the form x^(j-1) dx / y^(q-i); the chart
    automorphism scales it by the eigenvalue with exponent i."""

    j: int
    i: int

    @property
    def eigen_exponent(self) -> int:
        return self.i


def interior_points(tri: NewtonTriangle) -> list[BasisDifferential]:
    """All (j, i) with j >= 1, i >= 1, q*j + n*i < n*q, ordered
    lexicographically by (j, i)."""
    n, q = tri.n, tri.q
    out = []
    for j in range(1, n):
        # q*j + n*i < n*q  <=>  i < q*(n - j)/n
        for i in range(1, q):
            if q * j + n * i < n * q:
                out.append(BasisDifferential(j, i))
            else:
                break
    return out


def genus_lattice(tri: NewtonTriangle) -> int:
    """Genus as the interior lattice point count."""
    return len(interior_points(tri))


def genus_formula(n: int, q: int) -> int:
    """(n-1)(q-1)/2."""
    validate_pair(n, q)
    return (n - 1) * (q - 1) // 2


def eigen_multiplicity(n: int, q: int, i: int) -> int:
    """Multiplicity floor(n*i/q) of the exponent--i eigenvalue, 1 <= i <= q-1."""
    validate_pair(n, q)
    if not 1 <= i <= q - 1:
        raise ValueError(f"exponent index must be in 1..{q - 1}, got {i}")
    return (n * i) // q


@dataclass
class EigenSpectrum:
    """Multiplicity of each nontrivial eigenvalue exponent i = 1..q-1."""

    n: int
    q: int
    multiplicities: dict[int, int]

    def total(self) -> int:
        return sum(self.multiplicities.values())

    def primitive_total(self) -> int:
        p, _ = prime_power(self.q)
        return sum(m for i, m in self.multiplicities.items() if i % p != 0)


def full_spectrum(n: int, q: int) -> EigenSpectrum:
    validate_pair(n, q)
    mult = {i: (n * i) // q for i in range(1, q)}
    return EigenSpectrum(n, q, mult)


def primitive_mass(n: int, q: int) -> int:
    """Sum of multiplicities over exponents coprime to q; equals
    (n-1)*phi(q)/2."""
    p, _ = validate_pair(n, q)
    return sum((n * i) // q for i in range(1, q) if i % p != 0)


def primitive_mass_formula(n: int, q: int) -> int:
    p, r = validate_pair(n, q)
    return (n - 1) * euler_phi_prime_power(p, r) // 2
