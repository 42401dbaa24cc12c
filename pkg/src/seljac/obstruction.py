"""Brute-force obstruction scans on the multiplicity function
i -> floor(n*i/q) over primitive residues mod q = p**r.

Two independent obstructions to extra symmetry of the eigenvalue data:

* multiplier scan: residues m that leave the multiplicity function
  invariant under i -> i*m (none are expected to exist; the scan is the
  proof-by-exhaustion engine);
* square-case feasibility: necessary conditions for the centralizer
  square scenario, which single out (n, q) = (3, 4).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .arith import euler_phi_prime_power, prime_powers_upto
from .kernels import feasibility_counts, multiplier_scan
from .lattice import validate_pair


@dataclass(frozen=True)
class InvariantMultiplierReport:
    """Multipliers preserving the multiplicity data for one (n, q).

    invariant_ms is the function-level set (floor(n*i/q) preserved at
    every primitive i); zero_set_ms only requires the zero set
    {i : n*i < q} to be preserved. The function-level set is contained
    in the zero-set one; a strict gap is worth reporting, never an error.
    """

    n: int
    q: int
    p: int
    r: int
    invariant_ms: tuple[int, ...]
    zero_set_ms: tuple[int, ...]

    def __post_init__(self):
        if not set(self.invariant_ms) <= set(self.zero_set_ms):
            raise AssertionError("function-level invariance must imply zero-set invariance")
        # invariance under m forces invariance under powers of m
        ms = set(self.invariant_ms)
        for m1 in ms:
            for m2 in ms:
                prod = (m1 * m2) % self.q
                if prod != 1 and prod not in ms:
                    raise AssertionError("invariant multiplier set must be power-closed")

    @property
    def divergence(self) -> tuple[int, ...]:
        return tuple(m for m in self.zero_set_ms if m not in set(self.invariant_ms))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "p": self.p,
            "r": self.r,
            "invariant_ms": list(self.invariant_ms),
            "zero_set_ms": list(self.zero_set_ms),
        }


@dataclass(frozen=True)
class FeasibilityReport:
    """Necessary-condition screen for the square centralizer case.

    B = {i : q/n < i < q, p does not divide i}; feasible requires
    dim_w = phi(q)/2 integral, #B <= dim_w, and n-1 dividing every
    multiplicity floor(n*i/q) for i in B.
    """

    n: int
    q: int
    p: int
    r: int
    b_count: int
    dim_w: Fraction
    divisibility_ok: bool
    feasible: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "p": self.p,
            "r": self.r,
            "b_count": self.b_count,
            "dim_w": str(self.dim_w),
            "divisibility_ok": self.divisibility_ok,
            "feasible": self.feasible,
        }


def invariant_automorphisms(n: int, q: int) -> InvariantMultiplierReport:
    """Exhaustive scan of all m coprime to q with 1 < m < q."""
    p, r = validate_pair(n, q)
    function_ms, zero_ms = multiplier_scan(n, q, p)
    return InvariantMultiplierReport(
        n, q, p, r, tuple(function_ms), tuple(zero_ms)
    )


def square_case_feasible(n: int, q: int) -> FeasibilityReport:
    p, r = validate_pair(n, q)
    b_count, divisibility_ok = feasibility_counts(n, q, p)
    dim_w = Fraction(euler_phi_prime_power(p, r), 2)
    feasible = (
        dim_w.denominator == 1 and Fraction(b_count) <= dim_w and divisibility_ok
    )
    return FeasibilityReport(n, q, p, r, b_count, dim_w, divisibility_ok, feasible)


def _coprime_prime_powers(n: int, q_max: int) -> Iterator[tuple[int, int]]:
    for q, p, _ in prime_powers_upto(q_max):
        if n % p != 0:
            yield q, p


def multiplier_sweep(ns: list[int], q_max: int) -> Iterator[InvariantMultiplierReport]:
    """All reports for n in ns (ascending) and coprime prime powers q <= q_max."""
    for n in sorted(ns):
        for q, _ in _coprime_prime_powers(n, q_max):
            yield invariant_automorphisms(n, q)


def feasibility_sweep(n_max: int, q_max: int) -> Iterator[FeasibilityReport]:
    """All reports for 3 <= n <= n_max and coprime prime powers q <= q_max."""
    for n in range(3, n_max + 1):
        for q, _ in _coprime_prime_powers(n, q_max):
            yield square_case_feasible(n, q)
