"""Pure-Python kernels for the exhaustive residue sweeps.

Mirrors seljac._speedups; seljac.kernels picks whichever is importable.
Both kernels work over q = p**r with gcd(n, q) = 1 and scan primitive
residues (those not divisible by p).
"""
from __future__ import annotations

BACKEND = "pure-python"


def multiplier_scan(n: int, q: int, p: int) -> tuple[list[int], list[int]]:
    """Multipliers m (1 < m < q, p does not divide m) preserving multiplicity data.

    Returns (function_ms, zero_set_ms):
    function_ms  -- m with floor(n*i/q) == floor(n*((i*m) % q)/q) for every
                    primitive i in 1..q-1 (invariance of the multiplicity
                    function itself);
    zero_set_ms  -- m mapping the primitive zero set {i : n*i < q} into
                    itself (the weaker, zero-set-level invariance).
    """
    function_ms: list[int] = []
    zero_set_ms: list[int] = []
    for m in range(2, q):
        if m % p == 0:
            continue
        ok_fun = True
        ok_zero = True
        for i in range(1, q):
            if i % p == 0:
                continue
            lhs = (n * i) // q
            rhs = (n * ((i * m) % q)) // q
            if ok_fun and lhs != rhs:
                ok_fun = False
            if ok_zero and lhs == 0 and rhs != 0:
                ok_zero = False
            if not ok_fun and not ok_zero:
                break
        if ok_fun:
            function_ms.append(m)
        if ok_zero:
            zero_set_ms.append(m)
    return function_ms, zero_set_ms


def feasibility_counts(n: int, q: int, p: int) -> tuple[int, bool]:
    """Over B = {i : q/n < i < q, p does not divide i}: the cardinality of
    B and whether n-1 divides floor(n*i/q) for every i in B."""
    b_count = 0
    divisible = True
    for i in range(1, q):
        if i % p == 0:
            continue
        mult = (n * i) // q
        if mult > 0:
            b_count += 1
            if mult % (n - 1) != 0:
                divisible = False
    return b_count, divisible
