# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the exhaustive residue sweeps.

Same contract as seljac._kernels_py; all quantities fit comfortably in
64-bit signed integers at the supported sweep sizes.
"""

BACKEND = "compiled"


def multiplier_scan(n, q, p):
    """See seljac._kernels_py.multiplier_scan."""
    cdef long long cn = n, cq = q, cp = p
    cdef long long m, i, lhs, rhs
    cdef bint ok_fun, ok_zero
    function_ms = []
    zero_set_ms = []
    for m in range(2, cq):
        if m % cp == 0:
            continue
        ok_fun = True
        ok_zero = True
        for i in range(1, cq):
            if i % cp == 0:
                continue
            lhs = (cn * i) // cq
            rhs = (cn * ((i * m) % cq)) // cq
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


def feasibility_counts(n, q, p):
    """See seljac._kernels_py.feasibility_counts."""
    cdef long long cn = n, cq = q, cp = p
    cdef long long i, mult, b_count = 0
    cdef bint divisible = True
    for i in range(1, cq):
        if i % cp == 0:
            continue
        mult = (cn * i) // cq
        if mult > 0:
            b_count += 1
            if mult % (cn - 1) != 0:
                divisible = False
    return int(b_count), bool(divisible)
