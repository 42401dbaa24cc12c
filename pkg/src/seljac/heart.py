"""Permutation groups acting on the mod-p sum-zero module of a root set.

For a degree-n permutation group and a prime p not dividing n, the
sum-zero subspace of the F_p permutation module has dimension n - 1 and
is an honest direct summand; its endomorphism commutant detects double
transitivity (commutant dimension 1).
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .arith import is_prime
from .fpmatrix import FpMatrix, rank_fp


def parse_permutation(text: str, degree: int) -> tuple[int, ...]:
    """Parse a permutation of {0..degree-1}.

    Accepts cycle notation "(0 1)(2 3)" (cycles applied right to left)
    or a one-line image list "1 0 3 2" / "1,0,3,2".
    """
    s = text.strip()
    if not s:
        raise ValueError("empty permutation")
    if s.startswith("("):
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", s):
            raise ValueError(f"malformed cycle notation: {text!r}")
        image = list(range(degree))
        cycles = re.findall(r"\(([^()]*)\)", s)
        for body in reversed(cycles):
            pts = [int(v) for v in re.split(r"[\s,]+", body.strip()) if v]
            if len(set(pts)) != len(pts):
                raise ValueError(f"repeated point in cycle: {body!r}")
            if any(v >= degree or v < 0 for v in pts):
                raise ValueError(f"point out of range 0..{degree - 1}: {body!r}")
            moved = dict(zip(pts, pts[1:] + pts[:1]))
            image = [moved.get(v, v) for v in image]
        return tuple(image)
    pts = [int(v) for v in re.split(r"[\s,]+", s) if v]
    if sorted(pts) != list(range(degree)):
        raise ValueError(f"not a permutation of 0..{degree - 1}: {text!r}")
    return tuple(pts)


@dataclass(frozen=True)
class PermGroup:
    """A permutation group given by generators on {0..degree-1}."""

    degree: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        for g in self.generators:
            if sorted(g) != list(range(self.degree)):
                raise ValueError(f"not a permutation of 0..{self.degree - 1}: {g}")

    @classmethod
    def from_text(cls, degree: int, gens: list[str]) -> PermGroup:
        return cls(degree, tuple(parse_permutation(g, degree) for g in gens))

    @classmethod
    def symmetric(cls, n: int) -> PermGroup:
        if n == 1:
            return cls(1, ())
        swap = tuple([1, 0] + list(range(2, n)))
        cycle = tuple(list(range(1, n)) + [0])
        return cls(n, (swap, cycle))

    @classmethod
    def alternating(cls, n: int) -> PermGroup:
        if n < 3:
            return cls(n, ())
        gens = []
        for k in range(2, n):
            img = list(range(n))
            img[0], img[1], img[k] = 1, k, 0
            gens.append(tuple(img))
        return cls(n, tuple(gens))

    @classmethod
    def cyclic(cls, n: int) -> PermGroup:
        return cls(n, (tuple(list(range(1, n)) + [0]),))

    @classmethod
    def trivial(cls, n: int) -> PermGroup:
        return cls(n, ())


def is_doubly_transitive(group: PermGroup) -> bool:
    """Orbit of the ordered pair (0, 1) under the generators covers all
    n(n-1) ordered pairs."""
    n = group.degree
    if n < 2:
        raise ValueError("double transitivity needs degree >= 2")
    start = (0, 1)
    seen = {start}
    frontier = [start]
    target = n * (n - 1)
    while frontier:
        nxt = []
        for a, b in frontier:
            for g in group.generators:
                pair = (g[a], g[b])
                if pair not in seen:
                    seen.add(pair)
                    nxt.append(pair)
        frontier = nxt
    return len(seen) == target


def heart_dimension(group: PermGroup) -> int:
    return group.degree - 1


def permutation_heart_matrix(perm: tuple[int, ...], p: int) -> FpMatrix:
    """Action of one permutation on the sum-zero module, in the basis
    u_k = e_k - e_{n-1} for k = 0..n-2 (so u_{n-1} reads as 0)."""
    n = len(perm)
    d = n - 1
    cols = []
    for k in range(d):
        vec = [0] * d
        a = perm[k]
        b = perm[n - 1]
        if a < d:
            vec[a] += 1
        if b < d:
            vec[b] -= 1
        cols.append(vec)
    rows = tuple(tuple(cols[c][r] for c in range(d)) for r in range(d))
    return FpMatrix(p, rows)


def heart_centralizer_dim(group: PermGroup, p: int) -> int:
    """Dimension over F_p of the algebra of matrices commuting with the
    group's action on the sum-zero module.

    Requires p prime and p not dividing the degree (otherwise the sum-zero
    module is not a direct summand and the question changes meaning).
    """
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    n = group.degree
    if n < 2:
        raise ValueError("degree must be >= 2")
    if n % p == 0:
        raise ValueError(f"prime {p} divides the degree {n}; module is not a summand")
    d = n - 1
    mats = [permutation_heart_matrix(g, p).entries for g in group.generators]
    rows: list[list[int]] = []
    for a in mats:
        # (A M - M A)[i][j] = 0: unknowns M[k][l] flattened as k*d + l
        for i in range(d):
            for j in range(d):
                row = [0] * (d * d)
                for k in range(d):
                    row[k * d + j] += a[i][k]
                    row[i * d + k] -= a[k][j]
                rows.append([v % p for v in row])
    return d * d - rank_fp(rows, p)
