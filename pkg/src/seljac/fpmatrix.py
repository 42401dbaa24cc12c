"""Matrices over a prime field: just enough linear algebra for commutants."""
from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime


@dataclass(frozen=True)
class FpMatrix:
    """Matrix over F_p; entries stored reduced mod p, row-major."""

    p: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if self.entries:
            width = len(self.entries[0])
            if any(len(row) != width for row in self.entries):
                raise ValueError("ragged rows")
        reduced = tuple(tuple(v % self.p for v in row) for row in self.entries)
        object.__setattr__(self, "entries", reduced)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @classmethod
    def identity(cls, n: int, p: int) -> FpMatrix:
        return cls(p, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __mul__(self, other: FpMatrix) -> FpMatrix:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        if self.p != other.p or self.cols != other.rows:
            raise ValueError("incompatible matrices")
        p = self.p
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                s = 0
                for k in range(self.cols):
                    s += self.entries[i][k] * other.entries[k][j]
                row.append(s % p)
            out.append(tuple(row))
        return FpMatrix(p, tuple(out))


def rank_fp(rows: list[list[int]], p: int) -> int:
    """Rank of an integer matrix reduced mod p, by Gaussian elimination."""
    work = [[v % p for v in row] for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    col = 0
    nrows = len(work)
    while rank < nrows and col < ncols:
        pivot = None
        for i in range(rank, nrows):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            col += 1
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], p - 2, p)
        work[rank] = [(v * inv) % p for v in work[rank]]
        for i in range(nrows):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [(a - f * b) % p for a, b in zip(work[i], work[rank])]
        rank += 1
        col += 1
    return rank
