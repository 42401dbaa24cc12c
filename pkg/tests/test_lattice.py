"""Interior point bookkeeping on the (n, q) triangle."""
import math

import pytest
from hypothesis import given, strategies as st

from seljac.lattice import (
    BasisDifferential,
    NewtonTriangle,
    eigen_multiplicity,
    full_spectrum,
    genus_formula,
    genus_lattice,
    interior_points,
    primitive_mass,
    primitive_mass_formula,
    validate_pair,
)
from seljac.arith import prime_power


VALID_PAIRS = [
    (n, q)
    for n in range(3, 14)
    for q in range(2, 50)
    if prime_power(q) is not None and math.gcd(n, q) == 1
]

pair_st = st.sampled_from(VALID_PAIRS)


def test_interior_points_3_4():
    pts = interior_points(NewtonTriangle(3, 4))
    assert [(d.j, d.i) for d in pts] == [(1, 1), (1, 2), (2, 1)]
    assert pts[1].eigen_exponent == 2


def test_interior_points_are_interior():
    tri = NewtonTriangle(5, 8)
    for d in interior_points(tri):
        assert d.j >= 1 and d.i >= 1
        assert 8 * d.j + 5 * d.i < 40


@pytest.mark.parametrize(
    "n,q,g",
    [(3, 2, 1), (3, 4, 3), (4, 3, 3), (5, 2, 2), (4, 9, 12), (3, 8, 7), (7, 5, 12)],
)
def test_genus_fixtures(n, q, g):
    assert genus_formula(n, q) == g
    assert genus_lattice(NewtonTriangle(n, q)) == g


@given(pair_st)
def test_genus_lattice_matches_formula(pair):
    n, q = pair
    assert genus_lattice(NewtonTriangle(n, q)) == genus_formula(n, q)


def test_spectrum_3_4():
    spec = full_spectrum(3, 4)
    assert spec.multiplicities == {1: 0, 2: 1, 3: 2}
    assert spec.total() == 3
    assert spec.primitive_total() == 2


@given(pair_st)
def test_multiplicity_counts_row(pair):
    # mult of exponent i equals the number of interior points at height q - i
    n, q = pair
    pts = {(d.j, d.i) for d in interior_points(NewtonTriangle(n, q))}
    for i in range(1, q):
        row = sum(1 for (j, h) in pts if h == q - i)
        assert eigen_multiplicity(n, q, i) == row


@given(pair_st)
def test_multiplicity_reflection(pair):
    n, q = pair
    for i in range(1, q):
        assert eigen_multiplicity(n, q, i) + eigen_multiplicity(n, q, q - i) == n - 1


@given(pair_st)
def test_complement_involution(pair):
    # (j, i) <-> (n - j, q - i) swaps interior and non-interior points of
    # the open box; nothing lands on the diagonal because gcd(n, q) = 1
    n, q = pair
    pts = {(d.j, d.i) for d in interior_points(NewtonTriangle(n, q))}
    for j in range(1, n):
        for i in range(1, q):
            assert q * j + n * i != n * q
            assert ((j, i) in pts) != ((n - j, q - i) in pts)
    assert 2 * len(pts) == (n - 1) * (q - 1)


@given(pair_st)
def test_spectrum_totals(pair):
    n, q = pair
    spec = full_spectrum(n, q)
    assert spec.total() == genus_formula(n, q)
    assert spec.primitive_total() == primitive_mass(n, q) == primitive_mass_formula(n, q)


def test_primitive_mass_fixtures():
    assert primitive_mass(4, 9) == 9
    assert primitive_mass(3, 5) == 4
    assert primitive_mass(3, 2) == 1


@pytest.mark.parametrize("n,q", [(3, 6), (2, 5), (4, 2), (3, 1), (-1, 2), (3, 12)])
def test_validate_pair_rejects(n, q):
    with pytest.raises(ValueError):
        validate_pair(n, q)
    with pytest.raises(ValueError):
        NewtonTriangle(n, q)


def test_validate_pair_returns_factorization():
    assert validate_pair(3, 8) == (2, 3)
    assert validate_pair(4, 9) == (3, 2)


@pytest.mark.parametrize("i", [0, 4, -1, 17])
def test_eigen_multiplicity_range(i):
    with pytest.raises(ValueError):
        eigen_multiplicity(3, 4, i)


def test_basis_differential_is_hashable():
    assert BasisDifferential(1, 2) == BasisDifferential(1, 2)
    assert len({BasisDifferential(1, 1), BasisDifferential(1, 1)}) == 1
