"""Galois group classification for cubics and quartics over Q, and for the
one-parameter families g(x) - t over the algebraic closure of Q(t).

Rational route: rational-root + discriminant-square tests for cubics; for
quartics the resolvent cubic z^3 - p z^2 - 4 r z + (4 p r - q^2) of the
depressed form x^4 + p x^2 + q x + r, with the standard resolvent-root
squareness criterion (Kappe-Warren) separating C4 from D4.

Geometric route: for f = g(x) - t the extension is automatically
irreducible over the closure of Q(t), and everything is decided by
whether disc_x(f) is a square in that field, tested place by place
(finite places at squarefree-factor granularity, plus infinity).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .arith import fraction_is_square, fraction_sqrt
from .poly import (
    Poly,
    discriminant,
    lagrange_interpolate,
    poly_gcd,
    squarefree_decomposition,
)
from .ratfunc import RatFunc


class GaloisLabel(enum.Enum):
    S3 = "S3"
    C3 = "C3"
    S4 = "S4"
    A4 = "A4"
    D4 = "D4"
    C4 = "C4"
    V4 = "V4"
    REDUCIBLE = "Reducible"

    def __str__(self) -> str:
        return self.value


def _divisors(m: int) -> list[int]:
    m = abs(m)
    if m == 0:
        return []
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
        d += 1
    return sorted(out)


def rational_roots(f: Poly) -> list[Fraction]:
    """All rational roots of a nonzero polynomial, ascending."""
    if not f:
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return []
    roots: set[Fraction] = set()
    coeffs = f.integer_scaled()
    k = 0
    while coeffs[k] == 0:
        k += 1
    if k > 0:
        roots.add(Fraction(0))
        coeffs = coeffs[k:]
    if len(coeffs) > 1:
        stripped = Poly(coeffs)
        for num in _divisors(coeffs[0]):
            for den in _divisors(coeffs[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand not in roots and stripped.evaluate(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def _require_squarefree(f: Poly) -> None:
    if poly_gcd(f, f.derivative()).degree != 0:
        raise ValueError("polynomial has multiple roots")


def classify_cubic_rational(f: Poly) -> GaloisLabel:
    """S3 / C3 / Reducible for a squarefree cubic over Q."""
    if f.degree != 3:
        raise ValueError(f"expected degree 3, got {f.degree}")
    _require_squarefree(f)
    w = f.monic()
    if rational_roots(w):
        return GaloisLabel.REDUCIBLE
    return GaloisLabel.C3 if fraction_is_square(discriminant(w)) else GaloisLabel.S3


def _depress_quartic(w: Poly) -> tuple[Fraction, Fraction, Fraction]:
    """Shift a monic quartic to x^4 + p x^2 + q x + r; returns (p, q, r)."""
    shifted = w.shift(-w.coeff(3) / 4)
    return shifted.coeff(2), shifted.coeff(1), shifted.coeff(0)


def resolvent_cubic(f: Poly) -> Poly:
    """Resolvent z^3 - p z^2 - 4 r z + (4 p r - q^2) of the depressed form
    of a quartic (roots are the pair-products theta = a1 a2 + a3 a4)."""
    if f.degree != 4:
        raise ValueError(f"expected degree 4, got {f.degree}")
    pc, qc, rc = _depress_quartic(f.monic())
    return Poly([4 * pc * rc - qc * qc, -4 * rc, -pc, Fraction(1)])


def _rational_quadratic_split(pc: Fraction, qc: Fraction, rc: Fraction) -> bool:
    """Does x^4 + pc x^2 + qc x + rc split into two monic quadratics over Q?

    Any such split (x^2+ax+b)(x^2-ax+d) makes theta = b + d a rational
    resolvent root with a^2 = theta - pc, so it suffices to test the
    rational resolvent roots."""
    res = Poly([4 * pc * rc - qc * qc, -4 * rc, -pc, Fraction(1)])
    for theta in rational_roots(res):
        u = theta - pc
        if u == 0:
            if qc == 0 and fraction_is_square(pc * pc - 4 * rc):
                return True
            continue
        if not fraction_is_square(u):
            continue
        a = fraction_sqrt(u)
        b = (theta - qc / a) / 2
        d = (theta + qc / a) / 2
        if b * d == rc:
            return True
    return False


def _square_in_disc_field(u: Fraction, disc: Fraction) -> bool:
    """Is u a square in Q(sqrt(disc))? (disc not a square in Q here.)
    u = (s + t*sqrt(disc))^2 forces s*t = 0, so u is a square iff u or
    u*disc is a rational square; zero counts."""
    if u == 0:
        return True
    return fraction_is_square(u) or fraction_is_square(u * disc)


def classify_quartic_rational(f: Poly) -> GaloisLabel:
    """S4 / A4 / D4 / C4 / V4 / Reducible for a squarefree quartic over Q."""
    if f.degree != 4:
        raise ValueError(f"expected degree 4, got {f.degree}")
    _require_squarefree(f)
    w = f.monic()
    if rational_roots(w):
        return GaloisLabel.REDUCIBLE
    pc, qc, rc = _depress_quartic(w)
    if _rational_quadratic_split(pc, qc, rc):
        return GaloisLabel.REDUCIBLE
    res = Poly([4 * pc * rc - qc * qc, -4 * rc, -pc, Fraction(1)])
    rr = rational_roots(res)
    disc = discriminant(w)
    if not rr:
        return GaloisLabel.A4 if fraction_is_square(disc) else GaloisLabel.S4
    if len(rr) == 3:
        return GaloisLabel.V4
    if len(rr) != 1:
        raise AssertionError("squarefree resolvent cubic cannot have two rational roots")
    theta = rr[0]
    u1 = theta * theta - 4 * rc
    u2 = theta - pc
    if _square_in_disc_field(u1, disc) and _square_in_disc_field(u2, disc):
        return GaloisLabel.C4
    return GaloisLabel.D4


# ---- geometric (function field) route ----

INFINITE_PLACE = "infinity"


@dataclass(frozen=True)
class SquareVerdict:
    """Squareness of a rational function over the algebraic closure.

    odd_places lists (place, signed multiplicity) for every place of odd
    valuation: finite places as monic squarefree polynomials (numerator
    factors count positive, denominator negative), plus the place at
    infinity. Constants are squares in a closed field, so the element is
    a square exactly when no odd place exists."""

    is_square: bool
    odd_places: tuple[tuple[object, int], ...]


def geometric_square_test(u: RatFunc) -> SquareVerdict:
    """Is u a square in kbar(t) for algebraically closed kbar of char 0?"""
    if not u:
        raise ValueError("zero has no square class")
    odd: list[tuple[object, int]] = []
    for base, mult in squarefree_decomposition(u.num) if u.num.degree > 0 else []:
        if mult % 2:
            odd.append((base, mult))
    for base, mult in squarefree_decomposition(u.den) if u.den.degree > 0 else []:
        if mult % 2:
            odd.append((base, -mult))
    v_inf = u.den.degree - u.num.degree
    if v_inf % 2:
        odd.append((INFINITE_PLACE, v_inf))
    return SquareVerdict(not odd, tuple(odd))


def discriminant_in_t(g: Poly) -> Poly:
    """disc_x(g(x) - t) as an exact polynomial in t.

    The degree in t is exactly deg(g) - 1 (one factor g(theta) - t per
    critical point theta); computed by interpolating resultant-based
    discriminants at deg(g) + 1 nodes, one node more than needed, so the
    degree assertion doubles as a consistency check."""
    n = g.degree
    if n < 2:
        raise ValueError("need degree >= 2")
    pts = []
    for k in range(n + 1):
        tau = Fraction(k)
        pts.append((tau, discriminant(g - Poly.const(tau))))
    out = lagrange_interpolate(pts)
    if out.degree != n - 1:
        raise AssertionError("disc_x(g - t) must have t-degree deg(g) - 1")
    return out


def classify_cubic_geometric(g: Poly) -> GaloisLabel:
    """Galois group of g(x) - t over the closure of Q(t), g a monic cubic.

    g(x) - t is always irreducible there (linear and primitive in t), and
    always separable over Q(t), so non-squarefree g such as x^3 is fine;
    the group is C3 when disc_x is a square and S3 otherwise."""
    if g.degree != 3:
        raise ValueError(f"expected degree 3, got {g.degree}")
    if g.lc != 1:
        raise ValueError("g must be monic")
    verdict = geometric_square_test(RatFunc(discriminant_in_t(g)))
    return GaloisLabel.C3 if verdict.is_square else GaloisLabel.S3


def classify_quartic_geometric(g: Poly) -> GaloisLabel:
    """Galois group of g(x) - t over the closure of Q(t), g a monic quartic
    whose depressed form has a nonzero linear coefficient.

    That coefficient certifies the resolvent cubic of the family stays
    irreducible (its two t-coefficients A(z) = 4(z - P) and
    B(z) = z^3 - P z^2 - 4 R z + 4 P R - Q^2 share a root only when
    B(P) = -Q^2 vanishes), which pins the group to S4 or A4; the
    discriminant square test separates the two."""
    if g.degree != 4:
        raise ValueError(f"expected degree 4, got {g.degree}")
    if g.lc != 1:
        raise ValueError("g must be monic")
    _, qc, _ = _depress_quartic(g)
    if qc == 0:
        raise ValueError(
            "outside supported family: depressed quartic needs a nonzero linear term"
        )
    verdict = geometric_square_test(RatFunc(discriminant_in_t(g)))
    return GaloisLabel.A4 if verdict.is_square else GaloisLabel.S4
