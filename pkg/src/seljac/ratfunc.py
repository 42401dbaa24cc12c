"""Rational functions in one variable over Q, kept in lowest terms.

The denominator is normalized monic and coprime to the numerator, so
equality is structural. Text output clears denominators to integers
(e.g. -6912/(27*t^2 - 4)) while the internal form stays monic.
"""
from __future__ import annotations

from fractions import Fraction

from .poly import Poly, poly_gcd


def _promote(v) -> Poly | None:
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly.const(v)
    return None


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        pn = _promote(num)
        pd = _promote(den)
        if pn is None or pd is None:
            raise TypeError("numerator/denominator must be Poly, int or Fraction")
        if not pd:
            raise ZeroDivisionError("zero denominator")
        if not pn:
            pn, pd = Poly.zero(), Poly.one()
        else:
            g = poly_gcd(pn, pd)
            if g.degree > 0:
                pn, pd = pn // g, pd // g
            lc = pd.lc
            if lc != 1:
                inv = 1 / lc
                pn, pd = pn * inv, pd * inv
        self.num: Poly = pn
        self.den: Poly = pd

    @classmethod
    def var(cls) -> RatFunc:
        return cls(Poly.x())

    @classmethod
    def zero(cls) -> RatFunc:
        return cls(0)

    @classmethod
    def one(cls) -> RatFunc:
        return cls(1)

    # ---- structure ----

    def __bool__(self) -> bool:
        return bool(self.num)

    @property
    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def as_fraction(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant rational function")
        if not self.num:
            return Fraction(0)
        return self.num.coeffs[0]

    def __eq__(self, other) -> bool:
        other = _to_ratfunc(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"RatFunc({self.to_text()!r})"

    # ---- field operations ----

    def __add__(self, other) -> RatFunc:
        other = _to_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> RatFunc:
        other = _to_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFunc:
        other = _to_ratfunc(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> RatFunc:
        other = _to_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFunc:
        other = _to_ratfunc(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RatFunc:
        other = _to_ratfunc(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, e: int) -> RatFunc:
        if e < 0:
            if not self:
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den, self.num) ** (-e)
        return RatFunc(self.num**e, self.den**e)

    def evaluate(self, x: Fraction | int) -> Fraction:
        d = self.den.evaluate(x)
        if not d:
            raise ZeroDivisionError("pole at the evaluation point")
        return self.num.evaluate(x) / d

    # ---- text ----

    def to_text(self, var: str = "t") -> str:
        num, den = self.num, self.den
        lam = 1
        for c in (*num.coeffs, *den.coeffs):
            d = c.denominator
            g = _gcd(lam, d)
            lam = lam // g * d
        n = num * lam
        d = den * lam
        g = 0
        for c in (*n.coeffs, *d.coeffs):
            g = _gcd(g, abs(c.numerator))
        if g > 1:
            n = n / g
            d = d / g
        if d.lc < 0:
            n, d = -n, -d
        if d == Poly.one():
            return n.to_text(var)
        ns = n.to_text(var)
        if _needs_parens(n):
            ns = f"({ns})"
        ds = d.to_text(var)
        if _needs_parens(d):
            ds = f"({ds})"
        return f"{ns}/{ds}"


def _needs_parens(p: Poly) -> bool:
    terms = sum(1 for c in p.coeffs if c)
    return terms > 1 or (p.degree >= 1 and abs(p.lc) != 1)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _to_ratfunc(v) -> RatFunc | None:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (Poly, int, Fraction)):
        return RatFunc(v)
    return None
