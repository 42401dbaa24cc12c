"""Cyclotomic decomposition bookkeeping for the jacobian of y^q = f(x) and
the endomorphism-algebra predictions attached to it.

Splitting 1 + t + ... + t^(q-1) into the cyclotomic factors of level
p^i (i = 1..r, q = p^r) decomposes the jacobian up to isogeny into "new"
parts of dimension (n-1)(p^i - p^(i-1))/2. For f of degree 3 or 4 with
full (doubly transitive) Galois group, the endomorphism algebra of each
new part is known exactly; the only non-field factor in the supported
range appears at (n, p^i) = (3, 4), where the level contributes
Q x Mat_2(Q(zeta_4)) in place of two field levels.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .arith import euler_phi_prime_power, prime_power
from .galois import GaloisLabel
from .lattice import validate_pair
from .poly import Poly, cyclotomic_poly, geometric_poly


class Verdict(enum.Enum):
    """Outcome of the dimension dichotomy for an abelian variety X with a
    CM field E of degree dividing 2 dim X acting on it."""

    EQUALS_E = "EqualsE"
    CM_TYPE = "CMType"
    CONTAINS_CM_SUBVARIETY = "ContainsCMSubvariety"
    OUT_OF_BOUND = "OutOfBound"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class AlgebraFactor:
    """One simple factor: Q, a cyclotomic field, or a matrix algebra over
    a cyclotomic field."""

    kind: str  # "Q" | "cyclotomic" | "matrix"
    modulus: int | None = None
    size: int | None = None

    def __post_init__(self):
        if self.kind not in ("Q", "cyclotomic", "matrix"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.kind == "Q" and (self.modulus is not None or self.size is not None):
            raise ValueError("Q factor carries no modulus or size")
        if self.kind == "cyclotomic" and (self.modulus is None or self.size is not None):
            raise ValueError("cyclotomic factor needs a modulus only")
        if self.kind == "matrix" and (self.modulus is None or self.size is None):
            raise ValueError("matrix factor needs a modulus and a size")

    @property
    def q_dimension(self) -> int:
        """Dimension over Q of the factor."""
        if self.kind == "Q":
            return 1
        phi = _phi(self.modulus)
        if self.kind == "cyclotomic":
            return phi
        return self.size * self.size * phi

    def to_json(self) -> dict:
        if self.kind == "Q":
            return {"kind": "Q"}
        if self.kind == "cyclotomic":
            return {"kind": "cyclotomic", "modulus": self.modulus}
        return {"kind": "matrix", "size": self.size, "modulus": self.modulus}

    def label(self) -> str:
        if self.kind == "Q":
            return "Q"
        if self.kind == "cyclotomic":
            return f"Q(zeta_{self.modulus})"
        return f"Mat_{self.size}(Q(zeta_{self.modulus}))"


def _phi(m: int) -> int:
    pr = prime_power(m)
    if pr is None:
        raise ValueError(f"modulus {m} is not a prime power")
    return euler_phi_prime_power(*pr)


@dataclass(frozen=True)
class DecompositionLevel:
    """Level i of q = p^r: the part new at p^i, of dimension
    (n-1)(p^i - p^(i-1))/2."""

    level: int
    modulus: int
    new_dim: int

    def to_json(self) -> dict:
        return {"level": self.level, "modulus": self.modulus, "new_dim": self.new_dim}


@dataclass(frozen=True)
class EndAlgebraDescription:
    """Predicted endomorphism algebra as an ordered product of simple
    factors, with the level ledger and integral refinements (orders) for
    the field levels; asserted=False marks outputs offered for reference
    only, never claimed by the supported theorems."""

    n: int
    q: int
    factors: tuple[AlgebraFactor, ...]
    levels: tuple[DecompositionLevel, ...]
    integral: tuple[tuple[int, str], ...] = ()
    asserted: bool = True
    note: str = ""

    @property
    def total_reduced_dim(self) -> int:
        return sum(f.q_dimension for f in self.factors)

    def label(self) -> str:
        return " x ".join(f.label() for f in self.factors)

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "q": self.q,
            "factors": [f.to_json() for f in self.factors],
            "levels": [lv.to_json() for lv in self.levels],
            "integral": [{"modulus": m, "ring": ring} for m, ring in self.integral],
            "asserted": self.asserted,
        }
        if self.note:
            out["note"] = self.note
        return out


def factor_geometric_poly(q: int) -> list[Poly]:
    """The cyclotomic factors of 1 + t + ... + t^(q-1), one per level
    p^i, i = 1..r; their product reassembles the whole."""
    pr = prime_power(q)
    if pr is None:
        raise ValueError(f"{q} is not a prime power >= 2")
    p, r = pr
    return [cyclotomic_poly(p, i) for i in range(1, r + 1)]


def new_part_dim(n: int, q: int) -> int:
    """(n-1)(q - q/p)/2 for q = p^r: the dimension new at level q."""
    p, r = validate_pair(n, q)
    return (n - 1) * (q - q // p) // 2


def decomposition_ledger(n: int, q: int) -> list[DecompositionLevel]:
    """All levels i = 1..r with their new dimensions; they sum to the
    genus (n-1)(q-1)/2."""
    p, r = validate_pair(n, q)
    return [
        DecompositionLevel(i, p**i, new_part_dim(n, p**i)) for i in range(1, r + 1)
    ]


_SUPPORTED = {
    (3, GaloisLabel.S3),
    (4, GaloisLabel.S4),
    (4, GaloisLabel.A4),
}


def _coerce_label(label) -> GaloisLabel:
    if isinstance(label, GaloisLabel):
        return label
    if isinstance(label, str):
        try:
            return GaloisLabel(label)
        except ValueError:
            raise ValueError(f"unknown Galois label {label!r}") from None
    raise TypeError(f"not a Galois label: {label!r}")


def predict_end_algebra(n: int, q: int, label) -> EndAlgebraDescription:
    """Endomorphism algebra of the jacobian of y^q = f(x) for deg f = n
    in {3, 4} with doubly transitive Galois group (S3, S4 or A4).

    Per level p^i the new part contributes Q(zeta_{p^i}), except that
    (n, p^i) = (3, 2) contributes Q and (n, p^i) = (3, 4) contributes
    Q x Mat_2(Q(zeta_4)) replacing the two 2-power field levels. Field
    levels carry the maximal order Z[zeta_{p^i}] as integral refinement.
    Raises outside the supported (n, label) pairs."""
    p, r = validate_pair(n, q)
    label = _coerce_label(label)
    if (n, label) not in _SUPPORTED:
        raise ValueError(
            f"outside theorem hypotheses: no asserted prediction for n={n}, "
            f"Galois group {label}"
        )
    factors: list[AlgebraFactor] = []
    integral: list[tuple[int, str]] = []
    for i in range(1, r + 1):
        m = p**i
        if n == 3 and m == 2:
            factors.append(AlgebraFactor("Q"))
            integral.append((2, "Z"))
        elif n == 3 and m == 4:
            factors.append(AlgebraFactor("matrix", modulus=4, size=2))
        else:
            factors.append(AlgebraFactor("cyclotomic", modulus=m))
            integral.append((m, f"Z[zeta_{m}]"))
    return EndAlgebraDescription(
        n=n,
        q=q,
        factors=tuple(factors),
        levels=tuple(decomposition_ledger(n, q)),
        integral=tuple(integral),
    )


def conjectural_end_algebra(n: int, q: int) -> EndAlgebraDescription:
    """Cyclotomic ledger for a doubly transitive input outside the asserted
    range (n >= 5): offered for reference only, asserted=False."""
    p, r = validate_pair(n, q)
    if n < 5:
        raise ValueError("use predict_end_algebra for n in {3, 4}")
    factors = tuple(AlgebraFactor("cyclotomic", modulus=p**i) for i in range(1, r + 1))
    return EndAlgebraDescription(
        n=n,
        q=q,
        factors=factors,
        levels=tuple(decomposition_ledger(n, q)),
        integral=(),
        asserted=False,
        note=(
            "reference ledger only: for degree >= 5 this cyclotomic shape is "
            "not asserted by this library"
        ),
    )


_DOUBLY_TRANSITIVE_LABELS = {
    GaloisLabel.S3: 3,
    GaloisLabel.S4: 4,
    GaloisLabel.A4: 4,
}


@dataclass(frozen=True)
class IsotrivialityForecast:
    """Per-level isotriviality of the decomposition as f varies with full
    Galois group; fully=None means the supported results say nothing."""

    n: int
    q: int
    fully: bool | None
    levels: tuple[tuple[int, str], ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "fully_nonisotrivial": self.fully,
            "levels": {str(i): s for i, s in self.levels},
        }


def predict_nonisotrivial(n: int, q: int, label) -> IsotrivialityForecast:
    """Which levels of the decomposition move with f.

    For doubly transitive Galois group: every level is completely
    non-isotrivial unless (n, p) = (3, 2) with r >= 2, where level 2 is a
    constant CM square (the (3, 4) part) while level 1 and levels >= 3
    still move; (3, 2) itself is fully non-isotrivial."""
    p, r = validate_pair(n, q)
    label = _coerce_label(label)
    expected_degree = _DOUBLY_TRANSITIVE_LABELS.get(label)
    if expected_degree != n:
        levels = tuple((i, "unknown") for i in range(1, r + 1))
        return IsotrivialityForecast(n, q, None, levels)
    if n == 3 and p == 2 and r >= 2:
        levels = []
        for i in range(1, r + 1):
            levels.append((i, "constant_cm" if i == 2 else "completely_nonisotrivial"))
        return IsotrivialityForecast(n, q, False, tuple(levels))
    levels = tuple((i, "completely_nonisotrivial") for i in range(1, r + 1))
    return IsotrivialityForecast(n, q, True, levels)


def bigend_dichotomy(dim_x: int, deg_e: int, centralizer_dim: int) -> Verdict:
    """Classify the centralizer dimension k of a degree-deg_e CM field
    acting on a dim_x-dimensional abelian variety.

    Supported shapes: dim_x = deg_e (bound 4) and 2 dim_x = 3 deg_e
    (bound 9); anything else raises. Above the (2 dim_x / deg_e)^2 bound
    the input is impossible; k = 1 forces End0 = E; in the first shape
    every surviving k makes X of CM type; in the second, k = 3 (then the
    algebra is commutative of dimension 2 dim_x) and the boundary k = 9
    give a CM type, the remaining k only a CM abelian subvariety."""
    if dim_x < 1 or deg_e < 1 or centralizer_dim < 1:
        raise ValueError("all three quantities must be positive")
    if (2 * dim_x) % deg_e != 0:
        raise ValueError("deg_e must divide 2*dim_x")
    if dim_x != deg_e and 2 * dim_x != 3 * deg_e:
        raise ValueError(
            "unsupported shape: need dim_x = deg_e or 2*dim_x = 3*deg_e"
        )
    bound = Fraction(2 * dim_x, deg_e) ** 2
    k = centralizer_dim
    if k > bound:
        return Verdict.OUT_OF_BOUND
    if k == 1:
        return Verdict.EQUALS_E
    if dim_x == deg_e:
        return Verdict.CM_TYPE
    return Verdict.CM_TYPE if k in (3, 9) else Verdict.CONTAINS_CM_SUBVARIETY
