"""Core data types and the exact/adaptive numeric policy.

Specified entries are exact rationals end to end (``fractions.Fraction``);
irrationality enters only through d-th roots of rationals, which are carried
as :class:`AlgebraicInterval` enclosures with adaptive precision.  Sign and
equality questions about sums of radicals are decided exactly: intervals are
narrowed with doubling precision until they exclude the threshold, and the
equality case is detected by an exact vanishing test of the branch-product
(norm) polynomial followed by isolation of the all-positive-roots branch
with a Sturm count.  Tolerances never decide an equality.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence, Union

from . import polys
from .exact import perfect_root, root_enclosure
from .errors import (
    DimensionMismatchError,
    DuplicatePositionError,
    NegativeValueError,
    OutOfRangeError,
)

Rational = Fraction
RationalLike = Union[Fraction, int, str]

#: Default starting precision (bits) for adaptive interval evaluation.
DEFAULT_START_BITS = 64
#: Nominal precision cap; narrowing loops consult it only as a reporting
#: hint, since the exact vanishing test guarantees termination regardless.
DEFAULT_BITS_CAP = 4096


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, fraction strings and decimal strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, _RationalABC):
        return Fraction(value)
    return Fraction(str(value))


class Comparison(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class AlgebraicInterval:
    """A real number known to lie in [lower, upper], both rational.

    precision_bits records the narrowing budget used to produce the
    enclosure; the bound width is at most 2**-precision_bits per radical
    involved, times the number of summands.
    """

    lower: Fraction
    upper: Fraction
    precision_bits: int

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise ValueError("interval bounds out of order")

    @staticmethod
    def exactly(value: RationalLike, bits: int = DEFAULT_START_BITS) -> "AlgebraicInterval":
        v = as_rational(value)
        return AlgebraicInterval(v, v, bits)

    @staticmethod
    def nth_root_of(value: RationalLike, d: int, bits: int) -> "AlgebraicInterval":
        lo, hi = root_enclosure(as_rational(value), d, bits)
        return AlgebraicInterval(lo, hi, bits)

    @staticmethod
    def sqrt_of(value: RationalLike, bits: int) -> "AlgebraicInterval":
        return AlgebraicInterval.nth_root_of(value, 2, bits)

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def __add__(self, other: "AlgebraicInterval | RationalLike") -> "AlgebraicInterval":
        if isinstance(other, AlgebraicInterval):
            return AlgebraicInterval(
                self.lower + other.lower,
                self.upper + other.upper,
                min(self.precision_bits, other.precision_bits),
            )
        o = as_rational(other)
        return AlgebraicInterval(self.lower + o, self.upper + o, self.precision_bits)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraicInterval":
        return AlgebraicInterval(-self.upper, -self.lower, self.precision_bits)

    def __sub__(self, other: "AlgebraicInterval | RationalLike") -> "AlgebraicInterval":
        if not isinstance(other, AlgebraicInterval):
            other = AlgebraicInterval.exactly(other, self.precision_bits)
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> "AlgebraicInterval":
        return AlgebraicInterval.exactly(other, self.precision_bits) - self

    def __mul__(self, other: "AlgebraicInterval | RationalLike") -> "AlgebraicInterval":
        if not isinstance(other, AlgebraicInterval):
            other = AlgebraicInterval.exactly(other, self.precision_bits)
        products = [
            self.lower * other.lower,
            self.lower * other.upper,
            self.upper * other.lower,
            self.upper * other.upper,
        ]
        return AlgebraicInterval(
            min(products), max(products), min(self.precision_bits, other.precision_bits)
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "AlgebraicInterval | RationalLike") -> "AlgebraicInterval":
        if not isinstance(other, AlgebraicInterval):
            other = AlgebraicInterval.exactly(other, self.precision_bits)
        if other.lower <= 0 <= other.upper:
            raise ZeroDivisionError("interval denominator straddles zero")
        inv = AlgebraicInterval(1 / other.upper, 1 / other.lower, other.precision_bits)
        return self * inv

    def square(self) -> "AlgebraicInterval":
        candidates = [self.lower * self.lower, self.upper * self.upper]
        lo = Fraction(0) if self.lower <= 0 <= self.upper else min(candidates)
        return AlgebraicInterval(lo, max(candidates), self.precision_bits)

    def sqrt(self) -> "AlgebraicInterval":
        lo = max(Fraction(0), self.lower)
        llo, _ = root_enclosure(lo, 2, self.precision_bits)
        _, hhi = root_enclosure(max(self.upper, Fraction(0)), 2, self.precision_bits)
        return AlgebraicInterval(llo, hhi, self.precision_bits)

    def compare(self, value: RationalLike) -> int | None:
        """-1/+1 if the interval lies strictly below/above value, 0 if the
        interval is the exact point, None when undecided."""
        v = as_rational(value)
        if self.upper < v:
            return -1
        if self.lower > v:
            return 1
        if self.lower == v == self.upper:
            return 0
        return None

    def contains(self, value: RationalLike) -> bool:
        v = as_rational(value)
        return self.lower <= v <= self.upper


Position = tuple[int, int]


@dataclass(frozen=True)
class PartialMatrix:
    """A nonnegative partial matrix: dimensions plus a sparse position map."""

    nrows: int
    ncols: int
    entries: Mapping[Position, Fraction]

    @property
    def pattern(self) -> frozenset[Position]:
        return frozenset(self.entries)

    def value(self, i: int, j: int) -> Fraction | None:
        return self.entries.get((i, j))

    def with_entries(self, extra: Mapping[Position, Fraction]) -> "PartialMatrix":
        merged = dict(self.entries)
        merged.update(extra)
        return PartialMatrix(self.nrows, self.ncols, merged)


def make_partial_matrix(
    nrows: int,
    ncols: int,
    entries: Iterable[tuple[int, int, RationalLike]],
) -> PartialMatrix:
    """Validate and build a PartialMatrix.

    Raises OutOfRangeError, DuplicatePositionError or NegativeValueError.
    """
    if nrows < 1 or ncols < 1:
        raise OutOfRangeError("matrix dimensions must be positive")
    table: dict[Position, Fraction] = {}
    for i, j, raw in entries:
        if not (0 <= i < nrows and 0 <= j < ncols):
            raise OutOfRangeError(f"position ({i}, {j}) outside {nrows}x{ncols}")
        if (i, j) in table:
            raise DuplicatePositionError(f"position ({i}, {j}) specified twice")
        value = as_rational(raw)
        if value < 0:
            raise NegativeValueError(f"entry at ({i}, {j}) is negative: {value}")
        table[(i, j)] = value
    return PartialMatrix(nrows, ncols, table)


def diagonal_matrix(values: Sequence[RationalLike]) -> PartialMatrix:
    """Convenience constructor for the n x n diagonal pattern."""
    vals = list(values)
    return make_partial_matrix(
        len(vals), len(vals), [(i, i, v) for i, v in enumerate(vals)]
    )


@dataclass(frozen=True)
class RankOneFactorization:
    """A pair of nonnegative vectors; the represented matrix is outer(u, v).

    Rank one holds structurally.  The simplex sums are checked at
    construction within `sum_slack` (exact constructions use slack 0 in
    spirit; walk-based ones carry certified error far below the default).
    """

    u: tuple[Fraction, ...]
    v: tuple[Fraction, ...]

    SUM_SLACK = Fraction(1, 2**40)

    def __post_init__(self) -> None:
        for coord in (*self.u, *self.v):
            if coord < 0:
                raise NegativeValueError("factor coordinate below zero")
        for vec in (self.u, self.v):
            if abs(sum(vec) - 1) > self.SUM_SLACK:
                raise ValueError("factor does not sum to one within slack")

    def entry(self, i: int, j: int) -> Fraction:
        return self.u[i] * self.v[j]

    def matrix(self) -> list[list[Fraction]]:
        return [[ui * vj for vj in self.v] for ui in self.u]

    def as_floats(self) -> list[list[float]]:
        return [[float(x) for x in row] for row in self.matrix()]


class Verdict(enum.Enum):
    COMPLETABLE = "completable"
    NOT_COMPLETABLE = "not_completable"


@dataclass(frozen=True)
class Witness:
    factorization: object  # RankOneFactorization or tensor.TensorFactorization


@dataclass(frozen=True)
class CycleViolation:
    cycle: tuple[Position, ...]
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class ThreeLineViolation:
    positions: tuple[Position, Position, Position]


@dataclass(frozen=True)
class NormExcess:
    sqrt_sum: AlgebraicInterval


@dataclass(frozen=True)
class SumNotOne:
    total: Fraction


Evidence = Union[Witness, CycleViolation, ThreeLineViolation, NormExcess, SumNotOne, None]


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    evidence: Evidence

    @property
    def completable(self) -> bool:
        return self.verdict is Verdict.COMPLETABLE


def verify_completion(
    matrix: PartialMatrix,
    factorization: RankOneFactorization,
    eps: RationalLike | float = Fraction(1, 10**12),
) -> bool:
    """Check agreement on the pattern, nonnegativity, and simplex sums.

    All comparisons run in exact rational arithmetic against eps; the check
    is monotone in eps by construction.
    """
    if len(factorization.u) != matrix.nrows or len(factorization.v) != matrix.ncols:
        raise DimensionMismatchError("factor lengths do not match the matrix")
    tol = Fraction(eps) if not isinstance(eps, float) else Fraction(eps)
    for (i, j), value in matrix.entries.items():
        if abs(factorization.u[i] * factorization.v[j] - value) > tol:
            return False
    for vec in (factorization.u, factorization.v):
        if any(c < -tol for c in vec):
            return False
        if abs(sum(vec) - 1) > tol:
            return False
    return True


def radical_sum_interval(
    values: Sequence[RationalLike], d: int, bits: int
) -> AlgebraicInterval:
    """Enclosure of sum_i values[i]**(1/d) at the given precision."""
    lo = Fraction(0)
    hi = Fraction(0)
    for raw in values:
        v = as_rational(raw)
        l, h = root_enclosure(v, d, bits)
        lo += l
        hi += h
    return AlgebraicInterval(lo, hi, bits)


def sqrt_sum_interval(values: Sequence[RationalLike], bits: int) -> AlgebraicInterval:
    return radical_sum_interval(values, 2, bits)


# Branch polynomials above this degree are skipped; termination of the
# narrowing loop then rests on the classical linear independence of
# positive real radicals (a Besicovitch-type theorem), under which the
# all-positive branch can only equal the threshold in the perfect-power
# case already handled exactly.
_NORM_DEGREE_LIMIT = 4096


def compare_radical_sum(
    values: Sequence[RationalLike],
    d: int,
    threshold: RationalLike = 1,
) -> Comparison:
    """Exact trichotomy of sum_i values[i]**(1/d) against a rational threshold.

    Zero entries are dropped first.  The equality branch fires only when it
    holds exactly: either every normalized value is a perfect d-th power
    (rational comparison), or the branch-product polynomial vanishes at the
    threshold and a Sturm count certifies the all-positive branch — the
    unique branch of maximal real part — is the vanishing one.
    """
    if d < 1:
        raise ValueError("root order must be >= 1")
    vals = []
    for raw in values:
        v = as_rational(raw)
        if v < 0:
            raise NegativeValueError("radical sum entries must be nonnegative")
        if v > 0:
            vals.append(v)
    t = as_rational(threshold)
    if not vals:
        if t == 0:
            return Comparison.EQUAL
        return Comparison.LESS if t > 0 else Comparison.GREATER
    if t <= 0:
        return Comparison.GREATER

    scaled = [v / t**d for v in vals]

    roots = [perfect_root(c, d) for c in scaled]
    if all(r is not None for r in roots):
        total = sum(roots)  # type: ignore[arg-type]
        if total < 1:
            return Comparison.LESS
        if total > 1:
            return Comparison.GREATER
        return Comparison.EQUAL

    bits = DEFAULT_START_BITS
    norm_tested = False
    while True:
        enclosure = radical_sum_interval(scaled, d, bits)
        if enclosure.upper < 1:
            return Comparison.LESS
        if enclosure.lower > 1:
            return Comparison.GREATER
        if not norm_tested and bits >= 4 * DEFAULT_START_BITS:
            norm_tested = True
            if d ** len(scaled) <= _NORM_DEGREE_LIMIT:
                branch = polys.branch_sum_poly(scaled, d)
                if polys.peval(branch, Fraction(1)) == 0:
                    above = polys.count_real_roots(branch, Fraction(1), None)
                    return Comparison.GREATER if above else Comparison.EQUAL
                # Nonvanishing norm: the sum differs from the threshold, so
                # narrowing is guaranteed to separate.
        bits *= 2


def compare_sqrt_sum(
    values: Sequence[RationalLike], threshold: RationalLike = 1
) -> Comparison:
    """Exact trichotomy of sum_i sqrt(values[i]) against a rational threshold."""
    return compare_radical_sum(values, 2, threshold)
