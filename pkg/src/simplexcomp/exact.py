"""Exact integer/rational root helpers.

Everything here stays in integer and Fraction arithmetic; binary floating
point is never consulted.  Root enclosures are pairs of rationals whose
width is at most 2**-bits, and are exact (zero width) whenever the radicand
is a perfect power.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def integer_root(n: int, d: int) -> int:
    """Floor of the d-th root of a nonnegative integer."""
    if n < 0:
        raise ValueError("integer_root of a negative number")
    if d < 1:
        raise ValueError("root order must be >= 1")
    if d == 1 or n in (0, 1):
        return n
    if d == 2:
        return isqrt(n)
    # Newton iteration on integers; x starts at or above the true root.
    x = 1 << -(-n.bit_length() // d)
    while True:
        y = ((d - 1) * x + n // x ** (d - 1)) // d
        if y >= x:
            return x
        x = y


def perfect_root(q: Fraction, d: int) -> Fraction | None:
    """Return the exact nonnegative d-th root of q, or None if irrational."""
    if q < 0:
        raise ValueError("perfect_root of a negative rational")
    rn = integer_root(q.numerator, d)
    rd = integer_root(q.denominator, d)
    if rn**d == q.numerator and rd**d == q.denominator:
        return Fraction(rn, rd)
    return None


def root_enclosure(q: Fraction, d: int, bits: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure [lo, hi] of q**(1/d) with hi - lo <= 2**-bits.

    q**(1/d) = (num * den**(d-1))**(1/d) / den, so one integer root of a
    scaled integer gives both bounds.
    """
    if q < 0:
        raise ValueError("root_enclosure of a negative rational")
    num, den = q.numerator, q.denominator
    scaled = (num * den ** (d - 1)) << (d * bits)
    r = integer_root(scaled, d)
    lo = Fraction(r, den << bits)
    if r**d == scaled:
        return lo, lo
    return lo, Fraction(r + 1, den << bits)
