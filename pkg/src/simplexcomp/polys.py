"""Univariate polynomials over the rationals.

Dense coefficient lists in ascending degree order, coefficients Fraction.
Provides the pieces the exact decision procedures need: arithmetic, Sturm
sequences with root counting over half-open intervals (including unbounded
ones), and the "branch sum" polynomial whose roots are all values of
sum_i zeta_i * c_i**(1/d) over every choice of complex d-th roots.  The
branch polynomial evaluated at the threshold is the resultant-style norm
product that certifies (non-)vanishing of radical sums without leaving Q.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list[Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def pstrip(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def pdegree(p: Poly) -> int:
    """Degree, with the zero polynomial reported as -1."""
    return len(p) - 1


def padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = [_ZERO] * n
    for i, c in enumerate(p):
        out[i] = c
    for i, c in enumerate(q):
        out[i] += c
    return pstrip(out)


def psub(p: Poly, q: Poly) -> Poly:
    return padd(p, [-c for c in q])


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return pstrip(out)


def pscale(p: Poly, c: Fraction) -> Poly:
    if c == 0:
        return []
    return [a * c for a in p]


def pdivmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder of p by q over Q; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [_ZERO] * max(0, len(p) - len(q) + 1)
    dq = pdegree(q)
    lead = q[-1]
    while pdegree(rem) >= dq and rem:
        shift = pdegree(rem) - dq
        coef = rem[-1] / lead
        quo[shift] = coef
        for i, b in enumerate(q):
            rem[i + shift] -= coef * b
        pstrip(rem)
    return pstrip(quo), rem


def pderiv(p: Poly) -> Poly:
    return [c * i for i, c in enumerate(p)][1:]


def peval(p: Poly, x: Fraction) -> Fraction:
    acc = _ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pgcd(p: Poly, q: Poly) -> Poly:
    a, b = list(p), list(q)
    while b:
        a, b = b, pdivmod(a, b)[1]
    if a:
        a = pscale(a, 1 / a[-1])
    return a


def squarefree_part(p: Poly) -> Poly:
    g = pgcd(p, pderiv(p))
    if pdegree(g) <= 0:
        return list(p)
    return pdivmod(p, g)[0]


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [list(p), pderiv(p)]
    while chain[-1]:
        rem = pdivmod(chain[-2], chain[-1])[1]
        chain.append([-c for c in rem])
    chain.pop()
    return chain


def _variations(signs: Sequence[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sign_variations_at(chain: Sequence[Poly], x: Fraction) -> int:
    return _variations([_sign(peval(q, x)) for q in chain])


def sign_variations_at_infinity(chain: Sequence[Poly], positive: bool) -> int:
    signs = []
    for q in chain:
        if not q:
            signs.append(0)
            continue
        s = _sign(q[-1])
        if not positive and pdegree(q) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def count_real_roots(p: Poly, lo: Fraction | None, hi: Fraction | None) -> int:
    """Distinct real roots of p in the half-open interval (lo, hi].

    None stands for -inf / +inf at the respective end.
    """
    sf = squarefree_part(p)
    if pdegree(sf) <= 0:
        return 0
    chain = sturm_chain(sf)
    va = (
        sign_variations_at_infinity(chain, positive=False)
        if lo is None
        else sign_variations_at(chain, lo)
    )
    vb = (
        sign_variations_at_infinity(chain, positive=True)
        if hi is None
        else sign_variations_at(chain, hi)
    )
    return va - vb


def _shifted_mod_power(g: Poly, d: int, c: Fraction) -> list[Poly]:
    """g(z - w) reduced modulo w**d = c, as w-coefficient slots of z-polys.

    Horner in (z - w): multiply the accumulator by z - w (the w-shift wraps
    w**d back to the constant slot times c) and add the next coefficient.
    """
    slots: list[Poly] = [[] for _ in range(d)]
    for coef in reversed(g):
        shifted_z = [pmul(s, [_ZERO, _ONE]) for s in slots]
        shifted_w = [slots[j - 1] if j else pscale(slots[d - 1], c) for j in range(d)]
        slots = [psub(shifted_z[j], shifted_w[j]) for j in range(d)]
        slots[0] = padd(slots[0], [coef] if coef else [])
    return slots


def _poly_matrix_det(mat: list[list[Poly]]) -> Poly:
    """Cofactor determinant of a small matrix with polynomial entries."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    det: Poly = []
    for i in range(n):
        if not mat[i][0]:
            continue
        minor = [row[1:] for j, row in enumerate(mat) if j != i]
        term = pmul(mat[i][0], _poly_matrix_det(minor))
        det = padd(det, term) if i % 2 == 0 else psub(det, term)
    return det


def branch_sum_poly(values: Sequence[Fraction], d: int) -> Poly:
    """Monic polynomial whose roots are sum_i zeta_i * values[i]**(1/d).

    The product runs over every choice of (complex) d-th roots, so the
    degree is d**len(values).  Built by iterated resultants with w**d - c:
    each step takes the norm of g(z - w) in Q[z][w]/(w**d - c), computed as
    the determinant of the multiplication-by-g matrix.
    """
    g: Poly = [_ZERO, _ONE]
    for c in values:
        slots = _shifted_mod_power(g, d, c)
        if d == 1:
            g = slots[0]
            continue
        # Column j holds w**j * g reduced mod w**d - c.
        mat: list[list[Poly]] = [[[] for _ in range(d)] for _ in range(d)]
        for j in range(d):
            for r in range(d):
                entry = slots[r]
                row = r + j
                if row >= d:
                    row -= d
                    entry = pscale(entry, c)
                mat[row][j] = padd(mat[row][j], entry)
        g = _poly_matrix_det(mat)
    if g and g[-1] != 1:
        g = pscale(g, 1 / g[-1])
    return g
