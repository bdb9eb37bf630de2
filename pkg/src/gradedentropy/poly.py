"""Dense univariate polynomials with integer coefficients.

Polynomials are lists of coefficients ordered from the leading term down to
the constant term, e.g. ``[1, -3, -1, 1]`` is ``t**3 - 3*t**2 - t + 1``.
The zero polynomial is ``[]``.  Everything here is exact; the only float
that ever appears is the final conversion of a bisection midpoint.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def strip(f):
    """Drop leading zero coefficients."""
    i = 0
    while i < len(f) and f[i] == 0:
        i += 1
    return list(f[i:])


def degree(f):
    f = strip(f)
    return len(f) - 1 if f else -1


def derivative(f):
    n = len(f) - 1
    return strip([c * (n - i) for i, c in enumerate(f[:-1])])


def strip_zero_roots(f):
    """Divide out the largest power of ``t`` dividing ``f``."""
    f = strip(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def positive_scale(f):
    """Clear denominators and divide out the content, scaling only by positive
    constants so the sign of ``f`` at every point is preserved.
    """
    f = strip(f)
    if not f:
        return []
    den = 1
    for c in f:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def primitive(f):
    """Primitive integer polynomial with positive leading coefficient."""
    f = positive_scale(f)
    if f and f[0] < 0:
        f = [-c for c in f]
    return f


def rem(f, g):
    """Remainder of ``f`` divided by ``g`` over the rationals."""
    f = [Fraction(c) for c in strip(f)]
    g = strip(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    lc = Fraction(g[0])
    dg = len(g) - 1
    while len(f) - 1 >= dg and f:
        q = f[0] / lc
        for i in range(len(g)):
            f[i] -= q * g[i]
        f = strip(f)
    return f


def poly_gcd(f, g):
    """Primitive gcd of two integer polynomials."""
    f, g = primitive(f), primitive(g)
    while g:
        f, g = g, primitive(rem(f, g))
    return primitive(f)


def exact_quotient(f, g):
    """Quotient of ``f`` by ``g`` when ``g`` divides ``f`` over the rationals."""
    f = [Fraction(c) for c in strip(f)]
    g = strip(g)
    dq = len(f) - len(g)
    if dq < 0:
        raise ValueError("divisor has larger degree than dividend")
    q = []
    for _ in range(dq + 1):
        c = f[0] / g[0]
        q.append(c)
        for i in range(len(g)):
            f[i] -= c * g[i]
        f.pop(0)
    if any(f):
        raise ValueError("division is not exact")
    return q


def squarefree_part(f):
    """``f / gcd(f, f')`` made primitive; every root becomes simple."""
    f = primitive(f)
    if degree(f) <= 0:
        return f
    g = poly_gcd(f, derivative(f))
    if degree(g) <= 0:
        return f
    return primitive(exact_quotient(f, g))


def sturm_sequence(f):
    """Sturm chain of a square-free polynomial; members are rescaled by
    positive constants to keep them integral, which leaves sign counts intact.
    """
    f = primitive(f)
    seq = [f, positive_scale(derivative(f))]
    while True:
        r = rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(positive_scale([-c for c in r]))
    return [s for s in seq if s]


def sign_at(f, x):
    """Sign of ``f`` at the rational ``x``, computed in integers."""
    x = Fraction(x)
    a, b = x.numerator, x.denominator
    # b**deg * f(a/b), homogenised Horner; same sign as f(a/b) because b > 0
    acc = 0
    bpow = 1
    for c in f:
        acc = acc * a + c * bpow
        bpow *= b
    return (acc > 0) - (acc < 0)


def sign_variations(seq, x):
    """Number of sign changes of the chain evaluated at ``x``; zeros drop out."""
    signs = [s for s in (sign_at(p, x) for p in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_roots(seq, a, b):
    """Number of distinct real roots in the half-open interval ``(a, b]``."""
    return sign_variations(seq, a) - sign_variations(seq, b)


def evaluate(f, x):
    acc = 0
    for c in f:
        acc = acc * x + c
    return acc


def largest_root_in(f, lo, hi, tol):
    """Bisect for the largest real root of ``f`` lying in ``(lo, hi]``.

    ``f`` need not be square-free.  Returns ``(lo, hi)`` as Fractions with
    the root inside ``(lo, hi]`` and ``hi - lo <= 2*tol``, or ``None`` when
    the interval holds no root.
    """
    sf = squarefree_part(f)
    if degree(sf) < 1:
        return None
    seq = sturm_sequence(sf)
    lo, hi = Fraction(lo), Fraction(hi)
    if count_roots(seq, lo, hi) == 0:
        return None
    width = Fraction(2 * tol)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_roots(seq, mid, hi) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi
