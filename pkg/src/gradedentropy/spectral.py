"""Walk counts, exact characteristic polynomials and certified spectral radii.

The spectral radius of a (0,1)-matrix is its Perron root, the largest real
root of the characteristic polynomial.  :func:`spectral_radius` locates it
without trusting any floating-point eigensolver: a power-iteration estimate
only narrows the starting bracket, and the final enclosure comes from Sturm
root counts on the square-free part of the exact integer polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import poly
from .algebra import associated_digraph
from .errors import ResourceLimitError, ValidationError
from .graph import Digraph

DEFAULT_TOL = 1e-9
DEFAULT_WALK_LIMIT = 100_000


@dataclass(frozen=True)
class CharPoly:
    """``phi(t) = t^d - h_1 t^(d-1) - ... - h_d`` with exact integer ``h``."""

    h: tuple[int, ...]

    @property
    def degree(self):
        return len(self.h)

    def coefficients(self):
        """Monic coefficient list, leading term first."""
        return [1] + [-x for x in self.h]

    def at_matrix(self, m):
        """Evaluate ``phi`` at an integer square matrix (Horner form)."""
        d = len(m)
        acc = [[0] * d for _ in range(d)]
        for c in self.coefficients():
            acc = _matmul(acc, m)
            for i in range(d):
                acc[i][i] += c
        return acc


@dataclass(frozen=True)
class SpectralRadiusResult:
    value: float
    tolerance: float
    trace: tuple[str, ...] = field(default=())


def _matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = list(zip(*b))
    return [[sum(a[i][t] * bt[j][t] for t in range(k)) for j in range(m)]
            for i in range(n)]


def walk_count(g, n, limit=DEFAULT_WALK_LIMIT):
    """``e^T M^n e``: the number of directed walks with ``n`` edges."""
    if not isinstance(n, int) or n < 0:
        raise ValidationError("n must be a nonnegative integer")
    if n > limit:
        raise ResourceLimitError(f"walk length {n} exceeds the limit {limit}")
    return sum(_walk_vector(g.adjacency, n))


def _walk_vector(m, n):
    d = len(m)
    u = [1] * d
    for _ in range(n):
        u = [sum(m[i][j] * u[j] for j in range(d)) for i in range(d)]
    return u


def walk_counts(g, n_max):
    """``[g_0, ..., g_{n_max}]`` in one pass."""
    m = g.adjacency
    d = len(m)
    u = [1] * d
    out = [d]
    for _ in range(n_max):
        u = [sum(m[i][j] * u[j] for j in range(d)) for i in range(d)]
        out.append(sum(u))
    return out


def char_poly_coefficients(m):
    """Faddeev-LeVerrier on an integer matrix.

    Returns ``[1, c_1, ..., c_d]`` with ``det(tI - M) = sum c_k t^(d-k)``.
    Every division ``trace / k`` is exact for integer matrices, which is
    asserted rather than assumed.
    """
    d = len(m)
    coeffs = [1]
    work = [[0] * d for _ in range(d)]
    for k in range(1, d + 1):
        # work = M (work_prev + c_{k-1} I)
        for i in range(d):
            work[i][i] += coeffs[-1]
        work = _matmul(m, work)
        tr = sum(work[i][i] for i in range(d))
        c, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs.append(c)
    return coeffs


def char_poly(g):
    coeffs = char_poly_coefficients(g.matrix())
    return CharPoly(tuple(-c for c in coeffs[1:]))


def verify_recurrence(g, s_max):
    """Check ``g_{s+d} = sum_i h_i g_{s+d-i}`` exactly for ``0 <= s <= s_max``."""
    h = char_poly(g).h
    d = len(h)
    counts = walk_counts(g, s_max + d)
    for s in range(s_max + 1):
        rhs = sum(h[i - 1] * counts[s + d - i] for i in range(1, d + 1))
        if counts[s + d] != rhs:
            return False
    return True


def collatz_wielandt(m, iterations=60):
    """Floating-point bracket ``(lower, upper)`` for the spectral radius of a
    nonnegative matrix, from power iteration on ``M + I``.

    With a positive vector ``x`` the ratios ``(Mx)_i / x_i`` bracket the
    Perron root; the shift keeps ``x`` positive and breaks periodicity.
    Subject to float rounding, so only ever used to steer exact work.
    """
    d = len(m)
    x = [1.0] * d
    lo, hi = 0.0, float(max(map(sum, m)))
    for _ in range(iterations):
        y = [x[i] + sum(m[i][j] * x[j] for j in range(d)) for i in range(d)]
        ratios = [y[i] / x[i] for i in range(d)]
        lo, hi = max(lo, min(ratios) - 1.0), min(hi, max(ratios) - 1.0)
        top = max(y)
        x = [v / top for v in y]
        if hi - lo < 1e-12:
            break
    return lo, hi


def _perron_root(m, tol, trace):
    est_lo, est_hi = collatz_wielandt(m)
    trace.append(f"power-iteration bracket [{est_lo:.6g}, {est_hi:.6g}]")

    phi = poly.strip_zero_roots(char_poly_coefficients(m))
    if poly.degree(phi) < 1:
        trace.append("nilpotent: characteristic polynomial is t^d")
        return 0.0
    sf = poly.squarefree_part(phi)
    trace.append(f"square-free part of degree {poly.degree(sf)}")

    # rho <= max row sum, and no real root exceeds rho
    hi = Fraction(max(map(sum, m)) + 1)
    lo = Fraction(max(0.0, est_lo - 1.0))
    found = poly.largest_root_in(sf, lo, hi, tol)
    if found is None:
        trace.append("estimate rejected; restarting bracket from 0")
        found = poly.largest_root_in(sf, 0, hi, tol)
    a, b = found
    trace.append(f"bisection interval [{float(a):.12g}, {float(b):.12g}]")
    # rational roots of a monic integer polynomial are integers
    r = math.floor(b)
    if a < r and poly.evaluate(sf, r) == 0:
        trace.append(f"exact integer root {r}")
        return float(r)
    return float((a + b) / 2)


def spectral_radius(g, tol=DEFAULT_TOL):
    """Certified Perron root: ``|value - rho(M)| <= tol``."""
    if not tol > 0:
        raise ValidationError("tol must be positive")
    if g.edge_count == 0:
        return SpectralRadiusResult(0.0, tol, ("edgeless",))
    trace = []
    value = _perron_root(g.matrix(), tol, trace)
    return SpectralRadiusResult(value, tol, tuple(trace))


def spectral_radius_of_matrix(m, tol=DEFAULT_TOL):
    """Same certified procedure for any nonnegative integer matrix, e.g. ``M + I``."""
    if not tol > 0:
        raise ValidationError("tol must be positive")
    return _perron_root([list(row) for row in m], tol, [])


def entropy_upper_via_digraph(alg, tol=DEFAULT_TOL):
    """Upper bound ``rho + tol`` on the entropy of ``alg``."""
    return spectral_radius(associated_digraph(alg), tol).value + tol


def shifted(g, k=1):
    """Integer matrix ``M + kI`` (no longer a (0,1)-matrix)."""
    m = g.matrix()
    for i in range(len(m)):
        m[i][i] += k
    return m


__all__ = [
    "CharPoly", "Digraph", "SpectralRadiusResult", "char_poly",
    "char_poly_coefficients", "entropy_upper_via_digraph", "spectral_radius",
    "spectral_radius_of_matrix", "shifted", "verify_recurrence", "walk_count", "walk_counts",
]
