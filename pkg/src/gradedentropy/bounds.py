"""Entropy bounds in terms of ``k = dim A_2``.

Write ``k = m^2 + ell`` with ``1 <= ell <= 2m``.  The bounds available are

* ``sqrt(k)``, from submultiplicativity;
* ``f(k) = (m + sqrt(m^2 + 2 ell)) / 2`` for every non-square ``k``;
* ``m`` when ``ell = 1`` and ``(m - 1 + sqrt(m^2 + 6m - 7)) / 2`` when
  ``ell = 2m - 3``;
* ``rho(m, floor(ell/2), ceil(ell/2))``, the largest root of
  ``t^3 - m t^2 - p t + m p - p q``, valid only once ``m`` is large enough
  for the given ``ell``.  That threshold is unknown, and at ``k = 12`` the
  value is already too small, so it is reported but only folded into the
  certified bound on request.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ValidationError
from .spectral import DEFAULT_TOL

FIGURE_HEADER = ("k", "m", "ell", "sqrt_k", "f_k", "rho", "gap_f", "gap_rho")


@dataclass(frozen=True)
class Decomposition:
    k: int
    m: int
    ell: int

    @property
    def is_square(self):
        return self.ell == 0


@dataclass(frozen=True)
class FriedlandCubic:
    """``t^3 - m t^2 - p t + (m p - p q)``."""

    m: int
    p: int
    q: int

    def __post_init__(self):
        if self.m < 1:
            raise ValidationError("m must be a positive integer")
        if self.p < 0 or self.q < 0:
            raise ValidationError("p and q must be nonnegative")
        if self.p > self.q:
            raise ValidationError(f"p <= q required (got p={self.p}, q={self.q})")
        if self.q > self.m:
            raise ValidationError(f"q <= m required (got q={self.q}, m={self.m})")

    @property
    def coefficients(self):
        m, p, q = self.m, self.p, self.q
        return (1, -m, -p, m * p - p * q)

    def __call__(self, t):
        a, b, c, d = self.coefficients
        return ((a * t + b) * t + c) * t + d


@dataclass(frozen=True)
class BoundReport:
    decomposition: Decomposition
    sqrt_k: float
    f_k: float | None
    special_case_bound: float | None
    rho_reference: float | None
    certified: float
    asymptotic_assumed: bool
    notes: tuple[str, ...] = field(default=())


def decompose(k):
    if not isinstance(k, int) or k < 0:
        raise ValidationError("k must be a nonnegative integer")
    r = math.isqrt(k)
    if r * r == k:
        return Decomposition(k, r, 0)
    return Decomposition(k, r, k - r * r)


def f_of_k(k):
    dec = decompose(k)
    if dec.is_square:
        raise ValidationError(f"f(k) needs a non-square k; {k} = {dec.m}^2")
    m, ell = dec.m, dec.ell
    return (m + math.sqrt(m * m + 2 * ell)) / 2


def _integer_roots(coeffs):
    """Integer roots of a monic integer polynomial (its only rational roots)."""
    const = coeffs[-1]
    if const == 0:
        return {0} | _integer_roots(coeffs[:-1]) if len(coeffs) > 1 else {0}
    roots = set()
    for r in range(1, math.isqrt(abs(const)) + 1):
        if const % r == 0:
            for c in (r, -r, const // r, -const // r):
                acc = 0
                for a in coeffs:
                    acc = acc * c + a
                if acc == 0:
                    roots.add(c)
    return roots


def _closed_form_root(cubic):
    """Largest root in closed form when the cubic has a rational root."""
    coeffs = cubic.coefficients
    best = None
    for r in _integer_roots(coeffs):
        # deflate: t^2 + b t + c
        b = coeffs[1] + r
        c = coeffs[2] + r * b
        disc = b * b - 4 * c
        candidates = [float(r)]
        if disc >= 0:
            candidates.append((-b + math.sqrt(disc)) / 2)
        top = max(candidates)
        best = top if best is None else max(best, top)
    return best


def rho_mpq(m, p, q, tol=DEFAULT_TOL):
    """Largest positive root of the cubic, to within ``tol``.

    The cubic's last critical point ``(m + sqrt(m^2 + 3p)) / 3`` is at most
    ``m`` when ``p <= m``, so it is increasing from ``m`` on; with
    ``cubic(m) = -p q <= 0`` the largest root is the unique sign change in
    ``[m, m + q + 1]``.  Evaluation is exact at rational points.  When the
    cubic has a rational root the closed form is returned instead, provided
    it falls inside the bisection bracket.
    """
    if not tol > 0:
        raise ValidationError("tol must be positive")
    cubic = FriedlandCubic(m, p, q)
    lo, hi = Fraction(m), Fraction(m + q + 1)
    if cubic(lo) == 0:
        return float(m)
    assert cubic(lo) < 0 < cubic(hi)
    width = Fraction(2 * tol)
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = cubic(mid)
        if v == 0:
            return float(mid)
        if v < 0:
            lo = mid
        else:
            hi = mid
    exact = _closed_form_root(cubic)
    if exact is not None and float(lo) <= exact <= float(hi):
        return exact
    return float((lo + hi) / 2)


def special_case_bound(dec):
    m, ell = dec.m, dec.ell
    if ell == 0:
        return None
    if ell == 1:
        return float(m)
    if ell == 2 * m - 3:
        return (m - 1 + math.sqrt(m * m + 6 * m - 7)) / 2
    return None


def balanced_rho(dec, tol=DEFAULT_TOL):
    ell = dec.ell
    return rho_mpq(dec.m, ell // 2, (ell + 1) // 2, tol)


def friedland_bound(k, assume_asymptotic=False, tol=DEFAULT_TOL):
    """All bounds for ``dim A_2 = k``; ``certified`` is the smallest one that
    holds without extra assumptions, unless ``assume_asymptotic`` admits the
    cubic root as well.
    """
    dec = decompose(k)
    sqrt_k = math.sqrt(k)
    notes = []
    if k == 0:
        notes.append("a_2 = 0: every product of generators vanishes, entropy 0")
        return BoundReport(dec, 0.0, None, None, None, 0.0, assume_asymptotic,
                           tuple(notes))
    if dec.is_square:
        if k == 1:
            notes.append("a_2 = 1: outside the theorem; sqrt(a_2) = 1 applies")
        else:
            notes.append("perfect square: sqrt(a_2) is attained by the free algebra")
        return BoundReport(dec, sqrt_k, None, None, None, float(dec.m),
                           assume_asymptotic, tuple(notes))

    f_k = f_of_k(k)
    special = special_case_bound(dec)
    rho = balanced_rho(dec, tol)
    candidates = [sqrt_k, f_k]
    if special is not None:
        candidates.append(special)
    if assume_asymptotic:
        candidates.append(rho + tol)
        notes.append("rho_reference included: assumes m is past the unknown threshold")
    else:
        notes.append("rho_reference not certified: valid only for m beyond an unknown threshold")
    return BoundReport(dec, sqrt_k, f_k, special, rho, min(candidates),
                       assume_asymptotic, tuple(notes))


@dataclass(frozen=True)
class FigureRow:
    k: int
    m: int
    ell: int
    sqrt_k: float
    f_k: float
    rho: float
    gap_f: float
    gap_rho: float

    def as_tuple(self):
        return (self.k, self.m, self.ell, self.sqrt_k, self.f_k, self.rho,
                self.gap_f, self.gap_rho)


def _figure_row(k, tol):
    dec = decompose(k)
    sqrt_k = math.sqrt(k)
    f_k = f_of_k(k)
    rho = balanced_rho(dec, tol)
    return FigureRow(k, dec.m, dec.ell, sqrt_k, f_k, rho, sqrt_k - f_k, sqrt_k - rho)


def figure_data(k_min=5, k_max=85, tol=DEFAULT_TOL, workers=1):
    """Rows for every non-square ``k`` in ``[k_min, k_max]``, ascending."""
    if not (2 <= k_min <= k_max):
        raise ValidationError("need 2 <= k_min <= k_max")
    ks = [k for k in range(k_min, k_max + 1) if not decompose(k).is_square]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(lambda k: _figure_row(k, tol), ks))
    return [_figure_row(k, tol) for k in ks]


def format_real(x):
    """Twelve significant digits."""
    return f"{x:.12g}"


def figure_csv(rows):
    lines = [",".join(FIGURE_HEADER)]
    for row in rows:
        t = row.as_tuple()
        lines.append(",".join([str(t[0]), str(t[1]), str(t[2])]
                              + [format_real(x) for x in t[3:]]))
    return "\n".join(lines) + "\n"
