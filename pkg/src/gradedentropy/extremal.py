"""Digraph families that maximise the spectral radius for a given edge count.

``G(m, p, q)`` lives on ``m + 1`` vertices: a complete block with loops on
``1..m``, edges ``i -> m+1`` for ``i <= p`` and ``m+1 -> j`` for ``j <= q``.
The extra vertex therefore has in-degree ``p`` and out-degree ``q``.  Some
displays of this family draw the transposed matrix instead; spectra do not
distinguish the two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import QuadraticMonomialAlgebra
from .errors import ValidationError
from .graph import Digraph


@dataclass(frozen=True)
class ExtremalParams:
    m: int
    p: int
    q: int

    def __post_init__(self):
        if self.m < 1:
            raise ValidationError("m must be a positive integer")
        if not (0 <= self.p <= self.m and 0 <= self.q <= self.m):
            raise ValidationError(
                f"need 0 <= p, q <= m (got m={self.m}, p={self.p}, q={self.q})")


def _params(params, p=None, q=None):
    if isinstance(params, ExtremalParams):
        return params
    return ExtremalParams(params, p, q)


def build_G(params, p=None, q=None):
    """``build_G(ExtremalParams(m, p, q))`` or ``build_G(m, p, q)``."""
    pr = _params(params, p, q)
    m, p, q = pr.m, pr.p, pr.q
    n = m + 1

    def edge(i, j):
        return (i <= m and j <= m) or (i <= p and j == n) or (i == n and j <= q)

    return Digraph(tuple(tuple(int(edge(i, j)) for j in range(1, n + 1))
                         for i in range(1, n + 1)))


def build_special(m):
    """``m + 1`` vertices, edge ``i -> j`` iff ``i <= m-1`` or ``j <= m-1``:
    all ones except a 2x2 zero block in the bottom-right corner, so
    ``(m+1)^2 - 4`` edges.
    """
    if m < 2:
        raise ValidationError("build_special needs m >= 2")
    n = m + 1
    return Digraph(tuple(tuple(int(i <= m - 1 or j <= m - 1) for j in range(1, n + 1))
                         for i in range(1, n + 1)))


def presentation(params, p=None, q=None):
    """Quadratic monomial algebra whose associated digraph is ``G(m, p, q)``."""
    pr = _params(params, p, q)
    m, p, q = pr.m, pr.p, pr.q
    n = m + 1
    forbidden = {(n, n)}
    forbidden.update((i, n) for i in range(p + 1, m + 1))
    forbidden.update((n, j) for j in range(q + 1, m + 1))
    return QuadraticMonomialAlgebra(n, frozenset(forbidden))
