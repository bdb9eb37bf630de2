"""Quadratic monomial algebras and their graded dimensions.

A quadratic monomial algebra on letters ``x_1..x_d`` is the free algebra
modulo an ideal generated by some words ``x_i x_j``.  Its degree-``n``
component has a basis of the length-``n`` words containing no forbidden
adjacent pair, so these words are exactly the walks with ``n - 1`` edges in
the associated digraph (edge ``i -> j`` iff ``x_i x_j`` is allowed).

Degree conventions: ``c_0 = 1`` and ``c_1 = d``; for ``n >= 1`` the count
``c_{n+1}`` equals ``e^T M^n e``, the number of walks with ``n`` edges.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import ResourceLimitError, ValidationError
from .graph import Digraph

DEFAULT_MAX_DEGREE_LIMIT = 100_000


@dataclass(frozen=True)
class QuadraticMonomialAlgebra:
    """``alphabet_size`` letters and the set of forbidden ordered pairs
    ``(i, j)``, 1-indexed, meaning ``x_i x_j`` lies in the ideal.
    """

    alphabet_size: int
    forbidden: frozenset[tuple[int, int]]

    def __post_init__(self):
        d = self.alphabet_size
        if not isinstance(d, int) or d < 1:
            raise ValidationError("alphabet_size must be a positive integer")
        pairs = frozenset((int(i), int(j)) for i, j in self.forbidden)
        for i, j in pairs:
            if not (1 <= i <= d and 1 <= j <= d):
                raise ValidationError(
                    f"forbidden pair {[i, j]} has a letter outside 1..{d}")
        object.__setattr__(self, "forbidden", pairs)

    @classmethod
    def free(cls, d):
        return cls(d, frozenset())

    @classmethod
    def from_pairs(cls, d, pairs):
        """Build from a sequence of pairs, rejecting duplicates."""
        seen = set()
        for pair in pairs:
            key = tuple(pair)
            if len(key) != 2:
                raise ValidationError(f"forbidden entry {list(pair)} is not a pair")
            if key in seen:
                raise ValidationError(f"duplicate forbidden pair {list(key)}")
            seen.add(key)
        return cls(d, frozenset(seen))

    def is_allowed(self, i, j):
        return (i, j) not in self.forbidden

    def transfer_matrix(self):
        d = self.alphabet_size
        return [[0 if (i, j) in self.forbidden else 1 for j in range(1, d + 1)]
                for i in range(1, d + 1)]

    def sorted_forbidden(self):
        return sorted(self.forbidden)


@dataclass(frozen=True)
class HilbertPrefix:
    """Exact dimensions ``c_0, ..., c_N``."""

    dims: tuple[int, ...]

    @property
    def max_degree(self):
        return len(self.dims) - 1


def _check_integer(n, name):
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValidationError(f"{name} must be a nonnegative integer")


def dimension(alg, n):
    """Number of length-``n`` words avoiding every forbidden pair.

    Computed by pushing a row vector of per-final-letter counts through the
    transfer matrix, so the cost is ``O(n d^2)`` big-integer operations.
    """
    _check_integer(n, "n")
    if n == 0:
        return 1
    return sum(_final_letter_counts(alg, n))


def _extend(u, m):
    d = len(u)
    return [sum(u[i] for i in range(d) if m[i][j]) for j in range(d)]


def _final_letter_counts(alg, n):
    m = alg.transfer_matrix()
    u = [1] * alg.alphabet_size
    for _ in range(n - 1):
        u = _extend(u, m)
    return u


def hilbert_prefix(alg, N, limit=DEFAULT_MAX_DEGREE_LIMIT):
    _check_integer(N, "N")
    if N > limit:
        raise ResourceLimitError(
            f"Hilbert prefix up to degree {N} exceeds the limit {limit}")
    dims = [1]
    if N >= 1:
        m = alg.transfer_matrix()
        u = [1] * alg.alphabet_size
        dims.append(alg.alphabet_size)
        for _ in range(2, N + 1):
            u = _extend(u, m)
            dims.append(sum(u))
    return HilbertPrefix(tuple(dims))


def _nth_root(c, n):
    if c.bit_length() < 1000:
        return float(c) ** (1.0 / n)
    return math.exp(math.log(c) / n)


def entropy_upper_from_dims(prefix):
    """``min_n c_n^(1/n)`` over ``1 <= n <= N``.

    For these algebras ``c_{n+m} <= c_n c_m`` (cut an allowed word in two),
    so by Fekete's lemma the entropy is the infimum of the ``n``-th roots and
    every term is an upper bound.  A zero dimension makes the algebra finite
    dimensional and the bound 0.
    """
    dims = prefix.dims if isinstance(prefix, HilbertPrefix) else tuple(prefix)
    if len(dims) < 2:
        raise ValidationError("need at least c_0 and c_1")
    best = math.inf
    for n, c in enumerate(dims[1:], start=1):
        if c == 0:
            return 0.0
        best = min(best, _nth_root(c, n))
    return best


def associated_digraph(alg):
    return Digraph(tuple(map(tuple, alg.transfer_matrix())))


def algebra_from_digraph(g):
    """Inverse of :func:`associated_digraph`: forbid exactly the non-edges."""
    d = g.vertex_count
    return QuadraticMonomialAlgebra(
        d, frozenset((i, j) for i in range(1, d + 1) for j in range(1, d + 1)
                     if not g.has_edge(i, j)))


def parse_algebra(text):
    """Parse ``{"letters": d, "forbidden": [[i, j], ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"algebra file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "letters" not in doc:
        raise ValidationError('algebra file must be an object with a "letters" key')
    d = doc["letters"]
    if not isinstance(d, int) or isinstance(d, bool):
        raise ValidationError('"letters" must be an integer')
    pairs = doc.get("forbidden", [])
    if not isinstance(pairs, list):
        raise ValidationError('"forbidden" must be a list of pairs')
    for p in pairs:
        if (not isinstance(p, list) or len(p) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in p)):
            raise ValidationError(f"forbidden entry {p!r} is not a pair of integers")
    return QuadraticMonomialAlgebra.from_pairs(d, pairs)


def format_algebra(alg):
    doc = {"letters": alg.alphabet_size,
           "forbidden": [list(p) for p in alg.sorted_forbidden()]}
    return json.dumps(doc) + "\n"
