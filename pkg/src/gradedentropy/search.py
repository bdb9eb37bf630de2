"""Exhaustive maximisation of the spectral radius over (0,1)-matrices.

Every ``d x d`` matrix with exactly ``k`` ones is a ``k``-subset of the
``d*d`` cell positions; cell ``(i, j)`` is position ``i*d + j``.  Matrices
are compared by their row-major bit string (row 1 first), which is also the
order witnesses are reported in.

Only matrices of the requested size are searched.  Padding with isolated
vertices embeds smaller sizes, but a larger ``d`` may still do better.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .errors import ResourceLimitError, ValidationError
from .graph import Digraph
from .spectral import DEFAULT_TOL, collatz_wielandt, spectral_radius_of_matrix

DEFAULT_BUDGET = 10**7
WORKERS_ENV = "GRADEDENTROPY_WORKERS"


@dataclass(frozen=True)
class SearchResult:
    k: int
    d: int
    max_rho: float
    witnesses: tuple[Digraph, ...]
    matrices_examined: int
    pruned: int
    tolerance: float
    # depends on how the range was split across workers
    exact_checks: int = field(default=0, compare=False)

    def to_dict(self):
        return {
            "k": self.k,
            "d": self.d,
            "max_rho": self.max_rho,
            "witnesses": [w.row_strings() for w in self.witnesses],
            "matrices_examined": self.matrices_examined,
            "pruned": self.pruned,
            "tolerance": self.tolerance,
            "scope": f"only {self.d}x{self.d} matrices were searched",
        }


def unrank_combination(rank, n, k):
    """The ``rank``-th ``k``-subset of ``range(n)`` in lexicographic order."""
    out = []
    x = 0
    for remaining in range(k, 0, -1):
        while True:
            c = comb(n - x - 1, remaining - 1)
            if rank < c:
                break
            rank -= c
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def _combinations_from(start, stop, n, k):
    if start >= stop:
        return
    first = unrank_combination(start, n, k)
    # lexicographic successors, same order as itertools.combinations
    c = list(first)
    for _ in range(stop - start):
        yield tuple(c)
        i = k - 1
        while i >= 0 and c[i] == n - k + i:
            i -= 1
        if i < 0:
            return
        c[i] += 1
        for j in range(i + 1, k):
            c[j] = c[j - 1] + 1


def _encode(positions, n):
    code = 0
    for p in positions:
        code |= 1 << (n - 1 - p)
    return code


def _position_maps(d):
    maps = []
    for perm in itertools.permutations(range(d)):
        maps.append([perm[p // d] * d + perm[p % d] for p in range(d * d)])
    return maps


def _is_canonical(positions, code, maps, n):
    # representative = largest code in the permutation-similarity class
    for pm in maps:
        image = 0
        for p in positions:
            image |= 1 << (n - 1 - pm[p])
        if image > code:
            return False
    return True


def _matrix(positions, d):
    m = [[0] * d for _ in range(d)]
    for p in positions:
        m[p // d][p % d] = 1
    return m


def _scan(args):
    start, stop, k, d, tol, prune = args
    n = d * d
    maps = _position_maps(d) if prune else None
    best = -1.0
    hits = []
    pruned = exact = 0
    margin = 10 * tol
    for positions in _combinations_from(start, stop, n, k):
        code = _encode(positions, n)
        if prune and not _is_canonical(positions, code, maps, n):
            pruned += 1
            continue
        m = _matrix(positions, d)
        _, upper = collatz_wielandt(m, iterations=40)
        if upper + 1e-9 * (1 + upper) < best - margin:
            continue
        exact += 1
        value = spectral_radius_of_matrix(m, tol / 2)
        if value > best:
            best = value
        if value >= best - tol:
            hits.append((value, code))
    hits = [(v, c) for v, c in hits if v >= best - tol]
    return best, hits, pruned, exact


def _merge(parts, tol):
    best = max(p[0] for p in parts)
    hits = sorted(c for p in parts for v, c in p[1] if v >= best - tol)
    values = {c: v for p in parts for v, c in p[1]}
    return best, [(values[c], c) for c in hits], sum(p[2] for p in parts), sum(p[3] for p in parts)


def _digraph(code, d):
    n = d * d
    bits = format(code, f"0{n}b")
    return Digraph(tuple(tuple(int(b) for b in bits[i * d:(i + 1) * d]) for i in range(d)))


def worker_count():
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def max_spectral_radius(k, d, tol=DEFAULT_TOL, budget=DEFAULT_BUDGET,
                        prune=True, workers=None):
    """Largest spectral radius among ``d x d`` (0,1)-matrices with ``k`` ones.

    With ``prune`` only the largest-code matrix of each permutation-similarity
    class is evaluated; similar matrices share a spectrum, so the maximum is
    unchanged and witnesses are class representatives.  A float
    Collatz-Wielandt upper bound skips matrices that cannot come within
    ``10*tol`` of the running maximum; all others get a certified radius at
    ``tol/2``, so tied witnesses agree to within ``tol``.
    """
    if not (isinstance(k, int) and k >= 1):
        raise ValidationError("k must be a positive integer")
    if not (isinstance(d, int) and d >= 1):
        raise ValidationError("d must be a positive integer")
    if k > d * d:
        raise ValidationError(f"k = {k} ones do not fit in a {d}x{d} matrix")
    if not tol > 0:
        raise ValidationError("tol must be positive")
    total = comb(d * d, k)
    if total > budget:
        raise ResourceLimitError(
            f"C({d * d}, {k}) = {total} matrices exceeds the budget {budget}")
    workers = worker_count() if workers is None else max(1, workers)
    if workers == 1 or total < 1000:
        parts = [_scan((0, total, k, d, tol, prune))]
    else:
        step = -(-total // workers)
        chunks = [(s, min(s + step, total), k, d, tol, prune)
                  for s in range(0, total, step)]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_scan, chunks))
    best, hits, pruned, exact = _merge(parts, tol)
    return SearchResult(k, d, best, tuple(_digraph(c, d) for _, c in hits),
                        total, pruned, tol, exact)


def _signature(g, v):
    row = g.adjacency[v]
    col = [g.adjacency[i][v] for i in range(g.vertex_count)]
    return sum(row), sum(col), row[v]


def is_permutation_similar(a, b):
    """Whether some relabelling of vertices turns ``a`` into ``b``."""
    d = a.vertex_count
    if b.vertex_count != d:
        raise ValidationError("digraphs must have the same number of vertices")
    if a.edge_count != b.edge_count:
        return False
    sa = [_signature(a, v) for v in range(d)]
    sb = [_signature(b, v) for v in range(d)]
    if sorted(sa) != sorted(sb):
        return False
    A, B = a.adjacency, b.adjacency
    image = [-1] * d
    used = [False] * d
    # most constrained vertices first
    order = sorted(range(d), key=lambda v: sum(1 for s in sa if s == sa[v]))

    def extend(pos):
        if pos == d:
            return True
        v = order[pos]
        for w in range(d):
            if used[w] or sb[w] != sa[v]:
                continue
            ok = True
            for u in order[:pos]:
                x = image[u]
                if A[v][u] != B[w][x] or A[u][v] != B[x][w]:
                    ok = False
                    break
            if not ok:
                continue
            image[v], used[w] = w, True
            if extend(pos + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return extend(0)
