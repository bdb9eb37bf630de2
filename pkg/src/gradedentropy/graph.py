"""Directed graphs with loops, stored as (0,1) adjacency matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError


@dataclass(frozen=True)
class Digraph:
    """A digraph on vertices ``1..d``; ``adjacency[i][j] == 1`` means an edge
    from vertex ``i+1`` to vertex ``j+1``.  Loops are allowed, multiple
    edges cannot be represented.
    """

    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.adjacency)
        d = len(rows)
        if d == 0:
            raise ValidationError("a digraph needs at least one vertex")
        for i, row in enumerate(rows):
            if len(row) != d:
                raise ValidationError(
                    f"row {i + 1} has {len(row)} entries, expected {d}")
            if any(x not in (0, 1) for x in row):
                raise ValidationError(f"row {i + 1} has entries outside {{0,1}}")
        object.__setattr__(self, "adjacency", rows)

    @classmethod
    def from_edges(cls, d, edges):
        """Build from 1-indexed ``(i, j)`` edge pairs."""
        rows = [[0] * d for _ in range(d)]
        for i, j in edges:
            if not (1 <= i <= d and 1 <= j <= d):
                raise ValidationError(f"edge {(i, j)} out of range 1..{d}")
            rows[i - 1][j - 1] = 1
        return cls(tuple(map(tuple, rows)))

    @classmethod
    def complete(cls, d):
        return cls(tuple((1,) * d for _ in range(d)))

    @classmethod
    def cycle(cls, d):
        return cls.from_edges(d, [(i, i % d + 1) for i in range(1, d + 1)])

    @property
    def vertex_count(self):
        return len(self.adjacency)

    @property
    def edge_count(self):
        return sum(map(sum, self.adjacency))

    def has_edge(self, i, j):
        return self.adjacency[i - 1][j - 1] == 1

    def edges(self):
        return [(i + 1, j + 1)
                for i, row in enumerate(self.adjacency)
                for j, x in enumerate(row) if x]

    def transpose(self):
        return Digraph(tuple(zip(*self.adjacency)))

    def relabel(self, perm):
        """Graph where old vertex ``v`` (1-indexed) becomes ``perm[v-1]``."""
        d = self.vertex_count
        rows = [[0] * d for _ in range(d)]
        for i, j in self.edges():
            rows[perm[i - 1] - 1][perm[j - 1] - 1] = 1
        return Digraph(tuple(map(tuple, rows)))

    def matrix(self):
        """Mutable copy of the adjacency matrix as lists of ints."""
        return [list(row) for row in self.adjacency]

    def row_strings(self):
        return ["".join(map(str, row)) for row in self.adjacency]

    def max_row_sum(self):
        return max(map(sum, self.adjacency))


def parse_matrix(text):
    """Parse the plain-text matrix format: one row per line, 0/1 entries
    separated by single spaces.  Blank trailing lines are ignored.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ValidationError("matrix file is empty")
    rows = []
    for lineno, line in enumerate(lines, start=1):
        tokens = line.split(" ")
        if any(t not in ("0", "1") for t in tokens):
            raise ValidationError(
                f"line {lineno}: entries must be 0 or 1 separated by single spaces: {line!r}")
        rows.append(tuple(int(t) for t in tokens))
    d = len(rows)
    for lineno, row in enumerate(rows, start=1):
        if len(row) != d:
            raise ValidationError(
                f"line {lineno}: has {len(row)} entries but the matrix has {d} rows")
    return Digraph(tuple(rows))


def format_matrix(g):
    return "".join(" ".join(map(str, row)) + "\n" for row in g.adjacency)
