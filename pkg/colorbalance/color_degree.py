"""
Color degree matrices: computing them, comparing them, deciding whether a
candidate matrix is the matrix of some colored graph, and building such a
graph when it is.

Row i of the matrix holds the number of neighbors of vertex i in each color
class 1..k, followed by the color of vertex i itself. A matrix is realizable
exactly when

1. every color identifier lies in 1..k,
2. for each color i, the color-i entries of the color-i rows form a graphic
   sequence (Erdős–Gallai), and
3. for each pair of colors i < j, the color-j entries of the color-i rows and
   the color-i entries of the color-j rows form a bigraphic pair
   (Gale–Ryser).

Realizations are built block by block with Havel–Hakimi: diagonal blocks
first, then the off-diagonal pairs in lexicographic color order.

"""

from collections import Counter
from dataclasses import dataclass
import itertools

import networkx as nx

from .graph import ColoredGraph, Coloring, Graph


class MatrixInputError(ValueError):
    pass


class NotRealizableError(Exception):
    pass


@dataclass(frozen=True)
class ColorDegreeMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise MatrixInputError(f"rows have differing widths {sorted(widths)}")
        if widths and widths.pop() < 2:
            raise MatrixInputError("rows need at least one degree column and the id")
        for i, row in enumerate(rows):
            for entry in row:
                if not isinstance(entry, int) or entry < 0:
                    raise MatrixInputError(f"row {i} has invalid entry {entry!r}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self):
        return len(self.rows)

    @property
    def k(self):
        return len(self.rows[0]) - 1 if self.rows else 0

    def degree_block(self):
        return [row[:-1] for row in self.rows]

    def color_ids(self):
        return [row[-1] for row in self.rows]


def compute_cdm(cg, k=None):
    """
    The color degree matrix of `cg` over the palette 1..k (defaults to the
    coloring's own palette size).

    """
    k = cg.k if k is None else k
    if k < max(cg.coloring.colors, default=1):
        raise MatrixInputError(f"palette size {k} is smaller than the colors used")

    colors = cg.coloring.colors
    rows = []
    for v in range(cg.n):
        counts = [0] * k
        for u in cg.graph.adjacency[v]:
            counts[colors[u] - 1] += 1
        rows.append(tuple(counts) + (colors[v],))

    return ColorDegreeMatrix(tuple(rows))


def cdm_equal(a, b):
    """Strict entrywise equality under the given vertex orders."""
    return a.rows == b.rows


def cdm_equal_as_multiset(a, b):
    """
    Equality of the row multisets, ignoring vertex order. This is weaker than
    cdm_equal: two trees can share a row multiset without sharing a labelling.

    """
    return Counter(a.rows) == Counter(b.rows)


def permute_palette(m, permutation):
    """
    Rename color c to permutation[c - 1] throughout the matrix: the degree
    columns move and the identifiers are mapped.

    """
    permutation = tuple(permutation)
    if sorted(permutation) != list(range(1, m.k + 1)):
        raise MatrixInputError(f"{permutation} is not a permutation of 1..{m.k}")

    rows = []
    for row in m.rows:
        degrees = [0] * m.k
        for c, count in enumerate(row[:-1], start=1):
            degrees[permutation[c - 1] - 1] = count
        rows.append(tuple(degrees) + (permutation[row[-1] - 1],))
    return ColorDegreeMatrix(tuple(rows))


def is_bigraphic(p, q):
    """Gale–Ryser test for a pair of bipartite side degree sequences."""
    if sum(p) != sum(q):
        return False
    p = sorted(p, reverse=True)
    prefix = 0
    for t, degree in enumerate(p, start=1):
        prefix += degree
        if prefix > sum(min(d, t) for d in q):
            return False
    return True


def realizability_violation(m):
    """
    Describe the first realizability condition `m` violates, or return None
    if it is realizable.

    """
    k = m.k
    for i, c in enumerate(m.color_ids()):
        if not 1 <= c <= k:
            return f"color identifier {c} of row {i + 1} is outside 1..{k}"

    for c in range(1, k + 1):
        sequence = _diagonal_sequence(m, c)
        if sequence and not nx.is_valid_degree_sequence_erdos_gallai(sequence):
            return f"color {c} block {sequence} is not graphic"

    for c, d in itertools.combinations(range(1, k + 1), 2):
        p, q = _cross_sequences(m, c, d)
        if not is_bigraphic(p, q):
            return f"color pair ({c}, {d}) sequences {p} / {q} are not bigraphic"

    return None


def is_realizable(m):
    return realizability_violation(m) is None


def realize(m):
    """
    Build a colored graph whose color degree matrix is exactly `m`.

    Color classes with no rows are allowed and simply stay empty.

    """
    violation = realizability_violation(m)
    if violation is not None:
        raise NotRealizableError(violation)

    k = m.k
    ids = m.color_ids()
    members = {c: [i for i, cid in enumerate(ids) if cid == c] for c in range(1, k + 1)}
    edges = []

    for c in range(1, k + 1):
        sequence = _diagonal_sequence(m, c)
        # havel_hakimi_graph only labels the nonzero entries
        nonzero = [i for i, d in enumerate(sequence) if d]
        if not nonzero:
            continue
        block = nx.havel_hakimi_graph([sequence[i] for i in nonzero])
        edges.extend(
            (members[c][nonzero[a]], members[c][nonzero[b]]) for a, b in block.edges
        )

    for c, d in itertools.combinations(range(1, k + 1), 2):
        p, q = _cross_sequences(m, c, d)
        if not any(p):
            continue
        block = nx.bipartite.havel_hakimi_graph(p, q, create_using=nx.Graph)
        side = len(p)
        for a, b in block.edges:
            a, b = min(a, b), max(a, b)
            edges.append((members[c][a], members[d][b - side]))

    cg = ColoredGraph(Graph.from_edges(m.n, edges), Coloring(m.color_ids(), k))

    realized = compute_cdm(cg)
    if not cdm_equal(realized, m):
        raise NotRealizableError("block realizations do not reproduce the matrix")

    return cg


def _diagonal_sequence(m, c):
    return [row[c - 1] for row in m.rows if row[-1] == c]


def _cross_sequences(m, c, d):
    p = [row[d - 1] for row in m.rows if row[-1] == c]
    q = [row[c - 1] for row in m.rows if row[-1] == d]
    return p, q
