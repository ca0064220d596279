"""
Caterpillars described by their spine weights, the PB and CSB decisions for
them with explicit witness colorings, and the counting sequences A(n), B(n).

A caterpillar is a spine path x_0..x_{n-1} plus leaves hanging off it; the
weight of a spine vertex is its number of leaves. Leaves in a balanced
coloring are always colored opposite their host, so a coloring is fixed by
the spine colors alone.

A(n) counts the pairs (weights, spine colors) with spine length n, leftmost
spine vertex red, that are 1-balanced at every closed neighborhood. B(n)
counts the same objects with the first two spine vertices both red and no
condition at the leftmost vertex. They satisfy

    A(n) = A(n-1) + 3 B(n-1)
    B(n) = 3 A(n-1) + 3 B(n-1)

from A(2) = A(3) = 1, B(2) = 0, B(3) = 3.

"""

import concurrent.futures as cf
from dataclasses import dataclass
import itertools

import sympy

from .balance import ClassVerdict, GraphClass
from .graph import BLUE, RED, Coloring, Graph, GraphInputError


class PrecisionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class CaterpillarSpec:
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.weights) < 2:
            raise GraphInputError("a caterpillar spine needs at least 2 vertices")
        if self.weights[0] or self.weights[-1]:
            raise GraphInputError(
                f"spine endpoints must have weight 0: {self.weights}"
            )
        if any(w < 0 for w in self.weights):
            raise GraphInputError(f"weights must be nonnegative: {self.weights}")

    @property
    def spine_length(self):
        return len(self.weights)

    @property
    def total_vertices(self):
        return len(self.weights) + sum(self.weights)


@dataclass(frozen=True)
class CountPair:
    a: int
    b: int


def caterpillar_graph(spec):
    """Spine vertices 0..n-1, then the leaves grouped by host in spine order."""
    n = spec.spine_length
    edges = [(i, i + 1) for i in range(n - 1)]
    leaf = n
    for host, weight in enumerate(spec.weights):
        for _ in range(weight):
            edges.append((host, leaf))
            leaf += 1
    return Graph.from_edges(leaf, edges)


def caterpillar_coloring(spec, spine_colors):
    """Extend a spine coloring by coloring every leaf opposite its host."""
    spine_colors = tuple(spine_colors)
    if len(spine_colors) != spec.spine_length:
        raise GraphInputError(
            f"{len(spine_colors)} spine colors for a spine of {spec.spine_length}"
        )
    leaves = [
        _opposite(c)
        for c, weight in zip(spine_colors, spec.weights)
        for _ in range(weight)
    ]
    return Coloring(spine_colors + tuple(leaves), 2)


def segments(spec, heavy):
    """
    The runs of spine positions between consecutive vertices whose weight is
    in `heavy`. Runs between two adjacent heavy vertices are empty.

    """
    runs = [[]]
    for i, weight in enumerate(spec.weights):
        if weight in heavy:
            runs.append([])
        else:
            runs[-1].append(i)
    return runs


def is_pb_caterpillar(spec):
    if max(spec.weights) > 3:
        return _refusal(GraphClass.PB, "a spine vertex has more than 3 leaves")

    for run in segments(spec, {2, 3}):
        if len(run) % 2:
            return _refusal(
                GraphClass.PB,
                f"the segment at spine positions {run[0]}..{run[-1]} has odd length",
            )

    spine = _spine_walk(spec, {2, 3}, _pb_segment)
    return ClassVerdict(GraphClass.PB, True, caterpillar_coloring(spec, spine))


def is_csb_caterpillar(spec):
    if max(spec.weights) > 4:
        return _refusal(GraphClass.CSB, "a spine vertex has more than 4 leaves")

    for run in segments(spec, {3, 4}):
        if _csb_segment([spec.weights[i] for i in run], RED) is None:
            return _refusal(
                GraphClass.CSB,
                f"the segment at spine positions {run[0]}..{run[-1]} has odd length, "
                "no weight 2 vertex in an odd position and no weight 0 vertex in "
                "an even position",
            )

    spine = _spine_walk(spec, {3, 4}, _csb_segment)
    return ClassVerdict(GraphClass.CSB, True, caterpillar_coloring(spec, spine))


def count_recurrence(n):
    if n < 2:
        raise GraphInputError(f"counts start at n = 2, got {n}")
    if n == 2:
        return CountPair(1, 0)

    a, b = 1, 3
    for _ in range(n - 3):
        a, b = a + 3 * b, 3 * a + 3 * b
    return CountPair(a, b)


def count_matrix(n):
    if n < 2:
        raise GraphInputError(f"counts start at n = 2, got {n}")
    if n == 2:
        return CountPair(1, 0)
    step = sympy.Matrix([[1, 3], [3, 3]])
    a, b = step ** (n - 3) * sympy.Matrix([1, 3])
    return CountPair(int(a), int(b))


def count_closed_form(n):
    """
    A(n) from the closed form in the two roots 2 +- sqrt(10), evaluated to 50
    significant digits and rounded.

    """
    if not 2 <= n <= 30:
        raise GraphInputError(
            f"the closed form is supported for 2 <= n <= 30, got {n}"
        )

    root = sympy.sqrt(10)
    low = sympy.Rational(-5, 24) - root / 15
    high = sympy.Rational(-5, 24) + root / 15
    value = (low * (2 - root) ** (n + 1) + high * (2 + root) ** (n + 1)).evalf(50)

    nearest = int(sympy.floor(value + sympy.Rational(1, 2)))
    if abs(value - nearest) > 0.25:
        raise PrecisionError(f"closed form for n={n} evaluated to {value}")
    return nearest


def enumerate_counts(n, max_weight=5, *, n_cpus=1, progress=None):
    """
    A(n) and B(n) by brute force over every weight vector with internal
    weights 0..max_weight and every spine coloring.

    The work is split on the weight of the first internal spine vertex.
    `progress`, if given, is called as progress(done, total) as slices finish.

    """
    if n < 2:
        raise GraphInputError(f"counts start at n = 2, got {n}")

    slices = [(w,) for w in range(max_weight + 1)] if n > 2 else [()]
    results = []
    if n_cpus <= 1:
        for s in slices:
            results.append(_enumerate_slice(n, max_weight, s))
            _report_progress(progress, len(results), len(slices))
    else:
        with cf.ProcessPoolExecutor(n_cpus) as pool:
            for result in pool.map(
                _enumerate_slice,
                [n] * len(slices),
                [max_weight] * len(slices),
                slices,
            ):
                results.append(result)
                _report_progress(progress, len(results), len(slices))

    return CountPair(sum(a for a, _ in results), sum(b for _, b in results))


def enumerate_csb_count(n, max_weight=5, *, n_cpus=1):
    return enumerate_counts(n, max_weight, n_cpus=n_cpus).a


def _report_progress(progress, done, total):
    if progress is not None:
        progress(done, total)


def _enumerate_slice(n, max_weight, prefix):
    free = n - 2 - len(prefix)
    weight_vectors = [
        (0,) + prefix + rest + (0,)
        for rest in itertools.product(range(max_weight + 1), repeat=free)
    ]

    a = 0
    for tail in itertools.product((RED, BLUE), repeat=n - 1):
        a += _count_balanced(weight_vectors, (RED,) + tail, skip_first=False)

    b = 0
    for tail in itertools.product((RED, BLUE), repeat=n - 2):
        b += _count_balanced(weight_vectors, (RED, RED) + tail, skip_first=True)

    return a, b


def _count_balanced(weight_vectors, colors, skip_first):
    """
    Count the weight vectors for which every spine vertex (but the first, if
    skip_first) is 1-balanced at its closed neighborhood.

    With leaves opposite their host, a spine vertex's closed neighborhood has
    its own color once per same-colored spine neighbor plus itself, and the
    other color once per other-colored spine neighbor plus once per leaf.

    """
    n = len(colors)
    surplus = []
    for i, c in enumerate(colors):
        spine_neighbors = [colors[j] for j in (i - 1, i + 1) if 0 <= j < n]
        same = 1 + spine_neighbors.count(c)
        surplus.append(same - (len(spine_neighbors) + 1 - same))

    start = 1 if skip_first else 0
    return sum(
        1
        for weights in weight_vectors
        if all(abs(surplus[i] - weights[i]) <= 1 for i in range(start, n))
    )


def _spine_walk(spec, heavy, color_segment):
    """
    Color the spine left to right. The first spine vertex is blue, each heavy
    vertex copies its predecessor, and each segment is colored by
    color_segment(weights, first) starting from its predecessor's color.

    """
    colors = []
    for run in segments(spec, heavy):
        first = colors[-1] if colors else BLUE
        colors.extend(color_segment([spec.weights[i] for i in run], first))
        if len(colors) < spec.spine_length:
            colors.append(colors[-1])
    return colors


def _pb_segment(weights, first):
    return _double_alternating(len(weights), first)


def _csb_segment(weights, first):
    """
    Color one segment for closed balance, or return None if it cannot be.

    An even segment is double-alternating. An odd one needs a weight 2 vertex
    at an odd position l, colored like both its spine neighbors, or failing
    that a weight 0 vertex at an even position l, colored unlike both.

    """
    j = len(weights)
    if j % 2 == 0:
        return _double_alternating(j, first)

    for position in range(1, j + 1, 2):
        if weights[position - 1] == 2:
            head = _double_alternating(position - 1, first)
            c = head[-1] if head else first
            return head + [c] + _double_alternating(j - position, c)

    for position in range(2, j, 2):
        if weights[position - 1] == 0:
            head = _double_alternating(position - 1, first)
            tail = _double_alternating(j - position + 1, _opposite(head[-1]))
            return head + tail

    return None


def _double_alternating(length, first):
    """Positions 1, 4, 5, 8, 9, ... take `first`, the others the opposite."""
    other = _opposite(first)
    return [first if i % 4 in (0, 1) else other for i in range(1, length + 1)]


def _opposite(c):
    return BLUE if c == RED else RED


def _refusal(graph_class, reason):
    return ClassVerdict(graph_class, False, None, reason)
