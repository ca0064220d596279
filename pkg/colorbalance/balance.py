"""
Balance of colorings at open and closed neighborhoods, and an exact solver for
the balance numbers.

A coloring is λ-balanced at a set of vertices when any two colors occur
there a number of times differing by at most λ. The four kinds of balance
checked here are:

- OPEN: λ-balanced at every open neighborhood N(v).
- CLOSED: λ-balanced at every closed neighborhood N[v].
- LOCAL: every vertex is λ-balanced at N(v) or at N[v].
- PARITY (two colors only): 0-balanced at N(v) for every even degree vertex
  and at N[v] for every odd degree vertex.

The balance numbers are the least λ admitting an OPEN, CLOSED or LOCAL
λ-balanced k-coloring. They are found by asking exists_coloring for each λ
in turn, from lower_bound upwards. exists_coloring is a backtracking search
over the vertices in smallest-last order that prunes as soon as some
neighborhood can no longer be balanced however the uncolored vertices are
finished.

"""

import concurrent.futures as cf
from dataclasses import dataclass
import enum

from networkx.algorithms.coloring.greedy_coloring import strategy_smallest_last

from .graph import ColoredGraph, Coloring, GraphInputError, max_degree, require_vertices


DEFAULT_MAX_VERTICES = 24


class InstanceTooLargeError(Exception):
    pass


class BalanceKind(enum.Enum):
    OPEN = "open"
    CLOSED = "closed"
    LOCAL = "local"
    PARITY = "parity"


class GraphClass(enum.Enum):
    NBC = "NBC"
    CNBC = "CNBC"
    OSB = "OSB"
    CSB = "CSB"
    SBV = "SBV"
    PB = "PB"


# The (λ, kind) each class is defined by, always with two colors.
CLASS_CONDITIONS = {
    GraphClass.NBC: (0, BalanceKind.OPEN),
    GraphClass.CNBC: (0, BalanceKind.CLOSED),
    GraphClass.OSB: (1, BalanceKind.OPEN),
    GraphClass.CSB: (1, BalanceKind.CLOSED),
    GraphClass.SBV: (1, BalanceKind.LOCAL),
    GraphClass.PB: (0, BalanceKind.PARITY),
}


@dataclass(frozen=True)
class ImbalanceReport:
    open: tuple
    closed: tuple


@dataclass(frozen=True)
class BalanceCertificate:
    """
    Either a witness coloring showing the balance number is at most `verdict`,
    or (witness None) proof by exhaustion that it exceeds `verdict`.

    For beta, `exhausted` records that every smaller λ was refuted.

    """

    verdict: int
    kind: BalanceKind
    k: int
    witness: Coloring = None
    exhausted: bool = False


@dataclass(frozen=True)
class ClassVerdict:
    graph_class: GraphClass
    member: bool
    witness: Coloring = None
    reason: str = None


@dataclass(frozen=True)
class ClassReport:
    """Membership in each of the six classes, with a witness for every member."""

    verdicts: tuple
    source: str = "solver"

    def __getitem__(self, graph_class):
        for verdict in self.verdicts:
            if verdict.graph_class is graph_class:
                return verdict
        raise KeyError(graph_class)

    def __contains__(self, graph_class):
        return any(v.graph_class is graph_class for v in self.verdicts)

    def member(self, graph_class):
        return self[graph_class].member

    def witness(self, graph_class):
        return self[graph_class].witness


def imbalance(cg):
    """Per-vertex open and closed imbalance over the full palette 1..k."""
    colors = cg.coloring.colors
    open_imbalance = []
    closed_imbalance = []

    for v in range(cg.n):
        counts = [0] * cg.k
        for u in cg.graph.adjacency[v]:
            counts[colors[u] - 1] += 1
        open_imbalance.append(max(counts) - min(counts))
        counts[colors[v] - 1] += 1
        closed_imbalance.append(max(counts) - min(counts))

    return ImbalanceReport(tuple(open_imbalance), tuple(closed_imbalance))


def is_balanced(cg, lam, kind):
    if lam < 0:
        raise ValueError(f"λ must be nonnegative, got {lam}")
    kind = BalanceKind(kind)
    if kind is BalanceKind.PARITY and cg.k != 2:
        raise GraphInputError(f"parity balance needs exactly two colors, got k={cg.k}")

    report = imbalance(cg)
    pairs = list(zip(report.open, report.closed))

    if kind is BalanceKind.OPEN:
        return all(o <= lam for o in report.open)
    if kind is BalanceKind.CLOSED:
        return all(c <= lam for c in report.closed)
    if kind is BalanceKind.LOCAL:
        return all(min(o, c) <= lam for o, c in pairs)

    degrees = cg.graph.degrees()
    return all(
        (c if degree % 2 else o) == 0 for degree, (o, c) in zip(degrees, pairs)
    )


def lower_bound(g, k, kind):
    """
    A lower bound on the balance number from degree parities.

    With two colors, an all-even-degree graph has even open and odd closed
    balance numbers, and an all-odd-degree graph the reverse.

    """
    kind = BalanceKind(kind)
    if k != 2 or kind not in (BalanceKind.OPEN, BalanceKind.CLOSED):
        return 0

    parity = _shared_degree_parity(g)
    if parity is None:
        return 0
    odd_when_even = kind is BalanceKind.CLOSED
    return int(odd_when_even) if parity == 0 else int(not odd_when_even)


def upper_bound(g, k, kind):
    """
    Every graph has a k-coloring balanced within this bound; an isolated
    vertex always has closed imbalance 1.

    """
    delta = max_degree(g)
    if BalanceKind(kind) is BalanceKind.CLOSED:
        return max(delta, 1)
    return delta


def exists_coloring(g, k, lam, kind, *, n_cpus=1):
    """
    Search for a k-coloring of g that is λ-balanced of the given kind.

    Returns the lexicographically least witness in the search order, or None
    when none exists. With n_cpus > 1 the branches on the second vertex's
    color are searched in separate processes; the answer is the same.

    """
    require_vertices(g)
    kind = BalanceKind(kind)
    if k < 1:
        raise GraphInputError(f"palette size must be at least 1, got {k}")
    if kind is BalanceKind.PARITY and k != 2:
        raise GraphInputError(f"parity balance needs exactly two colors, got k={k}")
    if lam < 0:
        raise ValueError(f"λ must be nonnegative, got {lam}")

    problem = _Problem.build(g, k, lam, kind)

    if n_cpus <= 1 or g.n < 2:
        colors = _search(problem, ())
    else:
        prefixes = [(1, c) for c in range(1, min(k, 2) + 1)]
        with cf.ProcessPoolExecutor(n_cpus) as pool:
            results = list(pool.map(_search, [problem] * len(prefixes), prefixes))
        colors = next((r for r in results if r is not None), None)

    if colors is None:
        return None

    witness = Coloring(problem.to_vertex_order(colors), k)
    assert is_balanced(ColoredGraph(g, witness), lam, kind)
    return witness


def certify(g, k, lam, kind, *, max_vertices=DEFAULT_MAX_VERTICES, n_cpus=1):
    """A certificate for the single question "is there a λ-balanced coloring?"."""
    require_vertices(g)
    _check_size(g, max_vertices)
    witness = exists_coloring(g, k, lam, kind, n_cpus=n_cpus)
    return BalanceCertificate(
        verdict=lam,
        kind=BalanceKind(kind),
        k=k,
        witness=witness,
        exhausted=witness is None,
    )


def beta(
    g,
    k,
    kind,
    *,
    max_vertices=DEFAULT_MAX_VERTICES,
    n_cpus=1,
    progress=None,
):
    """
    The least λ admitting a λ-balanced k-coloring of g, with a witness.

    `progress`, if given, is called as progress(λ, found) after each λ is
    decided.

    """
    require_vertices(g)
    kind = BalanceKind(kind)
    if kind is BalanceKind.PARITY:
        raise GraphInputError("parity balance has no balance number")
    if k < 2:
        raise GraphInputError(f"balance numbers need at least two colors, got k={k}")
    _check_size(g, max_vertices)

    lam = lower_bound(g, k, kind)
    step = 2 if _parity_applies(g, k, kind) else 1
    ceiling = upper_bound(g, k, kind) + 1

    while lam <= ceiling:
        witness = exists_coloring(g, k, lam, kind, n_cpus=n_cpus)
        if progress is not None:
            progress(lam, witness is not None)
        if witness is not None:
            return BalanceCertificate(
                verdict=lam, kind=kind, k=k, witness=witness, exhausted=lam > 0
            )
        lam += step

    raise AssertionError(f"no {kind.value} balanced coloring up to λ={ceiling}")


def class_membership(g, *, max_vertices=DEFAULT_MAX_VERTICES, n_cpus=1):
    """Decide all six classes for g by exhaustive search."""
    require_vertices(g)
    _check_size(g, max_vertices)

    verdicts = []
    for graph_class, (lam, kind) in CLASS_CONDITIONS.items():
        witness = exists_coloring(g, 2, lam, kind, n_cpus=n_cpus)
        verdicts.append(
            ClassVerdict(
                graph_class,
                witness is not None,
                witness,
                None if witness is not None else "exhaustive search found no coloring",
            )
        )

    return ClassReport(tuple(verdicts), source="solver")


def _check_size(g, max_vertices):
    if max_vertices is not None and g.n > max_vertices:
        raise InstanceTooLargeError(
            f"{g.n} vertices exceeds the exact solver limit of {max_vertices}"
        )


def _shared_degree_parity(g):
    parities = {d % 2 for d in g.degrees()}
    return parities.pop() if len(parities) == 1 else None


def _parity_applies(g, k, kind):
    return (
        k == 2
        and kind in (BalanceKind.OPEN, BalanceKind.CLOSED)
        and _shared_degree_parity(g) is not None
    )


@dataclass(frozen=True)
class _Problem:
    """
    A search instance with vertices renumbered into search order, so that
    position i is the i-th vertex to be colored.

    """

    k: int
    lam: int
    kind: BalanceKind
    order: tuple
    neighbors: tuple
    degrees: tuple

    @classmethod
    def build(cls, g, k, lam, kind):
        order = tuple(strategy_smallest_last(g.to_networkx(), {}))
        position = {v: i for i, v in enumerate(order)}
        neighbors = tuple(
            tuple(sorted(position[u] for u in g.adjacency[v])) for v in order
        )
        degrees = tuple(len(a) for a in neighbors)
        return cls(k, lam, kind, order, neighbors, degrees)

    def to_vertex_order(self, colors):
        result = [0] * len(self.order)
        for i, v in enumerate(self.order):
            result[v] = colors[i]
        return tuple(result)


def _search(problem, prefix):
    """
    Depth-first search for a balanced coloring in search-order positions,
    starting from the forced `prefix`. Returns the colors or None.

    """
    n = len(problem.order)
    k = problem.k
    neighbors = problem.neighbors

    colors = [0] * n
    counts = [[0] * k for _ in range(n)]
    remaining = list(problem.degrees)

    def feasible(v):
        own = colors[v]
        if problem.kind is BalanceKind.PARITY:
            if problem.degrees[v] % 2 == 0:
                return _can_balance(counts[v], remaining[v], 0)
            return _closed_feasible(counts[v], remaining[v], own, 0)

        if problem.kind is BalanceKind.OPEN:
            return _can_balance(counts[v], remaining[v], problem.lam)
        if problem.kind is BalanceKind.CLOSED:
            return _closed_feasible(counts[v], remaining[v], own, problem.lam)
        open_ok = _can_balance(counts[v], remaining[v], problem.lam)
        return open_ok or _closed_feasible(counts[v], remaining[v], own, problem.lam)

    def assign(v, c):
        colors[v] = c
        for u in neighbors[v]:
            counts[u][c - 1] += 1
            remaining[u] -= 1
        return all(feasible(u) for u in neighbors[v]) and feasible(v)

    def unassign(v, c):
        colors[v] = 0
        for u in neighbors[v]:
            counts[u][c - 1] -= 1
            remaining[u] += 1

    def extend(v, used):
        if v == n:
            return True
        if v < len(prefix):
            choices = [prefix[v]] if prefix[v] <= min(k, used + 1) else []
        else:
            choices = range(1, min(k, used + 1) + 1)

        for c in choices:
            if assign(v, c) and extend(v + 1, max(used, c)):
                return True
            unassign(v, c)
        return False

    if n and extend(0, 0):
        return tuple(colors)
    return None


def _closed_feasible(counts, remaining, own, lam):
    if own:
        closed = list(counts)
        closed[own - 1] += 1
        return _can_balance(closed, remaining, lam)
    return _can_balance(counts, remaining + 1, lam)


def _can_balance(counts, remaining, lam):
    """
    Can `remaining` more items be added to the color counts so that the
    largest and smallest count differ by at most lam?

    Some final minimum level must have every count within [level, level+lam]:
    the counts below level are topped up to it, and the total must not exceed
    what the band can hold.

    """
    total = sum(counts) + remaining
    capacity = len(counts)
    level = max(max(counts) - lam, 0)
    while True:
        floor_total = sum(max(c, level) for c in counts)
        if floor_total > total:
            return False
        if total <= capacity * (level + lam):
            return True
        level += 1
