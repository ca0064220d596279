"""
Red-blue removal on 2-colored graphs.

A red vertex and a blue vertex with identical open neighborhoods can be
deleted together without changing whether the rest of the coloring is
balanced. Repeating this until no such pair remains gives the reduced
graph. Eligible pairs are never adjacent, since a vertex is not in its own
open neighborhood.

Vertex numbers in a trace always refer to the original graph.

"""

from dataclasses import dataclass

from .balance import CLASS_CONDITIONS, GraphClass, is_balanced
from .graph import (
    BLUE,
    RED,
    ColoredGraph,
    Coloring,
    GraphInputError,
    complete_multipartite_parts,
    induced_subgraph,
)


# The classes whose membership passes from a complete multipartite graph to
# its reduced graph.
PRESERVED_CLASSES = (GraphClass.SBV, GraphClass.OSB, GraphClass.CSB, GraphClass.PB)


@dataclass(frozen=True)
class ReductionTrace:
    removed_pairs: tuple
    result: ColoredGraph
    index_map: tuple


@dataclass(frozen=True)
class ReductionReport:
    parts_monochromatic: bool
    odd_parts_stay_odd: bool
    even_parts_stay_even: bool
    balance_preserved: bool
    trace: ReductionTrace

    def all_hold(self):
        return (
            self.parts_monochromatic
            and self.odd_parts_stay_odd
            and self.even_parts_stay_even
            and self.balance_preserved
        )


def eligible_pairs(cg, alive=None):
    """
    Every (red, blue) pair among `alive` whose open neighborhoods, restricted
    to `alive`, coincide. Sorted lexicographically.

    """
    _require_two_colors(cg)
    alive = set(range(cg.n)) if alive is None else set(alive)

    twins = {}
    for v in sorted(alive):
        neighbors = frozenset(u for u in cg.graph.adjacency[v] if u in alive)
        twins.setdefault(neighbors, []).append(v)

    pairs = []
    for members in twins.values():
        reds = [v for v in members if cg.color(v) == RED]
        blues = [v for v in members if cg.color(v) == BLUE]
        pairs.extend((r, b) for r in reds for b in blues)

    return sorted(pairs)


def red_blue_reduce(cg, choose=None):
    """
    Remove red-blue pairs until none is eligible.

    By default the lexicographically least eligible pair is removed at each
    step. `choose`, if given, is called with the sorted list of eligible
    pairs and returns the one to remove.

    """
    _require_two_colors(cg)
    alive = set(range(cg.n))
    removed = []

    while True:
        pairs = eligible_pairs(cg, alive)
        if not pairs:
            break
        pair = pairs[0] if choose is None else choose(pairs)
        if pair not in pairs:
            raise GraphInputError(f"{pair} is not an eligible red-blue pair")
        removed.append(pair)
        alive.difference_update(pair)

    result, index_map = _restrict(cg, alive)
    return ReductionTrace(tuple(removed), result, index_map)


def replay_removals(cg, removed_pairs):
    """Every intermediate colored graph of a reduction, starting with cg."""
    _require_two_colors(cg)
    alive = set(range(cg.n))
    states = [cg]

    for pair in removed_pairs:
        if pair not in eligible_pairs(cg, alive):
            raise GraphInputError(f"{pair} is not an eligible red-blue pair")
        alive.difference_update(pair)
        states.append(_restrict(cg, alive)[0])

    return states


def check_reduction_observations(cg):
    """
    Reduce a 2-colored complete multipartite graph and check what the
    reduction must preserve: each surviving part is monochromatic, odd parts
    keep an odd number of vertices, even parts keep an even number (possibly
    none), and membership in SBV, OSB, CSB and PB carries over to the reduced
    graph.

    """
    _require_two_colors(cg)
    parts = complete_multipartite_parts(cg.graph)
    trace = red_blue_reduce(cg)
    surviving = set(trace.index_map)

    monochromatic = True
    odd_stay_odd = True
    even_stay_even = True
    for part in parts:
        kept = [v for v in part if v in surviving]
        if len({cg.color(v) for v in kept}) > 1:
            monochromatic = False
        if len(kept) % 2 != len(part) % 2:
            if len(part) % 2:
                odd_stay_odd = False
            else:
                even_stay_even = False

    preserved = True
    for graph_class in PRESERVED_CLASSES:
        lam, kind = CLASS_CONDITIONS[graph_class]
        if is_balanced(cg, lam, kind) and not is_balanced(trace.result, lam, kind):
            preserved = False

    return ReductionReport(
        parts_monochromatic=monochromatic,
        odd_parts_stay_odd=odd_stay_odd,
        even_parts_stay_even=even_stay_even,
        balance_preserved=preserved,
        trace=trace,
    )


def _restrict(cg, alive):
    graph, index_map = induced_subgraph(cg.graph, alive)
    coloring = Coloring([cg.color(v) for v in index_map], 2)
    return ColoredGraph(graph, coloring), index_map


def _require_two_colors(cg):
    if cg.k != 2:
        raise GraphInputError(f"red-blue removal needs a 2-coloring, got k={cg.k}")
