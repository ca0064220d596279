"""
Closed-form class membership for paths, cycles, wheels, complete graphs and
complete multipartite graphs, together with the explicit colorings that
witness each positive verdict.

Every classifier returns a balance.ClassReport covering all six classes. A
positive entry always carries a witness coloring; a negative entry carries
the reason the characterization gives for it.

Also here: a balanced coloring of any tree at open neighborhoods, and the
extension of an arbitrarily colored path to a caterpillar that is balanced at
every closed neighborhood.

"""

import networkx as nx

from .balance import ClassReport, ClassVerdict, GraphClass
from .graph import (
    BLUE,
    RED,
    ColoredGraph,
    Coloring,
    Graph,
    GraphInputError,
    MultipartiteSpec,
    require_vertices,
)


class NotATreeError(Exception):
    pass


def classify_path(n):
    if n < 1:
        raise GraphInputError(f"path needs n >= 1, got {n}")

    # Red at positions 1, 4, 5, 8, 9, ... (1-indexed).
    paired = _coloring(i % 4 in (0, 1) for i in range(1, n + 1))
    alternating = _coloring(i % 2 == 1 for i in range(1, n + 1))

    witnesses = {
        GraphClass.OSB: paired,
        GraphClass.CSB: alternating,
        GraphClass.SBV: paired,
    }
    if n == 1:
        witnesses[GraphClass.NBC] = paired
    if n == 2:
        witnesses[GraphClass.CNBC] = paired
    if n % 2 == 0 or n == 1:
        witnesses[GraphClass.PB] = paired

    reasons = {
        GraphClass.NBC: "an endpoint of degree 1 can never be 0-balanced at N(v)",
        GraphClass.CNBC: "an interior vertex has an odd closed neighborhood",
        GraphClass.PB: "paths with an odd number n > 1 of vertices are not PB",
    }
    return _report("path", witnesses, reasons)


def classify_cycle(n):
    if n < 3:
        raise GraphInputError(f"cycle needs n >= 3, got {n}")

    alternating = _coloring(i % 2 == 1 for i in range(1, n + 1))
    witnesses = {
        GraphClass.CSB: alternating,
        GraphClass.SBV: alternating,
    }
    if n % 4 == 0:
        # Red pairs alternate with blue pairs, so the two neighbors differ.
        pairs = _coloring(i % 4 in (1, 2) for i in range(1, n + 1))
        witnesses[GraphClass.NBC] = pairs
        witnesses[GraphClass.OSB] = pairs
        witnesses[GraphClass.PB] = pairs

    not_multiple = "a cycle is OSB (equivalently NBC, PB) only when 4 divides n"
    reasons = {
        GraphClass.NBC: not_multiple,
        GraphClass.OSB: not_multiple,
        GraphClass.PB: not_multiple,
        GraphClass.CNBC: "every closed neighborhood has three vertices",
    }
    return _report("cycle", witnesses, reasons)


def classify_wheel(n):
    """
    Classify the wheel with an n-vertex rim (hub last).

    n = 2 (mod 4) is the only case without an OSB coloring; there the rim
    pattern needs a different tail, which is CSB only when n = 6.

    """
    if n < 4:
        raise GraphInputError(
            f"wheel classification needs a rim of at least 4, got {n}; "
            "the wheel on a 3-cycle is the complete graph on 4 vertices"
        )

    rim = [j % 4 in (1, 2) for j in range(1, n + 1)]
    witnesses = {}

    if n % 4 != 2:
        osb = _coloring(rim + [False])
        witnesses[GraphClass.OSB] = osb
        witnesses[GraphClass.SBV] = osb
    else:
        rim[n - 4 :] = [False, True, True, False]
        tail = _coloring(rim + [False])
        witnesses[GraphClass.SBV] = tail
        if n == 6:
            witnesses[GraphClass.CSB] = tail

    reasons = {
        GraphClass.NBC: "rim vertices have odd degree 3",
        GraphClass.CNBC: "a wheel is CNBC only if it is CSB and OSB",
        GraphClass.OSB: "wheels with rim length 2 (mod 4) are not OSB",
        GraphClass.CSB: "the only CSB wheel has rim length 6",
        GraphClass.PB: "no wheel is both OSB and CSB",
    }
    return _report("wheel", witnesses, reasons)


def classify_complete(n):
    if n < 1:
        raise GraphInputError(f"complete graph needs n >= 1, got {n}")

    halves = _coloring(v < (n + 1) // 2 for v in range(n))
    witnesses = {
        GraphClass.CSB: halves,
        GraphClass.SBV: halves,
    }
    if n % 2 == 0:
        witnesses[GraphClass.CNBC] = halves
        witnesses[GraphClass.OSB] = halves
        witnesses[GraphClass.PB] = halves
    if n == 1:
        witnesses[GraphClass.NBC] = halves
        witnesses[GraphClass.OSB] = halves
        witnesses[GraphClass.PB] = halves

    reasons = {
        GraphClass.NBC: "complete graphs on n > 1 vertices are not NBC",
        GraphClass.CNBC: "closed neighborhoods have odd size n",
        GraphClass.OSB: "complete graphs with an odd number n > 1 are not OSB",
        GraphClass.PB: "complete graphs with an odd number n > 1 are not PB",
    }
    return _report("complete", witnesses, reasons)


def classify_complete_bipartite(a, b):
    return classify_complete_multipartite(MultipartiteSpec((a, b)))


def classify_complete_multipartite(spec):
    """
    Classify a complete multipartite graph from its part sizes alone.

    Throughout, each part is colored by choosing how many of its vertices are
    red; a vertex's open neighborhood is everything outside its part.

    """
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(spec)
    parts = spec.parts
    n = spec.n
    odd = [i for i, p in enumerate(parts) if p % 2]
    singletons = [i for i, p in enumerate(parts) if p == 1]
    single_part = len(parts) == 1
    all_singletons = len(singletons) == len(parts)

    balanced = _multipartite_coloring(spec, _balanced_reds(spec))
    witnesses = {}
    reasons = {}

    # Open balance.
    if n % 2 == 0 or len(odd) == 1:
        osb = _multipartite_coloring(spec, _paired_reds(parts, odd))
        witnesses[GraphClass.OSB] = osb
        witnesses[GraphClass.SBV] = osb
    else:
        reasons[GraphClass.OSB] = "n is odd and there is more than one odd part"

    # Balance at each vertex, either open or closed.
    if GraphClass.SBV not in witnesses:
        if spec.m1 >= spec.h - 1:
            witnesses[GraphClass.SBV] = _sbv_coloring(spec)
        else:
            reasons[GraphClass.SBV] = (
                "n is odd and there are fewer than h - 1 singleton parts"
            )

    # Closed balance.
    csb = _csb_coloring(spec, single_part, all_singletons)
    if csb is not None:
        witnesses[GraphClass.CSB] = csb
    else:
        reasons[GraphClass.CSB] = (
            "neither n even with every odd part a singleton, nor n odd with "
            "every even part of size 2 and m1 >= h + 2 m2 - 1"
        )

    # Parity balance.
    odd_parts_singletons = all(parts[i] == 1 for i in odd)
    if single_part or (n % 2 == 0 and odd_parts_singletons):
        witnesses[GraphClass.PB] = balanced
    else:
        reasons[GraphClass.PB] = "needs n even and every odd part a singleton"

    # Exact balance.
    if single_part or not odd:
        witnesses[GraphClass.NBC] = balanced
    else:
        reasons[GraphClass.NBC] = "with two or more parts, every part must be even"

    if all_singletons and n % 2 == 0:
        witnesses[GraphClass.CNBC] = balanced
    else:
        reasons[GraphClass.CNBC] = (
            "only complete graphs on an even number of vertices are CNBC"
        )

    return _report("complete_multipartite", witnesses, reasons)


def multipartite_bound_coloring(spec):
    """
    A coloring of any complete multipartite graph that is 2-balanced at every
    open neighborhood and 3-balanced at every closed neighborhood.

    """
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(spec)
    odd = [i for i, p in enumerate(spec.parts) if p % 2]
    return _multipartite_coloring(spec, _paired_reds(spec.parts, odd))


def tree_osb_coloring(t):
    """
    Color a tree so every open neighborhood is 1-balanced.

    Vertices are added in breadth-first order from vertex 0, which is blue.
    Each new vertex is a leaf of the tree built so far and takes whichever
    color is rarer among its parent's colored neighbors, blue on a tie.

    """
    require_vertices(t)
    tree = t.to_networkx()
    if not nx.is_tree(tree):
        raise NotATreeError("input graph is not a tree")

    colors = [0] * t.n
    colors[0] = BLUE
    for parent, child in nx.bfs_edges(tree, 0):
        seen = [colors[u] for u in t.adjacency[parent] if colors[u]]
        colors[child] = RED if seen.count(RED) < seen.count(BLUE) else BLUE

    return Coloring(tuple(colors), 2)


def extend_path_to_cnbc(p):
    """
    Hang pendant vertices off a 2-colored path so that every closed
    neighborhood of the result is exactly balanced. The path keeps its vertex
    numbers; new vertices follow in path order.

    Leaves always take the color opposite their host, and an end vertex
    colored like its path neighbor gets two of them. An interior vertex whose
    two path neighbors both have the other color instead gets a pendant vertex
    of its own color carrying two leaves of the other color, so the result is
    a caterpillar only when that case does not occur.

    """
    if p.k != 2:
        raise GraphInputError(f"path must be 2-colored, got k={p.k}")
    order = _path_order(p.graph)
    colors = list(p.coloring.colors)

    added = []

    def attach(host, color):
        added.append((host, color))
        return p.n + len(added) - 1

    if len(order) == 1:
        attach(order[0], _opposite(colors[order[0]]))
        order = []

    for j, v in enumerate(order):
        c = colors[v]
        if j == 0 or j == len(order) - 1:
            neighbor = order[1] if j == 0 else order[-2]
            if colors[neighbor] == c:
                attach(v, _opposite(c))
                attach(v, _opposite(c))
            continue

        before, after = colors[order[j - 1]], colors[order[j + 1]]
        if before == after == c:
            for _ in range(3):
                attach(v, _opposite(c))
        elif before == after:
            middle = attach(v, c)
            attach(middle, _opposite(c))
            attach(middle, _opposite(c))
        else:
            attach(v, _opposite(c))

    edges = p.graph.edges()
    edges += [(host, p.n + i) for i, (host, _) in enumerate(added)]
    colors += [color for _, color in added]
    graph = Graph.from_edges(p.n + len(added), edges)
    return ColoredGraph(graph, Coloring(tuple(colors), 2))


def _report(source, witnesses, reasons):
    verdicts = tuple(
        ClassVerdict(
            graph_class,
            graph_class in witnesses,
            witnesses.get(graph_class),
            None if graph_class in witnesses else reasons.get(graph_class),
        )
        for graph_class in GraphClass
    )
    return ClassReport(verdicts, source=source)


def _coloring(is_red):
    return Coloring(tuple(RED if red else BLUE for red in is_red), 2)


def _opposite(c):
    return BLUE if c == RED else RED


def _half(p):
    return (p + 1) // 2


def _balanced_reds(spec):
    """
    Reds per part: half of each part, rounding up, with the singletons split
    as evenly as their number allows.

    """
    reds = [_half(p) for p in spec.parts]
    singletons = [i for i, p in enumerate(spec.parts) if p == 1]
    for rank, i in enumerate(singletons):
        reds[i] = 1 if rank < _half(len(singletons)) else 0
    return reds


def _multipartite_coloring(spec, reds):
    """Color the first reds[i] vertices of part i red and the rest blue."""
    is_red = []
    for p, r in zip(spec.parts, reds):
        is_red.extend([True] * r + [False] * (p - r))
    return _coloring(is_red)


def _paired_reds(parts, odd):
    """
    Even parts split evenly; odd parts alternate between one extra red and one
    extra blue, so a leftover odd part is red-heavy.

    """
    reds = [p // 2 for p in parts]
    for rank, i in enumerate(odd):
        if rank % 2 == 0:
            reds[i] += 1
    return reds


def _sbv_coloring(spec):
    """
    Every odd part of size at least 3 gets one extra red; the singletons then
    make up the difference so that red outnumbers blue by exactly one.

    """
    reds = [p // 2 for p in spec.parts]
    singletons = [i for i, p in enumerate(spec.parts) if p == 1]
    for i, p in enumerate(spec.parts):
        if p % 2 and p >= 3:
            reds[i] += 1

    red_singletons = (spec.m1 + 1 - spec.h) // 2 if spec.n % 2 else spec.m1 // 2
    for i in singletons[:red_singletons]:
        reds[i] = 1
    return _multipartite_coloring(spec, reds)


def _csb_coloring(spec, single_part, all_singletons):
    parts = spec.parts
    n = spec.n

    if single_part or all_singletons:
        return _multipartite_coloring(spec, _balanced_reds(spec))

    if n % 2 == 0:
        if spec.h:
            return None
        return _multipartite_coloring(spec, _balanced_reds(spec))

    singletons = [i for i, p in enumerate(parts) if p == 1]
    even_sizes = {p for p in parts if p % 2 == 0}

    if even_sizes - {2} or spec.m1 < spec.h + 2 * spec.m2 - 1:
        return None

    # Parts of size 2 are entirely red, larger odd parts have one extra red.
    reds = [p if p == 2 else (p + 1) // 2 for p in parts]
    if spec.h == 0:
        blue = 2 * spec.m2 - 1
        red_singletons = (spec.m1 - blue) // 2
    else:
        red_singletons = (spec.m1 - (spec.h - 1) - 2 * spec.m2) // 2
    for rank, i in enumerate(singletons):
        reds[i] = 1 if rank < red_singletons else 0
    return _multipartite_coloring(spec, reds)


def _path_order(g):
    """The vertices of a path graph from one end to the other."""
    require_vertices(g)
    degrees = g.degrees()
    if g.edge_count() != g.n - 1 or max(degrees) > 2:
        raise GraphInputError("input graph is not a path")
    if g.n > 1 and not nx.is_connected(g.to_networkx()):
        raise GraphInputError("input graph is not a path")

    start = min(v for v in range(g.n) if degrees[v] <= 1)
    order = [start]
    previous = None
    while len(order) < g.n:
        current = order[-1]
        step = next(u for u in g.adjacency[current] if u != previous)
        previous = current
        order.append(step)
    return order
