"""
Color 2-switches: validation, application, enumeration, and a constructive
procedure that turns one colored graph into any other colored graph with the
same color degree matrix.

A switch (u, x, w, y) removes the edges ux and wy and adds uy and wx. It is a
color 2-switch when u and w share a color and x and y share a color, which is
exactly what keeps every vertex's color degrees unchanged.

"""

from dataclasses import dataclass
import itertools

from .color_degree import cdm_equal, compute_cdm
from .graph import ColoredGraph, Coloring, GraphInputError, disjoint_union


class SwitchError(Exception):
    pass


class NotCoRealizableError(Exception):
    pass


@dataclass(frozen=True, order=True)
class TwoSwitch:
    u: int
    x: int
    w: int
    y: int

    def removed(self):
        return ((self.u, self.x), (self.w, self.y))

    def added(self):
        return ((self.u, self.y), (self.w, self.x))

    def inverse(self):
        """The switch that undoes this one."""
        return TwoSwitch(self.u, self.y, self.w, self.x)

    def exchange_key(self):
        """Identifies the four-edge exchange, independent of how it is written."""
        removed = frozenset(frozenset(e) for e in self.removed())
        added = frozenset(frozenset(e) for e in self.added())
        return removed, added

    def vertices(self):
        return (self.u, self.x, self.w, self.y)


def switch_violation(cg, s):
    """Return the first applicability condition `s` violates on `cg`, or None."""
    for v in s.vertices():
        if not 0 <= v < cg.n:
            return f"vertex {v} out of range for n={cg.n}"
    if len(set(s.vertices())) != 4:
        return "the four vertices are not distinct"
    if cg.color(s.u) != cg.color(s.w):
        return f"color mismatch between u={s.u} and w={s.w}"
    if cg.color(s.x) != cg.color(s.y):
        return f"color mismatch between x={s.x} and y={s.y}"

    g = cg.graph
    for a, b in s.removed():
        if not g.has_edge(a, b):
            return f"edge {a}-{b} is not present"
    for a, b in s.added():
        if g.has_edge(a, b):
            return f"edge {a}-{b} is already present"

    return None


def is_applicable(cg, s):
    return switch_violation(cg, s) is None


def apply_switch(cg, s):
    violation = switch_violation(cg, s)
    if violation is not None:
        raise SwitchError(f"switch {s.vertices()} is not applicable: {violation}")
    return ColoredGraph(cg.graph.replace_edges(s.removed(), s.added()), cg.coloring)


def replay(cg, sequence):
    """Apply each switch in turn, returning every graph including the start."""
    states = [cg]
    for s in sequence:
        states.append(apply_switch(states[-1], s))
    return states


def enumerate_applicable_switches(cg):
    """
    Every applicable color 2-switch on `cg`, one per distinct edge exchange.

    (u, x, w, y), (w, y, u, x), (x, u, y, w) and (y, w, x, u) all perform the
    same exchange; the lexicographically least of them is reported.

    """
    g = cg.graph
    oriented = [(a, b) for a, b in g.edges()] + [(b, a) for a, b in g.edges()]

    found = {}
    for (u, x), (w, y) in itertools.permutations(oriented, 2):
        s = TwoSwitch(u, x, w, y)
        if not is_applicable(cg, s):
            continue
        key = s.exchange_key()
        if key not in found or s < found[key]:
            found[key] = s

    return sorted(found.values())


def find_switch_sequence(g, h):
    """
    Return a list of color 2-switches taking g to h.

    Both graphs are brought to a common canonical form one vertex at a time.
    At each step a pivot vertex v of maximum pivot-color degree is chosen and,
    for every color class, its neighbors there are moved onto the vertices of
    that class with the largest pivot-color degree. v is then frozen and the
    step repeats on the remaining vertices. The answer is g's switches
    followed by h's switches inverted in reverse order, with any common
    tail dropped: where both runs end in the same switch they pass through
    the same state and the two halves cancel.

    """
    if g.n != h.n:
        raise GraphInputError(f"graphs have {g.n} and {h.n} vertices")
    if g.coloring != h.coloring:
        raise GraphInputError("the two graphs are not colored identically")
    if not cdm_equal(compute_cdm(g), compute_cdm(h)):
        raise NotCoRealizableError("not co-realizable: color degree matrices differ")

    colors = g.coloring.colors
    g_adjacency = [set(a) for a in g.graph.adjacency]
    h_adjacency = [set(a) for a in h.graph.adjacency]
    alive = set(range(g.n))

    forward = []
    backward = []

    while alive:
        pivot_color = min(colors[v] for v in alive)

        def pivot_degree(v):
            return sum(
                1 for u in g_adjacency[v] if u in alive and colors[u] == pivot_color
            )

        v = min(
            (u for u in alive if colors[u] == pivot_color),
            key=lambda u: (-pivot_degree(u), u),
        )

        targets = _target_neighborhood(v, g_adjacency, alive, colors, pivot_degree)
        forward.extend(
            _canonicalize(v, targets, g_adjacency, alive, colors, pivot_color)
        )
        backward.extend(
            _canonicalize(v, targets, h_adjacency, alive, colors, pivot_color)
        )
        alive.remove(v)

    while forward and backward and forward[-1] == backward[-1]:
        forward.pop()
        backward.pop()

    return forward + [s.inverse() for s in reversed(backward)]


def _target_neighborhood(v, adjacency, alive, colors, pivot_degree):
    """
    For each color class, the vertices v's neighbors in that class should be:
    the ones with the largest pivot-color degree, ties to the smallest index.

    """
    targets = set()
    by_color = {}
    for u in sorted(alive - {v}):
        by_color.setdefault(colors[u], []).append(u)

    for c, members in by_color.items():
        wanted = sum(1 for u in adjacency[v] if u in alive and colors[u] == c)
        members.sort(key=lambda u: (-pivot_degree(u), u))
        targets.update(members[:wanted])

    return targets


def _canonicalize(v, targets, adjacency, alive, colors, pivot_color):
    """
    Switch edges until v's live neighborhood equals `targets`, mutating
    `adjacency` in place and returning the switches performed.

    """
    switches = []
    while True:
        neighbors = {u for u in adjacency[v] if u in alive}
        if neighbors == targets:
            return switches

        missing = min(targets - neighbors)
        c = colors[missing]
        surplus = min(u for u in neighbors - targets if colors[u] == c)

        # Some pivot-colored neighbor of `missing` is not adjacent to `surplus`,
        # since `missing` has at least as many pivot-colored neighbors and v is
        # one of `surplus`'s but not one of `missing`'s.
        partner = next(
            y
            for y in sorted(adjacency[missing])
            if y in alive
            and colors[y] == pivot_color
            and y not in (v, surplus)
            and y not in adjacency[surplus]
        )

        s = TwoSwitch(v, surplus, partner, missing)
        for a, b in s.removed():
            adjacency[a].discard(b)
            adjacency[b].discard(a)
        for a, b in s.added():
            adjacency[a].add(b)
            adjacency[b].add(a)
        switches.append(s)


def venn_join(a, b):
    """
    Join two colored graphs into one connected graph without changing any
    vertex's color degrees: take the disjoint union and perform the first
    color 2-switch that trades one edge of `a` and one edge of `b` for two
    edges between them.

    Returns the joined graph and the switch used.

    """
    if a.k != b.k:
        raise GraphInputError(f"palettes differ: {a.k} and {b.k}")

    union = ColoredGraph(
        disjoint_union(a.graph, b.graph),
        Coloring(a.coloring.colors + b.coloring.colors, a.k),
    )

    a_edges = a.graph.edges()
    b_edges = [(u + a.n, v + a.n) for u, v in b.graph.edges()]
    for (u, x), (w, y) in itertools.product(a_edges, b_edges):
        for s in (TwoSwitch(u, x, w, y), TwoSwitch(u, x, y, w)):
            if is_applicable(union, s):
                return apply_switch(union, s), s

    raise SwitchError("no color 2-switch joins the two graphs")
