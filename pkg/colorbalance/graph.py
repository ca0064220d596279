"""
Simple undirected graphs, vertex colorings, and the named graph families.

Vertices are the integers 0..n-1 and colors are the integers 1..k. Every
value in this module is immutable once constructed, so graphs and colorings
can be shared freely between threads and worker processes.

The family constructors fix their vertex numbering so that worked
examples can be transcribed by index:

- path(n), cycle(n): vertices in path/cycle order.
- wheel(n): rim 0..n-1 in cycle order, hub last (vertex n).
- complete_multipartite(parts): vertices grouped by part, in input order.
- petersen(): outer 5-cycle 0..4, spokes i - i+5, inner pentagram on 5..9.
- larson(k, lam): the part X first, then every lam-subset of X in
  lexicographic order.
- prism(n): outer cycle 0..n-1, inner cycle n..2n-1, spokes i - i+n.

"""

from dataclasses import dataclass, field
import itertools

import networkx as nx


RED = 1
BLUE = 2
GREEN = 3


class GraphInputError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph in canonical sorted-adjacency form."""

    adjacency: tuple
    _neighbor_sets: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adjacency = tuple(tuple(sorted(neighbors)) for neighbors in self.adjacency)
        n = len(adjacency)

        for v, neighbors in enumerate(adjacency):
            for u in neighbors:
                if not 0 <= u < n:
                    raise GraphInputError(f"vertex {v} has out-of-range neighbor {u}")
                if u == v:
                    raise GraphInputError(f"self-loop at vertex {v}")
            if len(set(neighbors)) != len(neighbors):
                raise GraphInputError(f"parallel edge at vertex {v}")

        neighbor_sets = tuple(frozenset(neighbors) for neighbors in adjacency)
        for v, neighbors in enumerate(adjacency):
            for u in neighbors:
                if v not in neighbor_sets[u]:
                    raise GraphInputError(f"adjacency is not symmetric at {u}, {v}")

        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "_neighbor_sets", neighbor_sets)

    @classmethod
    def from_edges(cls, n, edges):
        if n < 0:
            raise GraphInputError(f"vertex count must be nonnegative, got {n}")

        adjacency = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            if v in adjacency[u]:
                raise GraphInputError(f"duplicate edge ({u}, {v})")
            adjacency[u].add(v)
            adjacency[v].add(u)

        return cls(tuple(tuple(a) for a in adjacency))

    @classmethod
    def from_networkx(cls, g, order=None):
        """
        Convert a networkx graph, numbering its nodes by their position in
        `order` (defaults to the sorted node list).

        """
        order = list(order) if order is not None else sorted(g.nodes)
        if len(order) != g.number_of_nodes() or set(order) != set(g.nodes):
            raise GraphInputError("order must list every node exactly once")
        index = {node: i for i, node in enumerate(order)}
        return cls.from_edges(len(order), ((index[a], index[b]) for a, b in g.edges))

    @property
    def n(self):
        return len(self.adjacency)

    def edges(self):
        """All edges as (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def edge_count(self):
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v):
        self._check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self):
        return [len(a) for a in self.adjacency]

    def has_edge(self, u, v):
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._neighbor_sets[u]

    def neighbor_set(self, v):
        self._check_vertex(v)
        return self._neighbor_sets[v]

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def replace_edges(self, removed, added):
        """Return a new graph with `removed` edges deleted and `added` inserted."""
        edges = set(self.edges())
        for u, v in removed:
            edges.discard((min(u, v), max(u, v)))
        for u, v in added:
            edges.add((min(u, v), max(u, v)))
        return Graph.from_edges(self.n, sorted(edges))

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} out of range for n={self.n}")


@dataclass(frozen=True)
class Coloring:
    """A total assignment of the colors 1..k to the vertices 0..n-1."""

    colors: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.k < 1:
            raise GraphInputError(f"palette size must be at least 1, got {self.k}")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise GraphInputError(
                    f"color {c} of vertex {v} is outside the palette 1..{self.k}"
                )

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]

    def color_class(self, c):
        return [v for v, color in enumerate(self.colors) if color == c]

    def permute(self, permutation):
        """
        Apply a palette permutation given as a sequence: color c becomes
        permutation[c - 1].

        """
        permutation = tuple(permutation)
        if sorted(permutation) != list(range(1, self.k + 1)):
            raise GraphInputError(f"{permutation} is not a permutation of 1..{self.k}")
        return Coloring(tuple(permutation[c - 1] for c in self.colors), self.k)


@dataclass(frozen=True)
class ColoredGraph:
    graph: Graph
    coloring: Coloring

    def __post_init__(self):
        if len(self.coloring) != self.graph.n:
            raise GraphInputError(
                f"coloring has {len(self.coloring)} entries "
                f"but the graph has {self.graph.n} vertices"
            )

    @property
    def n(self):
        return self.graph.n

    @property
    def k(self):
        return self.coloring.k

    def color(self, v):
        return self.coloring.colors[v]

    def recolor(self, permutation):
        return ColoredGraph(self.graph, self.coloring.permute(permutation))

    def red_count(self):
        return self.coloring.colors.count(RED)

    def blue_count(self):
        return self.coloring.colors.count(BLUE)


@dataclass(frozen=True)
class MultipartiteSpec:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise GraphInputError("a multipartite graph needs at least one part")
        if any(p < 1 for p in self.parts):
            raise GraphInputError(f"part sizes must be positive: {self.parts}")

    @property
    def n(self):
        return sum(self.parts)

    @property
    def m1(self):
        """Number of singleton parts."""
        return sum(1 for p in self.parts if p == 1)

    @property
    def m2(self):
        return sum(1 for p in self.parts if p == 2)

    @property
    def h(self):
        """Number of odd parts with at least three vertices."""
        return sum(1 for p in self.parts if p % 2 == 1 and p >= 3)

    def part_ranges(self):
        """The vertex range of each part, in input order."""
        start = 0
        ranges = []
        for p in self.parts:
            ranges.append(range(start, start + p))
            start += p
        return ranges


def open_neighborhood(g, v):
    g._check_vertex(v)
    return list(g.adjacency[v])


def closed_neighborhood(g, v):
    g._check_vertex(v)
    return sorted(g.adjacency[v] + (v,))


def max_degree(g):
    if g.n == 0:
        raise GraphInputError("the empty graph has no maximum degree")
    return max(g.degrees())


def require_vertices(g):
    if g.n == 0:
        raise GraphInputError("operation needs a graph with at least one vertex")


def disjoint_union(g, h):
    """The disjoint union with h's vertices shifted up by g.n."""
    shifted = ((u + g.n, v + g.n) for u, v in h.edges())
    return Graph.from_edges(g.n + h.n, itertools.chain(g.edges(), shifted))


def induced_subgraph(g, keep):
    """
    Return the subgraph induced on `keep`, compacted to 0..len(keep)-1 in
    increasing original index, together with the map from new index to
    original index.

    """
    index_map = tuple(sorted(set(keep)))
    for v in index_map:
        g._check_vertex(v)
    position = {v: i for i, v in enumerate(index_map)}
    edges = [
        (position[u], position[v])
        for u, v in g.edges()
        if u in position and v in position
    ]
    return Graph.from_edges(len(index_map), edges), index_map


def complete_multipartite_parts(g):
    """
    Recover the parts of a complete multipartite graph, ordered by their
    smallest vertex.

    A graph is complete multipartite exactly when non-adjacency is an
    equivalence relation, so the parts are the classes of vertices sharing an
    open neighborhood, and each class must be adjacent to everything else.

    """
    require_vertices(g)
    classes = {}
    for v in range(g.n):
        classes.setdefault(g.neighbor_set(v), []).append(v)

    everything = frozenset(range(g.n))
    parts = []
    for neighbors, members in classes.items():
        if neighbors != everything - frozenset(members):
            raise GraphInputError("graph is not complete multipartite")
        parts.append(tuple(members))

    return sorted(parts)


def path(n):
    _require_at_least("path", n, 1)
    return Graph.from_networkx(nx.path_graph(n))


def cycle(n):
    _require_at_least("cycle", n, 3)
    return Graph.from_networkx(nx.cycle_graph(n))


def wheel(n):
    _require_at_least("wheel", n, 3)
    # networkx puts the hub at node 0 and the rim at 1..n.
    rim = list(range(1, n + 1))
    return Graph.from_networkx(nx.wheel_graph(n + 1), order=rim + [0])


def complete(n):
    _require_at_least("complete", n, 1)
    return Graph.from_networkx(nx.complete_graph(n))


def complete_bipartite(a, b):
    _require_at_least("complete_bipartite", a, 1)
    _require_at_least("complete_bipartite", b, 1)
    return Graph.from_networkx(nx.complete_bipartite_graph(a, b))


def complete_multipartite(parts):
    spec = parts if isinstance(parts, MultipartiteSpec) else MultipartiteSpec(parts)
    return Graph.from_networkx(nx.complete_multipartite_graph(*spec.parts))


def petersen():
    return Graph.from_networkx(nx.petersen_graph())


def prism(n):
    _require_at_least("prism", n, 3)
    return Graph.from_networkx(nx.circular_ladder_graph(n))


def larson(k, lam):
    """
    Bipartite graph on X = {0, ..., (lam-1)k} and Y = all lam-subsets of X,
    with x ~ S whenever x is in S.

    """
    _require_at_least("larson", k, 2)
    _require_at_least("larson", lam, 0)

    x_size = max(0, (lam - 1) * k + 1)
    subsets = list(itertools.combinations(range(x_size), lam))
    edges = [(x, x_size + i) for i, subset in enumerate(subsets) for x in subset]
    return Graph.from_edges(x_size + len(subsets), edges)


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "wheel": (wheel, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "complete_multipartite": (complete_multipartite, None),
    "petersen": (petersen, 0),
    "prism": (prism, 1),
    "larson": (larson, 2),
}


def make_family(name, *params):
    """
    Build the named family member, e.g. make_family("wheel", 7) or
    make_family("complete_multipartite", 3, 3, 3).

    """
    try:
        constructor, arity = FAMILIES[name]
    except KeyError:
        raise GraphInputError(
            f"unknown family {name!r}, expected one of {', '.join(FAMILIES)}"
        )

    if arity is None:
        return constructor(params)
    if len(params) != arity:
        raise GraphInputError(
            f"family {name!r} takes {arity} parameter(s), got {len(params)}"
        )
    return constructor(*params)


def _require_at_least(family, value, minimum):
    if value < minimum:
        raise GraphInputError(f"{family} needs a parameter >= {minimum}, got {value}")
