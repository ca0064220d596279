import itertools
import random

import networkx as nx
import pytest

from colorbalance import balance, graph, reduction
from colorbalance.graph import BLUE, RED, ColoredGraph, Coloring, GraphInputError


def random_two_colored(rng, n):
    g = graph.Graph.from_networkx(nx.gnp_random_graph(n, rng.random(), seed=rng))
    return ColoredGraph(g, Coloring([rng.choice((RED, BLUE)) for _ in range(n)], 2))


def random_multipartite(rng):
    parts = [rng.randint(1, 4) for _ in range(rng.randint(1, 4))]
    g = graph.complete_multipartite(parts)
    return ColoredGraph(g, Coloring([rng.choice((RED, BLUE)) for _ in range(g.n)], 2))


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def as_networkx(cg):
    g = cg.graph.to_networkx()
    nx.set_node_attributes(g, dict(enumerate(cg.coloring.colors)), "color")
    return g


def same_color(a, b):
    return a["color"] == b["color"]


def test_complete_tripartite_example(load_cgf):
    cg = load_cgf("k333_reducible")
    assert reduction.eligible_pairs(cg) == [
        (0, 2),
        (1, 2),
        (3, 5),
        (4, 5),
        (6, 7),
        (6, 8),
    ]

    trace = reduction.red_blue_reduce(cg)
    assert trace.removed_pairs == ((0, 2), (3, 5), (6, 7))
    assert trace.index_map == (1, 4, 8)
    assert trace.result.graph == graph.complete(3)
    assert trace.result.coloring.colors == (RED, RED, BLUE)


def test_monochromatic_graph_is_unchanged():
    cg = ColoredGraph(graph.petersen(), Coloring((RED,) * 10, 2))
    trace = reduction.red_blue_reduce(cg)
    assert trace.removed_pairs == ()
    assert trace.result == cg
    assert trace.index_map == tuple(range(10))


def test_balanced_bipartite_reduces_to_nothing():
    cg = ColoredGraph(graph.complete_bipartite(2, 2), Coloring((1, 2, 1, 2), 2))
    trace = reduction.red_blue_reduce(cg)
    assert trace.removed_pairs == ((0, 1), (2, 3))
    assert trace.result.n == 0
    assert trace.index_map == ()


def test_result_does_not_depend_on_removal_order():
    rng = random.Random(29)
    for _ in range(1000):
        cg = random_two_colored(rng, rng.randint(1, 9))
        first = reduction.red_blue_reduce(cg)
        other = reduction.red_blue_reduce(cg, choose=rng.choice)
        assert nx.is_isomorphic(
            as_networkx(first.result), as_networkx(other.result), node_match=same_color
        )


def test_removal_keeps_every_imbalance():
    rng = random.Random(31)
    for _ in range(300):
        cg = random_two_colored(rng, rng.randint(1, 10))
        before = balance.imbalance(cg)
        trace = reduction.red_blue_reduce(cg, choose=rng.choice)
        after = balance.imbalance(trace.result)
        for i, v in enumerate(trace.index_map):
            assert after.open[i] == before.open[v]
            assert after.closed[i] == before.closed[v]


def test_replayed_states_keep_local_balance():
    rng = random.Random(37)
    for _ in range(200):
        cg = random_two_colored(rng, rng.randint(2, 9))
        trace = reduction.red_blue_reduce(cg)
        states = reduction.replay_removals(cg, trace.removed_pairs)
        assert len(states) == len(trace.removed_pairs) + 1
        assert states[-1] == trace.result
        held = [balance.is_balanced(s, 1, "local") for s in states]
        assert all(b for a, b in zip(held, held[1:]) if a)


def test_observations_hold_on_multipartite_graphs():
    rng = random.Random(41)
    for _ in range(300):
        report = reduction.check_reduction_observations(random_multipartite(rng))
        assert report.all_hold(), report


def test_observations_on_a_tripartite_graph_with_an_even_part():
    colors = (RED, RED, BLUE, RED, BLUE, BLUE, RED, BLUE)
    cg = ColoredGraph(graph.complete_multipartite((3, 3, 2)), Coloring(colors, 2))
    assert not balance.is_balanced(cg, 1, "closed")

    report = reduction.check_reduction_observations(cg)
    assert report.all_hold()
    assert report.trace.index_map == (1, 5)
    assert report.trace.result.graph == graph.complete(2)
    assert report.trace.result.coloring.colors == (RED, BLUE)


def test_each_part_keeps_only_its_surplus_color():
    cg = ColoredGraph(
        graph.complete_multipartite((1, 4, 2)),
        Coloring((RED, RED, RED, RED, BLUE, RED, BLUE), 2),
    )
    trace = reduction.red_blue_reduce(cg)
    assert trace.removed_pairs == ((1, 4), (5, 6))
    assert trace.index_map == (0, 2, 3)
    assert trace.result.graph == graph.complete_bipartite(1, 2)
    assert trace.result.coloring.colors == (RED, RED, RED)


def test_choose_must_pick_an_eligible_pair(load_cgf):
    cg = load_cgf("k333_reducible")
    with pytest.raises(GraphInputError, match="not an eligible"):
        reduction.red_blue_reduce(cg, choose=lambda pairs: (0, 1))
    with pytest.raises(GraphInputError, match="not an eligible"):
        reduction.replay_removals(cg, [(0, 2), (1, 2)])


def test_reduction_needs_two_colors(load_cgf):
    with pytest.raises(GraphInputError, match="2-coloring"):
        reduction.red_blue_reduce(load_cgf("petersen"))
    with pytest.raises(GraphInputError, match="2-coloring"):
        reduction.eligible_pairs(load_cgf("cubic12_a"))


def test_blue_singletons_of_red_heavy_semibalanced_reductions():
    checked = 0
    for n in range(1, 10):
        for parts in partitions(n):
            g = graph.complete_multipartite(parts)
            part_of = graph.complete_multipartite_parts(g)
            for colors in itertools.product((RED, BLUE), repeat=n):
                if colors.count(RED) <= colors.count(BLUE):
                    continue
                cg = ColoredGraph(g, Coloring(colors, 2))
                if not balance.is_balanced(cg, 1, "local"):
                    continue

                surviving = set(reduction.red_blue_reduce(cg).index_map)
                for part in part_of:
                    kept = [v for v in part if v in surviving]
                    if len(kept) == 1 and colors[kept[0]] == BLUE:
                        assert len(part) == 1, (parts, colors)
                checked += 1
    assert checked > 0
