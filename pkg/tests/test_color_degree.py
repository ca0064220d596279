import itertools
import random

import networkx as nx
import pytest

from colorbalance import color_degree, graph
from colorbalance.color_degree import ColorDegreeMatrix, compute_cdm
from colorbalance.graph import BLUE, RED, ColoredGraph, Coloring, Graph


def random_colored_graph(rng, n, k):
    g = Graph.from_networkx(nx.gnp_random_graph(n, rng.random(), seed=rng))
    return ColoredGraph(g, Coloring([rng.randint(1, k) for _ in range(n)], k))


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(2 ** len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def test_example_matrices(load_cgf):
    g_prime = compute_cdm(load_cgf("house_b"))
    assert g_prime.rows == (
        (1, 1, BLUE),
        (1, 2, RED),
        (1, 1, RED),
        (1, 1, BLUE),
        (1, 2, BLUE),
    )

    g = compute_cdm(load_cgf("house_a"), k=3)
    assert g.rows == (
        (2, 0, 0, BLUE),
        (1, 2, 0, RED),
        (1, 1, 0, BLUE),
        (1, 1, 0, BLUE),
        (1, 2, 0, RED),
    )

    h = compute_cdm(load_cgf("switched_a"))
    assert h.rows == (
        (2, 0, BLUE),
        (0, 3, RED),
        (2, 0, BLUE),
        (2, 0, BLUE),
        (0, 3, RED),
    )


def test_switch_related_graphs_share_a_matrix(load_cgf):
    g_prime = compute_cdm(load_cgf("house_b"))
    h_prime = compute_cdm(load_cgf("switched_b"))
    assert color_degree.cdm_equal(g_prime, h_prime)

    g = compute_cdm(load_cgf("house_a"))
    h = compute_cdm(load_cgf("switched_a"))
    assert not color_degree.cdm_equal(g, h)

    assert color_degree.cdm_equal(
        compute_cdm(load_cgf("cubic12_a")), compute_cdm(load_cgf("cubic12_b"))
    )


def test_prism_and_k4_matrices_differ(load_cgf):
    prism = ColoredGraph(graph.prism(5), Coloring((1, 1, 2, 2, 1, 2, 2, 1, 1, 2), 2))
    other = load_cgf("k4_plus_prism")
    assert not color_degree.cdm_equal(compute_cdm(prism), compute_cdm(other))
    assert not color_degree.cdm_equal_as_multiset(
        compute_cdm(prism), compute_cdm(other)
    )


def test_multiset_comparison_ignores_order():
    a = ColoredGraph(graph.path(3), Coloring((RED, RED, BLUE), 2))
    b = ColoredGraph(graph.path(3), Coloring((BLUE, RED, RED), 2))
    assert not color_degree.cdm_equal(compute_cdm(a), compute_cdm(b))
    assert color_degree.cdm_equal_as_multiset(compute_cdm(a), compute_cdm(b))


def test_palette_permutation_commutes_with_cdm():
    rng = random.Random(7)
    for _ in range(200):
        cg = random_colored_graph(rng, rng.randint(1, 9), 3)
        permutation = rng.sample([1, 2, 3], 3)
        assert compute_cdm(cg.recolor(permutation)) == color_degree.permute_palette(
            compute_cdm(cg), permutation
        )


def test_compute_cdm_rejects_small_palette(load_cgf):
    with pytest.raises(color_degree.MatrixInputError):
        compute_cdm(load_cgf("cubic12_a"), k=2)


def test_matrix_validation():
    with pytest.raises(color_degree.MatrixInputError, match="widths"):
        ColorDegreeMatrix(((1, 1), (1, 1, 1)))
    with pytest.raises(color_degree.MatrixInputError):
        ColorDegreeMatrix(((-1, 1),))


def test_is_bigraphic():
    assert color_degree.is_bigraphic([2, 2], [1, 1, 1, 1])
    assert not color_degree.is_bigraphic([3], [1, 1])
    assert not color_degree.is_bigraphic([2, 0], [1, 0])
    assert color_degree.is_bigraphic([], [])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_realizability_matches_brute_force(n):
    k = 2
    realizable = set()
    for g in all_graphs(n):
        for colors in itertools.product(range(1, k + 1), repeat=n):
            realizable.add(compute_cdm(ColoredGraph(g, Coloring(colors, k))).rows)

    row_choices = list(itertools.product(range(n), range(n), range(1, k + 1)))
    for rows in itertools.product(row_choices, repeat=n):
        m = ColorDegreeMatrix(rows)
        assert color_degree.is_realizable(m) == (m.rows in realizable), rows


def test_realize_reproduces_the_matrix():
    rng = random.Random(2024)
    for _ in range(10_000):
        cg = random_colored_graph(rng, rng.randint(1, 12), rng.randint(1, 4))
        m = compute_cdm(cg)
        assert color_degree.is_realizable(m)
        assert compute_cdm(color_degree.realize(m)) == m


def test_realize_with_an_isolated_vertex_inside_a_color_class():
    m = ColorDegreeMatrix(((1, 1), (0, 1), (1, 1)))
    realized = color_degree.realize(m)
    assert realized.graph.edges() == [(0, 2)]
    assert compute_cdm(realized) == m

    mixed = ColorDegreeMatrix(
        ((0, 0, RED), (1, 0, RED), (0, 0, RED), (1, 1, RED), (1, 0, BLUE))
    )
    assert compute_cdm(color_degree.realize(mixed)) == mixed


def test_realize_example_matrix(load_cgf):
    m = compute_cdm(load_cgf("house_b"))
    realized = color_degree.realize(m)
    assert realized.coloring == load_cgf("house_b").coloring
    assert compute_cdm(realized) == m


def test_realize_refuses_with_the_violated_condition():
    odd = ColorDegreeMatrix(((1, 1), (0, 1)))
    assert "not graphic" in color_degree.realizability_violation(odd)
    with pytest.raises(color_degree.NotRealizableError, match="not graphic"):
        color_degree.realize(odd)

    # Two red vertices each want a blue neighbor but there is only one
    # blue vertex, and it wants just one red neighbor.
    lopsided = ColorDegreeMatrix(((0, 1, RED), (0, 1, RED), (1, 0, BLUE)))
    assert "bigraphic" in color_degree.realizability_violation(lopsided)

    bad_id = ColorDegreeMatrix(((0, 0, 3),))
    assert "outside" in color_degree.realizability_violation(bad_id)
