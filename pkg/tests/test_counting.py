from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from densitylab.constructions import (
    build_clique_plus_isolated,
    build_colored_case1,
    build_Kst_pattern,
    build_SL,
    build_spider,
)
from densitylab.counting import (
    M,
    OrderedPattern,
    colored_density,
    count_colored_copies,
    count_induced,
    count_left_stars,
    count_M,
    count_ordered_pattern,
    count_stars,
    left_star,
    monochromatic_clique,
    ordered_density,
    star_density,
    two_colored,
)
from densitylab.graph_core import BLUE, GREEN, RED, ColoredCompleteGraph, LabeledGraph, OrderedGraph
from densitylab.oracle import enumerate_ordered_graphs, random_colored_host, random_ordered_graph

from . import brute
from .test_graph_core import ordered_graphs


def all_graphs(n):
    for m in range(comb(n, 2) + 1):
        yield from enumerate_ordered_graphs(n, m)


PATH3 = OrderedGraph.from_edges(3, [(1, 2), (2, 3)])


# --- stars ------------------------------------------------------------------


def test_count_stars_examples():
    assert count_stars(LabeledGraph.complete(4), 2) == 12
    assert count_stars(PATH3, 2) == 1
    assert count_stars(LabeledGraph.complete(3), 5) == 0


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_count_stars_matches_subset_enumeration(seed, k):
    G = random_ordered_graph(8, 0.5, seed)
    assert count_stars(G, k) == brute.stars(G, k)


def test_star_density_examples():
    for n in range(2, 8):
        for k in range(1, n):
            assert star_density(LabeledGraph.complete(n), k) == 1
    assert star_density(LabeledGraph.empty(6), 2) == 0
    with pytest.raises(ValueError):
        star_density(LabeledGraph.complete(3), 3)


def test_star_density_clique_plus_isolated():
    # clique on floor(0.7 n) vertices: limit density gamma^((k+1)/2) = 0.49^2
    G = build_clique_plus_isolated(2000, 0.49)
    assert abs(float(star_density(G, 3)) - 0.49**2) <= 0.01


# --- ordered patterns --------------------------------------------------------


def test_count_ordered_pattern_examples(backend):
    assert count_ordered_pattern(OrderedGraph.complete(3), M) == 1
    assert count_ordered_pattern(build_SL(6, 5), left_star(5)) == 1
    single = OrderedPattern(1, [])
    for n in (1, 4, 9):
        assert count_ordered_pattern(random_ordered_graph(n, 0.5, n), single) == n
    assert count_ordered_pattern(OrderedGraph.complete(2), M) == 0


def test_count_ordered_pattern_is_non_induced(backend):
    # the ordered triangle contains M even though 13 is an extra edge
    assert count_ordered_pattern(OrderedGraph.complete(3), M) == 1
    assert count_ordered_pattern(OrderedGraph.from_edges(3, [(1, 3)]), M) == 0


@pytest.mark.parametrize("seed", range(4))
def test_count_ordered_pattern_brute(backend, seed):
    G = random_ordered_graph(9, 0.6, seed)
    for F in [M, left_star(2), left_star(3), OrderedPattern(4, [(1, 3), (2, 4), (3, 4)])]:
        assert count_ordered_pattern(G, F) == brute.ordered(G, F.s, F.edges)


def test_left_star_examples():
    assert count_left_stars(build_SL(4, 3), 2) == 3
    from densitylab.constructions import build_SR

    assert count_left_stars(build_SR(4, 3), 2) == 0
    assert count_left_stars(OrderedGraph.empty(5), 1) == 0


def test_count_M_examples():
    assert count_M(PATH3) == 1
    assert count_M(OrderedGraph.complete(4)) == 4
    assert brute.ordered(OrderedGraph.complete(4), 3, M.edges) == 4


def test_count_M_matches_triple_enumeration_on_spider(backend):
    G = build_spider(500, 0.75)
    # frozen from the enumeration kernel and checked equal to the degree formula
    assert count_M(G) == 14260500
    assert count_ordered_pattern(G, M) == 14260500


def test_kernel_equivalences_exhaustive_small(backend):
    for n in range(1, 6):
        for G in all_graphs(n):
            assert count_M(G) == count_ordered_pattern(G, M)
            for k in (1, 2, 3):
                assert count_left_stars(G, k) == count_ordered_pattern(G, left_star(k))


@given(ordered_graphs(max_n=8), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_monotone_under_edge_addition(G, pick):
    missing = [(u, v) for u, v in combinations(range(1, G.n + 1), 2) if not G.has_edge(u, v)]
    if not missing:
        return
    H = OrderedGraph.from_edges(G.n, list(G.edges()) + [missing[pick % len(missing)]])
    for k in (1, 2, 3):
        assert count_stars(H, k) >= count_stars(G, k)
        assert count_left_stars(H, k) >= count_left_stars(G, k)


def test_ordered_density():
    for n in range(3, 8):
        assert ordered_density(OrderedGraph.complete(n), M) == 1
        assert ordered_density(OrderedGraph.empty(n), M) == 0
    with pytest.raises(ValueError):
        ordered_density(OrderedGraph.complete(2), M)


def test_ordered_density_spider_limit():
    d = ordered_density(build_spider(2000, 0.75), M)
    assert abs(float(d) - 11 / 16) <= 0.01


@given(ordered_graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_ordered_density_in_unit_interval(G):
    for F in (M, left_star(2), OrderedPattern(2, [(1, 2)])):
        if G.n >= F.s:
            d = ordered_density(G, F)
            assert isinstance(d, Fraction) and 0 <= d <= 1


# --- colored copies ----------------------------------------------------------


def test_colored_copies_examples():
    F = build_Kst_pattern(2, 2)
    assert count_colored_copies(F, F) == 1
    assert count_colored_copies(ColoredCompleteGraph.monochromatic(6, RED), F) == 0
    for s, t in [(2, 3), (3, 3), (3, 4)]:
        P = build_Kst_pattern(s, t)
        assert count_colored_copies(P, P) == 1
        assert count_colored_copies(P, P, method="enumerate") == 1


def test_colored_copies_case1_n60(backend):
    G = build_colored_case1(60, 0.25, 0.25)
    expected = comb(30, 2) * comb(30, 2)
    F = build_Kst_pattern(2, 2)
    assert count_colored_copies(G, F) == expected
    assert count_colored_copies(G, F, method="enumerate") == expected


def test_colored_density_examples():
    F = build_Kst_pattern(2, 2)
    assert colored_density(F, F) == 1
    assert colored_density(ColoredCompleteGraph.monochromatic(7, GREEN), F) == 0


def test_colored_density_case1_n800():
    d = colored_density(build_colored_case1(800, 0.25, 0.25), build_Kst_pattern(2, 2))
    assert abs(float(d) - 3 / 8) <= 0.02


def _random_pattern(s, seed):
    return random_colored_host(s, 3, seed)


@pytest.mark.parametrize("seed", range(6))
def test_colored_kernels_against_brute(backend, seed):
    rng = np.random.default_rng(seed)
    # biased colorings give nonzero counts more often
    p = rng.dirichlet([1, 1, 1])
    upper = np.triu(rng.choice([1, 2, 3], size=(9, 9), p=p), 1)
    G = ColoredCompleteGraph(9, 3, upper + upper.T)
    patterns = [
        build_Kst_pattern(2, 2),
        build_Kst_pattern(2, 3),
        monochromatic_clique(3, BLUE),
        _random_pattern(4, seed),
        _random_pattern(3, seed + 100),
    ]
    for F in patterns:
        want = brute.colored(G, F)
        assert count_colored_copies(G, F, method="enumerate") == want
        assert count_colored_copies(G, F) == want


def test_colored_density_in_unit_interval():
    F = build_Kst_pattern(2, 2)
    for seed in range(20):
        d = colored_density(random_colored_host(10, 3, seed), F)
        assert 0 <= d <= 1


# --- induced -----------------------------------------------------------------


def test_count_induced_examples():
    K2 = LabeledGraph.complete(2)
    for seed in range(3):
        G = random_ordered_graph(7, 0.4, seed)
        assert count_induced(G, K2) == G.m
    assert count_induced(LabeledGraph.complete(4), LabeledGraph.complete(3)) == 4
    with pytest.raises(ValueError):
        count_induced(LabeledGraph.complete(10), LabeledGraph.complete(9))


@pytest.mark.parametrize("seed", range(5))
def test_induced_equals_two_colored_copies(seed):
    G = random_ordered_graph(10, 0.5, seed)
    C4 = LabeledGraph.from_edges(4, [(1, 3), (1, 4), (2, 3), (2, 4)])
    P4 = LabeledGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    for F in (C4, P4, LabeledGraph.complete(3), LabeledGraph.empty(3)):
        via_colors = count_colored_copies(two_colored(G), two_colored(F), method="enumerate")
        assert count_induced(G, F) == via_colors
        assert count_induced(G, F) == brute.induced(G, F)


# --- product inequality ------------------------------------------------------


@given(st.integers(0, 2**32 - 1), st.sampled_from([(2, 2), (2, 3), (3, 3)]))
@settings(max_examples=60, deadline=None)
def test_product_inequality_property(seed, st_pair):
    s, t = st_pair
    rng = np.random.default_rng(seed)
    p = rng.dirichlet([1, 1, 1])
    upper = np.triu(rng.choice([1, 2, 3], size=(12, 12), p=p), 1)
    G = ColoredCompleteGraph(12, 3, upper + upper.T)
    n_st = count_colored_copies(G, build_Kst_pattern(s, t))
    n_s = count_colored_copies(G, monochromatic_clique(s, BLUE))
    n_t = count_colored_copies(G, monochromatic_clique(t, GREEN))
    assert n_st <= n_s * n_t
