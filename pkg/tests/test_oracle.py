from math import comb

import numpy as np
import pytest

from densitylab.constructions import build_colored_case1, build_SL, build_SR
from densitylab.counting import count_left_stars
from densitylab.graph_core import RED, ColoredCompleteGraph
from densitylab.graphon import StepGraphon
from densitylab.oracle import (
    BudgetExceeded,
    certify_theorem_ord,
    check_product_inequality,
    enumerate_ordered_graphs,
    product_counts,
    random_colored_host,
    random_ordered_graph,
    random_step_graphon,
)


@pytest.mark.parametrize("n,m,expected", [(3, 1, 3), (4, 3, 20), (6, 7, 6435), (5, 0, 1), (4, 6, 1)])
def test_stream_lengths(n, m, expected):
    graphs = list(enumerate_ordered_graphs(n, m))
    assert len(graphs) == expected
    assert len(set(graphs)) == expected
    assert all(G.m == m and G.n == n for G in graphs)


def test_budget():
    with pytest.raises(BudgetExceeded):
        certify_theorem_ord(8, 10, 2)
    with pytest.raises(ValueError):
        list(enumerate_ordered_graphs(4, 7))
    with pytest.raises(ValueError):
        certify_theorem_ord(4, 0, 2)


def test_certificate_small(backend):
    c = certify_theorem_ord(4, 3, 2)
    assert (c.max_count, c.min_count) == (3, 0)
    assert c.ok and c.graphs == 20
    assert count_left_stars(c.argmax_witness, 2) == 3
    assert count_left_stars(c.argmin_witness, 2) == 0
    d = c.as_dict()
    assert d["SL_count"] == 3 and d["SR_count"] == 0


def test_certificate_k1(backend):
    for n in range(2, 6):
        for m in range(1, comb(n, 2) + 1):
            c = certify_theorem_ord(n, m, 1)
            assert c.max_count == c.min_count == m


def test_certificate_matches_brute(backend):
    for n in range(2, 6):
        for m in range(1, comb(n, 2) + 1):
            for k in (2, 3):
                counts = [count_left_stars(G, k) for G in enumerate_ordered_graphs(n, m)]
                c = certify_theorem_ord(n, m, k)
                assert (c.max_count, c.min_count) == (max(counts), min(counts))
                assert c.ok


def test_certificate_n7_sample(backend):
    c = certify_theorem_ord(7, 5, 2)
    assert c.ok and c.graphs == comb(21, 5)
    assert c.max_count == count_left_stars(build_SL(7, 5), 2)
    assert c.min_count == count_left_stars(build_SR(7, 5), 2)


def test_seed_reproducible():
    assert random_step_graphon(6, 42) == random_step_graphon(6, 42)
    assert random_colored_host(12, 3, 5) == random_colored_host(12, 3, 5)
    assert random_ordered_graph(9, 0.4, 1) == random_ordered_graph(9, 0.4, 1)
    assert random_step_graphon(6, [1, 2]) == random_step_graphon(6, [1, 2])
    assert random_colored_host(12, 3, 5) != random_colored_host(12, 3, 6)


def test_random_graphon_invariants():
    ks = set()
    for seed in range(300):
        W = random_step_graphon(6, seed)
        assert isinstance(W, StepGraphon)
        assert 1 <= W.k <= 6
        assert abs(W.alpha.sum() - 1) <= 1e-12
        assert np.all(W.alpha > 0)
        assert np.array_equal(W.beta, W.beta.T)
        ks.add(W.k)
    assert ks == set(range(1, 7))
    with pytest.raises(ValueError):
        random_step_graphon(0, 1)


def test_random_host_shape():
    G = random_colored_host(12, 3, 0)
    assert isinstance(G, ColoredCompleteGraph)
    assert set(np.unique(G.color[np.triu_indices(12, 1)])) <= {1, 2, 3}


def test_product_monochromatic():
    red = ColoredCompleteGraph.monochromatic(8, RED, 3)
    p = product_counts(red, 2, 2)
    assert (p.n_st, p.n_s, p.n_t) == (0, 0, 0) and p.holds


def test_product_case1_equality():
    G = build_colored_case1(20, 0.25, 0.25)
    p = product_counts(G, 2, 2)
    assert p.n_s == comb(10, 2) and p.n_t == comb(10, 2)
    # every blue pair and green pair span a copy, so the bound is tight
    assert p.n_st == p.n_s * p.n_t


def test_product_random():
    for seed in range(60):
        G = random_colored_host(12, 3, seed)
        assert check_product_inequality(G, 2, 2)
        assert check_product_inequality(G, 2, 3)


def test_product_too_small():
    with pytest.raises(ValueError):
        product_counts(random_colored_host(4, 3, 0), 2, 3)
