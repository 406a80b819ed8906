"""Brute-force ground truth: exhaustive ordered-graph enumeration and
seeded random instances for the property suites."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

import numpy as np

from . import _kernels
from .constructions import build_SL, build_SR
from .counting import count_colored_copies, count_left_stars, monochromatic_clique
from .constructions import build_Kst_pattern
from .graph_core import BLUE, GREEN, ColoredCompleteGraph, OrderedGraph
from .graphon import StepGraphon

DEFAULT_MAX_N = 7
MAX_GRAPHS = 10**8


class BudgetExceeded(ValueError):
    pass


def _check_budget(n: int, m: int, max_n: int, override: bool) -> int:
    slots = comb(n, 2)
    if not 0 <= m <= slots:
        raise ValueError(f"m={m} outside 0..{slots}")
    total = comb(slots, m)
    if not override and (n > max_n or total > MAX_GRAPHS):
        raise BudgetExceeded(
            f"enumerating C({slots}, {m}) = {total} graphs on n={n} exceeds the budget "
            f"(n <= {max_n}, <= {MAX_GRAPHS} graphs); pass override=True to force"
        )
    return total


def enumerate_ordered_graphs(n: int, m: int, override: bool = False) -> Iterator[OrderedGraph]:
    """Every ordered graph on [n] with m edges, once each, lexicographic in edge slots."""
    _check_budget(n, m, max_n=n, override=override)
    slots = list(combinations(range(1, n + 1), 2))
    for chosen in combinations(slots, m):
        yield OrderedGraph.from_edges(n, chosen)


@dataclass(frozen=True)
class ExtremalCertificate:
    n: int
    m: int
    k: int
    max_count: int
    min_count: int
    argmax_witness: OrderedGraph
    argmin_witness: OrderedGraph
    matches_SL: bool
    matches_SR: bool
    graphs: int

    @property
    def ok(self) -> bool:
        return self.matches_SL and self.matches_SR

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "max_count": self.max_count,
            "min_count": self.min_count,
            "SL_count": count_left_stars(build_SL(self.n, self.m), self.k),
            "SR_count": count_left_stars(build_SR(self.n, self.m), self.k),
            "argmax_witness": [list(e) for e in self.argmax_witness.edges()],
            "argmin_witness": [list(e) for e in self.argmin_witness.edges()],
            "matches_SL": self.matches_SL,
            "matches_SR": self.matches_SR,
            "graphs": self.graphs,
        }


def certify_theorem_ord(n: int, m: int, k: int, max_n: int = DEFAULT_MAX_N, override: bool = False) -> ExtremalCertificate:
    """Exhaustive max and min of the left-star count over all (n, m) ordered
    graphs, compared with the two quasi-star constructions."""
    if m <= 0:
        raise ValueError("certification needs m > 0")
    if k < 1:
        raise ValueError("k must be positive")
    _check_budget(n, m, max_n, override)
    best, worst, bi, wi, total = _kernels.left_star_extremes(n, m, k)
    slots = _kernels.edge_slots(n) + 1
    wit_max = OrderedGraph.from_edges(n, [tuple(slots[j]) for j in bi])
    wit_min = OrderedGraph.from_edges(n, [tuple(slots[j]) for j in wi])
    sl = count_left_stars(build_SL(n, m), k)
    sr = count_left_stars(build_SR(n, m), k)
    # the constructions are themselves in the enumerated universe
    assert worst <= sr <= best and worst <= sl <= best
    return ExtremalCertificate(n, m, k, best, worst, wit_max, wit_min, sl == best, sr == worst, total)


# ---------------------------------------------------------------------------
# random instances


def random_step_graphon(max_parts: int, seed) -> StepGraphon:
    """Part count uniform on 1..max_parts, masses uniform on the simplex
    (normalised exponentials), beta uniform on [0, 1] and symmetrised from
    its upper triangle."""
    if max_parts < 1:
        raise ValueError("max_parts must be positive")
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, max_parts + 1))
    e = rng.exponential(size=k)
    alpha = e / e.sum()
    # guard against a tiny rounding drift in the normalisation
    alpha[-1] = 1.0 - alpha[:-1].sum()
    upper = np.triu(rng.uniform(size=(k, k)))
    beta = upper + np.triu(upper, 1).T
    return StepGraphon(alpha, beta)


def random_colored_host(n: int, q: int, seed) -> ColoredCompleteGraph:
    """Every pair colored uniformly from 1..q."""
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.integers(1, q + 1, size=(n, n)), 1)
    return ColoredCompleteGraph(n, q, upper + upper.T)


def random_ordered_graph(n: int, p: float, seed) -> OrderedGraph:
    rng = np.random.default_rng(seed)
    upper = np.triu((rng.uniform(size=(n, n)) < p).astype(np.uint8), 1)
    return OrderedGraph(n, upper + upper.T)


@dataclass(frozen=True)
class ProductCheck:
    s: int
    t: int
    n_st: int
    n_s: int
    n_t: int

    @property
    def holds(self) -> bool:
        return self.n_st <= self.n_s * self.n_t


def product_counts(G: ColoredCompleteGraph, s: int, t: int) -> ProductCheck:
    if G.n < s + t:
        raise ValueError(f"host on {G.n} vertices is too small for K'_{{{s},{t}}}")
    return ProductCheck(
        s,
        t,
        count_colored_copies(G, build_Kst_pattern(s, t)),
        count_colored_copies(G, monochromatic_clique(s, BLUE, G.q)),
        count_colored_copies(G, monochromatic_clique(t, GREEN, G.q)),
    )


def check_product_inequality(G: ColoredCompleteGraph, s: int, t: int) -> bool:
    """N(K'_{s,t}) <= N(blue K_s) * N(green K_t), on exact counts."""
    return product_counts(G, s, t).holds
