"""Generators for the extremal constructions.

Every size parameter is a floor of the exact expression; nothing is rounded
to nearest, so a finite-n graph is reproducible bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt, sqrt

import numpy as np

from .counting import ColoredPattern
from .graph_core import BLUE, GREEN, RED, ColoredCompleteGraph, LabeledGraph, OrderedGraph, reverse_order


@dataclass(frozen=True)
class QuasiStarParams:
    """Clique size ``a`` and residual edge count ``b`` of S_L(n, m)."""

    n: int
    m: int
    a: int
    b: int


def _f(n: int, a: int) -> int:
    return comb(a, 2) + a * (n - a)


def quasi_star_params(n: int, m: int) -> QuasiStarParams:
    """Largest a with C(a,2) + a(n-a) <= m, and b = m - that."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= m <= comb(n, 2):
        raise ValueError(f"m={m} outside 0..C({n},2)={comb(n, 2)}")
    # f(n, a) is nondecreasing in a on 0..n
    lo, hi = 0, n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if _f(n, mid) <= m:
            lo = mid
        else:
            hi = mid - 1
    a = lo
    b = m - _f(n, a)
    assert (a == n and b == 0) or 0 <= b < n - a - 1
    return QuasiStarParams(n, m, a, b)


def _check_unit(name: str, x: float) -> None:
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"{name}={x} outside [0, 1]")


def eta_of(x: float) -> float:
    return 1.0 - sqrt(1.0 - x)


def build_SL(n: int, m: int) -> OrderedGraph:
    """Quasi-star: [a] joined to everything, plus a+1 joined to the next b vertices."""
    p = quasi_star_params(n, m)
    adj = np.zeros((n, n), dtype=np.uint8)
    adj[: p.a, :] = 1
    adj[:, : p.a] = 1
    if p.b:
        adj[p.a, p.a + 1 : p.a + 1 + p.b] = 1
        adj[p.a + 1 : p.a + 1 + p.b, p.a] = 1
    np.fill_diagonal(adj, 0)
    G = OrderedGraph(n, adj)
    assert G.m == m
    return G


def build_SR(n: int, m: int) -> OrderedGraph:
    return reverse_order(build_SL(n, m))


def spider_parts(n: int, x: float) -> tuple[int, int, int]:
    """(|A|, |B|, |C|) of P(n, x); the odd vertex goes to A."""
    _check_unit("x", x)
    nb = int(np.floor(n * eta_of(x)))
    rest = n - nb
    return (rest + 1) // 2, nb, rest // 2


def build_spider(n: int, x: float) -> OrderedGraph:
    """P(n, x): A < B < C with B a clique joined to everything."""
    if n < 1:
        raise ValueError("n must be positive")
    na, nb, _ = spider_parts(n, x)
    adj = np.zeros((n, n), dtype=np.uint8)
    adj[na : na + nb, :] = 1
    adj[:, na : na + nb] = 1
    np.fill_diagonal(adj, 0)
    return OrderedGraph(n, adj)


def build_banded(n: int, x: float) -> OrderedGraph:
    """Q(n, x): ij is an edge iff 0 < j - i <= floor(eta * n)."""
    _check_unit("x", x)
    if n < 1:
        raise ValueError("n must be positive")
    width = int(np.floor(eta_of(x) * n))
    idx = np.arange(n)
    gap = np.abs(idx[:, None] - idx[None, :])
    adj = ((gap > 0) & (gap <= width)).astype(np.uint8)
    return OrderedGraph(n, adj)


def build_clique_plus_isolated(n: int, gamma: float) -> LabeledGraph:
    _check_unit("gamma", gamma)
    size = int(np.floor(sqrt(gamma) * n))
    adj = np.zeros((n, n), dtype=np.uint8)
    adj[:size, :size] = 1
    np.fill_diagonal(adj, 0)
    return LabeledGraph(n, adj)


def build_cocliqued(n: int, gamma: float) -> LabeledGraph:
    """Complement of a clique on floor(sqrt(1-gamma) n) vertices plus isolated
    vertices: an independent set of that size joined to a clique on the rest."""
    _check_unit("gamma", gamma)
    size = int(np.floor(sqrt(1.0 - gamma) * n))
    adj = np.ones((n, n), dtype=np.uint8)
    adj[:size, :size] = 0
    np.fill_diagonal(adj, 0)
    return LabeledGraph(n, adj)


def build_Kst_pattern(s: int, t: int) -> ColoredPattern:
    """K'_{s,t}: blue clique on 1..s, green clique on s+1..s+t, red between."""
    if s < 2 or s > t:
        raise ValueError(f"need 2 <= s <= t, got s={s}, t={t}")
    n = s + t
    color = np.full((n, n), RED, dtype=np.int8)
    color[:s, :s] = BLUE
    color[s:, s:] = GREEN
    return ColoredPattern(n, 3, color)


def _two_blocks(n: int, na: int, nb: int, inside_a: int, inside_b: int, between: int, rest: int) -> ColoredCompleteGraph:
    color = np.full((n, n), rest, dtype=np.int8)
    color[:na, :na] = inside_a
    color[na : na + nb, na : na + nb] = inside_b
    color[:na, na : na + nb] = between
    color[na : na + nb, :na] = between
    return ColoredCompleteGraph(n, 3, color)


def _check_colored_point(x_b: float, x_g: float) -> None:
    if x_b < 0 or x_g < 0 or x_b + x_g > 1:
        raise ValueError(f"need x_b, x_g >= 0 and x_b + x_g <= 1, got ({x_b}, {x_g})")


def case1_sizes(n: int, x_b: float, x_g: float) -> tuple[int, int]:
    return int(np.floor(n * sqrt(x_b))), int(np.floor(n * sqrt(x_g)))


def build_colored_case1(n: int, x_b: float, x_g: float) -> ColoredCompleteGraph:
    """Blue clique on A, green clique on B, every other pair red."""
    _check_colored_point(x_b, x_g)
    if sqrt(x_b) + sqrt(x_g) > 1:
        raise ValueError("case 1 needs sqrt(x_b) + sqrt(x_g) <= 1")
    na, nb = case1_sizes(n, x_b, x_g)
    return _two_blocks(n, na, nb, BLUE, GREEN, RED, RED)


def case2_sizes(n: int, x_b: float, x_g: float) -> tuple[int, int]:
    x_r = 1.0 - x_b - x_g
    root = sqrt(x_b)
    return int(np.floor(n * root)), int(np.floor(n * x_r / (2.0 * root)))


def build_colored_case2(n: int, x_b: float, x_g: float) -> ColoredCompleteGraph:
    """Blue clique on A, red between A and B, green everywhere else."""
    _check_colored_point(x_b, x_g)
    if not sqrt(x_b) + sqrt(x_g) > 1:
        raise ValueError("case 2 needs sqrt(x_b) + sqrt(x_g) > 1")
    na, nb = case2_sizes(n, x_b, x_g)
    assert na + nb <= n
    return _two_blocks(n, na, nb, BLUE, GREEN, RED, GREEN)


def build_two_block_host(n: int, x_b: float, x_g: float) -> ColoredCompleteGraph:
    """Whichever of the two colored constructions applies at (x_b, x_g)."""
    if sqrt(x_b) + sqrt(x_g) <= 1:
        return build_colored_case1(n, x_b, x_g)
    return build_colored_case2(n, x_b, x_g)
