"""Exact subgraph counters.

Counts are Python ints and densities are :class:`fractions.Fraction`, so no
value is rounded before a caller chooses to convert it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial, perm

import numpy as np

from . import _kernels
from .graph_core import BLUE, GREEN, RED, ColoredCompleteGraph, LabeledGraph, OrderedGraph

MAX_INDUCED_PATTERN = 8


@dataclass(frozen=True)
class OrderedPattern:
    """Ordered graph on ``[s]``; edges are 1-based pairs ``(i, j)`` with ``i < j``."""

    s: int
    edges: frozenset

    def __init__(self, s: int, edges):
        if s < 1:
            raise ValueError("pattern needs at least one vertex")
        norm = set()
        for i, j in edges:
            if not 1 <= i < j <= s:
                raise ValueError(f"pattern edge ({i}, {j}) must satisfy 1 <= i < j <= {s}")
            norm.add((i, j))
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "edges", frozenset(norm))

    def required(self) -> np.ndarray:
        req = np.zeros((self.s, self.s), dtype=np.uint8)
        for i, j in self.edges:
            req[i - 1, j - 1] = 1
        return req

    @classmethod
    def from_graph(cls, G: OrderedGraph) -> "OrderedPattern":
        return cls(G.n, G.edges())


# the ordered path 1-2-3
M = OrderedPattern(3, [(1, 2), (2, 3)])


def left_star(k: int) -> OrderedPattern:
    """Ordered star whose centre 1 precedes its k leaves."""
    return OrderedPattern(k + 1, [(1, j) for j in range(2, k + 2)])


def right_star(k: int) -> OrderedPattern:
    return OrderedPattern(k + 1, [(i, k + 1) for i in range(1, k + 1)])


class ColoredPattern(ColoredCompleteGraph):
    """A small colored clique used as a pattern; ``s`` is its vertex count."""

    @property
    def s(self) -> int:
        return self.n


# ---------------------------------------------------------------------------
# unordered stars


def count_stars(G: LabeledGraph, k: int) -> int:
    """Copies of the k-edge star: sum over v of C(d(v), k)."""
    if k < 1:
        raise ValueError("k must be positive")
    return sum(comb(int(d), k) for d in G.degrees)


def star_density(G: LabeledGraph, k: int) -> Fraction:
    if G.n <= k:
        raise ValueError(f"star density of S_{k} needs n > {k}, got n={G.n}")
    return Fraction(count_stars(G, k) * factorial(k), perm(G.n, k + 1))


# ---------------------------------------------------------------------------
# ordered patterns


def count_ordered_pattern(G: OrderedGraph, F: OrderedPattern) -> int:
    """Increasing s-tuples of G that contain every edge of F.

    Containment is non-induced: extra edges among the tuple are allowed.
    Always runs the enumeration kernel, so it can serve as a check on the
    closed-form counters below.
    """
    if F.s > G.n:
        return 0
    return _kernels.ordered_pattern_count(np.ascontiguousarray(G.adj), F.required())


def count_left_stars(G: OrderedGraph, k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    return sum(comb(int(d), k) for d in G.right_degrees)


def count_M(G: OrderedGraph) -> int:
    """Copies of the ordered path 1-2-3: sum over j of left-degree * right-degree."""
    return sum(int(a) * int(b) for a, b in zip(G.left_degrees, G.right_degrees))


def ordered_density(G: OrderedGraph, F: OrderedPattern) -> Fraction:
    """N_ord(F, G) / C(n, s). Uses the degree formulas for M and left stars."""
    if G.n < F.s:
        raise ValueError(f"pattern on {F.s} vertices does not fit in n={G.n}")
    if F == M:
        count = count_M(G)
    elif F.s >= 2 and F == left_star(F.s - 1):
        count = count_left_stars(G, F.s - 1)
    else:
        count = count_ordered_pattern(G, F)
    return Fraction(count, comb(G.n, F.s))


# ---------------------------------------------------------------------------
# colored copies


def count_cliques(rows, cand: int, size: int) -> int:
    """Cliques of ``size`` inside the vertex bitset ``cand`` (bit rows ``rows``)."""
    if size == 0:
        return 1
    if size == 1:
        return cand.bit_count()
    total = 0
    c = cand
    while c:
        low = c & -c
        c ^= low
        total += count_cliques(rows, c & rows[low.bit_length() - 1], size - 1)
    return total


def _cliques(rows, cand: int, size: int, acc: int = 0):
    if size == 0:
        yield acc
        return
    c = cand
    while c:
        low = c & -c
        c ^= low
        yield from _cliques(rows, c & rows[low.bit_length() - 1], size - 1, acc | low)


def count_two_clique_copies(G: ColoredCompleteGraph, s: int, t: int, c1: int = BLUE, c2: int = GREEN, c3: int = RED) -> int:
    """Copies of K'_{s,t} with part colors (c1, c2) and cross color c3.

    For s, t >= 2 a copy splits uniquely into its c1-clique and c2-clique, so
    we enumerate c1-cliques A, intersect their c3-neighbourhoods and count the
    c2-cliques inside. Counts per neighbourhood are memoised, which makes the
    structured extremal hosts cheap.
    """
    rows1 = G.layer(c1).bit_rows
    rows2 = G.layer(c2).bit_rows
    rows3 = G.layer(c3).bit_rows
    everything = (1 << G.n) - 1
    memo: dict[int, int] = {}
    total = 0
    for A in _cliques(rows1, everything, s):
        common = everything
        a = A
        while a:
            low = a & -a
            a ^= low
            common &= rows3[low.bit_length() - 1]
        got = memo.get(common)
        if got is None:
            got = memo[common] = count_cliques(rows2, common, t)
        total += got
    return total


def _two_clique_shape(F: ColoredCompleteGraph):
    """(s, t, c1, c2, c3) if F is a K'_{s,t}-type coloring, else None."""
    n = F.n
    used = sorted({F.edge_color(u, v) for u, v in combinations(range(1, n + 1), 2)})
    if len(used) != 3:
        return None
    for c1, c2 in permutations(used, 2):
        c3 = next(c for c in used if c not in (c1, c2))
        V1 = {v for u, v in combinations(range(1, n + 1), 2) if F.edge_color(u, v) == c1} | {
            u for u, v in combinations(range(1, n + 1), 2) if F.edge_color(u, v) == c1
        }
        V2 = set(range(1, n + 1)) - V1
        if len(V1) < 2 or len(V2) < 2:
            continue
        ok = all(
            F.edge_color(u, v) == (c1 if (u in V1 and v in V1) else c2 if (u in V2 and v in V2) else c3)
            for u, v in combinations(range(1, n + 1), 2)
        )
        if ok:
            return len(V1), len(V2), c1, c2, c3
    return None


def count_colored_copies(G: ColoredCompleteGraph, F: ColoredCompleteGraph, method: str = "auto") -> int:
    """Number of |F|-subsets X of G admitting a color-preserving bijection F -> X.

    ``method="enumerate"`` forces the subset-enumeration kernel;
    ``"auto"`` uses clique-based counting for monochromatic cliques and
    K'_{s,t}-type patterns.
    """
    if F.q > G.q:
        # colors absent from G cannot be matched, but they may still be listed
        if any(F.color_count(c) for c in range(G.q + 1, F.q + 1)):
            return 0
    s = F.n
    if s > G.n:
        return 0
    if method not in ("auto", "enumerate"):
        raise ValueError(f"unknown method {method!r}")
    if method == "auto" and s >= 2:
        used = {F.edge_color(u, v) for u, v in combinations(range(1, s + 1), 2)}
        if len(used) == 1:
            c = used.pop()
            return count_cliques(G.layer(c).bit_rows, (1 << G.n) - 1, s)
        shape = _two_clique_shape(F)
        if shape is not None:
            return count_two_clique_copies(G, *shape)
    q = max(G.q, F.q)
    return _kernels.colored_copy_count(G.color, np.asarray(F.color), q)


def colored_density(G: ColoredCompleteGraph, F: ColoredCompleteGraph, method: str = "auto") -> Fraction:
    if G.n < F.n:
        raise ValueError(f"pattern on {F.n} vertices does not fit in n={G.n}")
    return Fraction(count_colored_copies(G, F, method), comb(G.n, F.n))


def monochromatic_clique(s: int, c: int, q: int = 3) -> ColoredPattern:
    """K'_s (c = BLUE) or K'_t (c = GREEN) as a colored pattern."""
    return ColoredPattern(s, q, np.full((s, s), c, dtype=np.int8))


def two_colored(G: LabeledGraph) -> ColoredCompleteGraph:
    """Edges red, non-edges blue (green unused)."""
    color = np.where(G.adj == 1, RED, BLUE).astype(np.int8)
    return ColoredCompleteGraph(G.n, 3, color)


# ---------------------------------------------------------------------------
# induced copies


def _edge_mask(adj: np.ndarray, verts) -> int:
    mask = 0
    bit = 0
    for a, b in combinations(range(len(verts)), 2):
        if adj[verts[a], verts[b]]:
            mask |= 1 << bit
        bit += 1
    return mask


@lru_cache(maxsize=None)
def _canonical(s: int, mask: int) -> int:
    """Smallest edge mask over all relabellings of the s-vertex graph ``mask``."""
    pairs = list(combinations(range(s), 2))
    edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
    index = {p: i for i, p in enumerate(pairs)}
    best = None
    for p in permutations(range(s)):
        m = 0
        for u, v in edges:
            a, b = sorted((p[u], p[v]))
            m |= 1 << index[(a, b)]
        if best is None or m < best:
            best = m
    return best


def count_induced(G: LabeledGraph, F: LabeledGraph) -> int:
    """Number of vertex subsets S of G with G[S] isomorphic to F."""
    s = F.n
    if s > MAX_INDUCED_PATTERN:
        raise ValueError(f"induced counting supports patterns with at most {MAX_INDUCED_PATTERN} vertices")
    if s > G.n:
        return 0
    target_edges = F.m
    target_degs = sorted(F.degrees.tolist())
    target = _canonical(s, _edge_mask(F.adj, list(range(s))))
    total = 0
    for S in combinations(range(G.n), s):
        sub = G.adj[np.ix_(S, S)]
        if int(sub.sum()) != 2 * target_edges:
            continue
        if sorted(sub.sum(axis=1).tolist()) != target_degs:
            continue
        if _canonical(s, _edge_mask(G.adj, S)) == target:
            total += 1
    return total
