"""Exchange moves on ordered graphs and their effect on left-star counts."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .counting import count_left_stars
from .graph_core import OrderedGraph, relabel


@dataclass(frozen=True)
class MoveReport:
    before: int
    after: int
    kind: str
    delta_sign: int

    @classmethod
    def compare(cls, before: int, after: int, kind: str) -> "MoveReport":
        return cls(before, after, kind, (after > before) - (after < before))


def swap_adjacent(G: OrderedGraph, i: int, k: int = 2) -> tuple[OrderedGraph, MoveReport]:
    """Exchange the positions of vertices i and i+1."""
    if not 1 <= i <= G.n - 1:
        raise IndexError(f"swap index {i} out of range 1..{G.n - 1}")
    order = list(range(1, G.n + 1))
    order[i - 1], order[i] = order[i], order[i - 1]
    H = relabel(G, order)
    return H, MoveReport.compare(count_left_stars(G, k), count_left_stars(H, k), "swap")


def shift_edge(
    G: OrderedGraph, remove: tuple[int, int], add: tuple[int, int], k: int = 2
) -> tuple[OrderedGraph, MoveReport]:
    """Replace the edge ``remove`` by the non-edge ``add``."""
    (a, b), (c, d) = sorted(remove), sorted(add)
    for u, v in ((a, b), (c, d)):
        if not (1 <= u < v <= G.n):
            raise ValueError(f"pair {u}-{v} is not a valid pair on 1..{G.n}")
    if not G.has_edge(a, b):
        raise ValueError(f"{a}{b} is not an edge")
    if (a, b) != (c, d) and G.has_edge(c, d):
        raise ValueError(f"{c}{d} is already an edge")
    adj = np.array(G.adj)
    adj[a - 1, b - 1] = adj[b - 1, a - 1] = 0
    adj[c - 1, d - 1] = adj[d - 1, c - 1] = 1
    H = OrderedGraph(G.n, adj)
    return H, MoveReport.compare(count_left_stars(G, k), count_left_stars(H, k), "shift")


def max_direction_move(G: OrderedGraph, v: int, x: int, k: int = 2) -> tuple[OrderedGraph, MoveReport]:
    """Give v (not of full right-degree) one more right-neighbour, taking a
    right-edge away from x. Choices: the smallest w > v with vw missing and
    the largest y > x with xy present."""
    d = G.right_degrees
    if d[v - 1] >= G.n - v:
        raise ValueError(f"vertex {v} already has full right-degree")
    if d[x - 1] == 0:
        raise ValueError(f"vertex {x} has no right-neighbour")
    w = next(w for w in range(v + 1, G.n + 1) if not G.has_edge(v, w))
    y = max(y for y in range(x + 1, G.n + 1) if G.has_edge(x, y))
    return shift_edge(G, (x, y), (v, w), k)


def min_direction_move(G: OrderedGraph, i: int, j: int, k: int = 2) -> tuple[OrderedGraph, MoveReport]:
    """For i < j with d+(i) > d+(j) and d+(j) < n - j, move a right-edge of i
    to j. Choices: the largest right-neighbour u of i is dropped and the
    smallest z > j with jz missing is added."""
    if not 1 <= i < j <= G.n:
        raise ValueError(f"need 1 <= i < j <= {G.n}")
    d = G.right_degrees
    if not d[i - 1] > d[j - 1]:
        raise ValueError(f"need d+({i}) > d+({j})")
    if not d[j - 1] < G.n - j:
        raise ValueError(f"vertex {j} already has full right-degree")
    u = max(u for u in range(i + 1, G.n + 1) if G.has_edge(i, u))
    z = min(z for z in range(j + 1, G.n + 1) if not G.has_edge(j, z))
    return shift_edge(G, (i, u), (j, z), k)


def first_ascent(G: OrderedGraph) -> int | None:
    d = G.right_degrees
    for i in range(1, G.n):
        if d[i - 1] < d[i]:
            return i
    return None


def normalize_nonincreasing(G: OrderedGraph, k: int = 2, max_swaps: int | None = None) -> OrderedGraph:
    """Swap the smallest i with d+(i) < d+(i+1) until right-degrees are nonincreasing.

    Every swap either transposes two unequal degrees (edge absent) or
    strictly raises the sum of squared right-degrees (edge present), so the
    loop terminates; the left-star count never drops.
    """
    cur = G
    swaps = 0
    while (i := first_ascent(cur)) is not None:
        cur, report = swap_adjacent(cur, i, k)
        assert report.delta_sign >= 0
        swaps += 1
        if max_swaps is not None and swaps > max_swaps:
            raise RuntimeError(f"no fixed point after {max_swaps} swaps")
    return cur


def count_normalize_swaps(G: OrderedGraph) -> int:
    cur, swaps = G, 0
    while (i := first_ascent(cur)) is not None:
        cur, _ = swap_adjacent(cur, i, 1)
        swaps += 1
    return swaps
