"""Graph types shared by the whole package.

Vertices are 1-based in every public function and in the text formats.
Adjacency is kept as a read-only ``uint8`` matrix; packed bit rows (Python
ints, bit ``v-1`` set for neighbour ``v``) are derived on demand for the
popcount-style kernels.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import comb
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

BLUE, GREEN, RED = 1, 2, 3
COLOR_NAMES = {BLUE: "blue", GREEN: "green", RED: "red"}


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class LabeledGraph:
    """Simple undirected graph on vertices ``1..n``."""

    def __init__(self, n: int, adj: np.ndarray):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = np.array(adj, dtype=np.uint8, copy=True)
        if adj.shape != (n, n):
            raise ValueError(f"adjacency shape {adj.shape} does not match n={n}")
        if np.any(adj > 1):
            raise ValueError("adjacency entries must be 0 or 1")
        if np.any(np.diagonal(adj)):
            raise ValueError("adjacency diagonal must be zero (no loops)")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency must be symmetric")
        self.n = n
        self.adj = _freeze(adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]):
        adj = np.zeros((n, n), dtype=np.uint8)
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} out of range 1..{n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u - 1, v - 1] = adj[v - 1, u - 1] = 1
        return cls(n, adj)

    @classmethod
    def complete(cls, n: int):
        return cls(n, np.ones((n, n), dtype=np.uint8) - np.eye(n, dtype=np.uint8))

    @classmethod
    def empty(cls, n: int):
        return cls(n, np.zeros((n, n), dtype=np.uint8))

    @cached_property
    def m(self) -> int:
        return int(self.adj.sum()) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        return _freeze(self.adj.sum(axis=1, dtype=np.int64))

    @cached_property
    def bit_rows(self) -> tuple[int, ...]:
        rows = []
        for r in self.adj:
            packed = np.packbits(r, bitorder="little").tobytes()
            rows.append(int.from_bytes(packed, "little"))
        return tuple(rows)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1, v - 1])

    def edges(self) -> Iterator[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adj, 1))
        for u, v in zip(us.tolist(), vs.tolist()):
            yield u + 1, v + 1

    def density(self) -> Fraction:
        if self.n < 2:
            raise ValueError("density needs at least two vertices")
        return Fraction(self.m, comb(self.n, 2))

    def __eq__(self, other):
        return type(self) is type(other) and self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


class OrderedGraph(LabeledGraph):
    """A graph whose vertex labels ``1..n`` carry the total order."""

    @cached_property
    def right_degrees(self) -> np.ndarray:
        return _freeze(np.triu(self.adj, 1).sum(axis=1, dtype=np.int64))

    @cached_property
    def left_degrees(self) -> np.ndarray:
        return _freeze(np.tril(self.adj, -1).sum(axis=1, dtype=np.int64))


class ColoredCompleteGraph:
    """Complete graph with a color in ``1..q`` on every pair."""

    def __init__(self, n: int, q: int, color: np.ndarray):
        if q < 1:
            raise ValueError("need at least one color")
        color = np.array(color, dtype=np.int8, copy=True)
        if color.shape != (n, n):
            raise ValueError(f"color matrix shape {color.shape} does not match n={n}")
        np.fill_diagonal(color, 0)
        if not np.array_equal(color, color.T):
            raise ValueError("color matrix must be symmetric")
        off = color[~np.eye(n, dtype=bool)]
        if off.size and (off.min() < 1 or off.max() > q):
            raise ValueError(f"off-diagonal colors must lie in 1..{q}")
        self.n = n
        self.q = q
        self.color = _freeze(color)

    @classmethod
    def monochromatic(cls, n: int, c: int, q: int = 3):
        color = np.full((n, n), c, dtype=np.int8)
        return cls(n, q, color)

    def edge_color(self, u: int, v: int) -> int:
        return int(self.color[u - 1, v - 1])

    def color_count(self, c: int) -> int:
        return int(np.count_nonzero(np.triu(self.color == c, 1)))

    def layer(self, c: int) -> LabeledGraph:
        """The graph formed by the pairs of color ``c``."""
        a = (self.color == c).astype(np.uint8)
        np.fill_diagonal(a, 0)
        return LabeledGraph(self.n, a)

    def __eq__(self, other):
        return (
            isinstance(other, ColoredCompleteGraph)
            and (self.n, self.q) == (other.n, other.q)
            and np.array_equal(self.color, other.color)
        )

    def __hash__(self):
        return hash((self.n, self.q, self.color.tobytes()))

    def __repr__(self):
        counts = ", ".join(f"{c}:{self.color_count(c)}" for c in range(1, self.q + 1))
        return f"{type(self).__name__}(n={self.n}, q={self.q}, counts={{{counts}}})"


def _check_vertex(G: LabeledGraph, v: int) -> None:
    if not 1 <= v <= G.n:
        raise IndexError(f"vertex {v} out of range 1..{G.n}")


def degree(G: LabeledGraph, v: int) -> int:
    _check_vertex(G, v)
    return int(G.degrees[v - 1])


def right_degree(G: OrderedGraph, i: int) -> int:
    """Number of neighbours ``j > i``."""
    _check_vertex(G, i)
    return int(G.right_degrees[i - 1])


def reverse_order(G: OrderedGraph) -> OrderedGraph:
    """Relabel vertex ``i`` as ``n+1-i``."""
    return OrderedGraph(G.n, G.adj[::-1, ::-1])


def relabel(G: OrderedGraph, perm: Iterable[int]) -> OrderedGraph:
    """Ordered graph in which old vertex ``perm[j-1]`` sits at position ``j``."""
    idx = np.asarray(list(perm), dtype=np.int64) - 1
    return OrderedGraph(G.n, G.adj[np.ix_(idx, idx)])


def color_class_density(G: ColoredCompleteGraph, c: int) -> Fraction:
    if not 1 <= c <= G.q:
        raise ValueError(f"color {c} out of range 1..{G.q}")
    if G.n < 2:
        raise ValueError("color density needs at least two vertices")
    return Fraction(G.color_count(c), comb(G.n, 2))


# ---------------------------------------------------------------------------
# text formats


def format_graph(G: LabeledGraph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def format_colored(G: ColoredCompleteGraph) -> str:
    lines = [f"{G.n} {G.q}"]
    for u in range(1, G.n + 1):
        for v in range(u + 1, G.n + 1):
            lines.append(f"{u} {v} {G.edge_color(u, v)}")
    return "\n".join(lines) + "\n"


def _rows(text: str) -> list[list[int]]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError:
            raise ValueError(f"line {lineno}: expected integers, got {line!r}") from None
    if not rows:
        raise ValueError("empty graph file")
    return rows


def parse_graph(text: str, ordered: bool = True) -> LabeledGraph:
    rows = _rows(text)
    if len(rows[0]) != 2:
        raise ValueError("header must be 'n m'")
    n, m = rows[0]
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for r in body:
        if len(r) != 2:
            raise ValueError(f"edge line must be 'u v', got {r}")
        u, v = r
        if not u < v:
            raise ValueError(f"edge lines need u < v, got {u} {v}")
        edges.append((u, v))
    if len(set(edges)) != m:
        raise ValueError("duplicate edge lines")
    cls = OrderedGraph if ordered else LabeledGraph
    return cls.from_edges(n, edges)


def parse_colored(text: str) -> ColoredCompleteGraph:
    rows = _rows(text)
    if len(rows[0]) != 2:
        raise ValueError("header must be 'n q'")
    n, q = rows[0]
    body = rows[1:]
    if len(body) != comb(n, 2):
        raise ValueError(f"colored file on {n} vertices needs {comb(n, 2)} pair lines, found {len(body)}")
    color = np.zeros((n, n), dtype=np.int8)
    seen = np.zeros((n, n), dtype=bool)
    for r in body:
        if len(r) != 3:
            raise ValueError(f"pair line must be 'u v c', got {r}")
        u, v, c = r
        if not 1 <= u < v <= n:
            raise ValueError(f"pair {u} {v} invalid for n={n}")
        if seen[u - 1, v - 1]:
            raise ValueError(f"pair {u} {v} listed twice")
        seen[u - 1, v - 1] = True
        color[u - 1, v - 1] = color[v - 1, u - 1] = c
    return ColoredCompleteGraph(n, q, color)


def parse_any(text: str) -> LabeledGraph | ColoredCompleteGraph:
    """Colored files are recognised by three integers per body line."""
    rows = _rows(text)
    if len(rows) > 1 and len(rows[1]) == 3:
        return parse_colored(text)
    if len(rows) == 1 and rows[0][1] >= 1:
        # header only: an edge file would need m = 0, so this is a pairless coloring
        return parse_colored(text)
    return parse_graph(text)


def write_graph(G: LabeledGraph | ColoredCompleteGraph, path: str | Path) -> None:
    text = format_colored(G) if isinstance(G, ColoredCompleteGraph) else format_graph(G)
    Path(path).write_text(text)


def read_graph(path: str | Path) -> LabeledGraph | ColoredCompleteGraph:
    return parse_any(Path(path).read_text())
