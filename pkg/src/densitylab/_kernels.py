"""Hot enumeration kernels.

Each kernel has a numba loop implementation (``*_nb``) and a vectorised
numpy implementation (``*_np``) with identical results. The public wrappers
pick one according to :data:`densitylab._accel.USE_NUMBA`, which honours the
``DENSITYLAB_DISABLE_NUMBA`` environment flag.

All arrays are 0-based; callers translate from the 1-based public API.
"""
from __future__ import annotations

from itertools import chain, combinations, islice, permutations
from math import comb

import numpy as np

from . import _accel
from ._accel import njit

CHUNK = 1 << 16


def _combo_chunks(n: int, s: int, chunk: int = CHUNK):
    """Yield consecutive blocks of the lexicographic s-subsets of range(n)."""
    it = combinations(range(n), s)
    while True:
        block = list(islice(it, chunk))
        if not block:
            return
        yield np.fromiter(chain.from_iterable(block), dtype=np.int64, count=len(block) * s).reshape(-1, s)


# ---------------------------------------------------------------------------
# ordered pattern containment


@njit
def _ordered_pattern_count_nb(adj, req):
    n = adj.shape[0]
    s = req.shape[0]
    if s > n:
        return 0
    tup = np.empty(s, np.int64)
    total = 0
    depth = 0
    tup[0] = -1
    while depth >= 0:
        tup[depth] += 1
        v = tup[depth]
        if v > n - (s - depth):
            depth -= 1
            continue
        ok = True
        for a in range(depth):
            if req[a, depth] != 0 and adj[tup[a], v] == 0:
                ok = False
                break
        if not ok:
            continue
        if depth == s - 1:
            total += 1
        else:
            depth += 1
            tup[depth] = v
    return total


def _ordered_pattern_count_np(adj, req):
    n = adj.shape[0]
    s = req.shape[0]
    if s > n:
        return 0
    rows = adj.astype(bool)

    def extend(prefix, start):
        depth = len(prefix)
        stop = n - (s - depth) + 1
        if stop <= start:
            return 0
        mask = np.ones(stop - start, dtype=bool)
        for a, u in enumerate(prefix):
            if req[a, depth]:
                mask &= rows[u, start:stop]
        if depth == s - 1:
            return int(np.count_nonzero(mask))
        return sum(extend(prefix + [int(c)], int(c) + 1) for c in np.flatnonzero(mask) + start)

    return extend([], 0)


def ordered_pattern_count(adj: np.ndarray, req: np.ndarray) -> int:
    """Increasing s-tuples of ``adj`` containing every edge flagged in the
    strictly upper triangle of ``req``."""
    if req.shape[0] == 0:
        return 1
    if _accel.USE_NUMBA:
        return int(_ordered_pattern_count_nb(adj, req))
    return _ordered_pattern_count_np(adj, req)


# ---------------------------------------------------------------------------
# exhaustive left-star extremes over all m-edge ordered graphs


def edge_slots(n: int) -> np.ndarray:
    """Lexicographic list of pairs (u, v), u < v, 0-based, shape (C(n,2), 2)."""
    if n < 2:
        return np.zeros((0, 2), dtype=np.int64)
    return np.array(list(combinations(range(n), 2)), dtype=np.int64)


@njit
def _left_star_extremes_nb(n, m, slot_left, binom_k):
    L = slot_left.shape[0]
    idx = np.arange(m)
    deg = np.zeros(n, np.int64)
    best = -1
    worst = np.iinfo(np.int64).max
    best_idx = idx.copy()
    worst_idx = idx.copy()
    total = 0
    while True:
        deg[:] = 0
        for t in range(m):
            deg[slot_left[idx[t]]] += 1
        val = 0
        for v in range(n):
            val += binom_k[deg[v]]
        if val > best:
            best = val
            best_idx[:] = idx
        if val < worst:
            worst = val
            worst_idx[:] = idx
        total += 1
        t = m - 1
        while t >= 0 and idx[t] == L - m + t:
            t -= 1
        if t < 0:
            break
        idx[t] += 1
        for u in range(t + 1, m):
            idx[u] = idx[u - 1] + 1
    return best, worst, best_idx, worst_idx, total


def _left_star_extremes_np(n, m, slot_left, binom_k):
    L = slot_left.shape[0]
    if m == 0:
        val = int(binom_k[0]) * n
        empty = np.zeros(0, dtype=np.int64)
        return val, val, empty, empty.copy(), 1
    best, worst = -1, None
    best_idx = worst_idx = None
    total = 0
    for block in _combo_chunks(L, m):
        lefts = slot_left[block]
        deg = np.stack([(lefts == v).sum(axis=1) for v in range(n)], axis=1)
        vals = binom_k[deg].sum(axis=1)
        hi, lo = int(np.argmax(vals)), int(np.argmin(vals))
        if vals[hi] > best:
            best, best_idx = int(vals[hi]), block[hi].copy()
        if worst is None or vals[lo] < worst:
            worst, worst_idx = int(vals[lo]), block[lo].copy()
        total += len(block)
    return best, worst, best_idx, worst_idx, total


def left_star_extremes(n: int, m: int, k: int):
    """Max and min of sum_i C(d+(i), k) over all ordered graphs on n vertices
    with m edges.

    Returns ``(max, min, argmax_slots, argmin_slots, graphs_seen)`` where the
    witnesses are index arrays into :func:`edge_slots` (first lexicographic
    witness wins ties).
    """
    slots = edge_slots(n)
    slot_left = np.ascontiguousarray(slots[:, 0]) if len(slots) else np.zeros(0, dtype=np.int64)
    binom_k = np.array([comb(d, k) for d in range(n + 1)], dtype=np.int64)
    if _accel.USE_NUMBA:
        best, worst, bi, wi, total = _left_star_extremes_nb(n, m, slot_left, binom_k)
        return int(best), int(worst), np.asarray(bi), np.asarray(wi), int(total)
    return _left_star_extremes_np(n, m, slot_left, binom_k)


# ---------------------------------------------------------------------------
# colored copies via relabelling codes


def pair_position(a: int, b: int) -> int:
    """Position of pair a < b when pairs are ordered by larger index first."""
    return b * (b - 1) // 2 + a


def pattern_codes(color: np.ndarray, base: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Encode every relabelling of a colored pattern.

    Returns ``(codes, prefix_flat, prefix_offsets)``: the sorted distinct codes
    of all relabellings and, for each depth d, the sorted distinct codes of
    the first C(d+1, 2) pairs (used for pruning partial subsets).
    """
    s = color.shape[0]
    npairs = s * (s - 1) // 2
    if base ** npairs >= 2**63:
        raise ValueError(f"pattern with {s} vertices and {base - 1} colors exceeds 64-bit code range")
    powers = [base**p for p in range(npairs)]
    codes = set()
    for perm in permutations(range(s)):
        code = 0
        for b in range(1, s):
            for a in range(b):
                code += int(color[perm[a], perm[b]]) * powers[pair_position(a, b)]
        codes.add(code)
    codes_arr = np.array(sorted(codes), dtype=np.int64)
    flat, offsets = [], [0]
    for d in range(s):
        mod = base ** (d * (d + 1) // 2)
        flat.extend(sorted({c % mod for c in codes}))
        offsets.append(len(flat))
    return codes_arr, np.array(flat, dtype=np.int64), np.array(offsets, dtype=np.int64)


@njit
def _colored_copy_count_nb(color, s, base, prefix_flat, prefix_offsets):
    n = color.shape[0]
    if s > n:
        return 0
    npairs = s * (s - 1) // 2
    powers = np.empty(max(npairs, 1), np.int64)
    p = 1
    for i in range(npairs):
        powers[i] = p
        p *= base
    tup = np.empty(s, np.int64)
    partial = np.zeros(s + 1, np.int64)
    total = 0
    depth = 0
    tup[0] = -1
    while depth >= 0:
        tup[depth] += 1
        v = tup[depth]
        if v > n - (s - depth):
            depth -= 1
            continue
        code = partial[depth]
        start = depth * (depth - 1) // 2
        for a in range(depth):
            code += color[tup[a], v] * powers[start + a]
        lo = prefix_offsets[depth]
        hi = prefix_offsets[depth + 1]
        pos = np.searchsorted(prefix_flat[lo:hi], code)
        if pos >= hi - lo or prefix_flat[lo + pos] != code:
            continue
        if depth == s - 1:
            total += 1
        else:
            partial[depth + 1] = code
            depth += 1
            tup[depth] = v
    return total


def _colored_copy_count_np(color, s, base, codes):
    n = color.shape[0]
    if s > n:
        return 0
    pairs = [(a, b) for b in range(1, s) for a in range(b)]
    weights = np.array([base ** pair_position(a, b) for a, b in pairs], dtype=np.int64)
    total = 0
    for block in _combo_chunks(n, s):
        vals = np.stack([color[block[:, a], block[:, b]] for a, b in pairs], axis=1).astype(np.int64)
        total += int(np.count_nonzero(np.isin(vals @ weights, codes)))
    return total


def colored_copy_count(color: np.ndarray, pattern: np.ndarray, q: int) -> int:
    """Number of s-subsets of the host coloring that are copies of ``pattern``."""
    s = pattern.shape[0]
    n = color.shape[0]
    if s > n:
        return 0
    if s <= 1:
        return comb(n, s)
    base = q + 1
    codes, flat, offsets = pattern_codes(pattern, base)
    color64 = np.ascontiguousarray(color, dtype=np.int64)
    if _accel.USE_NUMBA:
        return int(_colored_copy_count_nb(color64, s, base, flat, offsets))
    return _colored_copy_count_np(color64, s, base, codes)
