"""Step graphons and the functionals used in the star-density argument.

A :class:`StepGraphon` holds part masses ``alpha`` and a symmetric value
matrix ``beta``. Entries may be floats or :class:`fractions.Fraction`; with
Fractions every operation except those involving square roots (``MAX``,
``eta``) is exact, which is how the counterexample ledger is checked to the
last digit.

Part indices in the public API are 1-based.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from pathlib import Path
from typing import Callable

import numpy as np

from .formulas import star_lower_bound

SUM_TOL = 1e-12
RW_SLACK = 1e-9


class InapplicableMove(ValueError):
    """Raised when a perturbation move's hypotheses fail."""


def _as_array(values, exact: bool) -> np.ndarray:
    if exact:
        return np.array([Fraction(v) for v in np.ravel(np.asarray(values, dtype=object))], dtype=object).reshape(
            np.shape(values)
        )
    return np.array(values, dtype=np.float64)


def _is_exact(values) -> bool:
    return any(isinstance(v, Fraction) for v in np.ravel(np.asarray(values, dtype=object)))


class StepGraphon:
    """k-step graphon with masses ``alpha`` (summing to 1) and values ``beta``."""

    def __init__(self, alpha, beta, exact: bool | None = None):
        if exact is None:
            exact = _is_exact(alpha) or _is_exact(beta)
        alpha = _as_array(alpha, exact)
        beta = _as_array(beta, exact)
        if alpha.ndim != 1 or alpha.size == 0:
            raise ValueError("alpha must be a nonempty vector")
        k = alpha.size
        if beta.shape != (k, k):
            raise ValueError(f"beta must be {k}x{k}, got shape {beta.shape}")
        if any(a <= 0 for a in alpha):
            raise ValueError("part masses must be positive")
        total = sum(alpha)
        if exact and total != 1 or not exact and abs(total - 1.0) > SUM_TOL:
            raise ValueError(f"part masses sum to {total}, not 1")
        if not all(beta[i, j] == beta[j, i] for i in range(k) for j in range(i)):
            raise ValueError("beta must be symmetric")
        if any(v < 0 or v > 1 for v in beta.ravel()):
            raise ValueError("beta entries must lie in [0, 1]")
        alpha.setflags(write=False)
        beta.setflags(write=False)
        self.alpha = alpha
        self.beta = beta
        self.exact = exact

    @property
    def k(self) -> int:
        return self.alpha.size

    @classmethod
    def constant(cls, c) -> "StepGraphon":
        return cls([1], [[c]])

    def to_float(self) -> "StepGraphon":
        return StepGraphon(self.alpha.astype(np.float64), self.beta.astype(np.float64), exact=False)

    def __eq__(self, other):
        return (
            isinstance(other, StepGraphon)
            and self.k == other.k
            and bool(np.all(self.alpha == other.alpha))
            and bool(np.all(self.beta == other.beta))
        )

    def __repr__(self):
        return f"StepGraphon(alpha={self.alpha.tolist()}, beta={self.beta.tolist()})"


def _new(alpha, beta, exact: bool) -> StepGraphon:
    return StepGraphon(alpha, beta, exact=exact)


# ---------------------------------------------------------------------------
# functionals


def degree_vector(W: StepGraphon) -> np.ndarray:
    """d_i = sum_j alpha_j beta_ij."""
    return W.beta.dot(W.alpha)


def edge_density(W: StepGraphon):
    return W.alpha.dot(W.beta.dot(W.alpha))


def star_hom_density(W: StepGraphon, k: int):
    if k < 1:
        raise ValueError("k must be positive")
    return W.alpha.dot(degree_vector(W) ** k)


def T(W: StepGraphon):
    """Second moment of the degree distribution, sum_i alpha_i d_i^2."""
    d = degree_vector(W)
    return W.alpha.dot(d * d)


@dataclass(frozen=True)
class ConvexTestFunction:
    """A function F on [0, 1] with its derivative."""

    f: Callable
    df: Callable
    name: str = "F"

    def __call__(self, x):
        return self.f(x)

    def check_convexity(self, points: int = 1000) -> None:
        """Spot-check that F' is nondecreasing on a grid; raises ValueError."""
        xs = np.linspace(0.0, 1.0, points)
        slopes = np.array([float(self.df(x)) for x in xs])
        drops = np.flatnonzero(np.diff(slopes) < -1e-12)
        if drops.size:
            x = xs[drops[0]]
            raise ValueError(f"{self.name} does not look convex: F' decreases after x={x:.6g}")


def power(k: int) -> ConvexTestFunction:
    if k < 1:
        raise ValueError("power needs k >= 1")
    return ConvexTestFunction(lambda x: x**k, lambda x: k * x ** (k - 1), name=f"x^{k}")


def D(F: ConvexTestFunction, W: StepGraphon):
    """Integral of F over the degree distribution."""
    return sum(a * F(d) for a, d in zip(W.alpha, degree_vector(W)))


def MAX(gamma, F: ConvexTestFunction) -> float:
    g = float(gamma)
    if not 0.0 <= g <= 1.0:
        raise ValueError(f"gamma={g} outside [0, 1]")
    root = sqrt(g)
    e = 1.0 - sqrt(1.0 - g)
    return max((1.0 - root) * F(0.0) + root * F(root), (1.0 - e) * F(e) + e * F(1.0))


def is_delta_good(F: ConvexTestFunction, W: StepGraphon, delta: float) -> bool:
    """Strict check D(F, W) < MAX(t(|, W), F) + delta."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return float(D(F, W)) < MAX(edge_density(W), F) + delta


def verify_rw_bound(W: StepGraphon, k: int) -> bool:
    """t(S_k, W) <= star_lower_bound(t(|, W), k) up to a 1e-9 slack."""
    gamma = min(max(float(edge_density(W)), 0.0), 1.0)
    return float(star_hom_density(W, k)) <= star_lower_bound(gamma, k) + RW_SLACK


# ---------------------------------------------------------------------------
# operators


def _scalar(x, exact: bool):
    return Fraction(x) if exact else float(x)


def complement(W: StepGraphon) -> StepGraphon:
    one = _scalar(1, W.exact)
    return _new(W.alpha, one - W.beta, W.exact)


def _check_lambda(lam) -> None:
    if not 0 <= lam <= 1:
        raise ValueError(f"lambda={lam} outside [0, 1]")


def corner_zero(lam, W: StepGraphon) -> StepGraphon:
    """Prepend a part of mass lambda joined to nothing; rescale the rest."""
    _check_lambda(lam)
    exact = W.exact or isinstance(lam, Fraction)
    if lam == 0:
        return W
    if lam == 1:
        return _new([1], [[0]], exact)
    lam = _scalar(lam, exact)
    alpha = np.concatenate([np.array([lam], dtype=object if exact else float), (1 - lam) * W.alpha])
    beta = np.zeros((W.k + 1, W.k + 1), dtype=object if exact else float)
    if exact:
        beta[:] = Fraction(0)
    beta[1:, 1:] = W.beta
    return _new(alpha, beta, exact)


def corner_one(W: StepGraphon, lam) -> StepGraphon:
    """Append a part of mass lambda joined to everything; rescale the rest."""
    _check_lambda(lam)
    exact = W.exact or isinstance(lam, Fraction)
    if lam == 0:
        return W
    if lam == 1:
        return _new([1], [[1]], exact)
    lam = _scalar(lam, exact)
    alpha = np.concatenate([(1 - lam) * W.alpha, np.array([lam], dtype=object if exact else float)])
    beta = np.ones((W.k + 1, W.k + 1), dtype=object if exact else float)
    if exact:
        beta[:] = Fraction(1)
    beta[:-1, :-1] = W.beta
    return _new(alpha, beta, exact)


def permute_parts(W: StepGraphon, order) -> StepGraphon:
    idx = np.asarray(order, dtype=np.int64)
    return _new(W.alpha[idx], W.beta[np.ix_(idx, idx)], W.exact)


def sort_by_degree(W: StepGraphon) -> StepGraphon:
    """Reorder parts so that degrees are nondecreasing (stable)."""
    d = degree_vector(W)
    order = sorted(range(W.k), key=lambda i: d[i])
    if order == list(range(W.k)):
        return W
    return permute_parts(W, order)


def is_degree_sorted(W: StepGraphon, tol: float = 0.0) -> bool:
    d = degree_vector(W)
    return all(d[i] <= d[i + 1] + tol for i in range(W.k - 1))


# ---------------------------------------------------------------------------
# perturbation move


@dataclass(frozen=True)
class PerturbResult:
    epsilon: object
    result: StepGraphon


def perturb(W: StepGraphon, i: int, r: int, s: int) -> PerturbResult:
    """Push mass from block {i, r} to block {i, s} as far as [0, 1] allows.

    The direction is -(1 + [i=r]) alpha_s on {i, r} and (1 + [i=s]) alpha_r
    on {i, s}; it leaves the edge density and every degree other than d_r,
    d_s unchanged. The entry that reaches its bound is set to exactly 0 or 1.
    """
    k = W.k
    if not (1 <= i <= k and 1 <= r < s <= k):
        raise InapplicableMove(f"need 1 <= i <= {k} and 1 <= r < s <= {k}, got i={i}, r={r}, s={s}")
    i0, r0, s0 = i - 1, r - 1, s - 1
    b_ir, b_is = W.beta[i0, r0], W.beta[i0, s0]
    if not b_ir > 0:
        raise InapplicableMove(f"beta[{i},{r}] = 0, nothing to move")
    if not b_is < 1:
        raise InapplicableMove(f"beta[{i},{s}] = 1, no room to move into")
    down = (2 if i == r else 1) * W.alpha[s0]
    up = (2 if i == s else 1) * W.alpha[r0]
    eps_down = b_ir / down
    eps_up = (1 - b_is) / up
    eps = min(eps_down, eps_up)
    beta = W.beta.copy()
    new_ir = 0 if eps_down <= eps_up else b_ir - eps * down
    new_is = 1 if eps_up <= eps_down else b_is + eps * up
    if not W.exact:
        new_ir = min(max(float(new_ir), 0.0), 1.0)
        new_is = min(max(float(new_is), 0.0), 1.0)
    else:
        new_ir, new_is = Fraction(new_ir), Fraction(new_is)
    beta[i0, r0] = beta[r0, i0] = new_ir
    beta[i0, s0] = beta[s0, i0] = new_is
    return PerturbResult(eps, _new(W.alpha, beta, W.exact))


def applicable_moves(W: StepGraphon):
    """All (i, r, s) with r < s, beta_ir > 0 and beta_is < 1, lexicographic."""
    k = W.k
    for i in range(1, k + 1):
        for r in range(1, k + 1):
            if not W.beta[i - 1, r - 1] > 0:
                continue
            for s in range(r + 1, k + 1):
                if W.beta[i - 1, s - 1] < 1:
                    yield i, r, s


@dataclass(frozen=True)
class AscentResult:
    graphon: StepGraphon
    converged: bool
    iterations: int


def ascend(W: StepGraphon, max_iter: int = 10_000) -> AscentResult:
    """Sort by degree and apply the first applicable move until none is left.

    ``converged`` is False when the cap is hit; that is an outcome to report,
    not an error, since nothing guarantees the iteration stops.
    """
    cur = sort_by_degree(W)
    for it in range(max_iter):
        move = next(applicable_moves(cur), None)
        if move is None:
            return AscentResult(cur, True, it)
        cur = sort_by_degree(perturb(cur, *move).result)
    converged = next(applicable_moves(cur), None) is None
    return AscentResult(cur, converged, max_iter)


def split_part(W: StepGraphon, part: int, fraction) -> StepGraphon:
    """Split the top-degree part k into pieces of mass (1-f) alpha_k and f alpha_k.

    Requires a degree-sorted W with beta_1i = 0 for i < k, beta_jk = 1 for
    j >= 2 and f = beta_1k in (0, 1). In the result the first part is joined
    only to the new last part, which is joined to everything; the rest of
    beta is kept. Edge density is unchanged and D(F, .) can only grow.
    """
    k = W.k
    if k < 2:
        raise ValueError("split needs at least two parts")
    if part != k:
        raise ValueError(f"only the last part (k={k}) can be split, got {part}")
    if not is_degree_sorted(W, tol=SUM_TOL):
        raise ValueError("graphon must be degree-sorted")
    b = W.beta
    if any(b[0, j] != 0 for j in range(k - 1)):
        raise ValueError("need beta_1i = 0 for all i < k")
    if any(b[j, k - 1] != 1 for j in range(1, k)):
        raise ValueError("need beta_jk = 1 for all j >= 2")
    f = b[0, k - 1]
    if not 0 < f < 1:
        raise ValueError(f"need 0 < beta_1k < 1, got {f}")
    if abs(float(fraction) - float(f)) > SUM_TOL:
        raise ValueError(f"fraction {fraction} does not equal beta_1k = {f}")
    exact = W.exact
    dtype = object if exact else float
    alpha = np.concatenate([W.alpha[:-1], np.array([(1 - f) * W.alpha[-1], f * W.alpha[-1]], dtype=dtype)])
    beta = np.empty((k + 1, k + 1), dtype=dtype)
    one, zero = _scalar(1, exact), _scalar(0, exact)
    beta[:] = one
    beta[:k, :k] = b
    beta[0, :k] = zero
    beta[:k, 0] = zero
    return _new(alpha, beta, exact)


# ---------------------------------------------------------------------------
# file format


def _parse_number(v):
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, (int, float)):
        return v
    raise ValueError(f"expected a number or 'p/q' string, got {v!r}")


def _dump_number(v):
    if isinstance(v, Fraction):
        return str(v)
    return float(v)


def graphon_from_dict(data: dict) -> StepGraphon:
    if "alpha" not in data or "beta" not in data:
        raise ValueError("graphon file needs 'alpha' and 'beta' fields")
    alpha = [_parse_number(v) for v in data["alpha"]]
    raw = data["beta"]
    k = len(alpha)
    if raw and isinstance(raw[0], list):
        flat = [v for row in raw for v in row]
    else:
        flat = list(raw)
    if len(flat) != k * k:
        raise ValueError(f"beta needs {k * k} entries for {k} parts, got {len(flat)}")
    beta = [[_parse_number(flat[i * k + j]) for j in range(k)] for i in range(k)]
    return StepGraphon(alpha, beta)


def graphon_to_dict(W: StepGraphon) -> dict:
    return {
        "alpha": [_dump_number(v) for v in W.alpha],
        "beta": [_dump_number(v) for v in W.beta.ravel()],
    }


def read_graphon(path: str | Path) -> StepGraphon:
    return graphon_from_dict(json.loads(Path(path).read_text()))


def write_graphon(W: StepGraphon, path: str | Path) -> None:
    Path(path).write_text(json.dumps(graphon_to_dict(W), indent=2) + "\n")


def counterexample(exact: bool = True) -> StepGraphon:
    """Three parts of mass 2/5, 2/5, 1/5 with beta_13 = beta_22 = beta_23 = 1
    and every other entry 0; degrees 1/5, 3/5, 4/5."""
    if exact:
        alpha = [Fraction(2, 5), Fraction(2, 5), Fraction(1, 5)]
    else:
        alpha = [0.4, 0.4, 0.2]
    beta = [[0, 0, 1], [0, 1, 1], [1, 1, 0]]
    return StepGraphon(alpha, beta, exact=exact)
