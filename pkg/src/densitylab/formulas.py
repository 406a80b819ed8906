"""Closed-form limit densities and the bounds they are compared against."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt


class Unknown:
    """Marker returned where no extremal value is known."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNKNOWN"

    def __str__(self):
        return "unknown"

    def __bool__(self):
        return False


UNKNOWN = Unknown()


def _unit(name: str, x: float) -> None:
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"{name}={x} outside [0, 1]")


@dataclass(frozen=True)
class EtaGamma:
    gamma: float
    eta: float

    @classmethod
    def from_gamma(cls, gamma: float) -> "EtaGamma":
        _unit("gamma", gamma)
        return cls(gamma, 1.0 - sqrt(1.0 - gamma))

    @classmethod
    def from_eta(cls, eta: float) -> "EtaGamma":
        _unit("eta", eta)
        return cls(2.0 * eta - eta * eta, eta)


def eta(gamma: float) -> float:
    return EtaGamma.from_gamma(gamma).eta


def star_lower_bound(gamma: float, k: int) -> float:
    """max(gamma^((k+1)/2), eta + (1-eta) eta^k): the larger of the star
    densities of a clique plus isolated vertices and of its complement."""
    if k < 1:
        raise ValueError("k must be positive")
    e = eta(gamma)
    return max(gamma ** ((k + 1) / 2), e + (1.0 - e) * e**k)


def spider_limit(x: float) -> float:
    e = eta(x)
    return -0.5 * e * (e * e - 3.0)


def banded_limit(x: float) -> float:
    e = eta(x)
    if e <= 0.5:
        return 6.0 * e**3 + 6.0 * (1.0 - 2.0 * e) * e**2
    return 2.0 * e**3 - 6.0 * e**2 + 6.0 * e - 1.0


def _pair_gap(x: float) -> float:
    return spider_limit(x) - banded_limit(x)


def crossing_x0(tol: float = 1e-10) -> float:
    """Root in (0, 1) of spider_limit - banded_limit by bisection.

    The difference is positive near 0, negative on the far side and touches
    zero again at x = 1, so the bracket stays inside the open interval.
    """
    lo, hi = 0.01, 0.99
    assert _pair_gap(lo) > 0 > _pair_gap(hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _pair_gap(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def crossing_x0_closed_form() -> float:
    """Same root from 11 eta^2 - 12 eta + 3 = 0 on the eta <= 1/2 branch."""
    e = (6.0 - sqrt(3.0)) / 11.0
    return 2.0 * e - e * e


def colored_max_density(s: int, t: int, x_b: float, x_g: float):
    """Maximum limit density of K'_{s,t} at blue/green densities (x_b, x_g).

    Returns :data:`UNKNOWN` when sqrt(x_b) + sqrt(x_g) > 1 and s != t.
    """
    if not 2 <= s <= t:
        raise ValueError(f"need 2 <= s <= t, got s={s}, t={t}")
    if x_b < 0 or x_g < 0 or x_b + x_g > 1 + 1e-15:
        raise ValueError(f"need x_b, x_g >= 0 and x_b + x_g <= 1, got ({x_b}, {x_g})")
    if sqrt(x_b) + sqrt(x_g) <= 1:
        return x_b ** (s / 2) * x_g ** (t / 2) * comb(s + t, s)
    if s != t:
        return UNKNOWN
    x_r = max(0.0, 1.0 - x_b - x_g)
    return (x_r / 2) ** s * comb(2 * s, s)


def inducibility_Kss(s: int) -> float:
    if s < 2:
        raise ValueError("s must be at least 2")
    return 0.25**s * comb(2 * s, s)


def kruskal_katona_bound(r: int, x: float) -> float:
    """Upper bound x^(r/2) on the induced K_r density at edge density x."""
    if r < 2:
        raise ValueError("r must be at least 2")
    _unit("x", x)
    return x ** (r / 2)


def lmr_bound(s: int, x: float) -> float:
    """Upper bound C(2s, s) x^s / 2^s on the induced K_{s,s} density."""
    if s < 2:
        raise ValueError("s must be at least 2")
    _unit("x", x)
    return comb(2 * s, s) * x**s / 2**s
