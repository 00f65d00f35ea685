"""Hardness constants and admissible parameter ranges.

gamma(d) = 5**lambda(d) is astronomically large for every d, so it only ever
appears through log2(gamma).
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from math import isqrt
from typing import Optional

SLACK = 1e-9
LOG2_5 = math.log2(5)
H0 = 25**2


@dataclass(frozen=True)
class HardnessConstants:
    d: int
    alpha: int
    beta: int
    tau: int
    lam: int
    log2_gamma: float
    h0: int = H0
    q: Optional[float] = None
    D: Optional[float] = None
    c: Optional[float] = None

    def as_dict(self) -> dict:
        return asdict(self)


def constants(d: int, q: Optional[float] = None, D: Optional[float] = None) -> HardnessConstants:
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    alpha = 4
    beta = 16 * alpha**2 * d**4
    lam = 2 * d * beta
    log2_gamma = lam * LOG2_5
    c = q / (8 * D * log2_gamma) if q is not None and D is not None else None
    return HardnessConstants(d, alpha, beta, 2 * d * d + 1, lam, log2_gamma, H0, q, D, c)


def admissible_L_range(n: int, d: int) -> Optional[tuple[int, int]]:
    """Integer interval [tau, floor(n(d^2-1) / (2d^2(d^2+1)))], or None if empty."""
    tau = 2 * d * d + 1
    hi = n * (d * d - 1) // (2 * d * d * (d * d + 1))
    return (tau, hi) if hi >= tau else None


def admissible_r_max(n: int, d: int) -> int:
    """floor(sqrt(n / (2 lambda))); 0 means no admissible r."""
    return isqrt(n // (2 * constants(d).lam))


@dataclass
class TheoremParams:
    n: int
    D: float
    q: float
    log2_h: float
    c: float
    r: float
    n_prime: float
    log2_gamma: float
    checks: dict[str, bool] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return asdict(self)


def theorem_params(n: int, D: float, q: float, log2_h: float, d: int = 4) -> TheoremParams:
    """Evaluate c, r, n' and the size-bound chain of the main theorem at one point."""
    if D < 1:
        raise ValueError(f"D must be at least 1, got {D}")
    if q <= 0:
        raise ValueError(f"q must be positive, got {q}")
    if log2_h < math.log2(3) - SLACK:
        raise ValueError(f"h must be at least 3, got log2 h = {log2_h}")
    lg = constants(d).log2_gamma
    c = q / (8 * D * lg)
    r = log2_h / (4 * D * lg)
    n_prime = n * r / 2
    log2_25 = math.log2(25)
    # log2 of 25 * gamma^(2r) = 25 * h^(1/(2D))
    log2_h_target = log2_25 + 2 * r * lg
    checks = {
        "small_h_branch": c * math.log2(H0) < q,
        "h_at_least_h0": log2_h >= math.log2(H0) - SLACK,
        "h_bound": log2_h_target <= log2_h + SLACK,
        "h_bound_via_D": log2_25 + log2_h / (2 * D) <= log2_h + SLACK,
        "g_bound": n > 0 and log2_h_target <= math.log2(n / 2) + SLACK,
        "sqrt_bound": n / 2 + 25 * math.sqrt(n) <= n,
        "running_time_identity": math.isclose(c * n * log2_h, q * n_prime, rel_tol=1e-9, abs_tol=1e-12),
    }
    return TheoremParams(n, D, q, log2_h, c, r, n_prime, lg, checks)
