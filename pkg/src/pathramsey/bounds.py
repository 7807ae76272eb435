"""Closed-form lower bounds and bounded-difference tail/union bounds.

All calculators are pure functions.  exp of large negative arguments
underflows to exactly 0.0 rather than raising.
"""

import math
import warnings
from dataclasses import dataclass

from .finite_field import is_prime_power


@dataclass(frozen=True)
class TailBound:
    gamma: float       # deviation threshold C*sqrt(n)/(r-2)^2
    sum_sq: float      # sum of squared per-vertex effects
    bound: float       # exp(-2*gamma^2 / sum_sq)
    union: float       # (q^2+q) * bound


def _safe_exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return 0.0 if x < 0 else math.inf


def mcdiarmid(gamma: float, a) -> float:
    """Tail probability bound exp(-2*gamma^2 / sum(a_i^2))."""
    if gamma < 0:
        raise ValueError("gamma must be >= 0")
    a = list(a)
    if not a:
        raise ValueError("need at least one bounded-difference coefficient")
    if any(x < 0 for x in a):
        raise ValueError("bounded-difference coefficients must be >= 0")
    ssq = math.fsum(x * x for x in a)
    if ssq == 0.0:
        # degenerate: a constant function never deviates
        return 1.0 if gamma == 0 else 0.0
    return _safe_exp(-2.0 * gamma * gamma / ssq)


def _check_r(r: int):
    if r < 3:
        raise ValueError("need r >= 3")
    if r == 3:
        warnings.warn(
            "r = 3 gives plane order 1; the coloring construction needs r >= 4",
            stacklevel=3,
        )
        return
    if not is_prime_power(r - 2):
        raise ValueError(f"r - 2 = {r - 2} is not a prime power")


def lower_bound_general(r: int, n: float, d: float, C: float) -> float:
    """Minimum edge count forced for r colors: (n*d/2)*(r-2)^2 - C*sqrt(n)."""
    _check_r(r)
    if n <= 0 or d <= 0 or C < 0:
        raise ValueError("need n > 0, d > 0, C >= 0")
    return (n * d / 2.0) * (r - 2) ** 2 - C * math.sqrt(n)


def lower_bound_path_power(r: int, n: float, k: int, C: float) -> float:
    """Specialization to the kth power of a path."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_r(r)
    if n <= 0 or C < 0:
        raise ValueError("need n > 0, C >= 0")
    return k * n * (r - 2) ** 2 - ((k * k + k) / 2.0) * (r - 2) ** 2 - C * math.sqrt(n)


def make_tail_bound(r: int, n: int, d: float, beta: float, C: float,
                    n_vars: int) -> TailBound:
    """Tail bound for one line count: n_vars partitioned vertices, each
    moving the count by at most r^2*d/(1-beta)."""
    if not 0 < beta < 1:
        raise ValueError("beta must be in (0, 1)")
    gamma = C * math.sqrt(n) / (r - 2) ** 2
    a_i = r * r * d / (1.0 - beta)
    sum_sq = n_vars * a_i * a_i
    if sum_sq == 0:
        bound = 1.0 if gamma == 0 else 0.0
    else:
        bound = _safe_exp(-2.0 * gamma * gamma / sum_sq)
    q = r - 2
    return TailBound(gamma=gamma, sum_sq=sum_sq, bound=bound,
                     union=(q * q + q) * bound)


def loose_tail(r: int, d: float, beta: float, C: float) -> float:
    """The looser published constant exp(-2C^2(1-beta)^2 / (r^8 d^2 beta)),
    reported alongside the rigorous bound for comparison."""
    return _safe_exp(-2.0 * C * C * (1 - beta) ** 2 / (r ** 8 * d * d * beta))


def union_margin(plane_q: int, tail: TailBound) -> float:
    """1 - (q^2+q) * tail.bound; positive certifies the good event has
    positive probability."""
    return 1.0 - (plane_q * plane_q + plane_q) * tail.bound


def min_C_for_margin(r: int, n: int, d: float, beta: float, margin: float,
                     n_vars: int) -> float:
    """Smallest C with union margin >= margin (rigorous tail form)."""
    if not 0 < margin < 1:
        raise ValueError("margin must be in (0, 1)")
    q = r - 2
    lines = q * q + q
    # need exp(-2 gamma^2 / sum_sq) <= (1 - margin) / lines
    target = (1.0 - margin) / lines
    a_i = r * r * d / (1.0 - beta)
    sum_sq = n_vars * a_i * a_i
    gamma = math.sqrt(-math.log(target) * sum_sq / 2.0)
    return gamma * (r - 2) ** 2 / math.sqrt(n)
