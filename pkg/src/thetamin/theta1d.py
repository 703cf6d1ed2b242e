"""One-dimensional theta function, its derivative, tail sums and envelopes.

Series form      theta(X;Y) = 1 + 2 sum_{n>=1} exp(-pi n^2 X) cos(2 pi n Y)
Poisson form     theta(X;Y) = X^{-1/2} sum_{n in Z} exp(-pi (n-Y)^2 / X)
Product form     theta(X;Y) = prod (1-q^{2n})(1 + q^{2(2n-1)} + 2 q^{2n-1} cos 2 pi Y),
                 q = exp(-pi X)

Every truncated evaluation certifies its discarded tail with a geometric
majorant and records it on the supplied budget.  The series form is efficient
for X >= 1/2, the Poisson form below that; ``theta1d`` dispatches at the
crossover.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernels
from .errors import BudgetExceededError

__all__ = [
    "TruncationBudget",
    "theta1d",
    "theta1d_series",
    "theta1d_poisson",
    "theta1d_product",
    "theta1d_dy",
    "theta3",
    "tail_mu",
    "tail_nu",
    "theta1d_envelopes",
    "ENVELOPE_SERIES_WINDOW_MIN",
    "ENVELOPE_POISSON_WINDOW_MAX",
]

_PI = math.pi

SERIES_POISSON_CROSSOVER = 0.5
ENVELOPE_SERIES_WINDOW_MIN = 0.2          # large-X envelope valid for X > 1/5
ENVELOPE_POISSON_WINDOW_MAX = _PI / (_PI + 2.0)  # small-X envelope valid below


@dataclass
class TruncationBudget:
    """Requested accuracy, term cap, and the certified bound actually achieved.

    A fresh instance (or one per thread) should be passed when the achieved
    bound matters; evaluations overwrite ``achieved_tail_bound``.
    """

    abs_tol: float = 1e-14
    max_terms: int = 10_000
    achieved_tail_bound: float = field(default=math.nan)

    def record(self, tail: float) -> None:
        self.achieved_tail_bound = tail


def _require_positive_width(X: float) -> None:
    if not (X > 0.0) or not math.isfinite(X):
        raise ValueError(f"width parameter X must be positive and finite, got {X}")


def _series_terms_needed(X: float, tol: float, max_terms: int, kind: str) -> tuple[int, float]:
    """Smallest N with certified series tail <= tol; returns (N, tail bound)."""
    n = 0
    while True:
        a = _PI * (n + 1) * (n + 1) * X
        q = math.exp(-_PI * (2 * n + 3) * X)
        if kind == "plain":
            tail = 2.0 * math.exp(-a) / (1.0 - q)
        else:  # weighted by 4 pi n for the Y-derivative
            tail = 4.0 * _PI * math.exp(-a) * ((n + 1) / (1.0 - q) + q / (1.0 - q) ** 2)
        if tail <= tol and q < 0.5:
            return n, tail
        n += 1
        if n > max_terms:
            raise BudgetExceededError(
                f"series tail not below {tol} within {max_terms} terms at X={X}")


def theta1d_series(X: float, Y: float, budget: TruncationBudget | None = None) -> float:
    """Cosine-series evaluation; accurate for X not too small."""
    _require_positive_width(X)
    budget = budget if budget is not None else TruncationBudget()
    n, tail = _series_terms_needed(X, budget.abs_tol, budget.max_terms, "plain")
    budget.record(tail)
    return 1.0 + kernels.theta1d_partial(X, Y, n)


def theta1d_poisson(X: float, Y: float, budget: TruncationBudget | None = None) -> float:
    """Poisson-summed evaluation; accurate for small X."""
    _require_positive_width(X)
    budget = budget if budget is not None else TruncationBudget()
    yr = Y - math.floor(Y + 0.5)  # reduce to [-1/2, 1/2]
    scale = 1.0 / math.sqrt(X)
    n = 0
    while True:
        a = n + 1 - abs(yr)
        b = n + 1 + abs(yr)
        qa = math.exp(-_PI * (2 * a + 1) / X)
        qb = math.exp(-_PI * (2 * b + 1) / X)
        tail = scale * (math.exp(-_PI * a * a / X) / (1.0 - qa)
                        + math.exp(-_PI * b * b / X) / (1.0 - qb))
        if tail <= budget.abs_tol and qa < 0.5:
            break
        n += 1
        if n > budget.max_terms:
            raise BudgetExceededError(
                f"Poisson tail not below {budget.abs_tol} within {budget.max_terms} "
                f"terms at X={X}")
    budget.record(tail)
    return scale * kernels.theta1d_poisson_partial(X, yr, n)


def theta1d_product(X: float, Y: float, n_factors: int) -> float:
    """Truncated Jacobi-triple-product evaluation (third cross-check path)."""
    _require_positive_width(X)
    if n_factors < 1:
        raise ValueError("n_factors must be >= 1")
    c = math.cos(2.0 * _PI * Y)
    out = 1.0
    for n in range(1, n_factors + 1):
        q_even = math.exp(-2.0 * _PI * n * X)
        q_odd = math.exp(-(2 * n - 1) * _PI * X)
        out *= (1.0 - q_even) * (1.0 + q_odd * q_odd + 2.0 * q_odd * c)
    return out


def theta1d(X: float, Y: float, budget: TruncationBudget | None = None) -> float:
    """Combined entry point: series for X >= 1/2, Poisson below."""
    if X >= SERIES_POISSON_CROSSOVER:
        return theta1d_series(X, Y, budget)
    return theta1d_poisson(X, Y, budget)


def theta3(X: float, budget: TruncationBudget | None = None) -> float:
    """theta(X; 0), the classical theta-constant."""
    return theta1d(X, 0.0, budget)


def theta1d_dy(X: float, Y: float, budget: TruncationBudget | None = None) -> float:
    """d/dY theta(X;Y) = -4 pi sum n exp(-pi n^2 X) sin(2 pi n Y), certified."""
    _require_positive_width(X)
    budget = budget if budget is not None else TruncationBudget()
    n, tail = _series_terms_needed(X, budget.abs_tol, budget.max_terms, "dy")
    budget.record(tail)
    return kernels.theta1d_dy_partial(X, Y, n)


def _tail_sum(X: float, weighted: bool, budget: TruncationBudget) -> float:
    """Shared body of mu(X) and nu(X) with a ratio-majorant certificate."""
    _require_positive_width(X)
    total = 0.0
    n = 2
    while True:
        term = math.exp(-_PI * (n * n - 1) * X)
        if weighted:
            term *= n * n
        total += term
        ratio = math.exp(-_PI * (2 * n + 1) * X)
        if weighted:
            ratio *= ((n + 1) / n) ** 2
        if ratio < 0.5:
            tail = term * ratio / (1.0 - ratio)
            if tail <= budget.abs_tol:
                budget.record(tail)
                return total
        n += 1
        if n - 1 > budget.max_terms:
            raise BudgetExceededError(
                f"tail sum not certified within {budget.max_terms} terms at X={X}")


def tail_mu(X: float, budget: TruncationBudget | None = None) -> float:
    """mu(X) = sum_{n>=2} n^2 exp(-pi (n^2-1) X)."""
    return _tail_sum(X, True, budget if budget is not None else TruncationBudget())


def tail_nu(X: float, budget: TruncationBudget | None = None) -> float:
    """nu(X) = sum_{n>=2} exp(-pi (n^2-1) X); termwise below mu."""
    return _tail_sum(X, False, budget if budget is not None else TruncationBudget())


def theta1d_envelopes(X: float) -> tuple[float, float]:
    """Envelope pair (lower, upper) with -upper*sin <= d/dY theta <= -lower*sin.

    Two validity windows cover (0, inf): for X > 1/5 the pair
    4 pi e^{-pi X} (1 -+ mu(X)); for X < pi/(pi+2) the pair
    (pi e^{-pi/(4X)} X^{-3/2}, X^{-3/2}).  Where both apply, the componentwise
    tighter combination is returned.
    """
    _require_positive_width(X)
    lowers, uppers = [], []
    if X > ENVELOPE_SERIES_WINDOW_MIN:
        m = tail_mu(X)
        base = 4.0 * _PI * math.exp(-_PI * X)
        lowers.append(base * (1.0 - m))
        uppers.append(base * (1.0 + m))
    if X < ENVELOPE_POISSON_WINDOW_MAX:
        s = X ** -1.5
        lowers.append(_PI * math.exp(-_PI / (4.0 * X)) * s)
        uppers.append(s)
    return max(lowers), min(uppers)
