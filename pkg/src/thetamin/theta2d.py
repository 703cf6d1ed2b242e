"""Two-dimensional lattice theta function and the difference functional.

theta(alpha; z) = sum over integer pairs of exp(-alpha pi |m z + n|^2 / y),
the Gaussian lattice energy at unit covolume, together with

  * a direct double-sum path with a certified Gaussian-tail window,
  * the 1-d expansion path  theta = sqrt(y/a) [ theta3(y/a)
        + 2 sum_{n>=1} exp(-a pi y n^2) theta1d(y/a; n x) ],
  * x- and y-derivatives in the representation matching each identity,
  * the radial second-order operator d^2/dy^2 + (2/y) d/dy restricted to the
    vertical line x = 1/2.

The difference functional is w(alpha, beta; z) = theta(alpha; z)
- beta * theta(r^k alpha; z) with frequency ratio r (= 2 throughout the
claims; the field exists for the iterated variant and exploration).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import CutoffExceededError, NotOnGammaError
from .halfplane import UpperHalfPoint
from .theta1d import TruncationBudget, theta1d, theta1d_dy, theta3

__all__ = [
    "FunctionalSpec",
    "LatticeSumCutoff",
    "theta2d",
    "theta2d_direct",
    "theta2d_direct_with_cutoff",
    "theta2d_expansion",
    "theta2d_grid",
    "theta2d_dx",
    "theta2d_dy",
    "w_beta",
    "w_beta_grid",
    "radial_operator",
    "DEFAULT_RADIUS_CAP",
]

_PI = math.pi
_SQRT2 = math.sqrt(2.0)

DEFAULT_RADIUS_CAP = 2000
GAMMA_LINE_TOL = 1e-12


@dataclass(frozen=True)
class FunctionalSpec:
    """Parameters (alpha, beta) of the difference functional.

    The second frequency is ratio**k * alpha; the standard functional has
    ratio=2, k=1.  k > 1 gives the iterated variant, k = 0 the degenerate
    multiple (1 - beta) * theta(alpha; z).
    """

    alpha: float
    beta: float
    ratio: float = 2.0
    k: int = 1

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise ValueError("alpha must be positive")
        if not self.ratio > 1.0:
            raise ValueError("ratio must exceed 1")
        if self.k < 0:
            raise ValueError("k must be >= 0")

    @property
    def second_frequency(self) -> float:
        return self.alpha * self.ratio ** self.k


@dataclass(frozen=True)
class LatticeSumCutoff:
    """Square window half-width used for a double sum and its certified tail."""

    radius: int
    tail_bound: float


def _gram_lambda_min(x: float, y: float) -> float:
    """Smallest eigenvalue of the Gram form [[1, x], [x, x^2 + y^2]]."""
    t = 1.0 + x * x + y * y
    return (t - math.sqrt(t * t - 4.0 * y * y)) / 2.0


def _window_radius(c: float, power: int, coeff: float, tol: float,
                   radius_cap: int, min_ck2: float = 0.0) -> tuple[int, float]:
    """Smallest R with sum_{k>R} coeff * k^power * exp(-c k^2) <= tol.

    Terms outside the window lie on max-norm shells k with at most 8k points;
    the shell-to-shell ratio is below ((R+2)/(R+1))^power * exp(-c(2R+3)),
    giving a geometric certificate once that ratio drops under 1/2.
    """
    r = 1
    while True:
        k1 = r + 1
        rho = ((r + 2) / k1) ** power * math.exp(-c * (2 * r + 3))
        if rho < 0.5 and c * k1 * k1 >= min_ck2:
            tail = coeff * k1 ** power * math.exp(-c * k1 * k1) / (1.0 - rho)
            if tail <= tol:
                return r, tail
        r += 1
        if r > radius_cap:
            raise CutoffExceededError(
                f"window radius above cap {radius_cap} (c={c:.3g}, tol={tol:.3g})")


def theta2d_direct_with_cutoff(alpha: float, z: UpperHalfPoint, tol: float,
                               radius_cap: int = DEFAULT_RADIUS_CAP,
                               ) -> tuple[float, LatticeSumCutoff]:
    """Direct double sum plus the certificate for the discarded terms."""
    if not (alpha > 0.0 and tol > 0.0):
        raise ValueError("alpha and tol must be positive")
    c = _PI * alpha * _gram_lambda_min(z.x, z.y) / z.y
    radius, tail = _window_radius(c, 1, 8.0, tol, radius_cap)
    value = kernels.lattice_sum(alpha, z.x, z.y, radius)
    return value, LatticeSumCutoff(radius, tail)


def theta2d_direct(alpha: float, z: UpperHalfPoint, tol: float,
                   radius_cap: int = DEFAULT_RADIUS_CAP) -> float:
    return theta2d_direct_with_cutoff(alpha, z, tol, radius_cap)[0]


def _expansion_outer_terms(apy: float, bound: float, tol: float) -> tuple[int, float]:
    """Outer terms N and tail for sums majorized by bound * exp(-apy n^2)."""
    n = 0
    while True:
        q = math.exp(-apy * (2 * n + 3))
        tail = bound * math.exp(-apy * (n + 1) ** 2) / (1.0 - q)
        if tail <= tol and q < 0.5:
            return n, tail
        n += 1
        if n > 10_000:
            raise CutoffExceededError(f"expansion outer sum stuck at apy={apy}")


def theta2d_expansion(alpha: float, z: UpperHalfPoint, tol: float) -> float:
    """Evaluation through the 1-d theta expansion, tail-certified."""
    if not (alpha > 0.0 and tol > 0.0):
        raise ValueError("alpha and tol must be positive")
    x, y = z.x, z.y
    s = math.sqrt(y / alpha)
    big_x = y / alpha
    apy = _PI * alpha * y
    t3 = theta3(big_x)
    n_outer, _ = _expansion_outer_terms(apy, 2.0 * s * t3, tol / 2.0)
    inner = TruncationBudget(abs_tol=tol / (4.0 * s * (n_outer + 1)))
    total = s * theta1d(big_x, 0.0, inner)
    for n in range(1, n_outer + 1):
        total += 2.0 * s * math.exp(-apy * n * n) * theta1d(big_x, n * x, inner)
    return total


def theta2d(alpha: float, z: UpperHalfPoint, tol: float = 1e-12) -> float:
    """Dispatching entry point; both paths agree within their certificates."""
    if _PI * alpha * z.y >= 1.5:
        return theta2d_expansion(alpha, z, tol)
    return theta2d_direct(alpha, z, tol)


def theta2d_grid(alpha: float, xs: np.ndarray, ys: np.ndarray,
                 tol: float = 1e-12,
                 radius_cap: int = DEFAULT_RADIUS_CAP) -> np.ndarray:
    """Direct-path evaluation over flat coordinate arrays at a common window."""
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    t = 1.0 + xs * xs + ys * ys
    lam = (t - np.sqrt(t * t - 4.0 * ys * ys)) / 2.0
    c_min = float(np.min(_PI * alpha * lam / ys))
    radius, _ = _window_radius(c_min, 1, 8.0, tol, radius_cap)
    return kernels.lattice_sum_grid(alpha, xs, ys, radius)


def w_beta(spec: FunctionalSpec, z: UpperHalfPoint, tol: float = 1e-12) -> float:
    """theta(alpha; z) - beta * theta(ratio^k alpha; z)."""
    each = tol / (1.0 + abs(spec.beta))
    value = theta2d(spec.alpha, z, each)
    if spec.beta != 0.0:
        value -= spec.beta * theta2d(spec.second_frequency, z, each)
    return value


def w_beta_grid(spec: FunctionalSpec, xs: np.ndarray, ys: np.ndarray,
                tol: float = 1e-12) -> np.ndarray:
    each = tol / (1.0 + abs(spec.beta))
    out = theta2d_grid(spec.alpha, xs, ys, each)
    if spec.beta != 0.0:
        out = out - spec.beta * theta2d_grid(spec.second_frequency, xs, ys, each)
    return out


def _dy_series_majorant(X: float) -> float:
    """Upper bound for max_Y |d/dY theta1d(X; Y)| = 4 pi sum n exp(-pi n^2 X)."""
    total = 0.0
    n = 1
    while True:
        term = 4.0 * _PI * n * math.exp(-_PI * n * n * X)
        total += term
        ratio = ((n + 1) / n) * math.exp(-_PI * (2 * n + 1) * X)
        if ratio < 0.5:
            return total + term * ratio / (1.0 - ratio)
        n += 1


def _weighted_outer_terms(apy: float, bound: float, tol: float) -> tuple[int, float]:
    """Outer terms N and tail for sums majorized by bound * n * exp(-apy n^2)."""
    n = 0
    while True:
        k1 = n + 1
        rho = ((n + 2) / k1) * math.exp(-apy * (2 * n + 3))
        if rho < 0.5:
            tail = bound * k1 * math.exp(-apy * k1 * k1) / (1.0 - rho)
            if tail <= tol:
                return n, tail
        n += 1
        if n > 10_000:
            raise CutoffExceededError(f"outer derivative sum stuck at apy={apy}")


def theta2d_dx(alpha: float, z: UpperHalfPoint, tol: float = 1e-12) -> float:
    """d/dx theta(alpha; z) by termwise differentiation of the expansion."""
    x, y = z.x, z.y
    s = math.sqrt(y / alpha)
    big_x = y / alpha
    apy = _PI * alpha * y
    d_bound = _dy_series_majorant(big_x)
    n_outer, _ = _weighted_outer_terms(apy, 2.0 * s * d_bound, tol / 2.0)
    inner = TruncationBudget(abs_tol=tol / (8.0 * s * (n_outer + 1) ** 2))
    total = 0.0
    for n in range(1, n_outer + 1):
        total += 2.0 * s * math.exp(-apy * n * n) * n * theta1d_dy(big_x, n * x, inner)
    return total


def theta2d_dy(alpha: float, z: UpperHalfPoint, tol: float = 1e-12,
               radius_cap: int = DEFAULT_RADIUS_CAP) -> float:
    """d/dy theta(alpha; z) from the direct sum, certified window."""
    x, y = z.x, z.y
    c = _PI * alpha * _gram_lambda_min(x, y) / y
    radius, _ = _window_radius(c, 3, 8.0 * c / y, tol, radius_cap, min_ck2=1.0)
    return kernels.lattice_sum_dy(alpha, x, y, radius)


def radial_sums(alpha: float, y: float, tol: float = 1e-13,
                radius_cap: int = DEFAULT_RADIUS_CAP) -> tuple[float, float, float, float]:
    """The four structural double sums on the line x = 1/2, certified to tol.

    Returns (quad_a, sq_2a, sq_a, quad_2a): the quartic-weight and n^2-weight
    sums at frequencies alpha and 2*alpha.
    """
    x = 0.5
    pa = _PI * alpha
    c1 = pa * _gram_lambda_min(x, y) / y
    c2 = 2.0 * c1
    radius = 1
    for c, freq, power, min_ck2 in ((c1, pa, 5, 2.0), (c2, 2.0 * pa, 3, 1.0),
                                    (c1, pa, 3, 1.0), (c2, 2.0 * pa, 5, 2.0)):
        # quartic weight: w^2 <= (E/y)^2 = (freq E)^2/(freq y)^2; n^2 weight:
        # n^2 <= E y / lambda = (freq E) / c, with freq E >= c k^2 per shell
        coeff = 8.0 * c * c / (freq * y) ** 2 if power == 5 else 8.0
        r, _ = _window_radius(c, power, coeff, tol, radius_cap, min_ck2)
        radius = max(radius, r)
    return kernels.lattice_sums_radial(alpha, x, y, radius)


def radial_operator(spec: FunctionalSpec, z: UpperHalfPoint,
                    tol: float = 1e-10,
                    radius_cap: int = DEFAULT_RADIUS_CAP) -> float:
    """(d^2/dy^2 + (2/y) d/dy) of the difference functional on x = 1/2.

    Uses the exact four-double-sum identity; requires ratio=2, k=1 and a
    point on the vertical line.
    """
    if spec.ratio != 2.0 or spec.k != 1:
        raise ValueError("radial operator is defined for ratio=2, k=1")
    if abs(z.x - 0.5) > GAMMA_LINE_TOL:
        raise NotOnGammaError(f"x = {z.x} is not 1/2 within {GAMMA_LINE_TOL}")
    alpha, y = spec.alpha, z.y
    pa = _PI * alpha
    weights = (pa ** 2, 4.0 * _SQRT2 * pa / y, 2.0 * pa / y, 4.0 * _SQRT2 * pa ** 2)
    sum_tol = tol / (4.0 * max(weights))
    quad_a, sq_2a, sq_a, quad_2a = radial_sums(alpha, y, sum_tol, radius_cap)
    return (weights[0] * quad_a + weights[1] * sq_2a
            - weights[2] * sq_a - weights[3] * quad_2a)
