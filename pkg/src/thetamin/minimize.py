"""Locating minimizers of the difference functional over the fundamental domain.

The sweep covers {0 <= x <= 1/2, y up to y_max} intersected with the closed
fundamental domain, refines the grid argmin by coordinate pattern search
projected into the closure, and probes the vertical line x = 1/2 at large y
for the square-root divergence that signals a nonexistent minimizer.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .halfplane import HEXAGONAL_POINT, UpperHalfPoint, reduce
from .theta2d import FunctionalSpec, theta2d, theta2d_dy, w_beta, w_beta_grid

__all__ = [
    "ScanReport",
    "PhaseCell",
    "scan_domain",
    "vertical_line_profile",
    "detect_nonexistence",
    "iterate_2k",
    "telescope_value",
    "phase_report",
    "beta_transition",
    "HEX_CLASS_TOL",
]

_S32 = math.sqrt(3.0) / 2.0
_SQRT2 = math.sqrt(2.0)

HEX_CLASS_TOL = 1e-5
PATTERN_MIN_STEP = 1e-9
DIVERGENCE_PROBES = (10.0, 20.0, 40.0, 80.0)


@dataclass(frozen=True)
class ScanReport:
    """Result of one domain sweep.

    ``hexagonal_gap`` is refined_value minus the functional at the hexagonal
    point (so a nonnegative gap means nothing beat the hexagonal candidate);
    ``divergence_evidence`` carries the vertical-line probe heights used by
    the divergence test.
    """

    spec: FunctionalSpec
    grid: str
    best_point: UpperHalfPoint
    best_value: float
    refined_point: UpperHalfPoint
    refined_value: float
    hexagonal_gap: float
    divergence_detected: bool
    divergence_evidence: tuple[tuple[float, ...], tuple[float, ...]]

    def to_dict(self) -> dict:
        return {
            "spec": {"alpha": self.spec.alpha, "beta": self.spec.beta,
                     "ratio": self.spec.ratio, "k": self.spec.k},
            "grid": self.grid,
            "best": {"x": self.best_point.x, "y": self.best_point.y,
                     "value": self.best_value},
            "refined": {"x": self.refined_point.x, "y": self.refined_point.y,
                        "value": self.refined_value},
            "hexagonal_gap": self.hexagonal_gap,
            "divergence_detected": self.divergence_detected,
            "divergence_evidence": {
                "y": list(self.divergence_evidence[0]),
                "value": list(self.divergence_evidence[1]),
            },
        }


def _project(x: float, y: float, y_lo: float, y_hi: float) -> tuple[float, float]:
    """Clamp into {0 <= x <= 1/2, |z| >= 1, y_lo <= y <= y_hi}."""
    x = min(max(x, 0.0), 0.5)
    y = min(max(y, y_lo), y_hi)
    r = 1.0 - x * x
    if r > 0.0 and y * y < r:
        y = math.sqrt(r)
    return x, y


def _pattern_search(f, x0: float, y0: float, step_x: float, step_y: float,
                    y_lo: float, y_hi: float,
                    shrink: float = 0.5,
                    min_step: float = PATTERN_MIN_STEP) -> tuple[float, float, float]:
    """Derivative-free coordinate descent constrained to the closure."""
    x, y = _project(x0, y0, y_lo, y_hi)
    best = f(x, y)
    while max(step_x, step_y) >= min_step:
        moved = False
        for dx, dy in ((step_x, 0.0), (-step_x, 0.0), (0.0, step_y), (0.0, -step_y)):
            cx, cy = _project(x + dx, y + dy, y_lo, y_hi)
            if (cx, cy) == (x, y):
                continue
            v = f(cx, cy)
            if v < best:
                x, y, best = cx, cy, v
                moved = True
        if not moved:
            step_x *= shrink
            step_y *= shrink
    return x, y, best


def _grid_values(spec: FunctionalSpec, xs: np.ndarray, ys: np.ndarray,
                 tol: float, threads: int | None) -> np.ndarray:
    n_workers = threads if threads else 1
    if n_workers <= 1 or xs.size < 2 * n_workers:
        return w_beta_grid(spec, xs, ys, tol)
    chunks = np.array_split(np.arange(xs.size), n_workers)
    out = np.empty(xs.size)
    with ThreadPoolExecutor(max_workers=n_workers) as pool:
        futs = [pool.submit(w_beta_grid, spec, xs[c], ys[c], tol) for c in chunks]
        for c, fut in zip(chunks, futs):
            out[c] = fut.result()
    return out


def scan_domain(spec: FunctionalSpec, nx: int = 128, ny: int = 128,
                y_max: float = 12.0, tol: float = 1e-12,
                threads: int | None = None) -> ScanReport:
    """Grid sweep of the closed fundamental domain plus local refinement."""
    if nx < 16 or ny < 16:
        raise ValueError("nx and ny must be at least 16")
    if y_max < 2.0:
        raise ValueError("y_max must be at least 2")
    y_lo = _S32 * 0.999
    gx = np.linspace(0.0, 0.5, nx)
    gy = np.linspace(y_lo, y_max, ny)
    xs, ys = (a.ravel() for a in np.meshgrid(gx, gy, indexing="ij"))
    keep = xs * xs + ys * ys >= 1.0 - 1e-12
    xs, ys = xs[keep], ys[keep]
    values = _grid_values(spec, xs, ys, tol, threads)
    i = int(np.argmin(values))
    best_point = UpperHalfPoint(float(xs[i]), float(ys[i]))
    best_value = float(values[i])

    def objective(x: float, y: float) -> float:
        return w_beta(spec, UpperHalfPoint(x, y), tol)

    rx, ry, rv = _pattern_search(objective, best_point.x, best_point.y,
                                 0.5 / (nx - 1), (y_max - y_lo) / (ny - 1),
                                 y_lo, y_max)
    hex_value = w_beta(spec, HEXAGONAL_POINT, tol)
    diverges, _, probes, heights = _divergence_probe(spec, 1e-4, tol)
    return ScanReport(
        spec=spec,
        grid=f"{nx}x{ny} on [0,1/2]x[{y_lo:.6g},{y_max:.6g}]",
        best_point=best_point,
        best_value=best_value,
        refined_point=UpperHalfPoint(rx, ry),
        refined_value=rv,
        hexagonal_gap=rv - hex_value,
        divergence_detected=diverges,
        divergence_evidence=(probes, heights),
    )


def vertical_line_profile(spec: FunctionalSpec, y_list: list[float],
                          tol: float = 1e-12) -> list[tuple[float, float, float]]:
    """Values and y-derivatives of the functional along x = 1/2."""
    if any(b <= a for a, b in zip(y_list, y_list[1:])):
        raise ValueError("y_list must be strictly increasing")
    if y_list[0] < _S32 - 1e-9:
        raise ValueError("profile starts below sqrt(3)/2")
    out = []
    for y in y_list:
        z = UpperHalfPoint(0.5, y)
        value = w_beta(spec, z, tol)
        dvalue = (theta2d_dy(spec.alpha, z, tol)
                  - spec.beta * theta2d_dy(spec.second_frequency, z, tol))
        out.append((y, value, dvalue))
    return out


def _divergence_probe(spec: FunctionalSpec, tol: float, eval_tol: float):
    probes = DIVERGENCE_PROBES
    heights = tuple(w_beta(spec, UpperHalfPoint(0.5, y), eval_tol) for y in probes)
    # least-squares fit of c * sqrt(y) through the probe heights
    num = sum(v * math.sqrt(y) for y, v in zip(probes, heights))
    den = sum(probes)
    slope = num / den
    return slope < -tol, slope, probes, heights


def detect_nonexistence(spec: FunctionalSpec, tol: float = 1e-4,
                        eval_tol: float = 1e-12) -> tuple[bool, float]:
    """Fit c*sqrt(y) along x = 1/2; a negative c flags an unbounded infimum.

    The fitted slope approaches sqrt(1/(2 alpha)) (sqrt(ratio^k) - beta) (for
    ratio 2), so divergence triggers exactly for beta beyond the critical
    coupling, up to the threshold ``tol``.
    """
    diverges, slope, _, _ = _divergence_probe(spec, tol, eval_tol)
    return diverges, slope


def telescope_value(alpha: float, beta: float, k: int, z: UpperHalfPoint,
                    tol: float = 1e-12) -> float:
    """Iterated decomposition: ((sqrt2)^k - beta) theta(2^k a; z)
    + sum_{n<k} (sqrt2)^n (theta(2^n a; z) - sqrt2 theta(2^{n+1} a; z))."""
    each = tol / (2.0 ** (k / 2.0 + 2) + abs(beta) + 2.0)
    total = (_SQRT2 ** k - beta) * theta2d(alpha * 2.0 ** k, z, each)
    for n in range(k):
        total += _SQRT2 ** n * (theta2d(alpha * 2.0 ** n, z, each)
                                - _SQRT2 * theta2d(alpha * 2.0 ** (n + 1), z, each))
    return total


def iterate_2k(alpha: float, beta: float, k: int, tol: float = 1e-12,
               nx: int = 128, ny: int = 128, y_max: float = 12.0,
               threads: int | None = None) -> ScanReport:
    """Scan the iterated functional theta(a; z) - beta theta(2^k a; z).

    Also cross-checks the telescoping decomposition against the direct
    evaluation at a fixed set of points before scanning.
    """
    if alpha < 1.0:
        raise ValueError("iterated scan expects alpha >= 1")
    spec = FunctionalSpec(alpha, beta, 2.0, k)
    for x, y in ((0.5, _S32), (0.25, 1.3), (0.0, 2.0), (0.4, 1.1)):
        z = UpperHalfPoint(x, y)
        direct = w_beta(spec, z, tol)
        tele = telescope_value(alpha, beta, k, z, tol)
        if abs(direct - tele) > 16.0 * tol * (1.0 + abs(direct)):
            raise ArithmeticError(
                f"telescoping mismatch at z=({x},{y}): {direct} vs {tele}")
    return scan_domain(spec, nx, ny, y_max, tol, threads)


@dataclass(frozen=True)
class PhaseCell:
    """One (alpha, beta) cell of the existence/shape table."""

    alpha: float
    beta: float
    k: int
    exists: bool
    minimizer_class: str | None  # "hexagonal" or "other" when exists
    best_x: float | None
    best_y: float | None
    best_value: float | None
    hexagonal_gap: float | None

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha, "beta": self.beta, "k": self.k,
            "exists": self.exists, "class": self.minimizer_class,
            "best_x": self.best_x, "best_y": self.best_y,
            "best_value": self.best_value, "gap": self.hexagonal_gap,
        }


def phase_report(alpha_list: list[float], beta_list: list[float], k: int = 1,
                 tol: float = 1e-12, nx: int = 64, ny: int = 64,
                 y_max: float = 8.0, threads: int | None = None) -> list[PhaseCell]:
    """Classify each (alpha, beta) cell as hexagonal / other / nonexistent."""
    if not alpha_list or not beta_list:
        raise ValueError("alpha_list and beta_list must be nonempty")
    cells = []
    for alpha in alpha_list:
        for beta in beta_list:
            spec = FunctionalSpec(alpha, beta, 2.0, k)
            diverges, _ = detect_nonexistence(spec, eval_tol=tol)
            if diverges:
                cells.append(PhaseCell(alpha, beta, k, False, None,
                                       None, None, None, None))
                continue
            report = scan_domain(spec, nx, ny, y_max, tol, threads)
            reduced, _ = reduce(report.refined_point)
            hexagonal = (abs(reduced.x - 0.5) <= HEX_CLASS_TOL
                         and abs(reduced.y - _S32) <= HEX_CLASS_TOL)
            cells.append(PhaseCell(
                alpha, beta, k, True,
                "hexagonal" if hexagonal else "other",
                reduced.x, reduced.y, report.refined_value,
                report.hexagonal_gap))
    return cells


def beta_transition(alpha: float = 1.0, lo: float = 1.0, hi: float = 2.0,
                    resolution: float = 1e-3, tol: float = 1e-4) -> tuple[float, float]:
    """Bisect the existence/nonexistence transition in beta at fixed alpha.

    Each probe is a divergence test, not a full scan; returns the bracketing
    (beta_exists, beta_diverges) pair at the requested resolution.
    """
    def diverges(beta: float) -> bool:
        return detect_nonexistence(FunctionalSpec(alpha, beta), tol)[0]

    if diverges(lo) or not diverges(hi):
        raise ValueError("initial interval does not bracket the transition")
    while hi - lo > resolution:
        mid = 0.5 * (lo + hi)
        if diverges(mid):
            hi = mid
        else:
            lo = mid
    return lo, hi
