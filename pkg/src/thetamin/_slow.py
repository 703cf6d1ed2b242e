"""NumPy reference kernels.

Same call signatures as the compiled module ``thetamin._fast``; these are the
import-time fallback and the parity baseline for the extension.  All functions
compute plain partial sums -- truncation choices and tail certificates live in
the calling modules.

Lattice terms are indexed so that E = y n^2 + (m + n x)^2 / y, which equals
|n z + m|^2 / y; summed over a symmetric square window this is the same set of
terms as |m z + n|^2 / y.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "theta1d_partial",
    "theta1d_poisson_partial",
    "theta1d_dy_partial",
    "lattice_sum",
    "lattice_sum_dy",
    "lattice_sums_radial",
    "lattice_sum_grid",
]

_PI = math.pi


def theta1d_partial(X: float, Y: float, n_terms: int) -> float:
    """sum_{n=1..N} 2 exp(-pi n^2 X) cos(2 pi n Y)."""
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    return float(2.0 * np.sum(np.exp(-_PI * n * n * X) * np.cos(2.0 * _PI * n * Y)))


def theta1d_poisson_partial(X: float, Y: float, n_terms: int) -> float:
    """sum_{n=-N..N} exp(-pi (n - Y)^2 / X), without the X^{-1/2} prefactor."""
    n = np.arange(-n_terms, n_terms + 1, dtype=np.float64)
    d = n - Y
    return float(np.sum(np.exp(-_PI * d * d / X)))


def theta1d_dy_partial(X: float, Y: float, n_terms: int) -> float:
    """-4 pi sum_{n=1..N} n exp(-pi n^2 X) sin(2 pi n Y)."""
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    return float(-4.0 * _PI * np.sum(n * np.exp(-_PI * n * n * X) * np.sin(2.0 * _PI * n * Y)))


def _window(radius: int):
    idx = np.arange(-radius, radius + 1, dtype=np.float64)
    n, m = np.meshgrid(idx, idx, indexing="ij")
    return n, m


def lattice_sum(alpha: float, x: float, y: float, radius: int) -> float:
    """sum over |n|,|m| <= R of exp(-pi alpha E)."""
    n, m = _window(radius)
    e = y * n * n + (m + n * x) ** 2 / y
    return float(np.sum(np.exp(-_PI * alpha * e)))


def lattice_sum_dy(alpha: float, x: float, y: float, radius: int) -> float:
    """pi alpha sum (-n^2 + (m+nx)^2/y^2) exp(-pi alpha E), the y-derivative."""
    n, m = _window(radius)
    u2 = ((m + n * x) / y) ** 2
    e = y * n * n + u2 * y
    return float(_PI * alpha * np.sum((u2 - n * n) * np.exp(-_PI * alpha * e)))


def lattice_sums_radial(alpha: float, x: float, y: float, radius: int):
    """The four double sums entering the radial second-order identity.

    Returns (quad_a, sq_2a, sq_a, quad_2a) where, with w = n^2 - (m+nx)^2/y^2,

      quad_a  = sum w^2 exp(-pi a E)      sq_a    = sum n^2 exp(-pi a E)
      quad_2a = sum w^2 exp(-2 pi a E)    sq_2a   = sum n^2 exp(-2 pi a E)
    """
    n, m = _window(radius)
    u2 = ((m + n * x) / y) ** 2
    e = y * n * n + u2 * y
    w2 = (n * n - u2) ** 2
    n2 = n * n
    ea = np.exp(-_PI * alpha * e)
    e2a = ea * ea
    return (float(np.sum(w2 * ea)), float(np.sum(n2 * e2a)),
            float(np.sum(n2 * ea)), float(np.sum(w2 * e2a)))


def lattice_sum_grid(alpha: float, xs: np.ndarray, ys: np.ndarray,
                     radius: int, chunk: int = 512) -> np.ndarray:
    """Vectorized ``lattice_sum`` over flat coordinate arrays."""
    xs = np.asarray(xs, dtype=np.float64).ravel()
    ys = np.asarray(ys, dtype=np.float64).ravel()
    idx = np.arange(-radius, radius + 1, dtype=np.float64)
    n, m = np.meshgrid(idx, idx, indexing="ij")
    n = n.ravel()[None, :]
    m = m.ravel()[None, :]
    out = np.empty(xs.size, dtype=np.float64)
    for lo in range(0, xs.size, chunk):
        hi = min(lo + chunk, xs.size)
        x = xs[lo:hi, None]
        y = ys[lo:hi, None]
        e = y * n * n + (m + n * x) ** 2 / y
        out[lo:hi] = np.sum(np.exp(-_PI * alpha * e), axis=1)
    return out
