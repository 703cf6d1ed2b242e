"""Backend selection: compiled kernels when available, NumPy otherwise.

``BACKEND`` reports which one was picked; benchmarks/bench_kernels.py compares
the two on representative workloads.
"""

try:
    from . import _fast as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _slow as _impl

    BACKEND = "numpy"

theta1d_partial = _impl.theta1d_partial
theta1d_poisson_partial = _impl.theta1d_poisson_partial
theta1d_dy_partial = _impl.theta1d_dy_partial
lattice_sum = _impl.lattice_sum
lattice_sum_dy = _impl.lattice_sum_dy
lattice_sums_radial = _impl.lattice_sums_radial
lattice_sum_grid = _impl.lattice_sum_grid

__all__ = [
    "BACKEND",
    "theta1d_partial",
    "theta1d_poisson_partial",
    "theta1d_dy_partial",
    "lattice_sum",
    "lattice_sum_dy",
    "lattice_sums_radial",
    "lattice_sum_grid",
]
