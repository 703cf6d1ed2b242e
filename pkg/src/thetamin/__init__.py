"""Lattice theta functions, difference functionals, and their minimizers.

The package evaluates the two-dimensional lattice theta function, the
difference functional theta(a; z) - beta theta(2a; z), the analytic bound
ledger behind its hexagonal-minimizer classification, and domain sweeps that
locate minimizers or certify divergence.  Hot double sums run on a compiled
kernel when available (``thetamin.kernels.BACKEND`` reports which).
"""

__version__ = "0.1.0"

from .bounds import (BoundReport, Claim, beta0_constant, double_sum_bounds,
                     double_sums_direct, epsilon_a, epsilon_b, p_function,
                     q_function, r_bound, sigma_1_4, verify_sweep,
                     w_lower_bound, y_epsilon_root)
from .errors import (BudgetExceededError, CutoffExceededError,
                     GridOutsideWindowError, IterationLimitError,
                     NotOnGammaError, QuadratureFailureError, ThetaminError)
from .halfplane import (HEXAGONAL_POINT, DomainMembership, GroupElement,
                        Region, UpperHalfPoint, apply, membership, reduce)
from .kernels import BACKEND
from .minimize import (PhaseCell, ScanReport, beta_transition,
                       detect_nonexistence, iterate_2k, phase_report,
                       scan_domain, telescope_value, vertical_line_profile)
from .potentials import (PotentialKind, PotentialSpec, duality_transfer,
                         lattice_energy, minimize_energy)
from .theta1d import (TruncationBudget, tail_mu, tail_nu, theta1d,
                      theta1d_dy, theta1d_envelopes, theta1d_poisson,
                      theta1d_product, theta1d_series, theta3)
from .theta2d import (FunctionalSpec, LatticeSumCutoff, radial_operator,
                      theta2d, theta2d_direct, theta2d_dx, theta2d_dy,
                      theta2d_expansion, theta2d_grid, w_beta)

__all__ = [
    "__version__",
    "BACKEND",
    # halfplane
    "UpperHalfPoint", "GroupElement", "DomainMembership", "Region",
    "HEXAGONAL_POINT", "apply", "reduce", "membership",
    # theta kernels
    "TruncationBudget", "theta1d", "theta1d_series", "theta1d_poisson",
    "theta1d_product", "theta1d_dy", "theta3", "tail_mu", "tail_nu",
    "theta1d_envelopes",
    "FunctionalSpec", "LatticeSumCutoff", "theta2d", "theta2d_direct",
    "theta2d_expansion", "theta2d_grid", "theta2d_dx", "theta2d_dy",
    "w_beta", "radial_operator",
    # bounds ledger
    "sigma_1_4", "r_bound", "beta0_constant", "epsilon_a", "epsilon_b",
    "w_lower_bound", "y_epsilon_root", "p_function", "q_function",
    "double_sum_bounds", "double_sums_direct", "verify_sweep", "Claim",
    "BoundReport",
    # minimizer
    "ScanReport", "PhaseCell", "scan_domain", "vertical_line_profile",
    "detect_nonexistence", "iterate_2k", "telescope_value", "phase_report",
    "beta_transition",
    # potentials
    "PotentialKind", "PotentialSpec", "lattice_energy", "minimize_energy",
    "duality_transfer",
    # errors
    "ThetaminError", "IterationLimitError", "BudgetExceededError",
    "CutoffExceededError", "NotOnGammaError", "QuadratureFailureError",
    "GridOutsideWindowError",
]
