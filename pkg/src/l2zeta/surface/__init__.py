"""Omega, its branch points and the Riemann surface of the zeta function."""

from .monodromy import (INF, ClearedOmega, CoincidentPathFailure, DeflationRequired,
                        branch_candidates, cycle_type, discriminant_zeros, monodromy_at)
from .omega import (N_MAX, OmegaPoly, SymbolicLimitExceeded, build_omega, omega_interpolated,
                    omega_numeric_at, omega_sigma_form, omega_symbolic, sheet_values,
                    substitute_sigmas)
from .report import (BaseSheetAmbiguous, BranchPoint, PolePoint, SurfaceData, SurfaceReport,
                     alpha_scaling_residual, analyze_surface, c_set_check, functional_eq_check,
                     functional_factor, galois_check, in_c_set, phi_component,
                     quotient_pole_compare, surface_report, tau_stable)
