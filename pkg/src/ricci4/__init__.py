"""Ricci flow on the four-dimensional maximal geometries.

Structure constants, curvature of diagonal left-invariant metrics, an adaptive
flow integrator with monitors, closed-form solutions and the diagonal-family
conditions for the Lie-group classes; plus the product geometries.
"""
from .lie_algebra import (A_CLASSES, B_CLASSES, ALL_CLASSES, GeometrySpec, SpecError,
                          StructureConstants, build_structure_constants, transform_basis,
                          jacobi_residual, solve_sol_mn, admissible_mn)
from .curvature import (DiagonalMetric, CurvatureReport, ricci_tensor, sectional_curvature,
                        scalar_curvature, curvature_norm, u_operator)
from .flow import (FlowProblem, IntegrateOptions, FlowTrajectory, FlowError, OffDiagonalRicci,
                   StepUnderflowError, integrate, classify_singularity, asymptotic_profile,
                   monitors_for)
from .diagonalization import (lambda_template, frame_constants, offdiag_ricci,
                              family_condition, verify_preservation)
from .closed_forms import solution_form, exact_metric, implicit_residual, envelope

__version__ = "0.1.0"
