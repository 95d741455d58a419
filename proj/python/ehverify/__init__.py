"""Curvature and energy verification for bolt metric families."""

from ._core import (
    Error,
    FamilySpec,
    bolt_hawking_mass,
    construct,
    curvature,
    einstein_check,
    fsq,
    smoothness_h,
    smoothness_residual,
    solve_depressed_cubic,
    total_energy,
    type2_constants,
    weyl_asd_residual,
)

__all__ = [
    "Error",
    "FamilySpec",
    "bolt_hawking_mass",
    "construct",
    "curvature",
    "einstein_check",
    "fsq",
    "smoothness_h",
    "smoothness_residual",
    "solve_depressed_cubic",
    "total_energy",
    "type2_constants",
    "weyl_asd_residual",
]
