"""Numerical toolkit for standing waves of -Delta u + omega u = u log u^2.

The package computes and cross-checks the closed-form Gausson profile,
nodal radial excited states obtained by shooting, constrained minimizers
on L^2 spheres, and the spectral certificate that the Gausson is
nondegenerate (kernel of the linearization spanned by its translation
modes only).
"""

from logson.grid import Field, RadialGrid, gradient_sq_norm, integrate, radial_laplacian
from logson.functionals import (
    DefectReport,
    EnergyBreakdown,
    energy,
    entropy,
    log_sobolev_gap,
    nehari_defect,
    pohozaev_defect,
    residual,
    residual_norm,
    w_norm,
)
from logson.gausson import (
    GaussonInvariants,
    gausson_field,
    gausson_invariants,
    gausson_profile,
    scale_solution,
)
from logson.solvers import (
    ShootingConfig,
    SolveReport,
    gradient_flow_sphere,
    nehari_project,
    newton_refine,
    shoot,
)
from logson.spectral import (
    HarmonicSector,
    SectorOperator,
    SpectrumReport,
    assemble_sector,
    certify_nondegeneracy,
    sector_eigenvalue,
    sector_multiplicity,
    sector_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "DefectReport",
    "EnergyBreakdown",
    "Field",
    "GaussonInvariants",
    "HarmonicSector",
    "RadialGrid",
    "SectorOperator",
    "ShootingConfig",
    "SolveReport",
    "SpectrumReport",
    "assemble_sector",
    "certify_nondegeneracy",
    "energy",
    "entropy",
    "gausson_field",
    "gausson_invariants",
    "gausson_profile",
    "gradient_flow_sphere",
    "gradient_sq_norm",
    "integrate",
    "log_sobolev_gap",
    "nehari_defect",
    "nehari_project",
    "newton_refine",
    "pohozaev_defect",
    "radial_laplacian",
    "residual",
    "residual_norm",
    "scale_solution",
    "sector_eigenvalue",
    "sector_multiplicity",
    "sector_spectrum",
    "shoot",
    "w_norm",
]
