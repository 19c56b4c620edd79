"""bergmanlab: finite-section Hankel/Toeplitz operator experiments on
Bergman spaces of complete Reinhardt domains in C^2."""

from .approx import PolynomialApproximation, PowerSeries, approximate_by_polynomial
from .compactness import (
    DiskSymbolProfile,
    classify_symbol_on_disks,
    dichotomy_experiment,
    monomial_ray_functional,
    singular_sequence_functional,
    sequence_verdict,
    singular_tail_diagnostic,
    slice_decomposition_residual,
)
from .disk import (
    DiskFunction,
    disk_hankel_gram,
    disk_inner,
    disk_kernel,
    disk_project,
    zheng_product_norm,
)
from .diskexp import gram_convergence_experiment, projection_convergence_experiment
from .moments import MomentTable, monomial_norm
from .sections import (
    OperatorSection,
    graded_indices,
    hankel_product_section,
    semicommutator_identity_residual,
    toeplitz_section,
)
from .shadow import (
    BoundaryDisk,
    ShadowRegion,
    build_shadow,
    detect_boundary_disks,
    slice_limit_experiment,
    slice_radius,
    vertical_slice_radius,
)
from .symbols import MonomialSymbol, parse_symbol

__version__ = "0.1.0"

__all__ = [
    "BoundaryDisk",
    "DiskFunction",
    "DiskSymbolProfile",
    "MomentTable",
    "MonomialSymbol",
    "OperatorSection",
    "PolynomialApproximation",
    "PowerSeries",
    "ShadowRegion",
    "approximate_by_polynomial",
    "build_shadow",
    "classify_symbol_on_disks",
    "detect_boundary_disks",
    "dichotomy_experiment",
    "disk_hankel_gram",
    "disk_inner",
    "disk_kernel",
    "disk_project",
    "graded_indices",
    "gram_convergence_experiment",
    "hankel_product_section",
    "monomial_norm",
    "monomial_ray_functional",
    "singular_sequence_functional",
    "parse_symbol",
    "projection_convergence_experiment",
    "semicommutator_identity_residual",
    "sequence_verdict",
    "singular_tail_diagnostic",
    "slice_decomposition_residual",
    "slice_limit_experiment",
    "slice_radius",
    "toeplitz_section",
    "vertical_slice_radius",
    "zheng_product_norm",
]
