"""Exact SU(2) Yang-Mills plane waves: construction, residuals, verification."""

from .su2 import (
    IDENTITY,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    LieElement,
    commutator,
    decompose,
    minus_i_commutator,
    pauli,
    rotated_basis,
    rotated_coeffs,
    trace_inner,
)
from .fields import (
    AnsatzParams,
    ColorVector,
    SpacetimePoint,
    electric_field_analytic,
    electric_field_numeric,
    field_strength,
    field_strength_norm,
    magnetic_field_analytic,
    magnetic_field_numeric,
    scalar_potential,
    vector_potential,
)
from .residuals import (
    ResidualSample,
    ampere_residual,
    bianchi_residual,
    gauss_residual,
    grid_points,
    max_residual_norm,
    residual_sample,
)
from .constraints import (
    ClassificationError,
    ConstraintVector,
    FamilySolution,
    NotASolution,
    TrivialZeroField,
    branch_projection,
    build_family_i,
    build_family_ii,
    build_family_iii,
    classify,
    nearest_branch,
    nine_constraints,
    normalized_constraints,
    oracle_constraints,
    refine_alphas,
    scan_families,
)
from .observables import (
    EnergyProfile,
    energy_closed_form,
    energy_density,
    energy_profile,
    node_locations,
    point_at_phase,
    poynting,
    time_averaged_electric,
)

__version__ = "0.1.0"

__all__ = [
    "IDENTITY", "SIGMA_X", "SIGMA_Y", "SIGMA_Z",
    "LieElement", "commutator", "decompose", "minus_i_commutator", "pauli",
    "rotated_basis", "rotated_coeffs", "trace_inner",
    "AnsatzParams", "ColorVector", "SpacetimePoint",
    "scalar_potential", "vector_potential",
    "electric_field_analytic", "electric_field_numeric",
    "magnetic_field_analytic", "magnetic_field_numeric",
    "field_strength", "field_strength_norm",
    "ResidualSample", "gauss_residual", "ampere_residual", "bianchi_residual",
    "residual_sample", "grid_points", "max_residual_norm",
    "ConstraintVector", "nine_constraints", "normalized_constraints",
    "FamilySolution", "NotASolution", "TrivialZeroField", "ClassificationError",
    "build_family_i", "build_family_ii", "build_family_iii",
    "branch_projection", "classify", "nearest_branch", "oracle_constraints",
    "refine_alphas", "scan_families",
    "EnergyProfile", "energy_density", "energy_closed_form", "energy_profile",
    "node_locations", "point_at_phase", "poynting", "time_averaged_electric",
    "__version__",
]
