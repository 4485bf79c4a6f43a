"""Generalized j-th order quantum mechanics: roots of negative unity, closed-form
infinite-well states, j-fold moments and uncertainties, and a numeric oracle."""

__version__ = "0.1.0"

from .constants import ELECTRON, PhysicalConstants, load_constants  # noqa: E402
from .geometry import (  # noqa: E402
    GeometryOrder,
    OperatorPhases,
    commutator_phase,
    dispersion_energy,
    lj_norm,
    minkowski_distance,
    operator_phases,
    roots_of_negative_unity,
)
from .states import (  # noqa: E402
    BoundState,
    FreeState,
    WellConfig,
    bound_state,
    dispersion_consistency_ratio,
    eigenenergy_closed_form,
    exact_normalization_constant,
    free_state_2g,
    free_state_ng,
    normalization_constant,
    quantization_wavenumber,
)
from .statistics import (  # noqa: E402
    central_moment,
    expectation,
    generalized_uncertainty,
    heisenberg_check,
    probability_density,
)

__all__ = [
    "ELECTRON", "PhysicalConstants", "load_constants",
    "GeometryOrder", "OperatorPhases", "commutator_phase", "dispersion_energy",
    "lj_norm", "minkowski_distance", "operator_phases", "roots_of_negative_unity",
    "BoundState", "FreeState", "WellConfig", "bound_state",
    "dispersion_consistency_ratio", "eigenenergy_closed_form",
    "exact_normalization_constant", "free_state_2g", "free_state_ng",
    "normalization_constant", "quantization_wavenumber",
    "central_moment", "expectation", "generalized_uncertainty", "heisenberg_check",
    "probability_density",
]
