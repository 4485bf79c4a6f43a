"""Independent numerical checks of the closed forms."""

from .audit import TABLE_1, table_audit
from .finite_diff import derivative
from .quadrature import QuadratureSpec, integrate, integrate_half_line
from .residuals import (
    ResidualReport,
    boundary_residual,
    hermiticity_defect,
    ode_residual,
    operator_eigenvalue_check,
)

__all__ = [
    "TABLE_1", "table_audit", "derivative", "QuadratureSpec", "integrate",
    "integrate_half_line", "ResidualReport", "boundary_residual",
    "hermiticity_defect", "ode_residual", "operator_eigenvalue_check",
]
