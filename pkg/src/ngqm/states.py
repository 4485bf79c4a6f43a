"""Closed-form free states and infinite-well bound states for j = 1..4.

Energies are in eV, lengths in nm, wavenumbers in 1/nm.  Well states live on
[0, l].  The quantization conditions are

    j = 2:  k_n l = (n + 1/2) pi
    j = 3:  (sqrt(3)/2) k_n l = (n + 1/2) pi
    j = 4:  (1/sqrt(2)) k_n l = (n + 1/2) pi

and each state is stored as an ExpSum so exact derivatives of any order are
available.  The printed normalization for j = 3 does not normalize its own
state; ``exact_normalization_constant`` gives the value that does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import ELECTRON, PhysicalConstants
from .errors import (
    InvalidParameterError,
    NoBoundStatesError,
    NonpositiveWavenumberError,
    OutOfDomainError,
    UnsupportedGeometryError,
)
from .expsum import ExpSum
from .geometry import (
    GeometryOrder,
    as_order,
    dispersion_energy,
    operator_phases,
)

_SQRT3 = math.sqrt(3.0)
_SQRT2 = math.sqrt(2.0)
FAMILIES = ("3g-cos", "3g-sin", "4g", "5g")
_FAMILY_BY_J = {2: "3g-cos", 3: "4g", 4: "5g"}

# From this quantum number on the j = 4 hyperbolics are evaluated in logs.
_LOG_DOMAIN_FROM = 5


def _check_closed_form(order) -> GeometryOrder:
    order = as_order(order)
    if order.j == 1:
        raise NoBoundStatesError(
            "2G (j=1): the first-order equation cannot meet both wall conditions, "
            "so a particle in the infinite well has no bound states"
        )
    if order.j > 4:
        raise UnsupportedGeometryError(
            f"no closed-form well solution for {order.label} (j={order.j})"
        )
    return order


def _check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise InvalidParameterError(f"quantum number must be an integer >= 0, got {n!r}")
    return int(n)


def _check_width(width) -> float:
    width = float(width)
    if not (width > 0 and math.isfinite(width)):
        raise InvalidParameterError(f"well width must be positive and finite, got {width!r}")
    return width


@dataclass(frozen=True)
class WellConfig:
    """Infinite square well of width ``width`` nm for geometry ``order``."""

    width: float
    constants: PhysicalConstants = ELECTRON
    order: GeometryOrder = field(default_factory=lambda: GeometryOrder(2))

    def __post_init__(self):
        object.__setattr__(self, "width", _check_width(self.width))
        order = as_order(self.order)
        if order.j > 4:
            raise UnsupportedGeometryError(
                f"wells are only defined for j <= 4, got j={order.j}"
            )
        object.__setattr__(self, "order", order)


def quantization_wavenumber(order, n: int, width: float) -> float:
    """k_n in 1/nm."""
    j = _check_closed_form(order).j
    n, width = _check_n(n), _check_width(width)
    q = (2 * n + 1) * math.pi
    if j == 2:
        return q / (2.0 * width)
    if j == 3:
        return q / (_SQRT3 * width)
    return q / (_SQRT2 * width)


def eigenenergy_closed_form(order, n: int, well: WellConfig) -> float:
    """The printed closed-form energy in eV (not the dispersion value at k_n)."""
    j = _check_closed_form(order).j
    n = _check_n(n)
    c = well.constants
    scale = (c.hbar_c * math.pi / well.width) ** j / c.rest_energy ** (j - 1)
    if j == 2:
        return (2 * n + 1) ** 2 * scale / 2.0
    if j == 3:
        return (2 * n + 1) ** 3 * scale / (9.0 * _SQRT3)
    return (2 * n + 1) ** 4 * scale / 32.0


def dispersion_consistency_ratio(order, n: int, well: WellConfig) -> float:
    """Closed-form energy over the dispersion energy at the quantized k_n."""
    order = _check_closed_form(order)
    k = quantization_wavenumber(order, n, well.width)
    return eigenenergy_closed_form(order, n, well) / dispersion_energy(k, order, well.constants)


def _log_norm_power_5g(n: int, width: float) -> float:
    """log of N**4 for the j = 4 state, evaluated without overflow."""
    m = 2 * n + 1
    u = m * math.pi
    numerator = math.log(640.0 * math.pi * m / width)
    if n < _LOG_DOMAIN_FROM:
        denom = 90.0 * math.pi * m + math.sinh(u) * (3.0 * math.cosh(u) - 48.0)
        return numerator - math.log(denom)
    # sinh(u)(3cosh(u) - 48) = 1.5 sinh(2u) - 48 sinh(u); factor out exp(2u).
    scaled = (0.75 * -math.expm1(-4.0 * u)
              - 24.0 * (math.exp(-u) - math.exp(-3.0 * u))
              + 90.0 * math.pi * m * math.exp(-2.0 * u))
    return numerator - 2.0 * u - math.log(scaled)


def normalization_constant(order, n: int, width: float) -> float:
    """The printed normalization constant N for the published state families."""
    j = _check_closed_form(order).j
    n, width = _check_n(n), _check_width(width)
    if j == 2:
        return math.sqrt(2.0 / width)
    m = 2 * n + 1
    if j == 3:
        tail = (-1) ** n * math.exp(-_SQRT3 * m * math.pi / 2.0)
        return (6.0 * math.pi * m / (width * (2.0 * _SQRT3 / 3.0 + tail))) ** (1.0 / 3.0)
    return math.exp(_log_norm_power_5g(n, width) / 4.0)


def exact_normalization_constant(order, n: int, width: float) -> float:
    """N such that the integral of phi_n**j over [0, l] is exactly 1.

    Equal to ``normalization_constant`` except for j = 3, where
    N**3 = 12 pi (2n+1) / (l (5 sqrt(3) + 3 (-1)**n exp(-sqrt(3)(2n+1) pi/2))).
    """
    j = _check_closed_form(order).j
    n, width = _check_n(n), _check_width(width)
    if j != 3:
        return normalization_constant(j, n, width)
    m = 2 * n + 1
    tail = (-1) ** n * math.exp(-_SQRT3 * m * math.pi / 2.0)
    return (12.0 * math.pi * m / (width * (5.0 * _SQRT3 + 3.0 * tail))) ** (1.0 / 3.0)


def _spatial_expsum(family: str, n: int, width: float, norm: float) -> ExpSum:
    log_n = math.log(norm)
    if family == "3g-sin":
        # N sin(k x) = Re[-i N exp(i k x)]
        k = (n + 1) * math.pi / width
        return ExpSum([1j * k], [log_n - 0.5j * math.pi])
    a = (2 * n + 1) * math.pi / (2.0 * width)
    if family == "3g-cos":
        return ExpSum([1j * a], [log_n])
    if family == "4g":
        return ExpSum([complex(-a / _SQRT3, a)], [log_n])
    # N sinh(a x) cos(a x) = Re[N/2 exp((a + ia) x) - N/2 exp((-a + ia) x)]
    half = log_n - math.log(2.0)
    return ExpSum([complex(a, a), complex(-a, a)], [half, half + 1j * math.pi])


@dataclass(frozen=True)
class BoundState:
    """Stationary state phi_n of the infinite well.

    ``family`` is one of "3g-cos" (N cos((2n+1) pi x / 2l)), "3g-sin"
    (N sin((n+1) pi x / l)), "4g" or "5g".
    """

    n: int
    k_n: float
    energy: float
    normalization: float
    order: GeometryOrder
    width: float
    family: str
    constants: PhysicalConstants = ELECTRON
    spatial: ExpSum = field(default=None, repr=False)

    @property
    def j(self) -> int:
        return self.order.j

    def _check_domain(self, x):
        x_arr = np.asarray(x, dtype=float)
        if np.any(~np.isfinite(x_arr)) or np.any(x_arr < 0.0) or np.any(x_arr > self.width):
            raise OutOfDomainError(f"x must lie in [0, {self.width}] nm")
        return x_arr

    def eval_spatial(self, x):
        """phi_n(x) for 0 <= x <= l (scalar or array)."""
        self._check_domain(x)
        return self.spatial(x)

    def derivative(self, x, d: int = 1):
        """d-th derivative of phi_n at x, from the closed form."""
        self._check_domain(x)
        return self.spatial.derivative(d)(x)

    def eval_temporal(self, t, consistent: bool = False):
        """Theta(t) with t in units of hbar/E_n.

        By default the printed factor exp(-r t) with r the energy root, which
        decays for j = 3, 4.  ``consistent=True`` uses the root tau for which
        Theta is an eigenfunction of the energy operator with eigenvalue +E.
        """
        phases = operator_phases(self.order)
        tau = phases.temporal_decay_phase if consistent else phases.printed_temporal_phase
        out = np.exp(-tau * np.asarray(t, dtype=float))
        return complex(out) if out.ndim == 0 else out

    def psi(self, x, t, consistent: bool = False):
        return self.eval_spatial(x) * self.eval_temporal(t, consistent=consistent)

    def with_normalization(self, normalization: float) -> BoundState:
        return _make_state(self.family, self.order, self.n, self.width,
                           self.constants, normalization)


def _make_state(family, order, n, width, constants, norm) -> BoundState:
    if family == "3g-sin":
        k = (n + 1) * math.pi / width
        energy = dispersion_energy(k, order, constants)
    else:
        k = quantization_wavenumber(order, n, width)
        energy = eigenenergy_closed_form(order, n, WellConfig(width, constants, order))
    return BoundState(
        n=n, k_n=k, energy=energy, normalization=norm, order=order, width=width,
        family=family, constants=constants,
        spatial=_spatial_expsum(family, n, width, norm),
    )


def bound_state(well: WellConfig, n: int, textbook_3g: bool = False,
                normalization: str = "printed") -> BoundState:
    """Bound state n of ``well``.

    ``textbook_3g`` selects sin((n+1) pi x / l) with E = hbar^2 k^2 / 2m for
    j = 2.  ``normalization`` is "printed" (the published constant) or "exact"
    (the constant that makes the j-fold integral equal 1).
    """
    order = _check_closed_form(well.order)
    n = _check_n(n)
    if textbook_3g and order.j != 2:
        raise UnsupportedGeometryError("the textbook family exists only for 3G (j=2)")
    if normalization not in ("printed", "exact"):
        raise InvalidParameterError(f"normalization must be 'printed' or 'exact', got {normalization!r}")
    family = "3g-sin" if textbook_3g else _FAMILY_BY_J[order.j]
    pick = normalization_constant if normalization == "printed" else exact_normalization_constant
    norm = pick(order, n, well.width)
    return _make_state(family, order, n, well.width, well.constants, norm)


@dataclass(frozen=True)
class FreeState:
    """exp(spatial_root * k x), optionally normalized on its domain.

    ``length`` is None for the half-line [0, inf), else the interval [0, l].
    ``normalization`` is None where the state is not j-integrable.
    """

    k: float
    energy: float
    spatial_root: complex
    normalization: float | None
    order: GeometryOrder
    length: float | None = None

    @property
    def domain(self) -> str:
        return "half-line" if self.length is None else "interval"

    def eval_spatial(self, x):
        x_arr = np.asarray(x, dtype=float)
        if np.any(x_arr < 0) or (self.length is not None and np.any(x_arr > self.length)):
            raise OutOfDomainError("x outside the free-state domain")
        norm = 1.0 if self.normalization is None else self.normalization
        out = norm * np.exp(self.spatial_root * self.k * x_arr)
        if self.order.j == 1:
            out = out.real
        return out.item() if out.ndim == 0 else out


def _check_k(k) -> float:
    k = float(k)
    if not (k > 0 and math.isfinite(k)):
        raise NonpositiveWavenumberError(f"wavenumber must be positive, got {k!r}")
    return k


def free_state_2g(k: float, length: float | None = None,
                  constants: PhysicalConstants = ELECTRON) -> FreeState:
    """N exp(-k x) with E = hbar c k, normalized with the single-branch measure."""
    k = _check_k(k)
    order = GeometryOrder(1)
    if length is None:
        norm = k
    else:
        length = _check_width(length)
        norm = k / -math.expm1(-k * length)
    return FreeState(k=k, energy=dispersion_energy(k, order, constants),
                     spatial_root=complex(-1.0, 0.0), normalization=norm,
                     order=order, length=length)


def free_state_ng(k: float, order, constants: PhysicalConstants = ELECTRON) -> FreeState:
    """Unnormalized free state whose spatial root equals the energy root."""
    k = _check_k(k)
    order = as_order(order)
    if order.j < 2:
        raise UnsupportedGeometryError("use free_state_2g for j = 1")
    return FreeState(k=k, energy=dispersion_energy(k, order, constants),
                     spatial_root=operator_phases(order).energy_phase,
                     normalization=None, order=order)


__all__ = [
    "FAMILIES", "WellConfig", "BoundState", "FreeState", "bound_state",
    "quantization_wavenumber", "eigenenergy_closed_form", "normalization_constant",
    "exact_normalization_constant", "dispersion_consistency_ratio",
    "free_state_2g", "free_state_ng",
]
