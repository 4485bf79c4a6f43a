"""j-fold probability measure, moments, generalized uncertainties.

Units: positions in nm, momenta in hbar/nm (hbar = 1), so a product
Delta x * Delta p is directly a multiple of hbar.

For a real stationary state the j-fold density is the signed phi**j and

    <x^k> = int phi**(j-1) x**k phi dx / int phi**j dx
    <p^k> = c**k int phi**(j-1) phi^(k) dx / int phi**j dx

with momentum prefactor c = -i (j = 2), -omega (j = 3), -eta_1 (j = 4).
Dividing by the norm integral makes the moments independent of how the
state was normalized; ``raw=True`` returns the bare numerators instead.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import NegativeDensityWarning, UnnormalizedStateError, UnsupportedPowerError
from .geometry import commutator_phase as _principal_root
from .geometry import named_root
from .oracle.quadrature import DEFAULT_SPEC, IntegrationResult, QuadratureSpec, integrate_product
from .states import BoundState

MAX_POWER = 6
OBSERVABLES = ("position", "momentum")
_ALIASES = {"x": "position", "p": "momentum"}

MOMENT_PREFACTOR = {
    2: complex(0.0, -1.0),
    3: -named_root(3, "omega"),
    4: -named_root(4, "eta1"),
}

# Uncertainty products quoted for the ground states, in units of hbar.
REFERENCE_PRODUCTS = {"3g-sin": 0.568, "4g": 1.36, "5g": 1.07}
# Third momentum moment quoted for the j = 3 ground state, hbar^3 / l^3.
QUOTED_P3_4G = 21.6

# Radicands whose imaginary part is below this fraction of their modulus are
# treated as real.
REAL_TOLERANCE = 1e-10


def commutator_phase(order) -> complex:
    """c in [x, p] = c hbar: -1, i, omega, eta_1 for j = 1..4."""
    return _principal_root(order)


def _observable(name: str) -> str:
    name = _ALIASES.get(name, name)
    if name not in OBSERVABLES:
        raise ValueError(f"observable must be one of {OBSERVABLES}, got {name!r}")
    return name


@lru_cache(maxsize=4096)
def _moment_integral(state: BoundState, deriv: int, xpow: int,
                     spec: QuadratureSpec) -> IntegrationResult:
    phi = state.spatial
    return integrate_product(phi, state.j - 1, phi.derivative(deriv), xpow,
                             0.0, state.width, spec)


def norm_integral(state: BoundState, spec: QuadratureSpec = DEFAULT_SPEC) -> IntegrationResult:
    """int_0^l phi**j dx."""
    return _moment_integral(state, 0, 0, spec)


def _norm_value(state, spec) -> float:
    value = norm_integral(state, spec).value
    if not (math.isfinite(value) and value > 0):
        raise UnnormalizedStateError(f"j-fold norm integral is {value!r}")
    return value


def probability_density(state: BoundState, x):
    """Signed density phi(x)**j; warns when an odd-j density goes negative."""
    values = np.asarray(state.eval_spatial(x), dtype=float) ** state.j
    if state.j % 2 and np.any(values < 0):
        warnings.warn(f"{state.order.label} density phi**{state.j} is negative "
                      "where phi < 0", NegativeDensityWarning, stacklevel=2)
    return float(values) if values.ndim == 0 else values


@dataclass(frozen=True)
class MomentReport:
    observable: str
    power: int
    value: complex
    numerator: complex
    norm: float
    error: float
    raw: bool = False


def expectation(state: BoundState, observable: str, power: int = 1, raw: bool = False,
                spec: QuadratureSpec = DEFAULT_SPEC) -> MomentReport:
    """<O^power> for O = position or momentum (see module docstring)."""
    observable = _observable(observable)
    if isinstance(power, bool) or not isinstance(power, (int, np.integer)) \
            or not 1 <= power <= MAX_POWER:
        raise UnsupportedPowerError(f"power must be an integer in 1..{MAX_POWER}, got {power!r}")
    power = int(power)
    norm = _norm_value(state, spec)
    if observable == "position":
        res = _moment_integral(state, 0, power, spec)
        numerator = complex(res.value)
    else:
        res = _moment_integral(state, power, 0, spec)
        numerator = MOMENT_PREFACTOR[state.j] ** power * res.value
    value = numerator if raw else numerator / norm
    return MomentReport(observable, power, value, numerator, norm, res.error, raw)


def moments(state: BoundState, observable: str, up_to: int, raw: bool = False,
            spec: QuadratureSpec = DEFAULT_SPEC) -> list[complex]:
    """[<O^1>, ..., <O^up_to>]."""
    return [expectation(state, observable, k, raw, spec).value for k in range(1, up_to + 1)]


def central_moment(state: BoundState, observable: str, order: int | None = None,
                   raw: bool = False, spec: QuadratureSpec = DEFAULT_SPEC) -> complex:
    """<(O - <O>)^order> by the full binomial expansion (order defaults to j)."""
    order = state.j if order is None else int(order)
    m = [1.0] + moments(state, observable, order, raw, spec)
    mean = m[1]
    return sum(math.comb(order, i) * m[i] * (-mean) ** (order - i) for i in range(order + 1))


@dataclass(frozen=True)
class Spread:
    value: float
    radicand: complex
    note: str


def _spread(mean: complex, top: complex, j: int) -> Spread:
    radicand = complex(top - mean ** j)
    mod = abs(radicand)
    if abs(radicand.imag) <= REAL_TOLERANCE * mod and radicand.real >= 0:
        return Spread(radicand.real ** (1.0 / j), radicand, "real")
    root = cmath.exp(cmath.log(radicand) / j) if mod > 0 else 0j
    return Spread(abs(root), radicand,
                  "modulus of principal complex root; radicand not a nonnegative real")


def uncertainty_detail(state: BoundState, observable: str, raw: bool = False,
                       spec: QuadratureSpec = DEFAULT_SPEC) -> Spread:
    j = state.j
    mean = expectation(state, observable, 1, raw, spec).value
    top = expectation(state, observable, j, raw, spec).value
    return _spread(mean, top, j)


def generalized_uncertainty(state: BoundState, observable: str, raw: bool = False,
                            spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """(<O^j> - <O>^j)^(1/j); the modulus of the principal root if complex."""
    return uncertainty_detail(state, observable, raw, spec).value


@dataclass(frozen=True)
class DiagnosticRecord:
    radicand_x: complex
    radicand_p: complex
    branch_note: str
    reference_value: float | None = None
    relative_deviation: float | None = None

    def __post_init__(self):
        if (self.reference_value is None) != (self.relative_deviation is None):
            raise ValueError("relative_deviation is set iff reference_value is")


@dataclass(frozen=True)
class UncertaintyReport:
    delta_x: float
    delta_p: float
    product_over_hbar: float
    satisfies_heisenberg: bool
    diagnostics: DiagnosticRecord
    alternates: dict = field(default_factory=dict, compare=False)


def heisenberg_check(state: BoundState, spec: QuadratureSpec = DEFAULT_SPEC) -> UncertaintyReport:
    """Delta x, Delta p, their product over hbar and the verdict product >= 1/2.

    ``alternates`` carries the product with Delta p from unnormalized momentum
    moments (raw numerators with the state's own constant) and, for the j = 3
    ground state, with the quoted third momentum moment.
    """
    sx = uncertainty_detail(state, "position", spec=spec)
    sp = uncertainty_detail(state, "momentum", spec=spec)
    product = sx.value * sp.value
    notes = sorted({f"x: {sx.note}", f"p: {sp.note}"})
    reference = REFERENCE_PRODUCTS.get(state.family) if state.n == 0 else None
    diag = DiagnosticRecord(
        radicand_x=sx.radicand, radicand_p=sp.radicand, branch_note="; ".join(notes),
        reference_value=reference,
        relative_deviation=None if reference is None else product / reference - 1.0,
    )
    alternates = {}
    raw_p = uncertainty_detail(state, "momentum", raw=True, spec=spec)
    alternates["raw_momentum_moments"] = sx.value * raw_p.value
    if state.family == "4g" and state.n == 0:
        mean = expectation(state, "momentum", 1, spec=spec).value
        quoted = _spread(mean, QUOTED_P3_4G / state.width ** 3, 3)
        alternates["quoted_third_moment"] = sx.value * quoted.value
    return UncertaintyReport(
        delta_x=sx.value, delta_p=sp.value, product_over_hbar=product,
        satisfies_heisenberg=product >= 0.5, diagnostics=diag, alternates=alternates,
    )
