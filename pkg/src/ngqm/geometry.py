"""Geometry order, roots of negative unity, operator phases, L^j norms and the
power-law dispersion relation E = (hbar c k)**j / (j (m c**2)**(j-1))."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .constants import PhysicalConstants
from .errors import (
    EmptyInputError,
    LengthMismatchError,
    NonpositiveMassError,
    NonpositiveWavenumberError,
)

_SQRT3_2 = math.sqrt(3.0) / 2.0
_SQRT2 = math.sqrt(2.0)

# Roots of z**j = -1 for j <= 4 written the way they are usually tabulated,
# ordered by principal argument in [0, 2*pi).
_EXACT_ROOTS = {
    1: (complex(-1.0, 0.0),),
    2: (complex(0.0, 1.0), complex(0.0, -1.0)),
    3: (complex(0.5, _SQRT3_2), complex(-1.0, 0.0), complex(0.5, -_SQRT3_2)),
    4: (
        complex(1.0, 1.0) / _SQRT2,
        complex(-1.0, 1.0) / _SQRT2,
        complex(-1.0, -1.0) / _SQRT2,
        complex(1.0, -1.0) / _SQRT2,
    ),
}

# Index into the canonical ordering for each conventional root name.
# "omega2" is the root (1 - i sqrt 3)/2, i.e. the conjugate of omega, not omega**2.
NAMED_ROOTS = {
    1: {"1bar": 0},
    2: {"iota": 0, "-iota": 1},
    3: {"omega": 0, "1bar": 1, "omega2": 2},
    4: {"eta1": 0, "eta2": 1, "eta3": 2, "eta4": 3},
}


@dataclass(frozen=True, order=True)
class GeometryOrder:
    """Dispersion exponent j = N - 1 of an "NG" geometry (N = 3 is ordinary QM)."""

    j: int

    def __post_init__(self):
        if isinstance(self.j, bool) or not isinstance(self.j, (int, np.integer)):
            raise TypeError(f"geometry order must be an integer, got {self.j!r}")
        if self.j < 1:
            raise ValueError(f"geometry order j must be >= 1, got {self.j}")
        object.__setattr__(self, "j", int(self.j))

    @classmethod
    def from_n(cls, n_geometry: int) -> GeometryOrder:
        if n_geometry < 2:
            raise ValueError(f"geometry label N must be >= 2, got {n_geometry}")
        return cls(n_geometry - 1)

    @classmethod
    def parse(cls, text: str) -> GeometryOrder:
        """Accept ``"4G"``, ``"4g"``, ``"j=3"`` or a bare ``"3"`` (taken as j)."""
        s = text.strip().lower().replace(" ", "")
        try:
            if s.endswith("g"):
                return cls.from_n(int(s[:-1]))
            if s.startswith("j="):
                return cls(int(s[2:]))
            return cls(int(s))
        except ValueError as exc:
            raise ValueError(f"cannot parse geometry {text!r}") from exc

    @property
    def n_geometry(self) -> int:
        return self.j + 1

    N = n_geometry

    @property
    def label(self) -> str:
        return f"{self.j + 1}G"

    def __str__(self):
        return self.label


def as_order(value) -> GeometryOrder:
    """Coerce an int (taken as j), a label string or a GeometryOrder."""
    if isinstance(value, GeometryOrder):
        return value
    if isinstance(value, str):
        return GeometryOrder.parse(value)
    return GeometryOrder(value)


def _unit(angle: float) -> complex:
    z = cmath.rect(1.0, angle)
    re, im = z.real, z.imag
    # cos/sin of multiples of pi/2 leave ~1e-16 residue; snap it.
    if abs(re) < 4e-16:
        re = 0.0
    if abs(im) < 4e-16:
        im = 0.0
    return complex(re, im)


def roots_of_negative_unity(order) -> tuple[complex, ...]:
    """All j solutions of z**j = -1, sorted by principal argument in [0, 2*pi)."""
    j = as_order(order).j
    if j in _EXACT_ROOTS:
        return _EXACT_ROOTS[j]
    return tuple(_unit(math.pi * (2 * q + 1) / j) for q in range(j))


def named_root(order, name: str) -> complex:
    j = as_order(order).j
    try:
        return roots_of_negative_unity(j)[NAMED_ROOTS[j][name]]
    except KeyError:
        raise KeyError(f"no root named {name!r} for j={j}") from None


@dataclass(frozen=True)
class OperatorPhases:
    """Dimensionless phase prefactors of the generalized operators.

    p = momentum_phase * hbar d/dx and E = energy_phase * hbar d/dt.
    ``temporal_decay_phase`` is the root tau for which
    Theta(t) = exp(-tau E t / hbar) is an eigenfunction of E with eigenvalue +E,
    so energy_phase * temporal_decay_phase == -1.  ``printed_temporal_phase`` is
    the root that appears in the printed Theta(t) = exp(-root E t / hbar); it
    differs from the consistent one for j = 3 and j = 4.
    """

    momentum_phase: complex
    energy_phase: complex
    temporal_decay_phase: complex
    printed_temporal_phase: complex


_S = _SQRT3_2
_R = 1.0 / _SQRT2
_EXACT_PHASES = {
    # j: (momentum, energy, consistent tau, printed tau)
    1: (complex(-1, 0), complex(-1, 0), complex(1, 0), complex(1, 0)),
    2: (complex(0, -1), complex(0, 1), complex(0, 1), complex(0, 1)),
    # momentum = 1bar * omega; energy = omega2; consistent tau = -conj(omega2)
    3: (complex(-0.5, -_S), complex(0.5, -_S), complex(-0.5, -_S), complex(0.5, -_S)),
    # momentum = eta1 eta2 eta3 = eta1; energy = eta4; consistent tau = eta3
    4: (complex(_R, _R), complex(_R, -_R), complex(-_R, -_R), complex(_R, -_R)),
}


def operator_phases(order) -> OperatorPhases:
    """Momentum/energy operator phases.

    j <= 4 come from the exact table.  Beyond that the momentum phase is the
    product of the first j-1 canonical roots and the energy phase is the last.
    """
    j = as_order(order).j
    if j in _EXACT_PHASES:
        return OperatorPhases(*_EXACT_PHASES[j])
    energy_angle = math.pi * (2 * j - 1) / j
    momentum_angle = math.fmod(math.pi * (j - 1) ** 2 / j, 2 * math.pi)
    energy = _unit(energy_angle)
    tau = _unit(math.fmod(math.pi - energy_angle, 2 * math.pi))
    return OperatorPhases(
        momentum_phase=_unit(momentum_angle),
        energy_phase=energy,
        temporal_decay_phase=tau,
        printed_temporal_phase=energy,
    )


def commutator_phase(order) -> complex:
    """Coefficient c in [x, p] = c hbar: the principal root exp(i pi / j)."""
    return roots_of_negative_unity(order)[0]


def lj_norm(components: Sequence[float], order) -> float:
    """(sum |c_i|**j)**(1/j); absolute values are taken so odd j stays real."""
    j = as_order(order).j
    values = [abs(float(c)) for c in components]
    if not values:
        raise EmptyInputError("lj_norm of an empty vector")
    scale = max(values)
    if scale == 0.0 or not math.isfinite(scale):
        return scale
    return scale * math.fsum((v / scale) ** j for v in values) ** (1.0 / j)


def minkowski_distance(a: Sequence[float], b: Sequence[float], order) -> float:
    """Generalized Minkowski length of b - a."""
    if len(a) != len(b):
        raise LengthMismatchError(f"points differ in length: {len(a)} != {len(b)}")
    return lj_norm([float(y) - float(x) for x, y in zip(a, b)], order)


def dispersion_energy(k, order, constants: PhysicalConstants | None = None):
    """Kinetic energy in eV at wavenumber k (1/nm).  Accepts arrays."""
    j = as_order(order).j
    c = constants if constants is not None else PhysicalConstants()
    if not c.rest_energy > 0:
        raise NonpositiveMassError("rest energy must be positive")
    k_arr = np.asarray(k, dtype=float)
    if np.any(k_arr < 0):
        raise NonpositiveWavenumberError("wavenumber must be >= 0")
    energy = (c.hbar_c * k_arr) ** j / (j * c.rest_energy ** (j - 1))
    return float(energy) if energy.ndim == 0 else energy
