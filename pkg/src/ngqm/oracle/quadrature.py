"""Deterministic adaptive Gauss-Kronrod quadrature."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .. import _kernels_py
from ..errors import InvalidParameterError, ToleranceNotMetError
from ..kernels import expsum_product_integral

HALF_LINE_CUTOFF = 40.0


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float = 1e-14
    rel_tol: float = 1e-11
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise InvalidParameterError("quadrature tolerances must be positive")
        if self.max_subdivisions < 10:
            raise InvalidParameterError("max_subdivisions must be >= 10")


DEFAULT_SPEC = QuadratureSpec()


@dataclass(frozen=True)
class IntegrationResult:
    """``error`` is the summed Kronrod-Gauss estimate; ``truncation`` bounds
    any tail dropped from an infinite range (relative to the full integral)."""

    value: complex | float
    error: float
    panels: int
    truncation: float = 0.0


def _vectorised(f):
    def wrapped(x):
        try:
            out = np.asarray(f(x))
        except (TypeError, ValueError):
            out = None
        if out is None or out.shape != x.shape:
            out = np.array([f(float(xi)) for xi in x])
        return out
    return wrapped


def _finish(value, error, panels, converged, what, truncation=0.0):
    if not converged:
        raise ToleranceNotMetError(
            f"{what}: error estimate {error:.3g} not met after {panels} panels",
            value=value, error=error,
        )
    return IntegrationResult(value=value, error=float(error), panels=int(panels),
                             truncation=truncation)


def _check_interval(a, b):
    a, b = float(a), float(b)
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise InvalidParameterError(f"need finite a < b, got [{a}, {b}]")
    return a, b


def integrate(f, a: float, b: float, spec: QuadratureSpec = DEFAULT_SPEC) -> IntegrationResult:
    """Integral of a real or complex f over [a, b].

    f may be vectorised (called with an array of 15 nodes) or scalar.
    Raises ToleranceNotMetError when ``spec.max_subdivisions`` panels do not
    reach the tolerance.
    """
    a, b = _check_interval(a, b)
    value, error, panels, ok = _kernels_py.adaptive_gk(
        _vectorised(f), a, b, spec.abs_tol, spec.rel_tol, spec.max_subdivisions)
    return _finish(value, error, panels, ok, "integrate")


def integrate_half_line(f, k: float, spec: QuadratureSpec = DEFAULT_SPEC,
                        cutoff: float = HALF_LINE_CUTOFF) -> IntegrationResult:
    """Integral over [0, inf) of f decaying like exp(-k x), truncated at cutoff/k.

    The dropped tail is bounded by exp(-cutoff) of the full integral and is
    recorded in ``truncation``.
    """
    if not k > 0:
        raise InvalidParameterError("decay rate k must be positive")
    result = integrate(f, 0.0, cutoff / k, spec)
    return IntegrationResult(result.value, result.error, result.panels,
                             truncation=math.exp(-cutoff))


def integrate_product(f, power: int, g, xpow: int, a: float, b: float,
                      spec: QuadratureSpec = DEFAULT_SPEC, backend=None) -> IntegrationResult:
    """Integral of x**xpow * f**power * g over [a, b] for ExpSum f and g."""
    a, b = _check_interval(a, b)
    value, error, panels, ok = expsum_product_integral(
        f, power, g, xpow, a, b, spec.abs_tol, spec.rel_tol, spec.max_subdivisions,
        backend=backend)
    return _finish(value, error, panels, ok, "integrate_product")
