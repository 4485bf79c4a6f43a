"""Central finite differences with exact stencil weights and Richardson pairing."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ..errors import InvalidParameterError, StepUnderflowError


@lru_cache(maxsize=None)
def stencil(order: int, accuracy: int = 4) -> tuple[tuple[int, ...], tuple[Fraction, ...]]:
    """Offsets and exact weights of the central stencil for d^order/dx^order.

    Solves sum_i w_i s_i**q = order! * [q == order] for q < number of points
    by Gauss-Jordan elimination over the rationals.
    """
    if order < 1 or accuracy < 2 or accuracy % 2:
        raise InvalidParameterError("need order >= 1 and an even accuracy >= 2")
    half = (order - 1) // 2 + accuracy // 2
    offsets = tuple(range(-half, half + 1))
    size = len(offsets)
    rows = [[Fraction(s) ** q for s in offsets] + [Fraction(math.factorial(order) if q == order else 0)]
            for q in range(size)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [v / p for v in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[col])]
    return offsets, tuple(row[-1] for row in rows)


def central_difference(f, x: float, order: int, step: float, accuracy: int = 4) -> float:
    offsets, weights = stencil(order, accuracy)
    total = math.fsum(float(w) * f(x + s * step) for s, w in zip(offsets, weights) if w)
    return total / step ** order


def derivative(f, x: float, order: int = 1, step: float = 1e-2,
               accuracy: int = 4, richardson: bool = True) -> float:
    """d^order f / dx^order at x.

    Uses the central stencil of the given accuracy at ``step`` and ``step/2``
    and combines them as (2**p D(h/2) - D(h)) / (2**p - 1) with p = accuracy.
    """
    if not 1 <= order <= 4:
        raise InvalidParameterError("derivative order must be 1..4")
    step = float(step)
    if not (step > 0 and math.isfinite(step)) or x + 0.5 * step == x:
        raise StepUnderflowError(f"step {step!r} is too small to resolve x = {x!r}")
    coarse = central_difference(f, x, order, step, accuracy)
    if not richardson:
        return coarse
    fine = central_difference(f, x, order, 0.5 * step, accuracy)
    gain = 2.0 ** accuracy
    return (gain * fine - coarse) / (gain - 1.0)
