"""Real functions written as Re sum_i exp(rate_i x + offset_i).

Every closed-form well state is a short sum of this kind, which makes exact
derivatives trivial (multiply by rate**d, i.e. add d*log(rate) to the offset)
and keeps large normalization factors in the exponent instead of in a product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class ExpSum:
    rates: np.ndarray
    offsets: np.ndarray

    def __post_init__(self):
        rates = np.atleast_1d(np.asarray(self.rates, dtype=complex))
        offsets = np.atleast_1d(np.asarray(self.offsets, dtype=complex))
        if rates.shape != offsets.shape or rates.ndim != 1 or rates.size == 0:
            raise ValueError("rates and offsets must be equal-length 1-D sequences")
        rates.setflags(write=False)
        offsets.setflags(write=False)
        object.__setattr__(self, "rates", rates)
        object.__setattr__(self, "offsets", offsets)

    def key(self) -> tuple:
        return tuple(self.rates.tolist()), tuple(self.offsets.tolist())

    def __eq__(self, other):
        return isinstance(other, ExpSum) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __call__(self, x):
        x_arr = np.asarray(x, dtype=float)
        z = np.multiply.outer(x_arr, self.rates) + self.offsets
        out = np.sum(np.exp(z.real) * np.cos(z.imag), axis=-1)
        return float(out) if out.ndim == 0 else out

    def derivative(self, d: int = 1) -> ExpSum:
        if d < 0:
            raise ValueError("derivative order must be >= 0")
        if d == 0:
            return self
        return ExpSum(self.rates, self.offsets + d * np.log(self.rates))

    def scaled(self, factor: float) -> ExpSum:
        """factor * self, for factor > 0."""
        return ExpSum(self.rates, self.offsets + np.log(factor))

    def parts(self):
        """Contiguous (rate.real, rate.imag, offset.real, offset.imag) arrays."""
        return tuple(
            np.ascontiguousarray(v, dtype=float)
            for v in (self.rates.real, self.rates.imag,
                      self.offsets.real, self.offsets.imag)
        )
