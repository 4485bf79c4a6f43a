"""Physical constants in laboratory units (eV, nm).

hbar only ever enters as hbar*c, masses only as rest energies m*c**2, so the
energy formulas need no unit conversions.
"""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError, NonpositiveMassError

# CODATA 2018
HBAR_C_EV_NM = 197.3269804
ELECTRON_REST_ENERGY_EV = 510998.95

CONFIG_ENV_VAR = "NGQM_CONFIG"
_CONFIG_KEYS = {
    "hbar_c_ev_nm": "hbar_c",
    "electron_rest_energy_ev": "rest_energy",
}


@dataclass(frozen=True)
class PhysicalConstants:
    """hbar*c in eV nm and the particle rest energy m*c**2 in eV.

    Velocities are expressed as v/c, so c itself never appears as a number.
    """

    hbar_c: float = HBAR_C_EV_NM
    rest_energy: float = ELECTRON_REST_ENERGY_EV

    def __post_init__(self):
        if not self.hbar_c > 0:
            raise ConfigError(f"hbar_c must be positive, got {self.hbar_c!r}")
        if not self.rest_energy > 0:
            raise NonpositiveMassError(
                f"rest energy must be positive, got {self.rest_energy!r}"
            )

    def with_rest_energy(self, rest_energy: float) -> PhysicalConstants:
        return PhysicalConstants(hbar_c=self.hbar_c, rest_energy=rest_energy)

    def as_dict(self) -> dict:
        return {"hbar_c_ev_nm": self.hbar_c, "rest_energy_ev": self.rest_energy}


ELECTRON = PhysicalConstants()


def parse_constants(text: str, source: str = "<string>") -> PhysicalConstants:
    """Parse ``key = value`` lines.  Unknown keys are an error; missing keys
    keep their defaults.  ``#`` and ``;`` start comments."""
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        parser.read_string("[constants]\n" + text, source=source)
    except configparser.Error as exc:
        raise ConfigError(f"{source}: {exc}") from exc
    values = {}
    for key, raw in parser["constants"].items():
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{source}: unknown key {key!r}")
        try:
            values[_CONFIG_KEYS[key]] = float(raw)
        except ValueError as exc:
            raise ConfigError(f"{source}: {key} is not a number: {raw!r}") from exc
    return PhysicalConstants(**values)


def load_constants(path: str | os.PathLike | None = None) -> PhysicalConstants:
    """Load constants from ``path``, else from $NGQM_CONFIG, else defaults."""
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR) or None
    if path is None:
        return PhysicalConstants()
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_constants(text, source=str(path))
