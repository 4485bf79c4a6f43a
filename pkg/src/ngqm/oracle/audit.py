"""Audit of the published bound-electron energy table against the closed forms."""

from __future__ import annotations

from dataclasses import dataclass

from ..constants import ELECTRON, PhysicalConstants
from ..geometry import GeometryOrder
from ..states import WellConfig, eigenenergy_closed_form

QUANTUM_NUMBERS = (0, 3, 6, 9, 12)
WIDTHS = (1.0, 0.25, 0.05)

# Published energies in eV, keyed by j then width (nm), rows q = 0, 3, 6, 9, 12.
TABLE_1 = {
    2: {
        1.0: (0.375, 2.62, 4.875, 7.125, 9.375),
        0.25: (6.0, 42.0, 78.0, 114.0, 150.0),
        0.05: (150.0, 1050.0, 1950.0, 2850.0, 3750.0),
    },
    3: {
        1.0: (0.0000625, 0.0030625, 0.0105625, 0.0225625, 0.0390625),
        0.25: (0.004, 0.196, 0.676, 1.444, 2.5),
        0.05: (0.5, 24.5, 84.5, 180.5, 312.5),
    },
    4: {
        1.0: (3.44e-8, 1.18e-5, 7.55e-5, 0.000235778, 0.000537109),
        0.25: (0.0000088, 0.0030184, 0.0193336, 0.0603592, 0.1375),
        0.05: (0.0055, 1.8865, 12.0835, 37.7245, 85.9375),
    },
}

# A table ratio matches a scaling law when within this relative distance.
LAW_TOLERANCE = 0.01


def table_value(j: int, width: float, q: int) -> float | None:
    row = TABLE_1.get(j, {}).get(width)
    if row is None or q not in QUANTUM_NUMBERS:
        return None
    return row[QUANTUM_NUMBERS.index(q)]


@dataclass(frozen=True)
class AuditRow:
    geometry: str
    j: int
    width: float
    q: int
    closed_form_ev: float
    table_ev: float | None
    closed_ratio: float
    table_ratio: float | None
    law_j: int
    law_j_minus_1: int
    follows: str

    @property
    def table_deviation(self) -> float | None:
        if self.table_ev is None:
            return None
        return self.table_ev / self.closed_form_ev - 1.0


def _classify(ratio, law_j, law_jm1) -> str:
    if ratio is None:
        return "no-table"
    if law_j == law_jm1:
        return "either"
    hits = [name for name, law in (("(2q+1)^j", law_j), ("(2q+1)^(j-1)", law_jm1))
            if abs(ratio / law - 1.0) <= LAW_TOLERANCE]
    return hits[0] if len(hits) == 1 else "neither"


def table_audit(widths=WIDTHS, quantum_numbers=QUANTUM_NUMBERS,
                constants: PhysicalConstants = ELECTRON, orders=(2, 3, 4)) -> list[AuditRow]:
    """One row per (j, width, q), in that nesting order."""
    rows = []
    for j in orders:
        order = GeometryOrder(j)
        for width in widths:
            well = WellConfig(width, constants, order)
            base = eigenenergy_closed_form(order, 0, well)
            base_table = table_value(j, width, 0)
            for q in quantum_numbers:
                energy = eigenenergy_closed_form(order, q, well)
                tv = table_value(j, width, q)
                ratio = tv / base_table if tv is not None and base_table else None
                law_j, law_jm1 = (2 * q + 1) ** j, (2 * q + 1) ** (j - 1)
                rows.append(AuditRow(
                    geometry=order.label, j=j, width=float(width), q=int(q),
                    closed_form_ev=energy, table_ev=tv,
                    closed_ratio=energy / base, table_ratio=ratio,
                    law_j=law_j, law_j_minus_1=law_jm1,
                    follows=_classify(ratio, law_j, law_jm1),
                ))
    return rows


def table_scaling_law(rows, j: int) -> str:
    """The single law all classified rows of geometry j follow, else "mixed"."""
    laws = {r.follows for r in rows if r.j == j and r.follows not in ("either", "no-table")}
    if len(laws) == 1:
        return laws.pop()
    return "mixed" if laws else "unclassified"
