"""Tabular reports behind the CLI and their CSV/JSON rendering.

Every report is a ``Report`` with fixed column names.  Floats are written
with ``repr`` (shortest round-trip form), so identical requests give
byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .constants import PhysicalConstants
from .errors import NGQMError
from .geometry import (
    GeometryOrder,
    as_order,
    commutator_phase,
    dispersion_energy,
    named_root,
    operator_phases,
    roots_of_negative_unity,
)
from .kernels import backend_name
from .oracle.audit import table_audit, table_scaling_law, table_value
from .oracle.quadrature import integrate, integrate_half_line
from .oracle.residuals import (
    boundary_residual,
    hermiticity_defect,
    ode_residual,
    operator_eigenvalue_check,
)
from .states import (
    WellConfig,
    bound_state,
    dispersion_consistency_ratio,
    free_state_2g,
    normalization_constant,
)
from .statistics import expectation, heisenberg_check, norm_integral

SPECTRUM_COLUMNS = ("n", "k_n_per_nm", "energy_ev", "normalization", "dispersion_ratio")
UNCERTAINTY_COLUMNS = (
    "geometry", "family", "n", "width_nm", "mean_x_over_l", "delta_x_over_l",
    "delta_p_l_over_hbar", "product_over_hbar", "satisfies_heisenberg",
    "radicand_p_re", "radicand_p_im", "reference_product", "relative_deviation",
    "alt_raw_momentum_product", "alt_quoted_third_moment_product", "branch_note",
)
DISPERSION_COLUMNS = (
    "k_per_nm", "energy_ev", "phase_velocity_over_c", "loglog_slope",
    "group_velocity_over_c_derived",
)
STATE_DUMP_COLUMNS = ("x_nm", "phi", "phi_pow_j")
AUDIT_COLUMNS = (
    "geometry", "width_nm", "q", "closed_form_ev", "table_ev", "table_deviation",
    "closed_ratio", "table_ratio", "law_j", "law_j_minus_1", "follows",
)
VERIFY_COLUMNS = ("check", "expected", "status", "value", "detail")

MIN_DUMP_POINTS = 256


@dataclass
class Report:
    command: str
    columns: tuple
    rows: list
    meta: dict = field(default_factory=dict)


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _json_value(value):
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, (np.floating,)):
        value = float(value)
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    return value


def render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([_cell(row.get(c)) for c in report.columns])
    return buf.getvalue()


def render_json(report: Report) -> str:
    payload = {
        "meta": {k: _json_value(v) for k, v in report.meta.items()},
        "rows": [{c: _json_value(row.get(c)) for c in report.columns} for row in report.rows],
    }
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def render_text(report: Report) -> str:
    """One line per row: ``STATUS  check  value  detail`` (verify report)."""
    lines = []
    for row in report.rows:
        value = _cell(row.get("value"))
        lines.append(f"{row['status']:<9} {row['check']:<44} {value:<24} {row.get('detail', '')}".rstrip())
    passed = sum(r["status"] == "PASS" for r in report.rows)
    deviations = sum(r["status"] == "DEVIATION" for r in report.rows)
    failed = sum(r["status"] == "FAIL" for r in report.rows)
    lines.append(f"summary: {passed} passed, {deviations} expected deviations, {failed} failed")
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: str) -> str:
    if fmt == "csv":
        return render_csv(report)
    if fmt == "json":
        return render_json(report)
    if fmt == "text":
        return render_text(report)
    raise ValueError(f"unknown format {fmt!r}")


def base_meta(command: str, constants: PhysicalConstants, **params) -> dict:
    meta = {"command": command, "version": __version__, "backend": backend_name()}
    meta.update(constants.as_dict())
    meta.update(params)
    return meta


def run_spectrum(order, width: float, levels: int, constants: PhysicalConstants,
                 textbook_3g: bool = False) -> Report:
    order = as_order(order)
    if levels < 1:
        raise ValueError("levels must be >= 1")
    well = WellConfig(width, constants, order)
    rows = []
    for n in range(levels):
        state = bound_state(well, n, textbook_3g=textbook_3g)
        ratio = 1.0 if textbook_3g else dispersion_consistency_ratio(order, n, well)
        rows.append({"n": n, "k_n_per_nm": state.k_n, "energy_ev": state.energy,
                     "normalization": state.normalization, "dispersion_ratio": ratio})
    meta = base_meta("spectrum", constants, geometry=order.label, width_nm=well.width,
                     levels=levels, textbook_3g=textbook_3g)
    return Report("spectrum", SPECTRUM_COLUMNS, rows, meta)


def run_uncertainty(order, width: float, n: int, constants: PhysicalConstants,
                    textbook_3g: bool = False) -> Report:
    order = as_order(order)
    well = WellConfig(width, constants, order)
    state = bound_state(well, n, textbook_3g=textbook_3g)
    rep = heisenberg_check(state)
    mean_x = expectation(state, "position", 1).value.real
    l = well.width
    row = {
        "geometry": order.label, "family": state.family, "n": n, "width_nm": l,
        "mean_x_over_l": mean_x / l,
        "delta_x_over_l": rep.delta_x / l,
        "delta_p_l_over_hbar": rep.delta_p * l,
        "product_over_hbar": rep.product_over_hbar,
        "satisfies_heisenberg": rep.satisfies_heisenberg,
        "radicand_p_re": rep.diagnostics.radicand_p.real,
        "radicand_p_im": rep.diagnostics.radicand_p.imag,
        "reference_product": rep.diagnostics.reference_value,
        "relative_deviation": rep.diagnostics.relative_deviation,
        "alt_raw_momentum_product": rep.alternates.get("raw_momentum_moments"),
        "alt_quoted_third_moment_product": rep.alternates.get("quoted_third_moment"),
        "branch_note": rep.diagnostics.branch_note,
    }
    meta = base_meta("uncertainty", constants, geometry=order.label, width_nm=l, n=n,
                     textbook_3g=textbook_3g)
    return Report("uncertainty", UNCERTAINTY_COLUMNS, [row], meta)


def run_dispersion(order, k_max: float, points: int, constants: PhysicalConstants) -> Report:
    """E(k) on k_i = k_max i / points, i = 1..points.

    The log-log slope and the group velocity dE/dp come from symmetric
    differences at relative step 1e-4; the group velocity is a derived column.
    """
    order = as_order(order)
    if not (k_max > 0 and math.isfinite(k_max)) or points < 1:
        raise ValueError("need k_max > 0 and points >= 1")
    delta = 1e-4
    rows = []
    for i in range(1, points + 1):
        k = k_max * i / points
        e = dispersion_energy(k, order, constants)
        hi = dispersion_energy(k * (1 + delta), order, constants)
        lo = dispersion_energy(k * (1 - delta), order, constants)
        slope = (math.log(hi) - math.log(lo)) / (math.log1p(delta) - math.log1p(-delta))
        group = (hi - lo) / (2 * delta * k * constants.hbar_c)
        rows.append({"k_per_nm": k, "energy_ev": e,
                     "phase_velocity_over_c": e / (constants.hbar_c * k),
                     "loglog_slope": slope, "group_velocity_over_c_derived": group})
    meta = base_meta("dispersion", constants, geometry=order.label, k_max_per_nm=k_max,
                     points=points)
    return Report("dispersion", DISPERSION_COLUMNS, rows, meta)


def run_state_dump(order, width: float, n: int, constants: PhysicalConstants,
                   textbook_3g: bool = False, points: int = 257) -> Report:
    order = as_order(order)
    if points < MIN_DUMP_POINTS:
        raise ValueError(f"points must be >= {MIN_DUMP_POINTS}")
    well = WellConfig(width, constants, order)
    state = bound_state(well, n, textbook_3g=textbook_3g)
    xs = np.linspace(0.0, well.width, points)
    phi = state.eval_spatial(xs)
    rows = [{"x_nm": float(x), "phi": float(p), "phi_pow_j": float(p) ** order.j}
            for x, p in zip(xs, phi)]
    meta = base_meta("state-dump", constants, geometry=order.label, width_nm=well.width,
                     n=n, points=points, family=state.family)
    return Report("state-dump", STATE_DUMP_COLUMNS, rows, meta)


def run_table_audit(constants: PhysicalConstants, widths=None) -> Report:
    rows = []
    kwargs = {"constants": constants}
    if widths:
        kwargs["widths"] = tuple(widths)
    for r in table_audit(**kwargs):
        rows.append({
            "geometry": r.geometry, "width_nm": r.width, "q": r.q,
            "closed_form_ev": r.closed_form_ev, "table_ev": r.table_ev,
            "table_deviation": r.table_deviation, "closed_ratio": r.closed_ratio,
            "table_ratio": r.table_ratio, "law_j": r.law_j,
            "law_j_minus_1": r.law_j_minus_1, "follows": r.follows,
        })
    return Report("table-audit", AUDIT_COLUMNS, rows, base_meta("table-audit", constants))


# --- verification suite -----------------------------------------------------


class _Checks:
    def __init__(self):
        self.rows = []

    def add(self, name, ok, value=None, detail="", expected="pass"):
        if expected == "pass":
            status = "PASS" if ok else "FAIL"
        else:
            status = "PASS" if ok else "DEVIATION"
        self.rows.append({"check": name, "expected": expected, "status": status,
                          "value": value, "detail": detail})

    def guard(self, name, func, expected="pass"):
        try:
            func()
        except NGQMError as exc:
            self.add(name, False, None, f"error: {exc}", expected)


def _verify_roots(ck):
    worst = max(abs(r ** j + 1) for j in range(1, 9) for r in roots_of_negative_unity(j))
    ck.add("roots: |r^j + 1| for j = 1..8", worst <= 1e-12, worst)
    named = {
        (3, "omega"): complex(0.5, math.sqrt(3) / 2),
        (3, "1bar"): complex(-1, 0),
        (3, "omega2"): complex(0.5, -math.sqrt(3) / 2),
        (4, "eta1"): complex(1, 1) / math.sqrt(2),
        (4, "eta2"): complex(-1, 1) / math.sqrt(2),
        (4, "eta3"): complex(-1, -1) / math.sqrt(2),
        (4, "eta4"): complex(1, -1) / math.sqrt(2),
    }
    dev = max(abs(named_root(j, name) - z) for (j, name), z in named.items())
    ck.add("roots: named roots for j = 3, 4", dev <= 1e-15, dev)
    vieta = max(abs(np.prod(roots_of_negative_unity(j)) - (-1) ** j) for j in range(1, 9))
    ck.add("roots: product equals (-1)^j", vieta <= 1e-12, vieta)
    chain = max(abs(operator_phases(j).energy_phase * operator_phases(j).temporal_decay_phase + 1)
                for j in (2, 3, 4))
    ck.add("phases: energy x temporal = -1 (j = 2..4)", chain <= 1e-12, chain)
    comm = {1: -1, 2: 1j, 3: named_root(3, "omega"), 4: named_root(4, "eta1")}
    dev = max(abs(commutator_phase(j) - z) for j, z in comm.items())
    ck.add("commutator phase (j = 1..4)", dev <= 1e-15, dev)


def _verify_states(ck, constants):
    for j in (2, 3, 4):
        label = GeometryOrder(j).label
        well = WellConfig(1.0, constants, j)
        worst_ode, trusted, worst_right, worst_left = 0.0, True, 0.0, 0.0
        for n in range(6):
            s = bound_state(well, n)
            r = ode_residual(s)
            worst_ode = max(worst_ode, r.rel_to_scale)
            trusted = trusted and r.details["trusted"]
            b = boundary_residual(s)
            worst_right = max(worst_right, b.details["right"])
            worst_left = max(worst_left, b.details["left"])
        ck.add(f"ode residual {label} n = 0..5", worst_ode <= 1e-8 and trusted, worst_ode,
               "analytic and finite-difference derivatives agree" if trusted else "FD disagrees")
        ck.add(f"boundary phi(l) = 0 {label} n = 0..5", worst_right <= 1e-10, worst_right)
        ck.add(f"boundary phi(0) = 0 {label} n = 0..5", worst_left <= 1e-10, worst_left,
               "" if j == 4 else "closed form does not vanish at x = 0",
               expected="pass" if j == 4 else "deviation")
        ratio = dispersion_consistency_ratio(j, 0, well)
        documented = {2: 4.0, 3: 1.0, 4: 0.5}[j]
        ck.add(f"dispersion ratio {label}", abs(ratio - documented) <= 1e-9, ratio,
               f"documented value {documented}")

    s = bound_state(WellConfig(1.0, constants, 2), 0, textbook_3g=True)
    r = ode_residual(s)
    ck.add("ode residual 3G sin family n = 0", r.rel_to_scale <= 1e-8, r.rel_to_scale)


def _verify_normalization(ck, constants):
    def roundtrip(j, n, normalization="printed"):
        return norm_integral(bound_state(WellConfig(1.0, constants, j), n,
                                         normalization=normalization)).value

    dev = max(abs(roundtrip(2, n) - 1) for n in range(6))
    ck.add("normalization 3G n = 0..5", dev <= 1e-10, dev)
    dev = max(abs(roundtrip(4, n) - 1) for n in range(6))
    ck.add("normalization 5G n = 0..5", dev <= 1e-6, dev)
    vals = [roundtrip(3, n) for n in range(6)]
    dev = max(abs(v - 1) for v in vals)
    ck.add("normalization 4G n = 0..5 (published constant)", dev <= 1e-6, vals[0],
           "published N^3 gives integral ~3.63 (n=0), ~3.75 (n>=1)", expected="deviation")
    dev = max(abs(roundtrip(3, n, "exact") - 1) for n in range(6))
    ck.add("normalization 4G n = 0..5 (corrected constant)", dev <= 1e-6, dev)
    n0 = normalization_constant(4, 0, 1.0)
    rel = n0 / 15.4 ** 0.25 - 1
    ck.add("5G N_0 vs (15.4/l)^(1/4)", abs(rel) <= 0.01, n0, f"relative {rel:.3e}")
    worst = 0.0
    for k in (0.1, 1.0, 10.0):
        half = free_state_2g(k, None, constants)
        res = integrate_half_line(lambda x, s=half: s.eval_spatial(x), k)
        worst = max(worst, abs(res.value - 1))
        box = free_state_2g(k, math.log(2.0), constants)
        res = integrate(lambda x, s=box: s.eval_spatial(x), 0.0, math.log(2.0))
        worst = max(worst, abs(res.value - 1))
    ck.add("2G free-state normalization", worst <= 1e-10, worst)


def _verify_operators(ck):
    for j in (1, 2, 3, 4):
        r = operator_eigenvalue_check(j)
        d = r.details
        ck.add(f"energy eigenvalue j = {j}", d["energy_residual"] <= 1e-12, d["energy_residual"])
        flipped = d["momentum_sign_flipped"]
        ck.add(f"momentum eigenvalue j = {j}", d["momentum_residual"] <= 1e-12,
               d["momentum_residual"], "p = -hbar k" if flipped else "",
               expected="deviation" if j == 3 else "pass")
        if j in (3, 4):
            ck.add(f"energy eigenvalue j = {j} (printed temporal root)",
                   d["printed_energy_residual"] <= 1e-12, d["printed_energy_residual"],
                   "printed Theta decays; not an eigenfunction with +E", expected="deviation")


def _verify_table(ck, constants):
    rows = table_audit(constants=constants)
    for j in (2, 3, 4):
        law = table_scaling_law(rows, j)
        ck.add(f"table audit {GeometryOrder(j).label} row scaling", law == "(2q+1)^(j-1)", law,
               "rows grow as (2q+1)^(j-1), headers state (2q+1)^j")
    anchors = ((2, 1.0, 0.01), (4, 1.0, 0.01), (4, 0.05, 0.02), (3, 1.0, 0.10))
    for j, width, tol in anchors:
        e = next(r.closed_form_ev for r in rows if r.j == j and r.width == width and r.q == 0)
        ref = table_value(j, width, 0)
        rel = e / ref - 1
        ck.add(f"table anchor {GeometryOrder(j).label} l = {width}", abs(rel) <= tol, e,
               f"table {ref!r}, relative {rel:.3e}")


def _verify_hermiticity(ck, constants):
    sin_states = [bound_state(WellConfig(1.0, constants, 2), n, textbook_3g=True) for n in range(3)]
    worst = max(hermiticity_defect(2, f, g).rel_to_scale
                for f in sin_states for g in sin_states)
    ck.add("hermiticity 3G sin family", worst <= 1e-8, worst)
    s3 = [bound_state(WellConfig(1.0, constants, 3), n) for n in range(2)]
    r = hermiticity_defect(3, s3[0], s3[1])
    ck.add("hermiticity 4G asymmetry detected (n = 0, 1)", r.rel_to_scale > 1e-2,
           r.rel_to_scale, "odd-order operator, ordinary pairing")
    s4 = [bound_state(WellConfig(1.0, constants, 4), n) for n in range(2)]
    r = hermiticity_defect(4, s4[0], s4[1])
    ck.add("hermiticity 5G (n = 0, 1)", r.rel_to_scale <= 1e-8, r.rel_to_scale,
           f"boundary term {r.details['boundary_term']!r}", expected="deviation")


def _verify_uncertainty(ck, constants):
    s = bound_state(WellConfig(1.0, constants, 2), 0, textbook_3g=True)
    rep = heisenberg_check(s)
    ck.add("uncertainty 3G sin ground state", abs(rep.product_over_hbar / 0.5679 - 1) <= 0.01
           and rep.satisfies_heisenberg, rep.product_over_hbar)
    s = bound_state(WellConfig(1.0, constants, 3), 0)
    rep = heisenberg_check(s)
    p_raw = abs(expectation(s, "momentum", 1, raw=True).value)
    ck.add("4G |<p>| from published constant", abs(p_raw / 5.15 - 1) <= 0.02, p_raw)
    ok = rep.satisfies_heisenberg and rep.alternates["quoted_third_moment"] > 0.5
    ck.add("4G product > 1/2 (both third-moment sources)", ok, rep.product_over_hbar,
           f"quoted-moment product {rep.alternates['quoted_third_moment']!r}")
    s = bound_state(WellConfig(1.0, constants, 4), 0)
    rep = heisenberg_check(s)
    mean_x = expectation(s, "position", 1).value.real
    ck.add("5G <x> vs quoted 0.56 l", abs(mean_x / 0.56 - 1) <= 0.02, mean_x,
           "quadrature value", expected="deviation")
    ck.add("5G product vs quoted 1.07", abs(rep.product_over_hbar / 1.07 - 1) <= 0.05,
           rep.product_over_hbar, "quadrature value", expected="deviation")
    ck.add("5G verdict", rep.satisfies_heisenberg, rep.product_over_hbar)
    p1 = abs(expectation(s, "momentum", 1).value)
    ck.add("5G <p> = 0", p1 <= 1e-8, p1)


def run_verify(constants: PhysicalConstants) -> Report:
    ck = _Checks()
    sections = (
        ("roots", lambda: _verify_roots(ck)),
        ("states", lambda: _verify_states(ck, constants)),
        ("normalization", lambda: _verify_normalization(ck, constants)),
        ("operators", lambda: _verify_operators(ck)),
        ("table", lambda: _verify_table(ck, constants)),
        ("hermiticity", lambda: _verify_hermiticity(ck, constants)),
        ("uncertainty", lambda: _verify_uncertainty(ck, constants)),
    )
    for name, func in sections:
        ck.guard(f"{name} section", func)
    return Report("verify", VERIFY_COLUMNS, ck.rows, base_meta("verify", constants))


def verify_failed(report: Report) -> bool:
    return any(r["status"] == "FAIL" for r in report.rows)
