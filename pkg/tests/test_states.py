import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ngqm.constants import PhysicalConstants
from ngqm.errors import (
    InvalidParameterError,
    NoBoundStatesError,
    NonpositiveWavenumberError,
    OutOfDomainError,
    UnsupportedGeometryError,
)
from ngqm.geometry import dispersion_energy
from ngqm.oracle.quadrature import integrate, integrate_half_line
from ngqm.states import (
    WellConfig,
    bound_state,
    dispersion_consistency_ratio,
    eigenenergy_closed_form,
    exact_normalization_constant,
    free_state_2g,
    free_state_ng,
    normalization_constant,
    quantization_wavenumber,
)
from ngqm.statistics import norm_integral

E_3G = 0.376030162387898938919   # mpmath, CODATA constants, l = 1 nm
E_4G = 5.85282954613008537136e-05
E_5G = 3.45887900125503305421e-08


def well(j, width=1.0):
    return WellConfig(width, order=j)


def test_quantization_examples():
    assert quantization_wavenumber(2, 0, 1.0) == pytest.approx(math.pi / 2, rel=1e-15)
    assert quantization_wavenumber(3, 0, 1.0) == pytest.approx(math.pi / math.sqrt(3), rel=1e-15)
    assert quantization_wavenumber(4, 2, 2.0) == pytest.approx(5 * math.pi / (math.sqrt(2) * 2))


@pytest.mark.parametrize("fn", [
    lambda: quantization_wavenumber(1, 0, 1.0),
    lambda: eigenenergy_closed_form(1, 0, well(1)),
    lambda: normalization_constant(1, 0, 1.0),
    lambda: bound_state(well(1), 0),
])
def test_2g_has_no_bound_states(fn):
    with pytest.raises(NoBoundStatesError):
        fn()


def test_high_orders_rejected():
    with pytest.raises(UnsupportedGeometryError):
        quantization_wavenumber(5, 0, 1.0)
    with pytest.raises(UnsupportedGeometryError):
        WellConfig(1.0, order=5)


@pytest.mark.parametrize("bad", [0.0, -1.0, float("inf"), float("nan")])
def test_bad_width(bad):
    with pytest.raises(InvalidParameterError):
        WellConfig(bad, order=2)


def test_bad_quantum_number():
    with pytest.raises(InvalidParameterError):
        quantization_wavenumber(2, -1, 1.0)
    with pytest.raises(InvalidParameterError):
        quantization_wavenumber(2, 1.5, 1.0)


def test_energy_anchor_values():
    assert eigenenergy_closed_form(2, 0, well(2)) == pytest.approx(E_3G, rel=1e-13)
    assert eigenenergy_closed_form(3, 0, well(3)) == pytest.approx(E_4G, rel=1e-13)
    assert eigenenergy_closed_form(4, 0, well(4)) == pytest.approx(E_5G, rel=1e-13)


@pytest.mark.parametrize("j", [2, 3, 4])
def test_energy_quantum_number_scaling(j):
    w = well(j)
    e0 = eigenenergy_closed_form(j, 0, w)
    for n in range(21):
        assert eigenenergy_closed_form(j, n, w) / e0 == pytest.approx((2 * n + 1) ** j, rel=1e-12)


@pytest.mark.parametrize("j", [2, 3, 4])
def test_energy_width_scaling(j):
    ref = eigenenergy_closed_form(j, 1, well(j, 1.0))
    for width in (0.05, 0.25, 3.0):
        e = eigenenergy_closed_form(j, 1, well(j, width))
        assert e * width ** j == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("j,ratio", [(2, 4.0), (3, 1.0), (4, 0.5)])
def test_dispersion_consistency_ratio(j, ratio):
    for n in (0, 3, 7):
        for width in (0.05, 1.0):
            assert dispersion_consistency_ratio(j, n, well(j, width)) == pytest.approx(ratio, rel=1e-12)


def test_normalization_examples():
    assert normalization_constant(2, 0, 2.0) == 1.0
    assert normalization_constant(4, 0, 1.0) == pytest.approx(15.4 ** 0.25, rel=0.01)
    n3 = normalization_constant(3, 0, 1.0) ** 3
    assert n3 == pytest.approx(15.4437558759967659861, rel=1e-12)


def test_exact_normalization_matches_mpmath():
    mp.mp.dps = 30
    for n in range(4):
        a = (2 * n + 1) * mp.pi / 2
        b = a / mp.sqrt(3)
        integral = mp.quad(lambda x: (mp.exp(-b * x) * mp.cos(a * x)) ** 3,
                           mp.linspace(0, 1, 2 * n + 3))
        expected = float(1 / integral) ** (1 / 3)
        assert exact_normalization_constant(3, n, 1.0) == pytest.approx(expected, rel=1e-13)


def test_5g_normalization_matches_mpmath():
    mp.mp.dps = 30
    for n in (0, 1, 2, 6):
        a = (2 * n + 1) * mp.pi / 2
        integral = mp.quad(lambda x: (mp.sinh(a * x) * mp.cos(a * x)) ** 4,
                           mp.linspace(0, 1, 2 * n + 3))
        expected = float(1 / integral) ** 0.25
        assert normalization_constant(4, n, 1.0) == pytest.approx(expected, rel=1e-12)


def test_5g_log_domain_is_continuous_and_finite():
    values = [normalization_constant(4, n, 1.0) for n in range(150)]
    assert all(v > 0 and math.isfinite(v) for v in values)
    # the direct and log-domain branches meet at n = 5 without a jump
    ratios = [values[n + 1] / values[n] for n in range(2, 8)]
    assert np.all(np.diff(np.log(ratios)) < 0.05)


@pytest.mark.parametrize("n", range(21))
def test_wall_at_l(n):
    for j in (2, 3, 4):
        s = bound_state(well(j), n)
        grid = np.linspace(0, 1, 4001)
        scale = np.max(np.abs(s.eval_spatial(grid)))
        assert abs(s.eval_spatial(1.0)) <= 1e-10 * scale


def test_wall_at_zero_only_for_5g():
    assert bound_state(well(4), 0).eval_spatial(0.0) == 0.0
    s3 = bound_state(well(3), 0)
    assert s3.eval_spatial(0.0) == pytest.approx(s3.normalization, rel=1e-15)
    s2 = bound_state(well(2), 0)
    assert s2.eval_spatial(0.0) == pytest.approx(math.sqrt(2), rel=1e-15)


def test_closed_forms_pointwise():
    x = np.linspace(0, 1, 11)
    s = bound_state(well(3), 1)
    a = 3 * math.pi / 2
    expected = s.normalization * np.exp(-a * x / math.sqrt(3)) * np.cos(a * x)
    assert np.allclose(s.eval_spatial(x), expected, rtol=1e-13, atol=1e-14)
    s = bound_state(well(4), 0)
    expected = s.normalization * np.sinh(math.pi * x / 2) * np.cos(math.pi * x / 2)
    assert np.allclose(s.eval_spatial(x), expected, rtol=1e-13, atol=1e-14)
    s = bound_state(well(2), 1, textbook_3g=True)
    assert np.allclose(s.eval_spatial(x), math.sqrt(2) * np.sin(2 * math.pi * x), atol=1e-14)


def test_derivatives_are_exact():
    s = bound_state(well(3), 0)
    x = np.linspace(0, 1, 7)
    assert np.allclose(s.derivative(x, 3), s.k_n ** 3 * s.eval_spatial(x), rtol=1e-12, atol=1e-12)
    s = bound_state(well(4), 2)
    assert np.allclose(s.derivative(x, 4), -s.k_n ** 4 * s.eval_spatial(x), rtol=1e-11, atol=1e-9)


def test_out_of_domain():
    s = bound_state(well(2), 0)
    for x in (-1e-12, 1.0 + 1e-12, float("nan")):
        with pytest.raises(OutOfDomainError):
            s.eval_spatial(x)


def test_textbook_flag_only_for_3g():
    with pytest.raises(UnsupportedGeometryError):
        bound_state(well(3), 0, textbook_3g=True)
    with pytest.raises(InvalidParameterError):
        bound_state(well(3), 0, normalization="other")


def test_temporal_factor():
    s2 = bound_state(well(2), 0)
    assert s2.eval_temporal(0.0) == 1
    t = np.linspace(0, 20, 50)
    assert np.allclose(np.abs(s2.eval_temporal(t)), 1.0, atol=1e-15)
    s3 = bound_state(well(3), 0)
    assert abs(s3.eval_temporal(1.0)) == pytest.approx(math.exp(-0.5), rel=1e-14)
    s4 = bound_state(well(4), 0)
    assert abs(s4.eval_temporal(1.0)) == pytest.approx(math.exp(-1 / math.sqrt(2)), rel=1e-14)


@pytest.mark.parametrize("j", [3, 4])
def test_printed_temporal_factor_decays(j):
    s = bound_state(well(j), 0)
    mods = np.abs(s.eval_temporal(np.linspace(0, 10, 101)))
    assert np.all(np.diff(mods) <= 0)


@pytest.mark.parametrize("j", [2, 3, 4])
def test_consistent_temporal_factor_is_energy_eigenfunction(j):
    # E = energy_phase * hbar d/dt acting on exp(-tau t) gives -energy_phase*tau
    from ngqm.geometry import operator_phases
    p = operator_phases(j)
    s = bound_state(well(j), 0)
    t, h = 0.3, 1e-6
    d = (s.eval_temporal(t + h, consistent=True) - s.eval_temporal(t - h, consistent=True)) / (2 * h)
    assert p.energy_phase * d / s.eval_temporal(t, consistent=True) == pytest.approx(1.0, abs=1e-8)


def test_psi_is_real_at_t0():
    s = bound_state(well(4), 1)
    assert s.psi(0.4, 0.0) == pytest.approx(s.eval_spatial(0.4))


@pytest.mark.parametrize("j", [3, 4])
@pytest.mark.parametrize("n", range(6))
def test_normalization_roundtrip_by_quadrature(j, n):
    s = bound_state(well(j), n, normalization="exact")
    assert norm_integral(s).value == pytest.approx(1.0, abs=1e-6)


def test_printed_4g_normalization_is_off():
    values = [norm_integral(bound_state(well(3), n)).value for n in range(3)]
    assert values[0] == pytest.approx(3.62864721706927686, rel=1e-10)
    assert values[1] == pytest.approx(3.75055598964772914, rel=1e-10)


def test_3g_normalization_roundtrip():
    for n in range(6):
        for tb in (False, True):
            s = bound_state(well(2, 0.7), n, textbook_3g=tb)
            assert norm_integral(s).value == pytest.approx(1.0, abs=1e-10)


def test_free_state_2g():
    s = free_state_2g(1.0)
    assert s.normalization == 1.0 and s.domain == "half-line"
    assert s.energy == pytest.approx(PhysicalConstants().hbar_c)
    box = free_state_2g(1.0, math.log(2.0))
    assert box.normalization == pytest.approx(2.0, rel=1e-15)
    with pytest.raises(NonpositiveWavenumberError):
        free_state_2g(0.0)
    with pytest.raises(OutOfDomainError):
        box.eval_spatial(1.0)


@pytest.mark.parametrize("k", [0.1, 1.0, 10.0])
def test_free_state_2g_normalizations_integrate_to_one(k):
    s = free_state_2g(k)
    res = integrate_half_line(s.eval_spatial, k)
    assert res.value == pytest.approx(1.0, abs=1e-10)
    assert res.truncation == pytest.approx(math.exp(-40))
    box = free_state_2g(k, 1.3)
    assert integrate(box.eval_spatial, 0.0, 1.3).value == pytest.approx(1.0, abs=1e-10)


def test_free_state_ng():
    s2 = free_state_ng(2.0, 2)
    assert s2.spatial_root == 1j
    assert s2.energy == pytest.approx(dispersion_energy(2.0, 2))
    assert s2.normalization is None
    s4 = free_state_ng(1.0, 4)
    c = PhysicalConstants()
    assert s4.energy == pytest.approx(c.hbar_c ** 4 / (4 * c.rest_energy ** 3), rel=1e-14)
    with pytest.raises(UnsupportedGeometryError):
        free_state_ng(1.0, 1)
    with pytest.raises(NonpositiveWavenumberError):
        free_state_ng(-1.0, 3)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4), st.integers(0, 20), st.floats(0.01, 100.0))
def test_bound_state_invariants(j, n, width):
    s = bound_state(WellConfig(width, order=j), n)
    assert s.k_n > 0 and s.energy > 0 and s.normalization > 0
    assert math.isfinite(s.normalization)
