import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ngqm.constants import PhysicalConstants
from ngqm.errors import (
    EmptyInputError,
    LengthMismatchError,
    NonpositiveMassError,
    NonpositiveWavenumberError,
)
from ngqm.geometry import (
    GeometryOrder,
    as_order,
    commutator_phase,
    dispersion_energy,
    lj_norm,
    minkowski_distance,
    named_root,
    operator_phases,
    roots_of_negative_unity,
)

S3 = math.sqrt(3.0) / 2
R2 = 1 / math.sqrt(2.0)


def test_order_from_j_and_n_agree():
    assert GeometryOrder(3) == GeometryOrder.from_n(4)
    assert GeometryOrder(3).N == 4
    assert GeometryOrder(3).label == "4G"


@pytest.mark.parametrize("text,j", [("4G", 3), ("4g", 3), ("j=3", 3), ("3", 3), (" 5G ", 4)])
def test_parse_geometry(text, j):
    assert GeometryOrder.parse(text).j == j


@pytest.mark.parametrize("bad", [0, -1, True, 2.5])
def test_order_rejects_bad_values(bad):
    with pytest.raises((ValueError, TypeError)):
        GeometryOrder(bad)


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        GeometryOrder.parse("fourG")
    with pytest.raises(ValueError):
        GeometryOrder.parse("1G")


def test_roots_examples():
    assert roots_of_negative_unity(1) == (complex(-1, 0),)
    r3 = roots_of_negative_unity(3)
    assert r3 == (complex(0.5, S3), complex(-1, 0), complex(0.5, -S3))
    r4 = roots_of_negative_unity(4)
    expected = [complex(1, 1), complex(-1, 1), complex(-1, -1), complex(1, -1)]
    for r, e in zip(r4, expected):
        assert abs(r - e * R2) <= 1e-15


def test_named_roots():
    assert named_root(3, "omega") == complex(0.5, S3)
    # the root called omega-bar-squared is the conjugate of omega, not omega**2
    assert named_root(3, "omega2") == named_root(3, "omega").conjugate()
    assert named_root(4, "eta4") == named_root(4, "eta1").conjugate()
    with pytest.raises(KeyError):
        named_root(3, "eta1")


@pytest.mark.parametrize("j", range(1, 9))
def test_root_set_invariants(j):
    roots = roots_of_negative_unity(j)
    assert len(roots) == j
    for r in roots:
        assert abs(r ** j + 1) <= 1e-12
        assert abs(abs(r) - 1) <= 1e-15
    args = [cmath.phase(r) % (2 * math.pi) for r in roots]
    assert args == sorted(args)
    assert abs(np.prod(roots) - (-1) ** j) <= 1e-12


def test_named_products():
    eta = roots_of_negative_unity(4)
    assert abs(np.prod(eta) - 1) <= 1e-12
    assert abs(np.prod(roots_of_negative_unity(3)) + 1) <= 1e-12


def test_operator_phases_table():
    assert operator_phases(1).momentum_phase == -1 and operator_phases(1).energy_phase == -1
    p2 = operator_phases(2)
    assert (p2.momentum_phase, p2.energy_phase) == (-1j, 1j)
    p3 = operator_phases(3)
    assert abs(p3.momentum_phase - complex(-0.5, -S3)) <= 1e-15
    assert abs(p3.energy_phase - complex(0.5, -S3)) <= 1e-15
    p4 = operator_phases(4)
    assert abs(p4.momentum_phase - complex(R2, R2)) <= 1e-15
    assert abs(p4.energy_phase - complex(R2, -R2)) <= 1e-15


def test_phases_follow_root_products():
    r3 = roots_of_negative_unity(3)
    assert abs(operator_phases(3).momentum_phase - r3[1] * r3[0]) <= 1e-15
    r4 = roots_of_negative_unity(4)
    assert abs(operator_phases(4).momentum_phase - r4[0] * r4[1] * r4[2]) <= 1e-15


@pytest.mark.parametrize("j", [1, 2, 3, 4, 5, 6, 7, 8])
def test_energy_times_temporal_phase_is_minus_one(j):
    p = operator_phases(j)
    assert abs(p.energy_phase * p.temporal_decay_phase + 1) <= 1e-12


@pytest.mark.parametrize("j", [5, 6, 7, 8])
def test_high_order_phases_use_root_rule(j):
    roots = roots_of_negative_unity(j)
    p = operator_phases(j)
    assert abs(p.momentum_phase - np.prod(roots[:-1])) <= 1e-12
    assert abs(p.energy_phase - roots[-1]) <= 1e-12


def test_printed_temporal_phase_differs_for_j3_j4():
    for j in (3, 4):
        p = operator_phases(j)
        assert p.printed_temporal_phase == p.energy_phase
        assert abs(p.printed_temporal_phase - p.temporal_decay_phase) > 0.5
    p2 = operator_phases(2)
    assert p2.printed_temporal_phase == p2.temporal_decay_phase


def test_commutator_phase():
    assert commutator_phase(1) == -1
    assert commutator_phase(2) == 1j
    assert commutator_phase(3) == named_root(3, "omega")
    assert commutator_phase(4) == named_root(4, "eta1")


def test_lj_norm_examples():
    assert lj_norm([3, 4], 2) == pytest.approx(5.0, rel=1e-15)
    assert lj_norm([2.5, 0, 0], 7) == 2.5
    assert lj_norm([1, 1, 1, 1], 3) == pytest.approx(4 ** (1 / 3), rel=1e-15)
    assert lj_norm([0, 0], 3) == 0.0
    with pytest.raises(EmptyInputError):
        lj_norm([], 2)


def test_lj_norm_takes_absolute_values():
    assert lj_norm([-1, 1], 3) == pytest.approx(2 ** (1 / 3))


def test_lj_norm_no_overflow():
    assert lj_norm([1e200, 1e200], 4) == pytest.approx(1e200 * 2 ** 0.25)


def test_minkowski_examples():
    assert minkowski_distance([1, 2], [1, 2], 3) == 0.0
    assert minkowski_distance([0.5], [-2.0], 5) == pytest.approx(2.5)
    assert minkowski_distance([0, 0], [1, 1], 3) == pytest.approx(2 ** (1 / 3), rel=1e-15)
    with pytest.raises(LengthMismatchError):
        minkowski_distance([0, 0], [1], 2)


def test_dispersion_examples():
    c = PhysicalConstants()
    assert dispersion_energy(2.0, 1, c) == pytest.approx(c.hbar_c * 2.0, rel=1e-15)
    assert dispersion_energy(math.pi, 2, c) == pytest.approx(0.376030162387899, rel=1e-13)
    assert dispersion_energy(0.0, 4, c) == 0.0
    assert dispersion_energy(1.0, 4, c) == pytest.approx(c.hbar_c ** 4 / (4 * c.rest_energy ** 3))


def test_dispersion_vectorised():
    e = dispersion_energy(np.array([1.0, 2.0]), 3)
    assert e.shape == (2,)
    assert e[1] / e[0] == pytest.approx(8.0, rel=1e-14)


def test_dispersion_errors():
    with pytest.raises(NonpositiveWavenumberError):
        dispersion_energy(-1.0, 2)
    with pytest.raises(NonpositiveMassError):
        PhysicalConstants(rest_energy=0.0)


def test_as_order():
    assert as_order("3G") == GeometryOrder(2)
    assert as_order(GeometryOrder(4)).j == 4
    assert as_order(np.int64(2)).j == 2


vectors = st.lists(st.floats(min_value=0, max_value=1e6), min_size=1, max_size=6)


@given(vectors, st.floats(min_value=0, max_value=1e3), st.integers(1, 8))
def test_lj_norm_homogeneous(v, t, j):
    assert lj_norm([t * c for c in v], j) == pytest.approx(t * lj_norm(v, j), rel=1e-12, abs=1e-300)


@given(vectors, st.integers(1, 8))
def test_lj_norm_bounds(v, j):
    n = lj_norm(v, j)
    assert max(v) <= n * (1 + 1e-12)
    assert n <= max(v) * len(v) ** (1 / j) * (1 + 1e-12)


@given(st.floats(min_value=1e-3, max_value=1e3), st.integers(1, 8))
def test_dispersion_scaling(k, j):
    e1 = dispersion_energy(k, j)
    assert dispersion_energy(2 * k, j) == pytest.approx(2 ** j * e1, rel=1e-12)
    assert dispersion_energy(k * 1.001, j) > e1
