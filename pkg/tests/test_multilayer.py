import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from loropt import multilayer as ml
from loropt.decomp import su11_to_sp2
from loropt.mat_core import DomainError, boost_z, det, rotation

from oracles import matmul_power

layer = st.builds(
    ml.LayerPair,
    st.floats(-2, 2, allow_nan=False),
    st.floats(-2 * math.pi, 2 * math.pi, allow_nan=False),
    st.floats(-2 * math.pi, 2 * math.pi, allow_nan=False),
)


def test_boundary_and_phase_examples():
    assert np.allclose(ml.boundary(0), np.eye(2))
    assert np.allclose(ml.boundary(0.8) @ ml.boundary(-0.8), np.eye(2))
    assert np.allclose(ml.phase_medium(0.2) @ ml.phase_medium(0.5), ml.phase_medium(0.7))


def test_period_examples():
    assert np.allclose(ml.period(ml.LayerPair(0, 0.4, 0.9)), ml.phase_medium(1.3))
    assert np.allclose(ml.period(ml.LayerPair(0.7, 0, 0)), np.eye(2))
    assert abs(det(ml.period(ml.LayerPair(0.6, 0.9, 1.3))) - 1) <= 1e-13
    assert np.allclose(ml.period_sp2(ml.LayerPair(0, 0.4, 0.9)), rotation(1.3))
    p = ml.LayerPair(0.6, 0.9, 0)
    assert np.allclose(ml.period_sp2(p), boost_z(0.6) @ rotation(0.9) @ boost_z(-0.6))
    assert ml.period_route_defect(ml.LayerPair(0.6, 0.9, 1.3)) <= 1e-12
    with pytest.raises(DomainError):
        ml.LayerPair(float("nan"), 0, 0)


def test_run_periods_examples():
    # full turn of half-angle rotations is -I
    rep = ml.run_periods(ml.LayerPair(0, 0.2 * math.pi, 0.2 * math.pi), 5)
    assert np.allclose(rep.matrix, -np.eye(2), atol=1e-14)
    assert np.array_equal(ml.run_periods(ml.LayerPair(0.6, 0.9, 1.3), 0).matrix, np.eye(2))
    p = ml.LayerPair(0.6, 0.9, 1.3)
    ref = matmul_power(ml.period_sp2(p), 16)
    assert np.max(np.abs(ml.run_periods(p, 16).matrix - ref)) <= 1e-9
    with pytest.raises(DomainError):
        ml.run_periods(p, -1)


def test_conjugator_params_reassemble():
    p = ml.LayerPair(0.6, 0.9, 1.3)
    rep = ml.run_periods(p, 3)
    s = rotation(rep.rho) @ boost_z(rep.mu) @ rotation(rep.sigma)
    m = ml.period_sp2(p)
    k = rotation(rep.parameter)
    assert np.allclose(s @ k @ np.linalg.inv(s), m, atol=1e-12)
    assert -math.pi / 2 < rep.rho <= math.pi / 2


def test_equal_diagonal_period_has_pure_boost():
    # phi2 = 0 with a lens-optics style period
    rep = ml.run_periods(ml.LayerPair(0.4, 1.0, 0.0), 2)
    assert rep.pure_boost and rep.rho == 0 and rep.sigma == 0


@given(layer)
def test_route_equivalence(p):
    m = ml.period_sp2(p)
    assert ml.period_route_defect(p) <= 1e-12 * max(1, np.max(np.abs(m)))


@given(layer, st.integers(0, 32))
def test_closed_form_vs_direct(p, n):
    ref = matmul_power(ml.period_sp2(p), n)
    got = ml.run_periods(p, n).matrix
    assert np.max(np.abs(got - ref)) <= 1e-9 * max(1, np.max(np.abs(ref)))
    assert abs(det(got) - 1) <= 1e-8 * max(1, np.max(np.abs(got)) ** 2)


def test_elliptic_periods_bounded():
    p = ml.LayerPair(0.6, 0.9, 1.3)
    rep1 = ml.run_periods(p, 1)
    assert rep1.klass == "elliptic"
    bound = math.exp(abs(rep1.mu))
    for n in (10, 1000, 10**6):
        assert np.max(np.abs(ml.run_periods(p, n).matrix)) <= bound * (1 + 1e-9)


def test_iwasawa_witness():
    w = ml.iwasawa_scan(ml.LayerPair(2 * math.asinh(1.0), 0, 0))
    assert w.theta == pytest.approx(math.pi / 8, abs=1e-15)
    assert np.max(np.abs(w.matrix - [[1, 0], [2, 1]])) <= 1e-12
    w0 = ml.iwasawa_scan(ml.LayerPair(0.0, 0, 0))
    assert w0.theta == 0 and np.allclose(w0.matrix, np.eye(2), atol=1e-15)


@given(st.floats(-6, 6, allow_nan=False))
def test_witness_is_the_su11_chain(eta_layer):
    w = ml.iwasawa_scan(ml.LayerPair(eta_layer, 0, 0))
    chain = ml.phase_medium(w.phi1) @ ml.boundary(eta_layer) @ ml.phase_medium(w.phi2)
    v = su11_to_sp2(chain)
    scale = math.cosh(w.eta)
    assert np.max(np.abs(v - w.matrix)) <= 1e-12 * scale
    assert abs(v[0, 1]) <= 1e-12 * scale
    assert v[1, 0] == pytest.approx(2 * math.sinh(w.eta), abs=1e-12 * scale)
