import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from loropt.cavity import CavityConfig, cavity_cycle, run_cavity
from loropt.lens_optics import core, factor_core
from loropt.mat_core import DomainError, boost_z, det, rotation

from oracles import matmul_power


def test_cycle_examples():
    assert np.allclose(cavity_cycle(1.0), -np.eye(2))
    assert np.array_equal(cavity_cycle(2.0), [[1, 0], [4, 1]])
    assert abs(det(cavity_cycle(1.7)) - 1) <= 1e-14
    with pytest.raises(DomainError):
        cavity_cycle(0.0)


def test_cycle_is_doubled_boosted_rotation():
    fac = factor_core(1.3)
    expect = boost_z(-fac.eta) @ rotation(2 * fac.phi) @ boost_z(fac.eta)
    assert np.allclose(cavity_cycle(1.3), expect, atol=1e-14)


def test_config_validation():
    with pytest.raises(DomainError):
        CavityConfig(-1.0)
    with pytest.raises(DomainError):
        CavityConfig(1.0, cycles=-2)
    with pytest.raises(DomainError):
        CavityConfig(1.0, cycles=1.5)
    assert CavityConfig(1.0, 3).exponent == 6
    assert CavityConfig(1.0, 3, half_cycles=True).exponent == 3


def test_identity_after_two_cycles():
    rep = run_cavity(CavityConfig(1.0, 2))
    assert rep.stable and rep.branch == "elliptic"
    assert np.array_equal(rep.matrix, np.eye(2))
    assert rep.to_json()["matrix"] == [[1, 0], [0, 1]]


def test_unstable_cavity():
    rep = run_cavity(CavityConfig(3.0, 4))
    assert not rep.stable and rep.branch == "hyperbolic"
    chi_core = 2 * math.acosh(2)
    assert rep.chi == pytest.approx(2 * chi_core)
    assert rep.growth == pytest.approx(math.exp(4 * chi_core))
    ref = matmul_power(core(3.0), 8)
    assert np.max(np.abs(rep.matrix - ref)) <= 1e-9 * np.max(np.abs(ref))


@pytest.mark.parametrize("n", [1, 5, 40])
def test_parabolic_growth_is_linear(n):
    rep = run_cavity(CavityConfig(2.0, n))
    assert rep.branch == "parabolic" and not rep.stable
    assert rep.matrix[1, 0] == pytest.approx(4 * n)


@pytest.mark.parametrize("x", [0.3, 0.9, 1.0, 1.5, 1.99, 2.0, 2.5, 4.0])
def test_closed_form_vs_direct(x):
    for n in range(33):
        ref = matmul_power(core(x), 2 * n)
        got = run_cavity(CavityConfig(x, n)).matrix
        assert np.max(np.abs(got - ref)) <= 1e-9 * max(1, np.max(np.abs(ref)))


@given(st.floats(0.01, 1.999, allow_nan=False), st.integers(0, 10**6))
def test_stable_cavities_bounded(x, n):
    rep = run_cavity(CavityConfig(x, n))
    assert rep.stable
    assert np.max(np.abs(rep.matrix)) <= math.exp(abs(rep.eta)) * (1 + 1e-9)


@given(st.floats(0.01, 1.999, allow_nan=False))
def test_stable_conjugator_is_pure_boost(x):
    assert run_cavity(CavityConfig(x)).pure_boost_conjugator


def test_half_cycles():
    rep = run_cavity(CavityConfig(1.0, 1, half_cycles=True))
    assert np.allclose(rep.matrix, core(1.0))
