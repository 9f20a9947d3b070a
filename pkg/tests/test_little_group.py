import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.linalg import expm

from loropt import little_group as lg
from loropt.mat_core import DomainError, RangeError, commutator, vector_generators


def test_e2_algebra_of_massless_generators():
    J3, N1, N2 = lg.massless_generators()
    assert np.max(np.abs(commutator(N1, N2))) == 0
    assert np.max(np.abs(commutator(J3, N1) - 1j * N2)) == 0
    assert np.max(np.abs(commutator(J3, N2) + 1j * N1)) == 0


def test_structure_constants_match_plane_group():
    J3, N1, N2 = lg.massless_generators()
    L, Px, Py = lg.e2_plane_generators()
    f4 = lg.structure_constants([N1, N2, J3])
    f3 = lg.structure_constants([Px, Py, L])
    assert np.max(np.abs(f4 - f3)) <= 1e-15
    assert f4[2, 0, 1] == pytest.approx(1.0)


def test_n1_fixes_lightlike_momentum():
    _, N1, N2 = lg.massless_generators()
    p = np.array([1.0, 1.0, 0.0, 0.0])
    for g in (N1, N2):
        assert np.allclose(expm(0.7j * g) @ p, p, atol=1e-15)


def test_classification():
    assert lg.little_group_for((2, 0, 0, 0)).tag == "massive"
    massless = lg.little_group_for((3, 3, 0, 0))
    assert massless.tag == "massless"
    assert len(massless.generators) == 3
    assert lg.little_group_for((1, 0, 2, 0)).tag == "unsupported"
    assert lg.little_group_for((1, 0, 1, 0)).tag == "unsupported"
    with pytest.raises(DomainError):
        lg.little_group_for((0, 0, 0, 0))


def test_rest_frame_generators_are_rotations():
    kind = lg.little_group_for((1.5, 0, 0, 0))
    (J1, J2, J3), _ = vector_generators()
    for g, j in zip(kind.generators, (J1, J2, J3)):
        assert np.allclose(g, j, atol=1e-15)


def test_boosted_massive_invariance():
    m = 1.7
    p = m * np.array([math.cosh(1), math.sinh(1), 0, 0])
    kind = lg.little_group_for(p)
    assert kind.tag == "massive"
    assert kind.invariance_defect() <= 1e-10


timelike = st.tuples(
    st.floats(-2, 2, allow_nan=False), st.floats(-2, 2, allow_nan=False), st.floats(-2, 2, allow_nan=False),
    st.floats(0.1, 3, allow_nan=False), st.sampled_from([1, -1]),
)


@given(timelike)
def test_invariance_property(args):
    z, x, y, m, sgn = args
    t = sgn * math.sqrt(m * m + z * z + x * x + y * y)
    kind = lg.little_group_for((t, z, x, y))
    assert kind.tag == "massive"
    scale = max(1.0, abs(t))
    assert kind.invariance_defect() <= 1e-10 * scale**3


@given(st.floats(0.01, 100, allow_nan=False))
def test_massless_invariance_property(e):
    kind = lg.little_group_for((e, e, 0, 0))
    assert kind.tag == "massless"
    assert kind.invariance_defect() <= 1e-10 * e


def test_contraction_error_is_exponential():
    rep = lg.contract([2, 5])
    # the deviation scales like e^{-2 eta}: the 2 -> 5 ratio is e^{-6}
    assert rep.error[1] / rep.error[0] == pytest.approx(math.exp(-6), rel=1e-6)
    ladder = lg.contract([2, 4, 6, 8])
    ratios = np.array(ladder.error[1:]) / np.array(ladder.error[:-1])
    assert np.all((ratios > math.exp(-4) / 2) & (ratios < 2 * math.exp(-4)))


def test_contraction_limit_and_slope():
    rep = lg.contract(np.linspace(3, 10, 15))
    assert abs(rep.log_slope(3, 10) + 2) <= 0.1
    _, N1, N2 = lg.massless_generators()
    g1, g2 = lg.contracted(12.0)
    assert np.max(np.abs(g1 - N1)) <= 1e-8
    assert np.max(np.abs(g2 - N2)) <= 1e-8


def test_contraction_errors():
    with pytest.raises(DomainError):
        lg.contract([])
    with pytest.raises(DomainError):
        lg.contract([3, 2])
    with pytest.raises(RangeError):
        lg.contracted(400.0)


def test_contraction_json_is_plain():
    doc = lg.contract([1.0, 2.0]).to_json()
    assert doc["eta"] == [1, 2]
    assert doc["normalization"] == [-2, 2]
    assert len(doc["limit"]) == 4
