import os

import numpy as np
import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("stress", max_examples=2000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

finite = dict(allow_nan=False, allow_infinity=False)
angles = st.floats(-2 * np.pi, 2 * np.pi, **finite)
rapidities = st.floats(-3.0, 3.0, **finite)


@st.composite
def sl2c(draw):
    """Unimodular complex 2x2 built from a bounded product of factors."""
    from loropt.mat_core import boost_x, boost_z, phase, rotation

    m = np.eye(2, dtype=complex)
    for _ in range(draw(st.integers(1, 3))):
        m = m @ phase(draw(angles)) @ rotation(draw(angles)) @ boost_z(draw(rapidities))
        m = m @ boost_x(draw(rapidities))
    return m


@st.composite
def sp2(draw):
    from loropt.mat_core import boost_z, rotation

    m = np.eye(2)
    for _ in range(draw(st.integers(1, 3))):
        m = m @ rotation(draw(angles)) @ boost_z(draw(rapidities))
    return m


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key:2d}: {detail}")
