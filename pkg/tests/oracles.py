"""Reference computations written independently of the library code paths."""

import math

import numpy as np

# (1, s1, s2, s3) with s1 = diag(1, -1), s2 = x-flip, s3 = imaginary;
# a four-vector (t, z, x, y) has coherency t 1 + z s1 + x s2 + y s3
SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
)


def lorentz_by_trace(L):
    """Lambda[mu, nu] = 1/2 Re tr(sigma_mu L sigma_nu L^dagger)."""
    L = np.asarray(L, dtype=complex)
    Lh = L.conj().T
    lam = np.empty((4, 4))
    for mu in range(4):
        for nu in range(4):
            lam[mu, nu] = 0.5 * np.trace(SIGMA[mu] @ L @ SIGMA[nu] @ Lh).real
    return lam


def chebyshev_power(m, n):
    """M^n = U_{n-1}(t) M - U_{n-2}(t) I for unimodular M, t = tr(M)/2."""
    m = np.asarray(m, dtype=float)
    if n == 0:
        return np.eye(2)
    t = 0.5 * np.trace(m)
    u_prev, u = 0.0, 1.0  # U_{-1}, U_0
    for _ in range(n - 1):
        u_prev, u = u, 2 * t * u - u_prev
    return u * m - u_prev * np.eye(2)


def matmul_power(m, n):
    out = np.eye(len(m))
    for _ in range(n):
        out = out @ m
    return out


def stokes_by_fields(v):
    """Stokes parameters written out in terms of the two field amplitudes."""
    a, b = complex(v[0]), complex(v[1])
    return np.array([
        abs(a) ** 2 + abs(b) ** 2,
        abs(a) ** 2 - abs(b) ** 2,
        2 * (a.conjugate() * b).real,
        2 * (a.conjugate() * b).imag,
    ])


def rot_full(theta):
    """Full-angle rotation ((cos, -sin), (sin, cos))."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def squeeze_full(eta):
    return np.diag([math.exp(eta), math.exp(-eta)])


def random_unimodular_real(rng, scale=1.0):
    """Gaussian real matrix normalized to det 1 (rows swapped if det < 0)."""
    while True:
        m = rng.normal(scale=scale, size=(2, 2))
        d = np.linalg.det(m)
        if abs(d) > 1e-2:
            if d < 0:
                m = m[::-1].copy()
                d = -d
            return m / math.sqrt(d)
