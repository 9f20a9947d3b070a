"""Jones vectors, coherency matrices, Stokes four-vectors and Mueller matrices.

Correlations follow S_ij = <psi_i^* psi_j>.  With that ordering the matrix
``2 S^T`` has the four-vector layout ((t+z, x-iy), (x+iy, t-z)) with
(t, z, x, y) = (S0, S1, S2, S3), so a Jones matrix L acts on the Stokes vector
through the Lorentz matrix induced by C -> L C L^dagger.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .mat_core import TOL_DET, TOL_HERM, DomainError, det, induced_lorentz, is_hermitian

TOL_MASS = 1e-10


def jones(psi1, psi2):
    v = np.array([psi1, psi2], dtype=complex)
    if not np.all(np.isfinite(v)) or not np.any(v):
        raise DomainError("Jones vector must be finite and non-zero")
    return v


def apply_jones(m, v):
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise DomainError("Jones matrix must be 2x2")
    if abs(det(m)) <= TOL_DET * max(1.0, float(np.max(np.abs(m)))) ** 2:
        raise DomainError("singular Jones matrix")
    return m @ np.asarray(v, dtype=complex)


def coherency_of(v):
    """Rank-one coherency matrix S_ij = psi_i^* psi_j of a pure state."""
    v = np.asarray(v, dtype=complex)
    return np.outer(v.conj(), v)


def coherency_mix(weights, vectors):
    """Weighted average of pure-state coherency matrices (a time average)."""
    w = np.asarray(weights, dtype=float)
    if w.size == 0 or len(vectors) != w.size:
        raise DomainError("mixture needs one weight per Jones vector")
    if np.any(w < 0) or w.sum() <= 0:
        raise DomainError("weights must be non-negative with positive sum")
    acc = sum(wi * coherency_of(v) for wi, v in zip(w, vectors))
    return acc / w.sum()


def stokes_from_coherency(c, tol=TOL_HERM):
    """(S0, S1, S2, S3) = (S11+S22, S11-S22, S12+S21, -i(S12-S21))."""
    c = np.asarray(c, dtype=complex)
    if c.shape != (2, 2) or not is_hermitian(c, tol):
        raise DomainError("coherency matrix must be a Hermitian 2x2 matrix")
    s11, s12, s21, s22 = c[0, 0], c[0, 1], c[1, 0], c[1, 1]
    return np.array(
        [(s11 + s22).real, (s11 - s22).real, (s12 + s21).real, (-1j * (s12 - s21)).real]
    )


def stokes(v):
    return stokes_from_coherency(coherency_of(v))


def coherency_from_stokes(s):
    s0, s1, s2, s3 = s
    return 0.5 * np.array([[s0 + s1, s2 + 1j * s3], [s2 - 1j * s3, s0 - s1]])


def mueller(L, tol=TOL_DET):
    """Mueller matrix of a unimodular Jones matrix, acting on (S0, S1, S2, S3)."""
    return induced_lorentz(L, tol)


@dataclass(frozen=True)
class CoherenceMass:
    mass: float
    mass_squared: float
    state: str  # "pure" | "partially mixed" | "completely random"


def coherence_mass(s, tol=TOL_MASS) -> CoherenceMass:
    """M^2 = S0^2 - S1^2 - S2^2 - S3^2 and the mixedness it signals.

    Classification compares M^2 with 0 and with S0^2 at relative tolerance
    ``tol``, since M itself carries only half the digits near zero.
    """
    s0, s1, s2, s3 = (float(x) for x in s)
    m2 = s0 * s0 - s1 * s1 - s2 * s2 - s3 * s3
    scale = max(s0 * s0, np.finfo(float).tiny)
    if m2 <= tol * scale:
        state = "pure"
    elif abs(s0 * s0 - m2) <= tol * scale:
        state = "completely random"
    else:
        state = "partially mixed"
    return CoherenceMass(float(np.sqrt(max(m2, 0.0))), m2, state)
