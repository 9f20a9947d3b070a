"""Wigner little groups in the four-vector representation.

Massive momenta have an O(3)-like little group generated by (boosted)
rotation generators; a massless momentum along +z has the E(2)-like group
generated by J3 and the two translation-like generators N1, N2.  The
contraction of the former into the latter is evaluated numerically by
boosting J1, J2 to large rapidity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .jsonio import num, encode
from .mat_core import DomainError, RangeError, boost4_z, commutator, minkowski_norm, vector_generators

MASSLESS_TOL = 1e-12


def massless_generators():
    """(J3, N1, N2) with N1 = K1 - J2 and N2 = K2 + J1."""
    (J1, J2, J3), (K1, K2, _) = vector_generators()
    return J3, K1 - J2, K2 + J1


def structure_constants(basis):
    """f[a, b, c] with [X_a, X_b] = i f[a, b, c] X_c, solved by least squares."""
    n = len(basis)
    A = np.stack([b.ravel() for b in basis], axis=1)
    f = np.zeros((n, n, n))
    for a in range(n):
        for b in range(n):
            rhs = (commutator(basis[a], basis[b]) / 1j).ravel()
            coef, *_ = np.linalg.lstsq(A, rhs, rcond=None)
            f[a, b] = coef.real
    return f


def e2_plane_generators():
    """Generators L, Px, Py of E(2) as 3x3 matrices acting on (x, y, 1)."""
    L = np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]])
    Px = np.array([[0, 0, 1j], [0, 0, 0], [0, 0, 0]])
    Py = np.array([[0, 0, 0], [0, 0, 1j], [0, 0, 0]])
    return L, Px, Py


@dataclass(frozen=True)
class LittleGroupKind:
    tag: str  # "massive" | "massless" | "unsupported"
    generators: tuple = ()
    momentum: tuple = ()

    def invariance_defect(self, alphas=(0.1, 1.0)):
        """max ||exp(i alpha G) p - p|| over generators and alphas."""
        p = np.asarray(self.momentum, dtype=float)
        worst = 0.0
        for g in self.generators:
            for a in alphas:
                worst = max(worst, float(np.max(np.abs(expm(1j * a * g) @ p - p))))
        return worst


def _pure_boost(p):
    """Pure boost taking (m, 0, 0, 0) to p, m = sqrt(p.p), for timelike p with t > 0."""
    t, z, x, y = p
    m = math.sqrt(minkowski_norm(p))
    gamma = t / m
    # spatial order in (t, z, x, y) is z, x, y
    u = np.array([z, x, y]) / m
    b = np.eye(4)
    b[0, 0] = gamma
    b[0, 1:] = u
    b[1:, 0] = u
    b[1:, 1:] += np.outer(u, u) / (1 + gamma)
    return b


def little_group_for(p, tol=MASSLESS_TOL) -> LittleGroupKind:
    """Classify a four-momentum and return generators of its little group.

    Massive momenta get B J_i B^-1 for the pure boost B from the rest frame
    (negative-energy momenta use -p, which has the same little group).
    Massless momenta are supported only along +z; spacelike ones are
    reported as unsupported.
    """
    p = np.asarray(p, dtype=float)
    if p.shape != (4,) or not np.all(np.isfinite(p)):
        raise DomainError("momentum must be four finite numbers")
    if not np.any(p):
        raise DomainError("zero four-momentum has no little group")
    scale = float(np.max(np.abs(p))) ** 2
    m2 = minkowski_norm(p)
    key = tuple(float(v) for v in p)
    if m2 > tol * scale:
        (J1, J2, J3), _ = vector_generators()
        q = p if p[0] > 0 else -p
        b = _pure_boost(q)
        binv = np.linalg.inv(b)
        return LittleGroupKind("massive", tuple(b @ j @ binv for j in (J1, J2, J3)), key)
    if abs(m2) <= tol * scale:
        t, z, x, y = p
        if t > 0 and z > 0 and abs(x) <= tol * t and abs(y) <= tol * t:
            return LittleGroupKind("massless", massless_generators(), key)
    return LittleGroupKind("unsupported", (), key)


@dataclass
class ContractionReport:
    eta: list
    error: list
    limit: np.ndarray
    error_n2: list = field(default_factory=list)
    direction: str = "B J B^-1"
    normalization: tuple = (-2.0, 2.0)

    def to_json(self):
        return {
            "eta": [num(e) for e in self.eta],
            "error": [num(e) for e in self.error],
            "limit": encode(self.limit),
            "error_n2": [num(e) for e in self.error_n2],
            "direction": self.direction,
            "normalization": [num(c) for c in self.normalization],
        }

    def log_slope(self, lo=None, hi=None):
        """Least-squares slope of ln(error) against eta over [lo, hi]."""
        eta = np.asarray(self.eta)
        err = np.asarray(self.error)
        sel = np.ones_like(eta, dtype=bool)
        if lo is not None:
            sel &= eta >= lo
        if hi is not None:
            sel &= eta <= hi
        return float(np.polyfit(eta[sel], np.log(err[sel]), 1)[0])


def contracted(eta):
    """Rescaled boosted transverse rotation generators at rapidity eta.

    Returns (c1 e^-eta B J2 B^-1, c2 e^-eta B J1 B^-1) with c1 = -2, c2 = 2;
    these tend to N1 and N2 with error O(e^{-2 eta}).
    """
    if eta > 300:
        raise RangeError(f"rapidity {eta!r} too large for the contraction")
    (J1, J2, _), _ = vector_generators()
    b = boost4_z(eta)
    binv = boost4_z(-eta)
    w = math.exp(-eta)
    return -2.0 * w * (b @ J2 @ binv), 2.0 * w * (b @ J1 @ binv)


def contract(eta_ladder) -> ContractionReport:
    eta = [float(e) for e in eta_ladder]
    if not eta:
        raise DomainError("empty rapidity ladder")
    if any(e <= 0 for e in eta) or any(b <= a for a, b in zip(eta, eta[1:])):
        raise DomainError("rapidities must be positive and increasing")
    _, N1, N2 = massless_generators()
    err1, err2 = [], []
    g1 = None
    for e in eta:
        g1, g2 = contracted(e)
        err1.append(float(np.max(np.abs(g1 - N1))))
        err2.append(float(np.max(np.abs(g2 - N2))))
    return ContractionReport(eta, err1, g1, err2)
