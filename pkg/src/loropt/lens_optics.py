"""Para-axial one-lens optics and the dimensionless core matrix.

For the symmetric system z1 = z2 = z the one-lens matrix equals
``-S core(z/f) S^-1`` with ``S = diag(sqrt z, 1/sqrt z)``.  The core matrix
is a boosted rotation for 0 < x < 2, a boosted boost for x > 2 and
triangular at x = 2, where every (eta, angle) factorization degenerates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .jsonio import encode, num
from .mat_core import DomainError, boost_x, boost_z, rotation

PARABOLIC_WINDOW = 1e-6
TOL_IMAGING = 1e-12


def lens(f):
    if f == 0 or not math.isfinite(f):
        raise DomainError("focal length must be finite and non-zero")
    return np.array([[1.0, 0.0], [-1.0 / f, 1.0]])


def translate(z):
    if not math.isfinite(z):
        raise DomainError("translation distance must be finite")
    return np.array([[1.0, float(z)], [0.0, 1.0]])


def one_lens(z1, f, z2):
    """T(z2) L(f) T(z1): object distance z1, image distance z2."""
    return translate(z2) @ lens(f) @ translate(z1)


def imaging(z1, f, z2, tol=TOL_IMAGING):
    """True when the one-lens system focuses (upper-right element vanishes)."""
    m = one_lens(z1, f, z2)
    scale = max(1.0, abs(z1), abs(z2))
    return bool(abs(m[0, 1]) <= tol * scale)


def core(x):
    """((x-1, x-2), (x, x-1)); unimodular for every real x."""
    return np.array([[x - 1.0, x - 2.0], [x, x - 1.0]])


def core_scaling(z):
    """Sign and S with one_lens(z, f, z) = sign * S core(z/f) S^-1."""
    if z <= 0:
        raise DomainError("core scaling needs z > 0")
    r = math.sqrt(z)
    return -1.0, np.diag([r, 1.0 / r])


@dataclass(frozen=True)
class CoreFactorization:
    """Factorization core(x) = B(-eta) K(angle) B(eta).

    K is rotation(phi) on the elliptic branch and boost_x(chi) on the
    hyperbolic one, so the matrix reads ((cos, -e^-eta sin), (e^eta sin, cos))
    resp. ((cosh, e^-eta sinh), (e^eta sinh, cosh)) in half-angle entries.
    """

    branch: str  # "elliptic" | "hyperbolic" | "parabolic"
    x: float
    eta: float | None = None
    angle: float | None = None

    @property
    def phi(self):
        return self.angle if self.branch == "elliptic" else None

    @property
    def chi(self):
        return self.angle if self.branch == "hyperbolic" else None

    def conjugator(self):
        if self.branch == "parabolic":
            return None
        return boost_z(-self.eta)

    def reconstruction(self):
        if self.branch == "parabolic":
            return core(2.0)
        inner = rotation(self.angle) if self.branch == "elliptic" else boost_x(self.angle)
        return boost_z(-self.eta) @ inner @ boost_z(self.eta)

    def to_json(self):
        doc = {"branch": self.branch, "x": num(self.x)}
        if self.branch == "elliptic":
            doc.update(eta=num(self.eta), phi=num(self.angle))
        elif self.branch == "hyperbolic":
            doc.update(eta=num(self.eta), chi=num(self.angle))
        doc["reconstruction"] = encode(self.reconstruction())
        return doc


def factor_core(x, window=PARABOLIC_WINDOW) -> CoreFactorization:
    """Boosted-rotation / boosted-boost factorization of core(x), x > 0.

    Elliptic (0 < x < 2): cos(phi/2) = x-1, sin(phi/2) = sqrt(x(2-x)),
    e^{2 eta} = x/(2-x), phi in (0, 2 pi).
    Hyperbolic (x > 2): cosh(chi/2) = x-1, sinh(chi/2) = sqrt(x(x-2)),
    e^{2 eta} = x/(x-2).
    Within ``window`` of x = 2 the parabolic branch is returned.
    """
    if not math.isfinite(x) or x <= 0:
        raise DomainError(f"core factorization needs x > 0, got {x!r}")
    if abs(x - 2.0) < window:
        return CoreFactorization("parabolic", float(x))
    if x < 2.0:
        half = math.atan2(math.sqrt(x * (2.0 - x)), x - 1.0)
        eta = 0.5 * math.log(x / (2.0 - x))
        return CoreFactorization("elliptic", float(x), eta, 2.0 * half)
    half = math.asinh(math.sqrt(x * (x - 2.0)))
    eta = 0.5 * math.log(x / (x - 2.0))
    return CoreFactorization("hyperbolic", float(x), eta, 2.0 * half)
