"""Periodic two-medium multilayer in the S-matrix (SU(1,1)) picture.

One period is boundary(eta) P(phi1) boundary(-eta) P(phi2).  The conjugation
``decomp.su11_to_sp2`` carries boundaries to boost_z and phase matrices to
rotations, giving the real period matrix whose powers are computed in closed
form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .decomp import bargmann, iwasawa_matrix, power_closed_form, power_form, su11_to_sp2
from .jsonio import encode, num
from .mat_core import DomainError, boost_z, rotation


@dataclass(frozen=True)
class LayerPair:
    eta: float
    phi1: float
    phi2: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.eta, self.phi1, self.phi2)):
            raise DomainError("layer parameters must be finite")


def boundary(eta):
    ch, sh = math.cosh(0.5 * eta), math.sinh(0.5 * eta)
    return np.array([[ch, sh], [sh, ch]], dtype=complex)


def phase_medium(phi):
    return np.diag([np.exp(-0.5j * phi), np.exp(0.5j * phi)])


def period(p: LayerPair):
    return boundary(p.eta) @ phase_medium(p.phi1) @ boundary(-p.eta) @ phase_medium(p.phi2)


def period_sp2(p: LayerPair):
    """Real form of one period: B(eta) R(phi1) B(-eta) R(phi2)."""
    return boost_z(p.eta) @ rotation(p.phi1) @ boost_z(-p.eta) @ rotation(p.phi2)


@dataclass(frozen=True)
class PeriodReport:
    pair: LayerPair
    periods: int
    klass: str
    mu: float  # squeeze of the conjugator S = R(rho) B(mu) R(sigma)
    rho: float
    sigma: float
    pure_boost: bool
    parameter: float  # rotation angle alpha or rapidity xi per period
    matrix: np.ndarray

    def to_json(self):
        return {
            "eta": num(self.pair.eta),
            "phi1": num(self.pair.phi1),
            "phi2": num(self.pair.phi2),
            "periods": self.periods,
            "class": self.klass,
            "mu": num(self.mu),
            "rho": num(self.rho),
            "sigma": num(self.sigma),
            "pure_boost": self.pure_boost,
            "parameter": num(self.parameter),
            "matrix": encode(self.matrix),
        }


def _signed_conjugator_params(s):
    """(rho, mu, sigma) with s = R(rho) B(mu) R(sigma), rho in (-pi/2, pi/2]."""
    t = bargmann(s)
    rho, mu, sigma = t.alpha, t.gamma, t.beta
    # R(pi) B(mu) R(-pi) = B(-mu) lets rho move by pi
    if rho > math.pi / 2:
        rho, mu, sigma = rho - math.pi, -mu, sigma + math.pi
    elif rho <= -math.pi / 2:
        rho, mu, sigma = rho + math.pi, -mu, sigma - math.pi
    return rho, mu, sigma


def run_periods(p: LayerPair, n: int) -> PeriodReport:
    """N periods in closed form, sign * S K(N * parameter) S^-1.

    When the real period matrix has equal diagonal entries the conjugator is
    a pure boost B(mu), the two-parameter form B(mu) R(N alpha) B(-mu).
    """
    if int(n) != n or n < 0:
        raise DomainError("period count must be a non-negative integer")
    m = period_sp2(p)
    form = power_form(m)
    if form.pure_boost:
        rho, mu, sigma = 0.0, form.boost_rapidity(), 0.0
    else:
        rho, mu, sigma = _signed_conjugator_params(form.conjugator)
    return PeriodReport(
        p, int(n), form.klass, mu, rho, sigma, form.pure_boost, form.parameter,
        power_closed_form(m, n),
    )


def period_route_defect(p: LayerPair):
    """max |period_sp2(p) - su11_to_sp2(period(p))|."""
    return float(np.max(np.abs(period_sp2(p) - su11_to_sp2(period(p)))))


@dataclass(frozen=True)
class IwasawaWitness:
    """Layer phases at which the period chain P B P becomes lower triangular.

    ``eta`` is the full-angle rapidity (half the layer boundary parameter),
    theta solves sinh(eta) = cosh(eta) sin(2 theta), and the full-angle
    rotation angles are phi = theta + pi/4, xi = theta - pi/4.
    """

    eta: float
    theta: float
    phi1: float  # layer phase thicknesses, 2 phi and 2 xi
    phi2: float
    matrix: np.ndarray

    def to_json(self):
        return {
            "eta": num(self.eta),
            "theta": num(self.theta),
            "phi1": num(self.phi1),
            "phi2": num(self.phi2),
            "matrix": encode(self.matrix),
        }


def iwasawa_scan(p: LayerPair, steps=64, tol=1e-10):
    """Root-find the triangularity constraint along phi - xi = pi/2.

    The constraint g(theta) = cosh(eta) sin(2 theta) - sinh(eta) is scanned
    over [-pi/4, pi/4] for a sign change and refined with brentq; the
    assembled matrix is verified to be unit lower triangular. Returns None if
    no root is bracketed.
    """
    eta = 0.5 * p.eta
    ch, sh = math.cosh(eta), math.sinh(eta)

    def g(theta):
        return ch * math.sin(2 * theta) - sh

    grid = np.linspace(-math.pi / 4, math.pi / 4, steps + 1)
    vals = [g(t) for t in grid]
    theta = None
    for a, b, ga, gb in zip(grid, grid[1:], vals, vals[1:]):
        if ga == 0:
            theta = float(a)
            break
        if ga * gb < 0:
            theta = brentq(g, a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps)
            break
    else:
        if vals[-1] == 0:
            theta = float(grid[-1])
    if theta is None:
        return None
    m = iwasawa_matrix(eta, theta)
    scale = max(1.0, float(np.max(np.abs(m))))
    if abs(m[0, 1]) > tol * scale or abs(m[0, 0] - 1) > tol * scale:
        return None
    return IwasawaWitness(eta, theta, 2 * (theta + math.pi / 4), 2 * (theta - math.pi / 4), m)
