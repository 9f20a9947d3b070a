"""Symmetric laser cavity as repeated one-lens core matrices.

One round trip is core(x)^2. On the stable branch 0 < x < 2 the core is a
boosted rotation, so N round trips are B(-eta) R(2N phi) B(eta) with the
core's (eta, phi); on 0 < x < 2 entries stay bounded by e^|eta| for all N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .decomp import power_closed_form, power_form
from .jsonio import encode, num
from .lens_optics import core, factor_core
from .mat_core import DomainError


@dataclass(frozen=True)
class CavityConfig:
    x: float
    cycles: int = 1
    half_cycles: bool = False  # count powers of C instead of C^2

    def __post_init__(self):
        if not math.isfinite(self.x) or self.x <= 0:
            raise DomainError("cavity needs x > 0")
        if int(self.cycles) != self.cycles or self.cycles < 0:
            raise DomainError("cycle count must be a non-negative integer")

    @property
    def exponent(self):
        return int(self.cycles) if self.half_cycles else 2 * int(self.cycles)


@dataclass(frozen=True)
class CavityReport:
    config: CavityConfig
    stable: bool
    branch: str
    eta: float | None
    phi: float | None  # rotation angle per round trip (elliptic)
    chi: float | None  # rapidity per round trip (hyperbolic)
    growth: float | None  # e^{N chi / 2}, size of the unstable entries
    matrix: np.ndarray
    pure_boost_conjugator: bool

    def to_json(self):
        opt = lambda v: None if v is None else num(v)  # noqa: E731
        return {
            "x": num(self.config.x),
            "cycles": int(self.config.cycles),
            "half_cycles": self.config.half_cycles,
            "stable": self.stable,
            "branch": self.branch,
            "eta": opt(self.eta),
            "phi": opt(self.phi),
            "chi": opt(self.chi),
            "growth": opt(self.growth),
            "pure_boost_conjugator": self.pure_boost_conjugator,
            "matrix": encode(self.matrix),
        }


def cavity_cycle(x):
    """One complete round trip, core(x)^2."""
    if x <= 0:
        raise DomainError("cavity needs x > 0")
    c = core(x)
    return c @ c


def run_cavity(cfg: CavityConfig) -> CavityReport:
    fac = factor_core(cfg.x)
    c = core(cfg.x)
    n = cfg.exponent
    matrix = power_closed_form(c, n)
    form = power_form(c)
    stable = fac.branch == "elliptic"
    phi = 2.0 * fac.angle if fac.branch == "elliptic" else None
    chi = 2.0 * fac.angle if fac.branch == "hyperbolic" else None
    growth = None
    if chi is not None:
        # entries of C^n scale like cosh(n chi_core / 2)
        growth = math.exp(0.25 * n * chi)
    return CavityReport(
        cfg, stable, fac.branch, fac.eta, phi, chi, growth, matrix, form.pure_boost
    )
