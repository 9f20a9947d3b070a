"""Two-by-two matrix Lorentz group toolkit for polarization, lens, cavity and multilayer optics."""

from .mat_core import DomainError, RangeError

__all__ = ["DomainError", "RangeError"]
__version__ = "0.1.0"
