"""Exact computer algebra for the Lie conformal superalgebra CK6: the
annihilation algebra E(1,6), induced modules, and the classification of
their singular vectors, with all arithmetic over Q(i)."""

__version__ = "0.1.0"

from .scalars import GaussianRational, gq
from .grassmann import GrassmannElement, hodge, partial, wedge
from .weights import Weight

__all__ = [
    "GaussianRational",
    "GrassmannElement",
    "Weight",
    "gq",
    "hodge",
    "partial",
    "wedge",
    "__version__",
]
