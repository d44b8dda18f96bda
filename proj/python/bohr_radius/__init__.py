"""Bohr radii and growth bounds for harmonic mappings with convex analytic part."""

from ._core import (
    DomainError,
    Error,
    NoRootError,
    __version__,
    coeff_bounds,
    d1,
    growth_bounds,
    janowski_L,
    janowski_R,
    poly43_constants,
    radius,
    table,
    verify,
)

__all__ = [
    "DomainError",
    "Error",
    "NoRootError",
    "__version__",
    "coeff_bounds",
    "d1",
    "growth_bounds",
    "janowski_L",
    "janowski_R",
    "poly43_constants",
    "radius",
    "table",
    "verify",
]
