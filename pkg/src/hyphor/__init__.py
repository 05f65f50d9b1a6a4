"""Horoball and hyperball packings generated by simple frustum Coxeter orthoschemes."""

from .lorentz import GeometryError
from .orthoscheme import build_scheme, frustum, realize, volume_3d
from .packing3d import (
    DensityResult,
    density,
    family_argmax,
    optimize_family_36,
    optimize_family_44,
    optimize_family_63,
)
from .special import lobachevsky

__all__ = [
    "DensityResult",
    "GeometryError",
    "build_scheme",
    "density",
    "family_argmax",
    "frustum",
    "lobachevsky",
    "optimize_family_36",
    "optimize_family_44",
    "optimize_family_63",
    "realize",
    "volume_3d",
]
