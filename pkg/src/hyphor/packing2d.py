"""Horocycle + hypercycle packings of the hyperbolic plane.

The tiling family is generated by the Lambert quadrilateral
``A0 A1 P1 P0`` with ideal vertex ``A0 = (1, 0, 1)``, ``A1 = (1, 0, 0)``,
``P1 = (1, a, 0)`` and ``P0 = (1, a, 1 - a^2)``; ``0 < a < 1``. The
horocycle is centred at ``A0``; the hypercycle has base line ``A1 P1``.
Both meet the axis ``A0 A1`` at ``T = (1, 0, y)``, where they touch.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .balls import edge_horosphere_intersection, horospheric_arc
from .lorentz import GeometryError, distance
from .orthoscheme import lambert_area

SQRT1_2 = 1.0 / math.sqrt(2.0)
THREE_OVER_PI = 3.0 / math.pi
TWO_OVER_PI = 2.0 / math.pi
HOROCYCLE_MAX = 2.0 * math.sqrt(2.0) / math.pi


class PackingKind(Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"
    GENERAL = "general"
    HOROCYCLE_ONLY = "horocycle-only"


@dataclass(frozen=True)
class PlaneTiling:
    a: float

    def __post_init__(self):
        if not 0.0 < self.a < 1.0:
            raise GeometryError("tiling parameter a must lie in (0, 1), got {}".format(self.a))

    @property
    def dim(self):
        return 2

    @property
    def A0(self):
        return np.array([1.0, 0.0, 1.0])

    @property
    def A1(self):
        return np.array([1.0, 0.0, 0.0])

    @property
    def P1(self):
        return np.array([1.0, self.a, 0.0])

    @property
    def P0(self):
        return np.array([1.0, self.a, 1.0 - self.a ** 2])

    @property
    def A2(self):
        """Outer principal vertex whose polar line carries ``P0 P1``."""
        return np.array([1.0, 1.0 / self.a, 0.0])

    @property
    def horo_edge_ends(self):
        return (self.A1, self.P0)

    @property
    def area(self):
        return lambert_area()


@dataclass(frozen=True)
class PlanePacking:
    tiling: PlaneTiling
    y: float
    kind: PackingKind

    @property
    def density(self):
        return density_general(self.tiling.a, self.y)


def _check_a(a, hi=1.0):
    if not 0.0 < a < hi:
        raise GeometryError("a must lie in (0, {:.10g}), got {}".format(hi, a))


def _acosh(x):
    if x < 1.0:
        if x < 1.0 - 1e-12:
            raise GeometryError("arccosh argument {} < 1".format(x))
        x = 1.0
    return math.acosh(x)


def type1_y(a):
    return math.sqrt(1.0 - a * a)


def type2_y(a):
    return 1.0 - 2.0 * a * a


def density_type1(a):
    """Density of the packing whose hypercycle passes through ``P0``.

    The arccosh argument ``(2 - 2w - a^2 + 2a^4) / (2a^4)``, with
    ``w = sqrt(1 - a^2)``, is evaluated as ``1 + 1 / (2 (1 + w)^2)``;
    the expanded numerator cancels to ``O(a^4)`` and is useless below
    ``a ~ 1e-4`` in double precision.
    """
    _check_a(a)
    w = math.sqrt(1.0 - a * a)
    arg = 1.0 + 0.5 / (1.0 + w) ** 2
    return (4.0 * math.sinh(0.5 * _acosh(arg)) + 2.0 * w) / math.pi


def density_type2(a):
    """Density of the packing whose horocycle passes through ``P0`` (``a < 1/sqrt 2``)."""
    _check_a(a, SQRT1_2)
    arg = -0.5 * (-3.0 + 2.0 * a * a) / (1.0 - a * a)
    return (4.0 * math.sinh(0.5 * _acosh(arg))
            - (-1.0 + 2.0 * a * a) / math.sqrt(1.0 - a * a)) / math.pi


def packing_kind(a, y, tol=1e-12):
    """Classify ``(a, y)``; raise if it is not an admissible touching configuration."""
    _check_a(a)
    if not 0.0 <= y < 1.0:
        raise GeometryError("touching parameter y must lie in [0, 1), got {}".format(y))
    y1 = type1_y(a)
    if abs(y - y1) <= tol:
        return PackingKind.TYPE1
    if a <= SQRT1_2 + tol:
        y2 = type2_y(a)
        if abs(y - y2) <= tol:
            return PackingKind.HOROCYCLE_ONLY if y <= tol else PackingKind.TYPE2
        if y2 < y < y1:
            return PackingKind.GENERAL
    else:
        if y <= tol:
            return PackingKind.HOROCYCLE_ONLY
        if y < y1:
            return PackingKind.GENERAL
    raise GeometryError("(a, y) = ({}, {}) is not an admissible packing".format(a, y))


def density_general(a, y):
    """Density of the touching configuration at ``T = (1, 0, y)``.

    Valid on the closed admissible region between the two main types
    (and for ``y >= 0`` when ``a > 1/sqrt 2``).
    """
    packing_kind(a, y)
    # -(-1 + 2y - 2a^2 + 2a^2 y^2 - y^2) / (2 a^2 (1 - y^2)), cancellation free
    arg = 1.0 + (1.0 - y) / (2.0 * a * a * (1.0 + y))
    root = math.sqrt(1.0 - y * y)
    return (4.0 * math.sinh(0.5 * _acosh(arg)) * root + 2.0 * y * a) / (math.pi * root)


def density_horocycle_only(a):
    """Density of the pure horocycle packings ``y = 0``, ``1/sqrt 2 <= a < 1``."""
    if not SQRT1_2 - 1e-12 <= a < 1.0:
        raise GeometryError("horocycle-only packings need 1/sqrt(2) <= a < 1, got {}".format(a))
    return density_general(max(a, SQRT1_2), 0.0)


def construct_density(a, y, klein_base=False):
    """Density assembled from the geometry instead of the closed forms.

    The horocycle through ``T`` is intersected with ``A0 P0``; its arc
    is the horocyclic sector area. The hypercycle piece over ``A1 P1``
    uses the hyperbolic length ``artanh(a)`` of that segment, or the
    model coordinate ``a`` itself with ``klein_base``, which is the
    length the closed forms are built on.
    """
    packing_kind(a, y)
    t = PlaneTiling(a)
    T = np.array([1.0, 0.0, y])
    Q = edge_horosphere_intersection(t.A0, t.P0, y)
    horo = horospheric_arc(distance(T, Q))
    base = a if klein_base else distance(t.A1, t.P1)
    hyper = base * math.sinh(math.atanh(y))
    return (horo + hyper) / t.area


@dataclass(frozen=True)
class ScanResult:
    a: float
    y: float
    delta: float
    boundary_delta: float
    interior_delta: float

    @property
    def on_boundary(self):
        return self.boundary_delta >= self.interior_delta


def _region_grid(resolution, a_min, a_max):
    a_vals = np.linspace(a_min, a_max, resolution + 2)[1:-1] if resolution > 1 else np.array(
        [0.5 * (a_min + a_max)])
    return a_vals


def scan_general(resolution=500, a_min=0.0, a_max=1.0):
    """Grid search of the density over the admissible ``(a, y)`` region.

    For each grid value of ``a`` the touching parameter ``y`` is sampled
    on ``resolution`` points of its admissible interval, including both
    boundary curves (the main types, or ``y = 0`` beyond ``1/sqrt 2``).
    The grid argmax is reported together with the best boundary and the
    best strictly interior value.
    """
    if resolution < 1:
        raise ValueError("resolution must be positive")
    best = None
    best_boundary = -math.inf
    best_interior = -math.inf
    for a in _region_grid(resolution, a_min, a_max):
        a = float(a)
        hi = type1_y(a)
        lo = type2_y(a) if a <= SQRT1_2 else 0.0
        ys = np.linspace(lo, hi, resolution) if resolution > 1 else np.array([hi])
        for k, y in enumerate(ys):
            y = float(y)
            d = density_general(a, y)
            if k in (0, len(ys) - 1):
                best_boundary = max(best_boundary, d)
            else:
                best_interior = max(best_interior, d)
            # ties go to the lexicographically smaller (a, y)
            if best is None or d > best[2]:
                best = (a, y, d)
    return ScanResult(best[0], best[1], best[2], best_boundary, best_interior)
