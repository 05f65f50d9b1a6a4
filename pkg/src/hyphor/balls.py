"""Horoballs and hyperballs clipped to a frustum orthoscheme.

The horoball is centred at the ideal vertex ``A0 = (1, 0, ..., 0, 1)``
and labelled by ``s``, the last Klein coordinate where its horosphere
crosses the axis ``A0 P0``; larger ``s`` means a smaller ball. The
hyperball is the set of points within distance ``h`` of the truncating
plane ``x_n = 0``; it meets the axis at ``tanh(h)``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .lorentz import GeometryError, affine, bilinear_form, distance

FACE_TOL = 1e-9
FACE_GRID = 100
SURFACE_SAMPLES = 10_000


@dataclass(frozen=True)
class Horoball:
    s: float
    dim: int = 3

    def __post_init__(self):
        if not -1.0 < self.s < 1.0:
            raise GeometryError("horoball parameter must lie in (-1, 1), got {}".format(self.s))

    @property
    def center(self):
        c = np.zeros(self.dim + 1)
        c[0] = c[-1] = 1.0
        return c


@dataclass(frozen=True)
class Hyperball:
    h: float
    dim: int = 3

    def __post_init__(self):
        if self.h < 0:
            raise GeometryError("hyperball height must be >= 0, got {}".format(self.h))

    @property
    def base(self):
        u = np.zeros(self.dim + 1)
        u[-1] = 1.0
        return u


@dataclass(frozen=True)
class AdmissibilityReport:
    """Outcome of the packing constraints for one (s, h) pair.

    ``min_clearances`` are the worst signed margins of the horoball
    against its forbidden faces (in ``s``), of the hyperball against its
    forbidden face (in distance) and of the two surfaces against each
    other; negative values are violations.
    """

    horoball_ok: bool
    hyperball_ok: bool
    disjoint: bool
    min_clearances: tuple

    @property
    def ok(self):
        return self.horoball_ok and self.hyperball_ok and self.disjoint

    def as_dict(self):
        return {
            "horoball_ok": self.horoball_ok,
            "hyperball_ok": self.hyperball_ok,
            "disjoint": self.disjoint,
            "min_clearances": [float(c) for c in self.min_clearances],
        }


def horo_param(pts):
    """Vectorised :func:`horo_param_through` for rows of homogeneous points."""
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    c = pts[:, 1:] / pts[:, :1]
    rho2 = np.sum(c[:, :-1] ** 2, axis=1)
    hn = c[:, -1]
    with np.errstate(divide="ignore", invalid="ignore"):
        return (1.0 - 2.0 * rho2 - (2.0 * hn - 1.0) ** 2) / (4.0 - 2.0 * rho2 - 4.0 * hn)


def horo_param_through(point):
    """Parameter ``s`` of the horosphere centred at ``(1, 0, ..., 0, 1)`` through ``point``.

    The horosphere equation is linear in ``s``, so this is a closed form.
    """
    c = affine(point)[1:]
    if np.dot(c, c) >= 1.0:
        raise GeometryError("point {} is not inside the model ball".format(point))
    rho2 = float(np.dot(c[:-1], c[:-1]))
    hn = float(c[-1])
    den = 4.0 - 2.0 * rho2 - 4.0 * hn
    if abs(den) < 1e-15:
        raise GeometryError("degenerate horosphere equation at {}".format(point))
    return (1.0 - 2.0 * rho2 - (2.0 * hn - 1.0) ** 2) / den


def horosphere_residual(point, s):
    """Left side minus right side of the cartesian horosphere equation."""
    c = affine(point)[1:]
    rho2 = float(np.dot(c[:-1], c[:-1]))
    hn = float(c[-1])
    return 2.0 * rho2 / (1.0 - s) + 4.0 * (hn - (s + 1.0) / 2.0) ** 2 / (1.0 - s) ** 2 - 1.0


def _line_param(center, b, s):
    # X(t) = (1 - t) center + t b satisfies (s-1)<X,X> = (1+s)(x0 - xn)^2;
    # with <center, center> = 0 and x0 = xn on the center this is linear in t
    ab = bilinear_form(center, b)
    bb = bilinear_form(b, b)
    w = (b[..., 0] - b[..., -1]) ** 2
    return 2.0 * (s - 1.0) * ab / ((s - 1.0) * (2.0 * ab - bb) + (1.0 + s) * w)


def edge_horosphere_intersection(endpoint_a, endpoint_b, s):
    """Point where the horosphere ``s`` crosses the segment from the centre to ``endpoint_b``.

    ``endpoint_a`` must be the horoball centre ``(1, 0, ..., 0, 1)``.
    """
    a = affine(endpoint_a)
    b = affine(endpoint_b)
    center = np.zeros_like(a)
    center[0] = center[-1] = 1.0
    if not np.allclose(a, center, atol=1e-14):
        raise GeometryError("the segment must start at the horoball centre")
    t = float(_line_param(center, b, s))
    # the solve loses digits as s -> 1 through the (s - 1) factors
    if not (0.0 < t <= 1.0 + FACE_TOL):
        raise GeometryError(
            "horosphere s={} does not cross the segment to {} (t={})".format(s, endpoint_b, t))
    t = min(t, 1.0)
    x = (1.0 - t) * center + t * b
    return x / x[0]


def horospheric_arc(chord):
    """Length of the horocyclic arc subtending a chord of hyperbolic length ``chord``."""
    if chord < 0:
        raise GeometryError("chord length must be >= 0")
    return 2.0 * math.sinh(chord / 2.0)


def heron(a, b, c):
    """Euclidean triangle area from side lengths (Kahan's stable ordering)."""
    a, b, c = sorted((a, b, c), reverse=True)
    if c < 0 or a > b + c + 1e-14 * a:
        raise GeometryError("side lengths {} violate the triangle inequality".format((a, b, c)))
    prod = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    return 0.25 * math.sqrt(max(prod, 0.0))


def horoball_piece_volume(F, s):
    """Volume of the part of the horoball ``s`` inside the cell ``F``.

    The faces through the centre cut the horosphere along intrinsic
    straight lines, so the clipped horosphere is a Euclidean simplex whose
    side lengths are horocyclic arcs; its content divided by ``n - 1``
    is the volume of the cone over it to the centre. ``F`` may be a
    3-dimensional frustum (triangle, Heron) or a plane tiling (single arc).
    """
    center = np.zeros(F.dim + 1)
    center[0] = center[-1] = 1.0
    pts = [edge_horosphere_intersection(center, e, s) for e in F.horo_edge_ends]
    arcs = [horospheric_arc(distance(pts[i], pts[j]))
            for i in range(len(pts)) for j in range(i + 1, len(pts))]
    if F.dim == 2:
        return arcs[0]
    if F.dim == 3:
        return heron(*arcs) / 2.0
    raise GeometryError("unsupported dimension {}".format(F.dim))


def hyperball_piece_volume(base, h, n=3):
    """Volume over a base polytope of the hyperball of height ``h``.

    ``n = 3``: ``base`` is an area, result ``base (sinh 2h + 2h) / 4``.
    ``n = 2``: ``base`` is a length, result ``base sinh h``.
    """
    if base < 0 or h < 0:
        raise GeometryError("base and height must be non-negative")
    if n == 3:
        return 0.25 * base * (math.sinh(2.0 * h) + 2.0 * h)
    if n == 2:
        return base * math.sinh(h)
    raise GeometryError("unsupported dimension {}".format(n))


def plane_height(pts):
    """Distance of proper points (rows) from the plane ``x_n = 0``."""
    pts = np.atleast_2d(pts)
    c = pts[:, 1:] / pts[:, :1]
    rest = 1.0 - np.sum(c ** 2, axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        sh = np.abs(c[:, -1]) / np.sqrt(rest)
    return np.where(rest > 0, np.arcsinh(sh), np.inf)


def triangle_grid(a, b, c, n):
    """Affine points ``i/n a + j/n b + k/n c`` with ``i + j + k = n``."""
    i, j = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing="ij")
    keep = i + j <= n
    wa = i[keep] / n
    wb = j[keep] / n
    wc = 1.0 - wa - wb
    pa, pb, pc = (affine(v) for v in (a, b, c))
    return np.outer(wa, pa) + np.outer(wb, pb) + np.outer(wc, pc)


def quad_grid(p1, p2, a1, a2, n):
    """Bilinear grid on the planar quadrilateral ``p1 p2 a2 a1``."""
    u, v = np.meshgrid(np.linspace(0, 1, n + 1), np.linspace(0, 1, n + 1), indexing="ij")
    u = u.ravel()[:, None]
    v = v.ravel()[:, None]
    p1, p2, a1, a2 = (affine(x) for x in (p1, p2, a1, a2))
    return (1 - u) * ((1 - v) * p1 + v * a1) + u * ((1 - v) * p2 + v * a2)


def horosphere_patch(F, s, n):
    """Points of the horosphere ``s`` inside ``F`` (radial lift from the centre)."""
    center = F.A0
    corners = [edge_horosphere_intersection(center, e, s) for e in F.horo_edge_ends]
    flat = triangle_grid(*corners, n)
    t = _line_param(center, flat, s)
    pts = (1.0 - t)[:, None] * center + t[:, None] * flat
    return pts / pts[:, :1]


def hypersphere_patch(F, h, n):
    """Points at distance ``h`` above the base triangle ``P0 P1 P2``."""
    base = triangle_grid(F.P0, F.P1, F.P2, n)
    rho2 = np.sum(base[:, 1:3] ** 2, axis=1)
    base[:, 3] = math.tanh(h) * np.sqrt(1.0 - rho2)
    return base


def _grid_size(samples):
    # triangle_grid(n) has (n + 1)(n + 2) / 2 points
    return int(math.ceil((math.sqrt(8 * samples + 1) - 3) / 2))


def check_admissibility(F, s, h, tol=FACE_TOL, samples=SURFACE_SAMPLES, grid=FACE_GRID):
    """Check the packing constraints for the horoball ``s`` and hyperball ``h`` in ``F``.

    * the horoball must not enter the faces ``P0P1P2`` and ``A1A2P2P1``;
    * the hyperball must not exceed the vertex ``A2`` nor enter ``A0A1A2``;
    * the two balls must have disjoint interiors.

    Touching is allowed. Faces are tested on a ``grid`` x ``grid``
    parameter grid; disjointness is decided on the common axis
    (``tanh h <= s``) and confirmed on ``samples`` points of each surface.
    """
    faces_horo = np.vstack([
        triangle_grid(F.P0, F.P1, F.P2, grid),
        quad_grid(F.P1, F.P2, F.A1, F.A2, grid),
    ])
    horo_gap = float(np.min(s - horo_param(faces_horo)))
    horoball_ok = horo_gap >= -tol

    top = triangle_grid(F.A0, F.A1, F.A2, grid)
    hyper_gap = float(np.min(plane_height(top) - h))
    hyper_gap = min(hyper_gap, F.max_height - h)
    hyperball_ok = hyper_gap >= -tol

    axis_gap = s - math.tanh(h)
    n = _grid_size(samples)
    gaps = [axis_gap]
    if s < 1.0 and horoball_ok:
        gaps.append(float(np.min(plane_height(horosphere_patch(F, s, n)) - h)))
    if h > 0:
        gaps.append(float(np.min(s - horo_param(hypersphere_patch(F, h, n)))))
    surface_gap = min(gaps)
    disjoint = axis_gap >= -1e-12 and surface_gap >= -tol
    return AdmissibilityReport(
        bool(horoball_ok), bool(hyperball_ok), bool(disjoint),
        (horo_gap, hyper_gap, surface_gap))
