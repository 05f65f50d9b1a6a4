"""Lorentzian linear algebra for the projective (Beltrami-Cayley-Klein) model.

Points of H^n are homogeneous vectors ``x = (x0, x1, ..., xn)`` of the
Lorentz space with the form ``<x, y> = -x0*y0 + x1*y1 + ... + xn*yn``.
Vectors are plain numpy arrays; two vectors that differ by a nonzero
factor are the same projective point. Hyperplanes are linear forms
(also arrays) acting by the ordinary dot product.
"""

from enum import Enum

import numpy as np

CLASS_TOL = 1e-10
INCIDENCE_TOL = 1e-10


class GeometryError(ValueError):
    """Raised when an input violates a geometric precondition."""


class PointClass(Enum):
    PROPER = "proper"
    IDEAL = "ideal"
    OUTER = "outer"


def as_vector(x):
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or x.size < 2:
        raise GeometryError("expected a 1-d homogeneous vector, got shape {}".format(x.shape))
    if not np.all(np.isfinite(x)):
        raise GeometryError("non-finite coordinates: {}".format(x))
    if not np.any(x):
        raise GeometryError("the zero vector is not a projective point")
    return x


def metric(dim):
    """Diagonal signature-(1, n) Gram matrix for vectors of length ``dim``."""
    g = np.eye(dim)
    g[0, 0] = -1.0
    return g


def bilinear_form(x, y):
    """Return ``<x, y> = -x0*y0 + sum_i xi*yi``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape[-1] != y.shape[-1]:
        raise GeometryError(
            "dimension mismatch: {} vs {}".format(x.shape[-1], y.shape[-1]))
    return np.sum(x[..., 1:] * y[..., 1:], axis=-1) - x[..., 0] * y[..., 0]


def normalize(x):
    """Scale a vector so that its largest-magnitude coordinate is 1 in absolute value."""
    x = as_vector(x)
    return x / np.max(np.abs(x))


def affine(x):
    """Representative with ``x0 = 1`` (proper and ideal points only)."""
    x = as_vector(x)
    if x[0] == 0:
        raise GeometryError("point at x0 = 0 has no affine chart representative")
    return x / x[0]


def classify(x, tol=CLASS_TOL):
    """Classify a point as proper (inside), ideal (on the absolute) or outer.

    The self-product is evaluated after scaling to max-abs coordinate 1,
    so the tolerance is scale free.
    """
    xn = normalize(x)
    q = bilinear_form(xn, xn)
    if q < -tol:
        return PointClass.PROPER
    if q > tol:
        return PointClass.OUTER
    return PointClass.IDEAL


def same_point(x, y, tol=1e-12):
    """Projective equality of two homogeneous vectors."""
    x = normalize(x)
    y = normalize(y)
    return bool(np.allclose(x, y, atol=tol) or np.allclose(x, -y, atol=tol))


def distance(p, q):
    """Hyperbolic distance between two proper points (curvature -1)."""
    p = as_vector(p)
    q = as_vector(q)
    pp = bilinear_form(p, p)
    qq = bilinear_form(q, q)
    if pp >= -CLASS_TOL * np.max(np.abs(p)) ** 2 or qq >= -CLASS_TOL * np.max(np.abs(q)) ** 2:
        raise GeometryError("distance is defined for proper points only")
    # lift both to the upper sheet of <x, x> = -1; the chord form
    # d = 2 asinh(|p - q| / 2) keeps full accuracy for nearby points,
    # where arccosh of a number close to 1 would lose half the digits
    w = p * (np.sign(p[0]) / np.sqrt(-pp)) - q * (np.sign(q[0]) / np.sqrt(-qq))
    ww = bilinear_form(w, w)
    if ww < 0.0:
        if ww < -1e-9:
            raise GeometryError("timelike chord {}: inconsistent inputs".format(ww))
        ww = 0.0
    return float(2.0 * np.arcsinh(0.5 * np.sqrt(ww)))


def polar(x):
    """Polar hyperplane of ``x``: the form ``u`` with ``u . y = <x, y>``."""
    x = as_vector(x)
    u = x.copy()
    u[0] = -u[0]
    return u


def pole(u):
    """Metric dual of a form; inverse of :func:`polar`."""
    return polar(u)


def incident(x, u, tol=INCIDENCE_TOL):
    """Whether point ``x`` lies on hyperplane ``u`` (scale-free residual)."""
    return abs(float(np.dot(normalize(x), normalize(u)))) < tol


def hyperplane_through(*points):
    """Form vanishing on the given ``n`` points of H^n (a null vector of their matrix)."""
    m = np.array([as_vector(p) for p in points])
    if m.shape[0] != m.shape[1] - 1:
        raise GeometryError("need exactly n points to span a hyperplane in H^n")
    _, sv, vt = np.linalg.svd(m)
    if sv[-1] < 1e-12 * sv[0]:
        raise GeometryError("points are degenerate and do not span a hyperplane")
    return vt[-1]


def point_plane_distance(x, u):
    """Distance from a proper point ``x`` to the hyperplane with form ``u``.

    ``sinh d = |u . x| / sqrt(-<x, x> <u*, u*>)`` where ``u*`` is the
    metric dual of ``u``; the dual must be spacelike (the plane meets H^n).
    """
    x = as_vector(x)
    u = as_vector(u)
    if x.shape != u.shape:
        raise GeometryError("dimension mismatch between point and form")
    ud = pole(u)
    uu = bilinear_form(ud, ud)
    if uu <= 0:
        raise GeometryError("hyperplane does not meet the hyperbolic space")
    xx = bilinear_form(x, x)
    if xx >= 0:
        raise GeometryError("point-plane distance needs a proper point")
    return float(np.arcsinh(abs(np.dot(u, x)) / np.sqrt(-xx * uu)))


def angle_between_planes(u, v):
    """Angle in [0, pi] between oriented forms ``u``, ``v`` via ``cos = -<u*, v*>``.

    With both forms oriented positive on the inside of a convex cell this
    is the interior dihedral angle along their common face.
    """
    ud = pole(as_vector(u))
    vd = pole(as_vector(v))
    c = -bilinear_form(ud, vd) / np.sqrt(bilinear_form(ud, ud) * bilinear_form(vd, vd))
    return float(np.arccos(np.clip(c, -1.0, 1.0)))


def tangent_angle(v, a, b):
    """Angle at proper point ``v`` between the geodesics towards ``a`` and ``b``."""
    v = as_vector(v)
    vv = bilinear_form(v, v)
    ta = a - bilinear_form(a, v) / vv * v
    tb = b - bilinear_form(b, v) / vv * v
    na = bilinear_form(ta, ta)
    nb = bilinear_form(tb, tb)
    dot = bilinear_form(ta, tb)
    cross = np.sqrt(max(na * nb - dot * dot, 0.0))
    return float(np.arctan2(cross, dot))
