"""Coxeter orthoschemes: Schlafli matrices, frustum realization and volumes.

A simple frustum orthoscheme ``A0 A1 A2 P0 P1 P2`` is the orthoscheme
``A0 A1 A2 A3`` with ideal vertex ``A0`` and outer vertex ``A3`` cut off by
the polar plane of ``A3``. It is placed in the Klein model with

    A0 = (1, 0, 0, 1)     P0 = (1, 0, 0, 0)
    A1 = (1, x, 0, z1)    P1 = (1, x, 0, 0)
    A2 = (1, x, y, z2)    P2 = (1, x, y, 0)

so that the truncating plane is ``x3 = 0`` and the edges ``Pk Ak`` are
vertical (they pass through the pole ``A3 = (0, 0, 0, 1)``).
"""

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .lorentz import (
    GeometryError,
    angle_between_planes,
    bilinear_form,
    distance,
    hyperplane_through,
    tangent_angle,
)
from .special import lobachevsky

# (q, r) -> (strict lower bound for real p, smallest p giving a tiling)
FAMILIES = {
    (4, 4): (4.0, 5),
    (6, 3): (3.0, 4),
    (3, 6): (6.0, 7),
}

ANGLE_TOL = 1e-10
GRAM_TOL = 1e-12


def family_of(q, r):
    key = (int(q), int(r))
    if key not in FAMILIES or key != (q, r):
        raise GeometryError(
            "(q, r) = ({}, {}) is not one of the frustum families {}".format(
                q, r, sorted(FAMILIES)))
    return key


def realizable_tiling(p, q, r):
    """True when [p, q, r] generates an actual Coxeter tiling of H^3."""
    _, p_min = FAMILIES[family_of(q, r)]
    return float(p).is_integer() and p >= p_min


@dataclass(frozen=True)
class CoxeterScheme:
    """Linear orthoscheme scheme [p, q, r] with Schlafli matrix and its inverse.

    ``gram[i, j]`` is ``-cos`` of the angle between faces ``H^i`` and
    ``H^j`` (face ``H^i`` opposite vertex ``A_i``). With abstract vertices
    dual to the faces, ``hinv[i, j] = <a_i, a_j>``; its diagonal signs
    classify the vertices (negative proper, zero ideal, positive outer).
    """

    p: float
    q: float
    r: float
    gram: np.ndarray = field(repr=False)
    hinv: np.ndarray = field(repr=False)

    @property
    def angles(self):
        return (math.pi / self.p, math.pi / self.q, math.pi / self.r)

    def vertex_norm(self, i):
        return float(self.hinv[i, i])

    @property
    def a0_ideal(self):
        return abs(self.hinv[0, 0]) < 1e-9 * np.max(np.abs(self.hinv))

    @property
    def a3_outer(self):
        return self.hinv[3, 3] > 1e-9 * np.max(np.abs(self.hinv))


def schlafli_matrix(p, q, r):
    g = np.eye(4)
    for i, k in enumerate((p, q, r)):
        g[i, i + 1] = g[i + 1, i] = -math.cos(math.pi / k)
    return g


def build_scheme(p, q, r):
    """Schlafli matrix of [p, q, r] and its inverse, with a signature check.

    Raises
    ------
    GeometryError
        If a parameter is below 2 or the matrix does not have Lorentzian
        signature (1, 3), i.e. the scheme is not hyperbolic.
    """
    p, q, r = float(p), float(q), float(r)
    if min(p, q, r) < 2:
        raise GeometryError("orthoscheme parameters must be >= 2, got {}".format((p, q, r)))
    gram = schlafli_matrix(p, q, r)
    eig = np.linalg.eigvalsh(gram)
    if not (eig[0] < -GRAM_TOL and eig[1] > GRAM_TOL):
        raise GeometryError(
            "[{:g}, {:g}, {:g}] is not hyperbolic (Schlafli eigenvalues {})".format(
                p, q, r, eig))
    hinv = np.linalg.inv(gram)
    hinv = 0.5 * (hinv + hinv.T)
    return CoxeterScheme(p, q, r, gram, hinv)


def truncation_point(scheme, k, vertices=None):
    """Point where edge ``A_k A_3`` meets the polar plane of the outer vertex ``A_3``.

    ``p_k ~ a_k h33 - a_3 h_k3``. ``vertices`` holds the abstract
    vertex vectors as rows; by default the coefficient basis
    ``a_i = e_i`` is used, whose Gram matrix is ``scheme.hinv``.
    """
    h = scheme.hinv
    if not scheme.a3_outer:
        raise GeometryError("A3 is not an outer vertex (h33 = {:.3g})".format(h[3, 3]))
    if k not in (0, 1, 2):
        raise GeometryError("truncation index must be 0, 1 or 2")
    a = np.eye(4) if vertices is None else np.asarray(vertices, dtype=float)
    return a[k] * h[3, 3] - a[3] * h[k, 3]


def _gram_products(scheme, u, v):
    return float(u @ scheme.hinv @ v)


def truncation_edge_cosh(scheme, k):
    """cosh of the edge ``P_k A_k``; equals ``sqrt((hkk h33 - hk3^2) / (hkk h33))``."""
    h = scheme.hinv
    return math.sqrt((h[k, k] * h[3, 3] - h[k, 3] ** 2) / (h[k, k] * h[3, 3]))


def _positive_root(value, name):
    if not (0.0 < value < 1.0):
        raise GeometryError("no admissible coordinate {} in (0, 1): {}".format(name, value))
    return value


@dataclass(frozen=True)
class FrustumOrthoscheme:
    scheme: CoxeterScheme
    x: float
    y: float
    z1: float
    z2: float

    @property
    def dim(self):
        return 3

    @property
    def A0(self):
        return np.array([1.0, 0.0, 0.0, 1.0])

    @property
    def A1(self):
        return np.array([1.0, self.x, 0.0, self.z1])

    @property
    def A2(self):
        return np.array([1.0, self.x, self.y, self.z2])

    @property
    def P0(self):
        return np.array([1.0, 0.0, 0.0, 0.0])

    @property
    def P1(self):
        return np.array([1.0, self.x, 0.0, 0.0])

    @property
    def P2(self):
        return np.array([1.0, self.x, self.y, 0.0])

    @property
    def vertices(self):
        return {"A0": self.A0, "A1": self.A1, "A2": self.A2,
                "P0": self.P0, "P1": self.P1, "P2": self.P2}

    @property
    def base_plane(self):
        """The truncating plane pol(A3), ``x3 = 0``."""
        return np.array([0.0, 0.0, 0.0, 1.0])

    @cached_property
    def faces(self):
        """Face forms oriented positive on the interior, keyed by the face name.

        ``H0 = A1A2P2P1``, ``H1 = A0A2P2P0``, ``H2 = A0A1P1P0``,
        ``H3 = A0A1A2`` and ``pi = P0P1P2``.
        """
        raw = {
            "H0": hyperplane_through(self.P1, self.P2, self.A1),
            "H1": hyperplane_through(self.A0, self.P0, self.P2),
            "H2": hyperplane_through(self.A0, self.P0, self.P1),
            "H3": hyperplane_through(self.A0, self.A1, self.A2),
            "pi": self.base_plane,
        }
        inside = np.mean([self.A0, self.A1, self.A2, self.P0, self.P1, self.P2], axis=0)
        return {k: (u if u @ inside > 0 else -u) for k, u in raw.items()}

    def dihedral(self, f, g):
        return angle_between_planes(self.faces[f], self.faces[g])

    def essential_angles(self):
        return (self.dihedral("H0", "H1"), self.dihedral("H1", "H2"),
                self.dihedral("H2", "H3"))

    def contains(self, pts, tol=0.0):
        """Vectorised membership test for homogeneous points (rows)."""
        pts = np.atleast_2d(pts)
        ok = pts[:, 0] > 0
        for u in self.faces.values():
            ok &= pts @ u >= -tol * np.abs(pts[:, 0])
        return ok

    @property
    def horo_edge_ends(self):
        """Far endpoints of the three edges leaving the ideal vertex A0."""
        return (self.P0, self.A1, self.A2)

    @cached_property
    def volume(self):
        return volume_3d(self.scheme)

    @cached_property
    def base_area(self):
        return triangle_area(self.P0, self.P1, self.P2)

    @cached_property
    def max_height(self):
        """Distance P2A2: height of the largest hyperball over the base plane."""
        return distance(self.P2, self.A2)

    @property
    def realizable_tiling(self):
        s = self.scheme
        return realizable_tiling(s.p, s.q, s.r)


def realize(scheme):
    """Place the frustum of ``scheme`` in the Klein model.

    The base triangle is recovered from the Lorentz products of the
    truncation points (computed from ``hinv``); the heights ``z1``, ``z2``
    solve ``cosh(Pk Ak) = sqrt(1 - |Pk|^2) / sqrt(1 - |Pk|^2 - zk^2)``.
    The realized face planes must reproduce the dihedral angles of the
    scheme.
    """
    if not scheme.a0_ideal:
        raise GeometryError("A0 is not ideal (h00 = {:.3g})".format(scheme.hinv[0, 0]))
    if not scheme.a3_outer:
        raise GeometryError("A3 is not outer (h33 = {:.3g})".format(scheme.hinv[3, 3]))
    pts = [truncation_point(scheme, k) for k in range(3)]

    def cosh_d(i, j):
        pij = _gram_products(scheme, pts[i], pts[j])
        pii = _gram_products(scheme, pts[i], pts[i])
        pjj = _gram_products(scheme, pts[j], pts[j])
        if pii >= 0 or pjj >= 0:
            raise GeometryError("truncation points are not proper")
        return -pij / math.sqrt(pii * pjj)

    # P0 at the origin: tanh(P0P1) = x, tanh(P0P2)^2 = x^2 + y^2
    x = math.sqrt(1.0 - 1.0 / cosh_d(0, 1) ** 2)
    r2 = 1.0 - 1.0 / cosh_d(0, 2) ** 2
    if r2 <= x * x:
        raise GeometryError("inconsistent base triangle for {}".format(scheme))
    y = math.sqrt(r2 - x * x)
    _positive_root(x, "x")
    _positive_root(y, "y")
    c1 = truncation_edge_cosh(scheme, 1)
    c2 = truncation_edge_cosh(scheme, 2)
    z1 = _positive_root(math.sqrt((1.0 - x * x) * (1.0 - 1.0 / c1 ** 2)), "z1")
    z2 = _positive_root(math.sqrt((1.0 - r2) * (1.0 - 1.0 / c2 ** 2)), "z2")
    frustum = FrustumOrthoscheme(scheme, x, y, z1, z2)

    got = frustum.essential_angles()
    want = scheme.angles
    if max(abs(g - w) for g, w in zip(got, want)) > ANGLE_TOL:
        raise GeometryError("realized dihedral angles {} differ from {}".format(got, want))
    return frustum


def frustum(p, q, r):
    return realize(build_scheme(p, q, r))


def volume_3d(scheme):
    """Volume of the frustum of ``scheme`` by Kellerhals' Lobachevsky-function formula.

    Only the three frustum families with an ideal principal vertex are
    accepted; Lambert cubes and other degree-2 schemes are rejected.
    """
    key = family_of(scheme.q, scheme.r)
    lower, _ = FAMILIES[key]
    if not scheme.p > lower:
        raise GeometryError("p = {} is outside the range p > {} of family {}".format(
            scheme.p, lower, key))
    a01, a12, a23 = scheme.angles
    disc = math.cos(a12) ** 2 - math.sin(a01) ** 2 * math.sin(a23) ** 2
    if disc < 0:
        raise GeometryError("negative discriminant {} in the volume formula".format(disc))
    theta = math.atan(math.sqrt(disc) / (math.cos(a01) * math.cos(a23)))
    L = lobachevsky
    half = math.pi / 2
    vol = 0.25 * (L(a01 + theta) - L(a01 - theta)
                  + L(half + a12 - theta) + L(half - a12 - theta)
                  + L(a23 + theta) - L(a23 - theta)
                  + 2.0 * L(half - theta))
    if vol <= 0:
        raise GeometryError("non-positive volume {} for {}".format(vol, scheme))
    return vol


def lambert_area():
    """Area of the Lambert quadrilateral with one ideal vertex (angles 0, pi/2, pi/2, pi/2)."""
    return math.pi / 2


def triangle_area(p0, p1, p2):
    """Area of a proper hyperbolic triangle by the angle defect."""
    p0, p1, p2 = (np.asarray(v, dtype=float) for v in (p0, p1, p2))
    m = np.array([p0, p1, p2])
    sv = np.linalg.svd(m, compute_uv=False)
    if sv[-1] < 1e-14 * sv[0]:
        raise GeometryError("degenerate (collinear) triangle")
    for v in (p0, p1, p2):
        if bilinear_form(v, v) >= 0:
            raise GeometryError("triangle vertices must be proper points")
    angles = (tangent_angle(p0, p1, p2), tangent_angle(p1, p0, p2),
              tangent_angle(p2, p0, p1))
    return math.pi - sum(angles)
