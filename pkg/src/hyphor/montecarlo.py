"""Monte-Carlo volumes of a frustum and its ball pieces.

Independent of the Lobachevsky and Bolyai formulas: samples are drawn in
upper half-space coordinates ``(u, v, t)`` with the ideal vertex ``A0``
sent to infinity, mapped to the Klein model and tested against the
realized face planes and the ball inequalities there. The volume
element ``du dv dt / t^3`` is matched by drawing ``t`` with density
``2 t0^2 / t^3`` on ``[t0, inf)``, so each hit carries the same bounded
weight and the standard error is a plain binomial one.
"""

import math
from dataclasses import dataclass

import numpy as np

from .balls import horo_param, quad_grid, triangle_grid

CHUNK = 1_000_000


@dataclass(frozen=True)
class MCEstimate:
    value: float
    stderr: float
    samples: int

    def agrees(self, exact, sigmas=3.0):
        return abs(self.value - exact) <= sigmas * self.stderr


def to_halfspace(pts):
    """Klein (homogeneous rows) -> upper half-space ``(u, v, t)`` with ``(1,0,0,1)`` at infinity."""
    pts = np.atleast_2d(np.asarray(pts, dtype=float))
    q = pts[:, 0] ** 2 - np.sum(pts[:, 1:] ** 2, axis=1)
    x = pts / np.sqrt(q)[:, None]
    t = 1.0 / (x[:, 0] - x[:, 3])
    return np.column_stack([x[:, 1] * t, x[:, 2] * t, t])


def from_halfspace(u, v, t):
    """Upper half-space -> unit hyperboloid vectors (rows)."""
    r2 = u * u + v * v + t * t
    return np.column_stack([(1.0 + r2) / (2.0 * t), u / t, v / t, (r2 - 1.0) / (2.0 * t)])


def _lower_bound(F, n=100):
    # F is star-shaped from A0 = infinity, so its lowest points lie on the
    # two faces that avoid A0
    pts = np.vstack([triangle_grid(F.P0, F.P1, F.P2, n),
                     quad_grid(F.P1, F.P2, F.A1, F.A2, n)])
    return 0.95 * float(np.min(to_halfspace(pts)[:, 2]))


def _base_triangle(F):
    return to_halfspace(np.array([F.P0, F.A1, F.A2]))[:, :2]


def mc_volume(F, region="domain", s=None, h=None, samples=10_000_000, seed=0):
    """Estimate the volume of ``F`` or of its intersection with a ball.

    ``region`` is ``"domain"``, ``"horoball"`` (needs ``s``) or
    ``"hyperball"`` (needs ``h``).
    """
    if region == "horoball" and s is None or region == "hyperball" and h is None:
        raise ValueError("region {!r} needs its ball parameter".format(region))
    if region not in ("domain", "horoball", "hyperball"):
        raise ValueError("unknown region {!r}".format(region))
    rng = np.random.default_rng(seed)
    tri = _base_triangle(F)
    e1 = tri[1] - tri[0]
    e2 = tri[2] - tri[0]
    area = 0.5 * abs(e1[0] * e2[1] - e1[1] * e2[0])
    t0 = _lower_bound(F)
    weight = area / (2.0 * t0 * t0)
    tanh_h = math.tanh(h) if h is not None else None

    hits = 0
    done = 0
    while done < samples:
        n = min(CHUNK, samples - done)
        a = rng.random(n)
        b = rng.random(n)
        flip = a + b > 1.0
        a[flip] = 1.0 - a[flip]
        b[flip] = 1.0 - b[flip]
        uv = tri[0] + a[:, None] * e1 + b[:, None] * e2
        t = t0 / np.sqrt(1.0 - rng.random(n))
        x = from_halfspace(uv[:, 0], uv[:, 1], t)
        ok = F.contains(x, tol=1e-15)
        if region == "horoball":
            ok &= horo_param(x) >= s
        elif region == "hyperball":
            k = x[:, 1:] / x[:, :1]
            ok &= k[:, 2] <= tanh_h * np.sqrt(1.0 - k[:, 0] ** 2 - k[:, 1] ** 2)
        hits += int(np.count_nonzero(ok))
        done += n
    frac = hits / samples
    return MCEstimate(weight * frac, weight * math.sqrt(frac * (1.0 - frac) / samples), samples)
