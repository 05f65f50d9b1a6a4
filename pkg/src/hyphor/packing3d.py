"""Horoball + hyperball packings generated by frustum orthoschemes [p, q, r].

For each family ``(q, r)`` the horoball sits at the ideal vertex ``A0``
and the hyperball over the truncating plane. The largest admissible
horoball passes through ``A1`` and the largest hyperball through ``A2``.
When that pair overlaps, the balls are kept tangent on the axis
(``s = tanh h``) and the hyperball is inflated from
``artanh(s(A1))`` up to ``P2A2``; the density is maximised along the way.
"""

import math
from dataclasses import dataclass

from .balls import (
    check_admissibility,
    horo_param_through,
    horoball_piece_volume,
    hyperball_piece_volume,
)
from .lorentz import GeometryError
from .optimize import Maximizer1D, maximize
from .orthoscheme import FAMILIES, build_scheme, family_of, realize

SCAN_POINTS = 2000
SCAN_TOL = 1e-10
CUTOFF_RUN = 3
P_LIMIT = 200


@dataclass(frozen=True)
class DensityResult:
    p: float
    q: int
    r: int
    s: float
    h: float
    vol_F: float
    vol_horoball: float
    vol_hyperball: float
    realizable_tiling: bool
    tangent: bool = False
    zeta: float = float("nan")

    @property
    def vol_pieces(self):
        return self.vol_horoball + self.vol_hyperball

    @property
    def delta(self):
        return self.vol_pieces / self.vol_F

    @property
    def family(self):
        return (self.q, self.r)


@dataclass(frozen=True)
class Packing3D:
    F: object
    s: float
    h: float

    @property
    def family(self):
        return (int(self.F.scheme.q), int(self.F.scheme.r))

    @property
    def p(self):
        return self.F.scheme.p

    def report(self):
        return check_admissibility(self.F, self.s, self.h)

    def density(self):
        return density(self.F, self.s, self.h)


def _pieces(F, s, h):
    return horoball_piece_volume(F, s), hyperball_piece_volume(F.base_area, h, 3)


def density(F, s, h, check=True, **extra):
    """Density of the horoball ``s`` and hyperball ``h`` in the frustum ``F``.

    The two pieces are added, so the configuration has to be admissible;
    with ``check`` the constraints are verified and a violation raises
    :class:`GeometryError`.
    """
    if check:
        rep = check_admissibility(F, s, h)
        if not rep.ok:
            raise GeometryError("inadmissible configuration s={}, h={}: {}".format(s, h, rep))
    horo, hyper = _pieces(F, s, h)
    sch = F.scheme
    return DensityResult(
        p=sch.p, q=int(sch.q), r=int(sch.r), s=float(s), h=float(h),
        vol_F=F.volume, vol_horoball=horo, vol_hyperball=hyper,
        realizable_tiling=F.realizable_tiling, **extra)


def maximal_pair(F):
    """Horoball through ``A1`` and hyperball through ``A2``: ``(s, h)``."""
    return horo_param_through(F.A1), F.max_height


def tangency_interval(F):
    """Hyperball heights ``[h_lo, h_hi]`` of the axis-tangent family."""
    z_max, h_hi = maximal_pair(F)
    h_lo = math.atanh(z_max) if z_max > 0 else 0.0
    if h_lo > h_hi:
        raise GeometryError("empty tangency interval [{}, {}]".format(h_lo, h_hi))
    return h_lo, h_hi


def tangency_density(F, zeta, h_lo=None):
    """Density of the tangent pair with ``h = h_lo + zeta`` (no constraint check)."""
    if h_lo is None:
        h_lo, _ = tangency_interval(F)
    h = h_lo + zeta
    horo, hyper = _pieces(F, math.tanh(h), h)
    return (horo + hyper) / F.volume


def scan_tangency(F, grid_points=SCAN_POINTS, refine_tol=SCAN_TOL):
    """Best density over the axis-tangent family; returns ``(zeta, DensityResult)``."""
    h_lo, h_hi = tangency_interval(F)
    width = h_hi - h_lo
    if width <= 0:
        zeta = 0.0
    else:
        m = Maximizer1D(0.0, width, grid_points=grid_points, refine_tol=refine_tol)
        zeta, _ = maximize(lambda z: tangency_density(F, z, h_lo), m)
    h = h_lo + zeta
    return zeta, density(F, math.tanh(h), h, tangent=True, zeta=zeta)


def optimize_family(p, q, r):
    """Densest packing for [p, q, r]: the maximal pair if disjoint, else the tangency scan."""
    family_of(q, r)
    F = realize(build_scheme(p, q, r))
    s, h = maximal_pair(F)
    rep = check_admissibility(F, s, h)
    if rep.ok:
        return density(F, s, h, check=False)
    return scan_tangency(F)[1]


def _require(p, bound, strict, family):
    ok = p > bound if strict else p >= bound
    if not ok:
        raise GeometryError("p = {} is out of range for family {} (need p {} {})".format(
            p, family, ">" if strict else ">=", bound))


def optimize_family_44(p):
    _require(p, 5, False, (4, 4))
    return optimize_family(p, 4, 4)


def optimize_family_63(p):
    _require(p, 4, False, (6, 3))
    return optimize_family(p, 6, 3)


def optimize_family_36(p):
    _require(p, 6, True, (3, 6))
    return optimize_family(p, 3, 6)


def family_table(family, p_values):
    q, r = family_of(*family)
    return [optimize_family(p, q, r) for p in p_values]


def family_argmax(families=None):
    """Densest realizable packing over integer ``p`` of the given families.

    Each family is walked upward from its first tiling until the density
    has decreased ``CUTOFF_RUN`` times in a row. Returns
    ``(family, p, DensityResult)``.
    """
    families = list(FAMILIES) if families is None else [family_of(*f) for f in families]
    best = None
    for fam in families:
        _, p = FAMILIES[fam]
        prev = None
        run = 0
        while run < CUTOFF_RUN and p <= P_LIMIT:
            res = optimize_family(p, *fam)
            if best is None or res.delta > best[2].delta:
                best = (fam, p, res)
            run = run + 1 if prev is not None and res.delta < prev else 0
            prev = res.delta
            p += 1
    return best
