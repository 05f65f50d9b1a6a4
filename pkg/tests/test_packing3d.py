import math

import numpy as np
import pytest

from hyphor.balls import check_admissibility
from hyphor.lorentz import GeometryError
from hyphor.optimize import Maximizer1D, maximize
from hyphor.orthoscheme import frustum
from hyphor.packing3d import (
    Packing3D,
    density,
    family_argmax,
    family_table,
    maximal_pair,
    optimize_family,
    optimize_family_36,
    optimize_family_44,
    optimize_family_63,
    scan_tangency,
    tangency_density,
    tangency_interval,
)

TABLES = {
    (4, 4): [(5, 0.34084197, 0.27709010, 0.81295769),
             (6, 0.38165233, 0.30003810, 0.78615556),
             (7, 0.40369221, 0.30777518, 0.76240058)],
    (6, 3): [(4, 0.31716925, 0.25756985, 0.81208961),
             (5, 0.35991902, 0.27187731, 0.75538469),
             (6, 0.38060310, 0.27009741, 0.70965634)],
    (3, 6): [(7, 0.31781164, 0.26463185, 0.83266882),
             (8, 0.34695830, 0.27901923, 0.80418664),
             (9, 0.36482363, 0.28351212, 0.77712105)],
}
OPTIMIZERS = {(4, 4): optimize_family_44, (6, 3): optimize_family_63, (3, 6): optimize_family_36}


@pytest.mark.parametrize("fam", sorted(TABLES))
def test_table(fam):
    for p, vol, pieces, delta in TABLES[fam]:
        res = OPTIMIZERS[fam](p)
        assert res.vol_F == pytest.approx(vol, abs=1e-8)
        assert res.vol_pieces == pytest.approx(pieces, abs=1e-8)
        assert res.delta == pytest.approx(delta, abs=1e-8)
        assert res.realizable_tiling


@pytest.mark.parametrize("fam", sorted(TABLES))
def test_strictly_decreasing(fam):
    deltas = [OPTIMIZERS[fam](p).delta for p, *_ in TABLES[fam]]
    assert np.all(np.diff(deltas) < 0)


@pytest.mark.parametrize("fam", sorted(TABLES))
def test_results_admissible(fam):
    for p, *_ in TABLES[fam]:
        res = OPTIMIZERS[fam](p)
        assert check_admissibility(frustum(p, *fam), res.s, res.h).ok


def test_family_table_order():
    rows = family_table((3, 6), [7, 8, 9])
    assert [r.p for r in rows] == [7, 8, 9]


@pytest.mark.parametrize("p", range(5, 11))
def test_44_endpoint_optimum(p):
    F = frustum(p, 4, 4)
    lo, hi = tangency_interval(F)
    zeta, res = scan_tangency(F)
    assert zeta == pytest.approx(hi - lo, abs=1e-9)
    # the hyperball ends up passing through A2
    assert res.h == pytest.approx(F.max_height, abs=1e-9)
    assert res.tangent


def test_44_p5_zeta():
    F = frustum(5, 4, 4)
    zeta, res = scan_tangency(F)
    assert zeta == pytest.approx(0.33419, abs=5e-4)
    assert res.delta == pytest.approx(0.81295769, abs=1e-8)


def test_maximize_on_zeta_curve():
    F = frustum(5, 4, 4)
    lo, hi = tangency_interval(F)
    m = Maximizer1D(0.0, hi - lo)
    _, best = maximize(lambda z: tangency_density(F, z, lo), m)
    assert best == pytest.approx(0.81295769, abs=1e-5)


def test_63_interval_starts_at_zero():
    # s(A1) < 0 for [4, 6, 3], so the tangency family starts at h = 0
    F = frustum(4, 6, 3)
    lo, hi = tangency_interval(F)
    assert lo == 0.0 and hi > 0


def test_36_uses_maximal_pair():
    res = optimize_family_36(7)
    F = frustum(7, 3, 6)
    assert (res.s, res.h) == pytest.approx(maximal_pair(F), abs=1e-15)
    assert not res.tangent


def test_non_integer_flag():
    assert not optimize_family_36(6.5).realizable_tiling


@pytest.mark.parametrize("func, p", [(optimize_family_44, 4), (optimize_family_63, 3),
                                     (optimize_family_36, 6), (optimize_family_36, 5.5)])
def test_out_of_range(func, p):
    with pytest.raises(GeometryError):
        func(p)


def test_unknown_family():
    with pytest.raises(GeometryError):
        optimize_family(5, 3, 5)


def test_density_checks_admissibility():
    F = frustum(5, 4, 4)
    with pytest.raises(GeometryError):
        density(F, *maximal_pair(F))
    assert density(F, *maximal_pair(F), check=False).delta > 0.81295769


def test_vanishing_balls():
    F = frustum(7, 3, 6)
    assert density(F, 1 - 1e-10, 0.0).delta < 1e-7


def test_packing_object():
    F = frustum(7, 3, 6)
    pk = Packing3D(F, *maximal_pair(F))
    assert pk.family == (3, 6) and pk.p == 7
    assert pk.report().ok
    assert pk.density().delta == pytest.approx(0.83266882, abs=1e-8)


def test_family_argmax():
    fam, p, res = family_argmax()
    assert (fam, p) == ((3, 6), 7)
    assert res.delta == pytest.approx(0.83267, abs=1e-5)


@pytest.mark.parametrize("fam, p, delta", [((4, 4), 5, 0.81295769), ((6, 3), 4, 0.81208961)])
def test_family_argmax_restricted(fam, p, delta):
    got_fam, got_p, res = family_argmax([fam])
    assert (got_fam, got_p) == (fam, p)
    assert res.delta == pytest.approx(delta, abs=1e-8)


@pytest.mark.slow
def test_real_p_continuity():
    ps = np.arange(6.01, 6.99 + 5e-4, 1e-3)
    d = np.array([optimize_family_36(p).delta for p in ps])
    assert np.all(np.abs(np.diff(d)) < 1e-2)
    assert np.all((d > 0) & (d < 1))
