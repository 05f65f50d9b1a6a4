import math

import numpy as np
import pytest

from hyphor.balls import (
    Horoball,
    Hyperball,
    check_admissibility,
    edge_horosphere_intersection,
    heron,
    horo_param_through,
    horoball_piece_volume,
    horosphere_residual,
    horospheric_arc,
    hyperball_piece_volume,
)
from hyphor.lorentz import GeometryError, distance
from hyphor.montecarlo import to_halfspace

CENTER = np.array([1.0, 0.0, 0.0, 1.0])


class TestHoroParam:
    @pytest.mark.parametrize("g", [-0.8, -0.1, 0.0, 0.4, 0.95])
    def test_axis_points(self, g):
        assert horo_param_through([1, 0, 0, g]) == pytest.approx(g, abs=1e-15)

    def test_antipodal_axis(self):
        assert horo_param_through([1, 0, 0, -0.3]) == pytest.approx(-0.3, abs=1e-15)

    def test_a1_residual(self, f736):
        s = horo_param_through(f736.A1)
        assert -1 < s < 1
        assert abs(horosphere_residual(f736.A1, s)) < 1e-12

    def test_outside_ball(self):
        with pytest.raises(GeometryError):
            horo_param_through([1, 0.9, 0.9, 0])

    def test_projective(self, f736):
        assert horo_param_through(-4.5 * f736.A2) == pytest.approx(
            horo_param_through(f736.A2), abs=1e-14)

    def test_types(self):
        with pytest.raises(GeometryError):
            Horoball(1.0)
        with pytest.raises(GeometryError):
            Hyperball(-0.1)
        assert np.array_equal(Horoball(0.5).center, CENTER)
        assert np.array_equal(Hyperball(0.5, dim=2).base, [0, 0, 1.0])


class TestEdgeIntersection:
    def test_axis(self, f736):
        q = edge_horosphere_intersection(CENTER, f736.P0, 0.37)
        assert np.allclose(q, [1, 0, 0, 0.37], atol=1e-15)

    def test_through_endpoint(self, f736):
        s = horo_param_through(f736.A1)
        q = edge_horosphere_intersection(CENTER, f736.A1, s)
        assert np.allclose(q, f736.A1, atol=1e-12)

    def test_interior_point(self, f736):
        s = horo_param_through(f736.A1)
        q = edge_horosphere_intersection(CENTER, f736.A2, s)
        assert abs(horosphere_residual(q, s)) < 1e-12
        # strictly between the centre and A2
        t = (1 - q[3]) / (1 - f736.A2[3])
        assert 0 < t < 1
        assert np.allclose(q, (1 - t) * CENTER + t * f736.A2, atol=1e-12)

    def test_no_crossing(self, f736):
        with pytest.raises(GeometryError):
            edge_horosphere_intersection(CENTER, f736.P0, -0.5)

    def test_wrong_start(self, f736):
        with pytest.raises(GeometryError):
            edge_horosphere_intersection(f736.P0, f736.A1, 0.5)


class TestArc:
    def test_values(self):
        assert horospheric_arc(0.0) == 0.0
        assert horospheric_arc(2 * math.asinh(1.0)) == pytest.approx(2.0, abs=1e-15)
        with pytest.raises(GeometryError):
            horospheric_arc(-1e-3)

    def test_halfspace_transfer(self, f736):
        # with the centre at infinity the horosphere is a horizontal plane
        # t = t0, on which the metric is the Euclidean one divided by t0
        s = horo_param_through(f736.A1)
        pts = [edge_horosphere_intersection(CENTER, e, s) for e in (f736.P0, f736.A1, f736.A2)]
        hs = to_halfspace(np.array(pts))
        assert np.ptp(hs[:, 2]) < 1e-12
        for i, j in ((0, 1), (0, 2), (1, 2)):
            euclid = np.linalg.norm(hs[i, :2] - hs[j, :2]) / hs[0, 2]
            assert horospheric_arc(distance(pts[i], pts[j])) == pytest.approx(euclid, abs=1e-10)


class TestPieces:
    def test_heron(self):
        assert heron(3, 4, 5) == pytest.approx(6.0, abs=1e-14)
        assert heron(1, 1, 2) == 0.0
        with pytest.raises(GeometryError):
            heron(1, 1, 3)

    def test_horoball_nesting(self, f736):
        s0 = horo_param_through(f736.A1)
        ss = np.linspace(s0, 0.999, 40)
        v = [horoball_piece_volume(f736, s) for s in ss]
        assert np.all(np.diff(v) < 0)

    def test_horoball_vanishes(self, f736):
        assert horoball_piece_volume(f736, 1 - 1e-10) < 1e-8

    def test_hyperball_examples(self):
        assert hyperball_piece_volume(1.0, 0.0, 3) == 0.0
        assert hyperball_piece_volume(1.0, 0.0, 2) == 0.0
        e = 1e-7
        assert hyperball_piece_volume(4.0, e, 3) / e == pytest.approx(4.0, rel=1e-10)
        assert hyperball_piece_volume(0.3, 0.5, 2) == pytest.approx(0.3 * math.sinh(0.5))
        with pytest.raises(GeometryError):
            hyperball_piece_volume(-1.0, 0.5)

    def test_hyperball_monotone(self):
        hs = np.linspace(0, 3, 50)
        assert np.all(np.diff([hyperball_piece_volume(0.1, h) for h in hs]) > 0)
        bs = np.linspace(0.01, 2, 50)
        assert np.all(np.diff([hyperball_piece_volume(b, 0.7) for b in bs]) > 0)

    def test_table_row_736(self, f736):
        s = horo_param_through(f736.A1)
        total = horoball_piece_volume(f736, s) + hyperball_piece_volume(
            f736.base_area, f736.max_height, 3)
        assert total == pytest.approx(0.26463185, abs=1e-8)


class TestAdmissibility:
    def test_maximal_736(self, f736):
        rep = check_admissibility(f736, horo_param_through(f736.A1), f736.max_height)
        assert rep.horoball_ok and rep.hyperball_ok and rep.disjoint

    def test_maximal_544_overlaps(self, f544):
        rep = check_admissibility(f544, horo_param_through(f544.A1), f544.max_height)
        assert rep.horoball_ok and rep.hyperball_ok
        assert not rep.disjoint and not rep.ok

    def test_tiny_balls(self, f736):
        rep = check_admissibility(f736, 1 - 1e-6, 0.0)
        assert rep.ok
        assert all(c > 0 for c in rep.min_clearances)

    def test_horoball_too_large(self, f736):
        rep = check_admissibility(f736, horo_param_through(f736.A1) - 0.05, 0.0)
        assert not rep.horoball_ok

    def test_hyperball_too_high(self, f736):
        rep = check_admissibility(f736, 0.999, f736.max_height + 0.01)
        assert not rep.hyperball_ok

    def test_tangency(self, f544):
        h = 0.5 * (math.atanh(horo_param_through(f544.A1)) + f544.max_height)
        rep = check_admissibility(f544, math.tanh(h), h)
        assert rep.ok
        assert abs(rep.min_clearances[2]) < 1e-8
        # pushing the hyperball up by a little breaks disjointness
        assert not check_admissibility(f544, math.tanh(h), h + 1e-3).disjoint

    def test_report_dict(self, f736):
        d = check_admissibility(f736, 0.99, 0.1).as_dict()
        assert set(d) == {"horoball_ok", "hyperball_ok", "disjoint", "min_clearances"}
        assert len(d["min_clearances"]) == 3
