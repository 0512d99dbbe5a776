"""Metric formulas, geodesics, closed-form midpoints, the bisection oracle."""

import math
import random

import pytest
from hypothesis import given

from conftest import disk_points, halfplane_points
from hypmid.errors import (
    BadAngleOrder,
    CollinearWithOrigin,
    DegenerateInput,
    NotOnArc,
    NotOnUnitCircle,
    OutsideDomain,
)
from hypmid.geom2d import Circle2, Line2, Point2
from hypmid.hypmetric import (
    Model,
    OrthoCircle,
    arc_point,
    geodesic_of,
    midpoint_disk_angles,
    midpoint_halfplane_unitcircle,
    midpoint_oracle,
    ortho_circle_through,
    projection_pr,
    rho,
    rho_disk,
    rho_disk_arc,
    rho_halfplane,
    rho_via_cross_ratio,
    signed_arc_angle,
)
from hypmid.moebius import INFINITY, Inversion, MoebiusMap2, apply, is_infinite


class TestDistances:
    def test_vertical_log_ratio(self):
        assert rho_halfplane(Point2(0, 1), Point2(0, 2)) == pytest.approx(math.log(2), abs=1e-15)

    def test_halfplane_cosh_example(self):
        assert rho_halfplane(Point2(1, 1), Point2(-1, 1)) == pytest.approx(math.acosh(3.0), abs=1e-12)

    def test_disk_radial_log(self):
        assert rho_disk(Point2(0, 0), Point2(0.5, 0)) == pytest.approx(math.log(3), abs=1e-15)

    def test_disk_sinh_example(self):
        expected = 2 * math.asinh(math.sqrt(0.5) / 0.75)
        assert rho_disk(Point2(0.5, 0), Point2(0, 0.5)) == pytest.approx(expected, abs=1e-12)

    def test_zero_iff_equal(self):
        p = Point2(0.1, 0.7)
        assert rho_halfplane(p, p) == 0.0
        assert rho_disk(Point2(0.3, 0.1), Point2(0.3, 0.1)) == 0.0

    def test_domain_enforced(self):
        with pytest.raises(OutsideDomain):
            rho_halfplane(Point2(0, -1), Point2(0, 1))
        with pytest.raises(OutsideDomain):
            rho_disk(Point2(1.5, 0), Point2(0, 0))

    def test_close_points_keep_precision(self):
        # naive arcosh would lose half the digits here
        x, y = Point2(0.0, 1.0), Point2(1e-9, 1.0)
        assert rho_halfplane(x, y) == pytest.approx(1e-9, rel=1e-9)

    @given(halfplane_points(), halfplane_points())
    def test_halfplane_symmetry(self, x, y):
        assert rho_halfplane(x, y) == pytest.approx(rho_halfplane(y, x), rel=1e-12, abs=1e-15)

    @given(disk_points(), disk_points())
    def test_disk_symmetry(self, x, y):
        assert rho_disk(x, y) == pytest.approx(rho_disk(y, x), rel=1e-12, abs=1e-15)


class TestOrthoCircle:
    def test_spec_example(self):
        oc = ortho_circle_through(Point2(0.5, 0), Point2(0, 0.5))
        assert oc.a.close_to(Point2(1.25, 1.25), 1e-12)
        assert oc.r_a == pytest.approx(math.sqrt(2.125), abs=1e-12)

    def test_collinear_with_origin_rejected(self):
        with pytest.raises(CollinearWithOrigin):
            ortho_circle_through(Point2(0.3, 0), Point2(0.6, 0))

    def test_consistency_sweep(self):
        rng = random.Random(11)
        for _ in range(500):
            x = Point2(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
            y = Point2(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
            if x.norm() < 0.05 or y.norm() < 0.05 or x.norm() > 0.95 or y.norm() > 0.95:
                continue
            if abs(x.cross(y)) / (x.norm() * y.norm()) < 1e-3:
                continue
            oc = ortho_circle_through(x, y)
            scale = 1e-9 * (1.0 + oc.a.norm_sq())
            assert abs(oc.a.norm_sq() - oc.r_a**2 - 1.0) <= scale
            assert abs((x - oc.a).norm() - oc.r_a) <= scale
            assert abs((y - oc.a).norm() - oc.r_a) <= scale


class TestGeodesics:
    def test_disk_circle_carrier(self):
        g = geodesic_of(Model.DISK, Point2(0.5, 0), Point2(0, 0.5))
        assert isinstance(g.carrier, Circle2)
        assert g.carrier.center.close_to(Point2(1.25, 1.25), 1e-12)

    def test_halfplane_vertical(self):
        g = geodesic_of(Model.HALF_PLANE, Point2(0, 1), Point2(0, 4))
        assert isinstance(g.carrier, Line2)
        e1, e2 = g.ideal_endpoints
        assert e1.close_to(Point2(0, 0), 1e-15)
        assert is_infinite(e2)

    def test_disk_diameter(self):
        g = geodesic_of(Model.DISK, Point2(0.3, 0), Point2(0.6, 0))
        assert isinstance(g.carrier, Line2)
        e1, e2 = g.ideal_endpoints
        assert e1.close_to(Point2(-1, 0), 1e-12) and e2.close_to(Point2(1, 0), 1e-12)

    def test_endpoint_order_swaps_with_arguments(self):
        x, y = Point2(0.5, 0), Point2(0, 0.5)
        g1 = geodesic_of(Model.DISK, x, y)
        g2 = geodesic_of(Model.DISK, y, x)
        assert g1.ideal_endpoints[0].close_to(g2.ideal_endpoints[1], 1e-12)
        assert g1.ideal_endpoints[1].close_to(g2.ideal_endpoints[0], 1e-12)

    def test_endpoints_on_boundary(self):
        g = geodesic_of(Model.HALF_PLANE, Point2(1, 1), Point2(2.5, 0.7))
        for e in g.ideal_endpoints:
            assert abs(e.x2) < 1e-12

    def test_degenerate_pair(self):
        with pytest.raises(DegenerateInput):
            geodesic_of(Model.DISK, Point2(0.5, 0), Point2(0.5, 0))


class TestCrossRatioDistance:
    def test_vertical_example(self):
        got = rho_via_cross_ratio(Model.HALF_PLANE, Point2(0, 1), Point2(0, 2))
        assert got == pytest.approx(math.log(2), abs=1e-15)

    def test_disk_diameter_example(self):
        got = rho_via_cross_ratio(Model.DISK, Point2(0, 0), Point2(0.5, 0))
        assert got == pytest.approx(math.log(3), abs=1e-12)

    def test_agreement_sweep(self):
        rng = random.Random(77)
        for _ in range(1000):
            x = Point2(rng.uniform(-3, 3), rng.uniform(0.05, 3))
            y = Point2(rng.uniform(-3, 3), rng.uniform(0.05, 3))
            if (x - y).norm() < 1e-3:
                continue
            closed = rho_halfplane(x, y)
            assert abs(rho_via_cross_ratio(Model.HALF_PLANE, x, y) - closed) <= 1e-9 * closed
        for _ in range(1000):
            r1, r2 = rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95)
            t1, t2 = rng.uniform(0, math.tau), rng.uniform(0, math.tau)
            x = Point2(r1 * math.cos(t1), r1 * math.sin(t1))
            y = Point2(r2 * math.cos(t2), r2 * math.sin(t2))
            if (x - y).norm() < 1e-3:
                continue
            closed = rho_disk(x, y)
            assert abs(rho_via_cross_ratio(Model.DISK, x, y) - closed) <= 1e-9 * closed


class TestHalfplaneAngleMidpoint:
    def test_symmetric_pair_tops_out(self):
        z = midpoint_halfplane_unitcircle(math.pi / 3, 2 * math.pi / 3)
        assert z.close_to(Point2(0, 1), 1e-12)

    def test_pi6_pi2_example(self):
        z = midpoint_halfplane_unitcircle(math.pi / 6, math.pi / 2)
        delta = math.acos(1 / math.sqrt(3))
        assert z.close_to(Point2(math.cos(delta), math.sin(delta)), 1e-12)
        assert abs(rho_halfplane(Point2(math.cos(math.pi / 6), 0.5), z) - rho_halfplane(z, Point2(0, 1))) <= 1e-12

    def test_angle_order_enforced(self):
        with pytest.raises(BadAngleOrder):
            midpoint_halfplane_unitcircle(1.0, 1.0)
        with pytest.raises(BadAngleOrder):
            midpoint_halfplane_unitcircle(2.0, 1.0)


class TestDiskArcDistance:
    def test_matches_rho_disk_on_spec_pair(self):
        x, y = Point2(0.5, 0), Point2(0, 0.5)
        oc = ortho_circle_through(x, y)
        got = rho_disk_arc(0.5, y, oc)
        assert got == pytest.approx(rho_disk(x, y), rel=1e-12)

    def test_a_constant_value(self):
        oc = ortho_circle_through(Point2(0.5, 0), Point2(0, 0.5))
        big_a = math.sqrt(1 + oc.r_a**2) + oc.r_a
        assert big_a == pytest.approx(3.2255049266776943, abs=1e-12)

    def test_apex_distance_sweep(self):
        rng = random.Random(5)
        for _ in range(200):
            x = Point2(rng.uniform(0.1, 0.8), 0.0)
            y = Point2(rng.uniform(-0.6, 0.6), rng.uniform(0.1, 0.7))
            if y.norm() > 0.9 or abs(x.cross(y)) / (x.norm() * y.norm()) < 1e-2:
                continue
            oc = ortho_circle_through(x, y)
            got = rho_disk_arc(x.x1, y, oc)
            assert got == pytest.approx(rho_disk(x, y), rel=1e-9)

    def test_not_on_arc_rejected(self):
        oc = ortho_circle_through(Point2(0.5, 0), Point2(0, 0.5))
        with pytest.raises(NotOnArc):
            rho_disk_arc(0.3, Point2(0, 0.5), oc)
        with pytest.raises(NotOnArc):
            rho_disk_arc(0.5, Point2(0.1, 0.1), oc)

    def test_coincident_endpoints_give_zero(self):
        oc = ortho_circle_through(Point2(0.5, 0), Point2(0, 0.5))
        assert rho_disk_arc(0.5, Point2(0.5, 0), oc) == pytest.approx(0.0, abs=1e-12)

    def test_arc_point_roundtrip(self):
        oc = ortho_circle_through(Point2(0.5, 0), Point2(0, 0.5))
        for t in (-0.2, 0.0, 0.17):
            p = arc_point(t, oc)
            assert signed_arc_angle(p, oc) == pytest.approx(t, abs=1e-14)


class TestDiskAngleMidpoint:
    def test_symmetric_pair_lands_on_axis(self):
        z = midpoint_disk_angles(Point2(0.5, 0.1), Point2(0.1, 0.5))
        assert abs(z.x1 - z.x2) < 1e-12

    def test_agrees_with_oracle(self):
        x, y = Point2(0.5, 0), Point2(0, 0.5)
        z = midpoint_disk_angles(x, y)
        zo = midpoint_oracle(Model.DISK, x, y)
        assert (z - zo).norm() <= 1e-9

    def test_collinear_rejected(self):
        with pytest.raises(DegenerateInput):
            midpoint_disk_angles(Point2(0.2, 0), Point2(0.6, 0))

    def test_oracle_agreement_sweep(self):
        rng = random.Random(23)
        for _ in range(300):
            r1, r2 = rng.uniform(0.05, 0.9), rng.uniform(0.05, 0.9)
            t1 = rng.uniform(0, math.tau)
            t2 = t1 + rng.uniform(0.05, 2.0)
            x = Point2(r1 * math.cos(t1), r1 * math.sin(t1))
            y = Point2(r2 * math.cos(t2), r2 * math.sin(t2))
            if abs(x.cross(y)) / (x.norm() * y.norm()) < 1e-3:
                continue
            z = midpoint_disk_angles(x, y)
            assert (z - midpoint_oracle(Model.DISK, x, y)).norm() <= 1e-9


class TestOracle:
    def test_vertical_geometric_mean(self):
        m = midpoint_oracle(Model.HALF_PLANE, Point2(0, 1), Point2(0, 4))
        assert m.close_to(Point2(0, 2), 1e-9)

    def test_disk_symmetric(self):
        m = midpoint_oracle(Model.DISK, Point2(-0.5, 0), Point2(0.5, 0))
        assert m.close_to(Point2(0, 0), 1e-12)

    def test_soundness_sweep(self):
        rng = random.Random(99)
        for _ in range(200):
            x = Point2(rng.uniform(-2, 2), rng.uniform(0.1, 2))
            y = Point2(rng.uniform(-2, 2), rng.uniform(0.1, 2))
            if (x - y).norm() < 1e-2:
                continue
            m = midpoint_oracle(Model.HALF_PLANE, x, y)
            assert abs(rho_halfplane(x, m) - rho_halfplane(m, y)) <= 1e-12
            g = geodesic_of(Model.HALF_PLANE, x, y)
            from hypmid.geom2d import is_on

            assert abs(is_on(m, g.carrier).residual) <= 1e-9


class TestProjection:
    def test_spec_points(self):
        assert projection_pr(Point2(0.5, math.sqrt(0.75))).close_to(Point2(0.5, 0), 1e-12)
        assert projection_pr(Point2(0, 1)).close_to(Point2(0, 0), 1e-15)

    def test_rejects_off_circle(self):
        with pytest.raises(NotOnUnitCircle):
            projection_pr(Point2(0.5, 0.5))
        with pytest.raises(NotOnUnitCircle):
            projection_pr(Point2(0.5, -math.sqrt(0.75)))

    def test_halves_distances(self):
        rng = random.Random(3)
        for _ in range(500):
            a1 = rng.uniform(0.05, math.pi - 0.05)
            a2 = rng.uniform(0.05, math.pi - 0.05)
            if abs(a1 - a2) < 1e-3:
                continue
            x = Point2(math.cos(a1), math.sin(a1))
            y = Point2(math.cos(a2), math.sin(a2))
            lhs = 2 * rho_halfplane(x, y)
            rhs = rho_disk(projection_pr(x), projection_pr(y))
            assert abs(lhs - rhs) <= 1e-9

    def test_closed_form_instance(self):
        x = Point2(math.cos(math.pi / 3), math.sin(math.pi / 3))
        y = Point2(math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3))
        assert abs(rho_halfplane(x, y) - math.log(3)) <= 1e-12
        assert abs(rho_disk(Point2(0.5, 0), Point2(-0.5, 0)) - 2 * math.log(3)) <= 1e-12


def test_rho_invariant_under_disk_preserving_inversion():
    rng = random.Random(131)
    checked = 0
    while checked < 300:
        x = Point2(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
        y = Point2(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
        if not (0.05 < x.norm() < 0.9 and 0.05 < y.norm() < 0.9):
            continue
        if (x - y).norm() < 1e-2:
            continue
        w = Point2(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8))
        if not (0.1 < w.norm() < 0.8):
            continue
        v = Point2(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8))
        if abs(w.cross(v)) / (w.norm() * max(v.norm(), 1e-9)) < 1e-2:
            continue
        oc = ortho_circle_through(w, v)  # inversion circle orthogonal to S1
        m = MoebiusMap2((Inversion(oc.as_circle()),))
        fx, fy = apply(m, x), apply(m, y)
        if is_infinite(fx) or is_infinite(fy) or fx.norm() >= 1 or fy.norm() >= 1:
            continue
        assert abs(rho_disk(fx, fy) - rho_disk(x, y)) <= 1e-9 * (1 + rho_disk(x, y))
        checked += 1


def test_rho_dispatcher():
    assert rho(Model.HALF_PLANE, Point2(0, 1), Point2(0, 2)) == pytest.approx(math.log(2))
    assert rho(Model.DISK, Point2(0, 0), Point2(0.5, 0)) == pytest.approx(math.log(3))


def test_infinity_endpoint_for_vertical_geodesics():
    g = geodesic_of(Model.HALF_PLANE, Point2(2, 5), Point2(2, 1))
    assert g.ideal_endpoints[0] is INFINITY
    assert isinstance(OrthoCircle(Point2(1.25, 1.25), math.sqrt(2.125)).as_circle(), Circle2)
