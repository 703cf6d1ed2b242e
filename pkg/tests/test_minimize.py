import math

import pytest

from thetamin.halfplane import HEXAGONAL_POINT, UpperHalfPoint, apply, reduce
from thetamin.halfplane import GroupElement, membership, Region
from thetamin.minimize import (beta_transition, detect_nonexistence,
                               iterate_2k, phase_report, scan_domain,
                               telescope_value, vertical_line_profile)
from thetamin.theta2d import FunctionalSpec, w_beta

S32 = math.sqrt(3.0) / 2.0
SQRT2 = math.sqrt(2.0)


def assert_hexagonal(point, tol=1e-6):
    assert point.x == pytest.approx(0.5, abs=tol)
    assert point.y == pytest.approx(S32, abs=tol)


class TestScanDomain:
    def test_single_gaussian_case(self):
        report = scan_domain(FunctionalSpec(1.0, 0.0), nx=64, ny=64, y_max=6.0)
        assert_hexagonal(report.refined_point)
        assert not report.divergence_detected

    def test_critical_coupling(self):
        report = scan_domain(FunctionalSpec(1.0, SQRT2), nx=64, ny=64, y_max=6.0)
        assert_hexagonal(report.refined_point)
        assert report.hexagonal_gap <= 1e-10
        assert report.hexagonal_gap >= -1e-10

    def test_negative_coupling(self):
        report = scan_domain(FunctionalSpec(2.0, -1.0), nx=64, ny=64, y_max=6.0)
        assert_hexagonal(report.refined_point)

    def test_report_invariants(self):
        report = scan_domain(FunctionalSpec(1.0, 1.0), nx=32, ny=32, y_max=4.0)
        assert report.refined_value <= report.best_value + 1e-15
        reduced, _ = reduce(report.refined_point)
        assert membership(reduced).region in (Region.INTERIOR, Region.BOUNDARY)

    def test_minimum_invariant_under_group_motion(self):
        # scanning is intrinsic: moving the best point by the symmetry group
        # leaves the functional value unchanged
        spec = FunctionalSpec(1.0, 1.0)
        report = scan_domain(spec, nx=48, ny=48, y_max=5.0)
        g = GroupElement.inversion().compose(GroupElement.translation(1))
        moved = apply(g, report.refined_point)
        assert w_beta(spec, moved, 1e-12) == pytest.approx(
            report.refined_value, abs=1e-10)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            scan_domain(FunctionalSpec(1.0, 0.0), nx=8)
        with pytest.raises(ValueError):
            scan_domain(FunctionalSpec(1.0, 0.0), y_max=1.0)

    def test_threads_do_not_change_result(self):
        spec = FunctionalSpec(1.0, 0.5)
        a = scan_domain(spec, nx=32, ny=32, y_max=4.0, threads=1)
        b = scan_domain(spec, nx=32, ny=32, y_max=4.0, threads=4)
        assert a.best_value == pytest.approx(b.best_value, abs=1e-13)
        assert a.refined_value == pytest.approx(b.refined_value, abs=1e-13)


class TestVerticalProfile:
    def test_derivative_positive_beyond_corner(self):
        prof = vertical_line_profile(FunctionalSpec(1.0, SQRT2),
                                     [0.88, 1.0, 1.5, 2.0, 5.0, 10.0, 50.0])
        assert all(dv > 0.0 for _, _, dv in prof)

    def test_derivative_vanishes_at_corner(self):
        prof = vertical_line_profile(FunctionalSpec(1.0, SQRT2), [S32])
        assert prof[0][2] == pytest.approx(0.0, abs=1e-8)

    def test_supercritical_values_fall(self):
        prof = vertical_line_profile(FunctionalSpec(1.0, 1.5),
                                     [5.0, 10.0, 20.0, 40.0])
        values = [v for _, v, _ in prof]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_requires_increasing_heights(self):
        with pytest.raises(ValueError):
            vertical_line_profile(FunctionalSpec(1.0, 0.0), [2.0, 1.0])
        with pytest.raises(ValueError):
            vertical_line_profile(FunctionalSpec(1.0, 0.0), [0.5, 1.0])


class TestDivergence:
    def test_supercritical_slope(self):
        diverges, slope = detect_nonexistence(FunctionalSpec(1.0, 2.0))
        assert diverges
        expected = math.sqrt(0.5) * (SQRT2 - 2.0)
        assert slope == pytest.approx(expected, rel=0.05)

    def test_critical_not_divergent(self):
        diverges, _ = detect_nonexistence(FunctionalSpec(1.0, SQRT2))
        assert not diverges

    def test_plain_theta_not_divergent(self):
        diverges, slope = detect_nonexistence(FunctionalSpec(1.0, 0.0))
        assert not diverges and slope > 0.0

    def test_slope_tracks_alpha(self):
        _, slope = detect_nonexistence(FunctionalSpec(2.0, 3.0))
        assert slope == pytest.approx(math.sqrt(0.25) * (SQRT2 - 3.0), rel=0.05)


class TestIterated:
    def test_telescoping_identity(self, rng):
        for _ in range(20):
            alpha = rng.uniform(1.0, 3.0)
            beta = rng.uniform(-1.0, 3.0)
            k = int(rng.integers(0, 4))
            x, y = rng.uniform(0.0, 0.5), rng.uniform(0.95, 2.5)
            z = UpperHalfPoint(x, y)
            spec = FunctionalSpec(alpha, beta, 2.0, k)
            assert telescope_value(alpha, beta, k, z, 1e-12) == pytest.approx(
                w_beta(spec, z, 1e-12), abs=1e-10)

    def test_k2_critical_scan(self):
        report = iterate_2k(1.0, 2.0, 2, nx=64, ny=64, y_max=6.0)
        assert_hexagonal(report.refined_point)
        assert not report.divergence_detected

    def test_k2_supercritical_diverges(self):
        report = iterate_2k(1.0, 2.5, 2, nx=32, ny=32, y_max=6.0)
        assert report.divergence_detected

    def test_k0_degenerate(self):
        report = iterate_2k(1.0, 0.5, 0, nx=32, ny=32, y_max=4.0)
        assert_hexagonal(report.refined_point, tol=1e-5)

    def test_alpha_window(self):
        with pytest.raises(ValueError):
            iterate_2k(0.5, 1.0, 1)


class TestPhase:
    def test_subcritical_row(self):
        cells = phase_report([1.0, 2.0], [-1.0, 0.0, 1.41], nx=32, ny=32,
                             y_max=6.0)
        assert all(c.exists and c.minimizer_class == "hexagonal" for c in cells)

    def test_supercritical_row(self):
        cells = phase_report([1.0, 2.0], [1.5, 2.0], nx=32, ny=32)
        assert all(not c.exists for c in cells)

    def test_straddles_transition(self):
        lo, hi = SQRT2 - 1e-3, SQRT2 + 1e-3
        cells = phase_report([1.0], [lo, hi], nx=32, ny=32, y_max=6.0)
        assert cells[0].exists and cells[0].minimizer_class == "hexagonal"
        assert not cells[1].exists

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            phase_report([], [1.0])


class TestTransition:
    def test_bisection_localizes_critical_coupling(self):
        lo, hi = beta_transition(resolution=1e-3)
        assert hi - lo <= 1e-3 + 1e-12
        assert lo <= SQRT2 + 1e-3
        assert hi >= SQRT2 - 1e-3
