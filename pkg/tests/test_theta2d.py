import math

import pytest

from conftest import random_domain_points
from oracles import theta2d_ref
from thetamin.errors import CutoffExceededError, NotOnGammaError
from thetamin.halfplane import (HEXAGONAL_POINT, GroupElement, UpperHalfPoint,
                                apply)
from thetamin.theta2d import (FunctionalSpec, radial_operator, theta2d,
                              theta2d_direct, theta2d_direct_with_cutoff,
                              theta2d_dx, theta2d_dy, theta2d_expansion,
                              theta2d_grid, w_beta)

S32 = math.sqrt(3.0) / 2.0
SQRT2 = math.sqrt(2.0)

# frozen from the mpmath oracle
THETA_1_I = 1.180340599016096226
THETA_1_HEX = 1.1595952669639283658
THETA_2_HEX = 1.0042389592989599914
W_SQRT2_HEX = -0.26061308914010345015
THETA_1_031_047 = 1.2642800283865383162


class TestSquareLattice:
    def test_separable_value(self):
        z = UpperHalfPoint(0.0, 1.0)
        assert theta2d_direct(1.0, z, 1e-13) == pytest.approx(THETA_1_I, abs=1e-13)

    def test_cutoff_certificate(self):
        value, cutoff = theta2d_direct_with_cutoff(1.0, UpperHalfPoint(0.0, 1.0), 1e-10)
        assert cutoff.tail_bound <= 1e-10
        assert abs(value - THETA_1_I) <= cutoff.tail_bound + 1e-13


class TestRepresentations:
    def test_hexagonal_cross_check(self):
        a = theta2d_direct(1.0, HEXAGONAL_POINT, 1e-13)
        b = theta2d_expansion(1.0, HEXAGONAL_POINT, 1e-13)
        assert a == pytest.approx(b, abs=2e-12)
        assert a == pytest.approx(THETA_1_HEX, abs=1e-12)

    def test_agreement_over_random_points(self, rng):
        for _ in range(500):
            alpha = rng.uniform(0.2, 10.0)
            x, y = random_domain_points(rng, 1)[0]
            z = UpperHalfPoint(x, y)
            d = theta2d_direct(alpha, z, 1e-13)
            e = theta2d_expansion(alpha, z, 1e-13)
            assert abs(d - e) <= 2e-12 * max(1.0, abs(d))

    def test_against_brute_force(self, rng):
        for _ in range(10):
            alpha = rng.uniform(0.5, 4.0)
            x, y = random_domain_points(rng, 1, y_max=3.0)[0]
            ref = float(theta2d_ref(alpha, x, y))
            assert theta2d(alpha, UpperHalfPoint(x, y), 1e-13) == pytest.approx(
                ref, abs=1e-12)

    def test_off_domain_reference(self):
        assert theta2d(1.0, UpperHalfPoint(0.31, 0.47), 1e-13) == pytest.approx(
            THETA_1_031_047, abs=1e-12)

    def test_grid_matches_scalar(self, rng):
        pts = random_domain_points(rng, 40)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        grid = theta2d_grid(1.3, xs, ys, 1e-12)
        for (x, y), v in zip(pts, grid):
            assert v == pytest.approx(theta2d(1.3, UpperHalfPoint(x, y), 1e-13),
                                      abs=1e-11)


class TestSymmetries:
    def test_translation_invariance(self, rng):
        for _ in range(20):
            x, y = rng.uniform(-1, 1), rng.uniform(0.5, 3.0)
            z = UpperHalfPoint(x, y)
            zt = UpperHalfPoint(x + 1.0, y)
            assert theta2d(1.7, z, 1e-13) == pytest.approx(
                theta2d(1.7, zt, 1e-13), abs=1e-11)

    def test_group_invariance_random_words(self, rng):
        gens = [GroupElement.inversion(), GroupElement.translation(1),
                GroupElement.translation(-1), GroupElement.reflection()]
        for _ in range(100):
            g = GroupElement.identity()
            for i in rng.integers(0, 4, size=rng.integers(1, 7)):
                g = gens[i].compose(g)
            z = UpperHalfPoint(rng.uniform(0.0, 0.5), rng.uniform(0.9, 2.5))
            w = apply(g, z)
            assert theta2d(1.0, z, 1e-13) == pytest.approx(
                theta2d(1.0, w, 1e-13), abs=1e-10)

    def test_poisson_duality(self, rng):
        for _ in range(50):
            alpha = rng.uniform(0.3, 5.0)
            x, y = random_domain_points(rng, 1)[0]
            z = UpperHalfPoint(x, y)
            lhs = theta2d(1.0 / alpha, z, 1e-13)
            rhs = alpha * theta2d(alpha, z, 1e-13)
            assert lhs == pytest.approx(rhs, abs=1e-10 * max(1.0, abs(rhs)))


class TestFunctional:
    def test_beta_zero_degenerates(self):
        z = UpperHalfPoint(0.2, 1.4)
        spec = FunctionalSpec(1.5, 0.0)
        assert w_beta(spec, z, 1e-13) == pytest.approx(
            theta2d(1.5, z, 1e-13), abs=1e-13)

    def test_global_minimum_value_at_hexagonal(self):
        spec = FunctionalSpec(1.0, SQRT2)
        assert w_beta(spec, HEXAGONAL_POINT, 1e-13) == pytest.approx(
            W_SQRT2_HEX, abs=1e-12)

    def test_group_invariance(self, rng):
        spec = FunctionalSpec(1.0, SQRT2)
        gens = [GroupElement.inversion(), GroupElement.translation(1),
                GroupElement.reflection()]
        for _ in range(30):
            z = UpperHalfPoint(rng.uniform(0.05, 0.45), rng.uniform(0.95, 2.0))
            g = gens[rng.integers(0, 3)]
            assert w_beta(spec, z, 1e-13) == pytest.approx(
                w_beta(spec, apply(g, z), 1e-13), abs=1e-10)

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            FunctionalSpec(-1.0, 0.0)
        with pytest.raises(ValueError):
            FunctionalSpec(1.0, 0.0, ratio=1.0)
        with pytest.raises(ValueError):
            FunctionalSpec(1.0, 0.0, k=-1)

    def test_second_frequency(self):
        assert FunctionalSpec(1.5, 0.0, 2.0, 3).second_frequency == pytest.approx(12.0)


class TestDerivatives:
    def test_dx_vanishes_on_symmetry_lines(self):
        assert theta2d_dx(1.0, UpperHalfPoint(0.0, 2.0), 1e-12) == pytest.approx(
            0.0, abs=1e-12)
        assert theta2d_dx(1.0, UpperHalfPoint(0.5, 2.0), 1e-12) == pytest.approx(
            0.0, abs=1e-12)

    def test_dx_matches_finite_difference(self, rng):
        h = 1e-4
        for x, y in random_domain_points(rng, 15, y_max=3.0):
            if not 0.01 < x < 0.49:
                continue
            z = UpperHalfPoint(x, y)
            for alpha in (1.0, 2.0):
                fd = (theta2d_expansion(alpha, UpperHalfPoint(x + h, y), 1e-13)
                      - theta2d_expansion(alpha, UpperHalfPoint(x - h, y), 1e-13)) / (2 * h)
                assert theta2d_dx(alpha, z, 1e-12) == pytest.approx(fd, abs=1e-6)

    def test_dy_matches_finite_difference(self, rng):
        h = 1e-4
        for x, y in random_domain_points(rng, 15, y_max=3.0):
            z = UpperHalfPoint(x, y)
            for alpha in (1.0, 2.0):
                fd = (theta2d(alpha, UpperHalfPoint(x, y + h), 1e-13)
                      - theta2d(alpha, UpperHalfPoint(x, y - h), 1e-13)) / (2 * h)
                assert theta2d_dy(alpha, z, 1e-12) == pytest.approx(fd, abs=1e-6)

    def test_dy_critical_at_hexagonal_height(self):
        for alpha in (1.0, 2.0, 4.0):
            assert theta2d_dy(alpha, HEXAGONAL_POINT, 1e-12) == pytest.approx(
                0.0, abs=1e-10)

    def test_dy_critical_at_square_point(self):
        assert theta2d_dy(1.0, UpperHalfPoint(0.0, 1.0), 1e-12) == pytest.approx(
            0.0, abs=1e-12)

    def test_functional_x_derivative_negative_inside_domain(self, rng):
        # transversal monotonicity at sub-threshold couplings
        pts = random_domain_points(rng, 30, y_max=4.0)
        for beta in (0.0, 1.0, SQRT2, 3.5):
            for alpha in (1.0, 2.0):
                for x, y in pts:
                    if not 0.01 < x < 0.49:
                        continue
                    z = UpperHalfPoint(x, y)
                    d = (theta2d_dx(alpha, z, 1e-13)
                         - beta * theta2d_dx(2.0 * alpha, z, 1e-13))
                    assert d < 0.0

    def test_gradient_vanishes_at_hexagonal_point(self):
        for alpha, beta in ((1.0, SQRT2), (2.0, -1.0), (1.5, 0.5)):
            spec = FunctionalSpec(alpha, beta)
            dx = (theta2d_dx(alpha, HEXAGONAL_POINT, 1e-12)
                  - beta * theta2d_dx(spec.second_frequency, HEXAGONAL_POINT, 1e-12))
            dy = (theta2d_dy(alpha, HEXAGONAL_POINT, 1e-12)
                  - beta * theta2d_dy(spec.second_frequency, HEXAGONAL_POINT, 1e-12))
            assert abs(dx) < 1e-8 and abs(dy) < 1e-8


class TestRadialOperator:
    def test_requires_gamma_line(self):
        with pytest.raises(NotOnGammaError):
            radial_operator(FunctionalSpec(1.0, SQRT2), UpperHalfPoint(0.3, 1.0))

    def test_requires_standard_ratio(self):
        with pytest.raises(ValueError):
            radial_operator(FunctionalSpec(1.0, SQRT2, 2.0, 2),
                            UpperHalfPoint(0.5, 1.0))

    def test_matches_finite_difference(self):
        h = 1e-3
        for alpha in (1.0, 2.0):
            spec = FunctionalSpec(alpha, SQRT2)
            for y in (0.9, 1.2, 2.0):
                z = UpperHalfPoint(0.5, y)
                w0 = w_beta(spec, z, 1e-13)
                wp = w_beta(spec, UpperHalfPoint(0.5, y + h), 1e-13)
                wm = w_beta(spec, UpperHalfPoint(0.5, y - h), 1e-13)
                fd = (wp - 2 * w0 + wm) / h ** 2 + (wp - wm) / (h * y)
                assert radial_operator(spec, z) == pytest.approx(fd, abs=1e-4)

    def test_positive_at_hexagonal_height(self):
        assert radial_operator(FunctionalSpec(1.0, SQRT2), HEXAGONAL_POINT) > 0.0
