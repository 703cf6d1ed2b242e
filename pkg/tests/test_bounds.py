import math

import pytest

from oracles import mu_ref
from thetamin import bounds
from thetamin.errors import GridOutsideWindowError, RootNotBracketedError
from thetamin.halfplane import UpperHalfPoint
from thetamin.theta2d import FunctionalSpec, theta2d_dx

S32 = math.sqrt(3.0) / 2.0
SQRT2 = math.sqrt(2.0)

# frozen from the mpmath oracle
SIGMA1_1_S32 = 1.6136986989296902503e-3
BETA0_FIRST_CANDIDATE = 841.1483255145935


class TestSigmaTails:
    def test_values_at_hexagonal_height(self):
        s1, s2, s3, s4 = bounds.sigma_1_4(1.0, S32, SQRT2)
        assert s1 == pytest.approx(SIGMA1_1_S32, rel=1e-12)
        lead = SQRT2 * 4.0 * math.exp(-3.0 * math.pi * S32)
        assert s1 == pytest.approx(lead, rel=1e-3)  # n = 2 dominates

    def test_later_start_is_smaller(self):
        s1, _, s3, _ = bounds.sigma_1_4(1.0, S32, SQRT2)
        assert s3 < s1

    def test_linear_in_beta(self):
        _, s2a, _, s4a = bounds.sigma_1_4(1.0, 1.0, 1.0)
        _, s2b, _, s4b = bounds.sigma_1_4(1.0, 1.0, 3.0)
        assert s2b == pytest.approx(3.0 * s2a, rel=1e-12)
        assert s4b == pytest.approx(3.0 * s4a, rel=1e-12)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            bounds.sigma_1_4(0.0, 1.0, 1.0)


class TestBeta0:
    def test_value(self):
        assert bounds.beta0_constant() == pytest.approx(3.801819, abs=1e-5)

    def test_first_candidate(self):
        c1, _, _ = bounds.beta0_candidates()
        assert c1 == pytest.approx(BETA0_FIRST_CANDIDATE, rel=1e-12)

    def test_exceeds_critical_coupling(self):
        assert bounds.beta0_constant() > SQRT2


class TestRBound:
    def test_positive_at_critical_coupling(self):
        assert bounds.r_bound(1.0, SQRT2, S32) > 0.0

    def test_positive_in_small_ratio_regime(self):
        assert bounds.r_bound(2.0 * math.sqrt(3.0), SQRT2, S32) > 0.0

    def test_negative_beyond_double_threshold(self):
        assert bounds.r_bound(1.0, 2.0 * bounds.beta0_constant(), S32) < 0.0


class TestEpsilons:
    def test_parts_are_positive(self):
        assert all(p > 0.0 for p in bounds.epsilon_a_parts(1.0, 1.0))
        assert all(p > 0.0 for p in bounds.epsilon_b_parts(1.0, 1.0))

    def test_b_decreasing_in_y_at_fixed_alpha(self):
        vb = [bounds.epsilon_b(1.0, y) for y in (2.0, 5.0, 10.0, 20.0)]
        assert all(a > b for a, b in zip(vb, vb[1:]))

    def test_a_decreasing_in_alpha_at_fixed_y(self):
        # the y-limit claim only holds through growing alpha: at fixed alpha
        # the odd-index tail grows with y, while every part shrinks in alpha
        va = [bounds.epsilon_a(a, 1.0) for a in (1.0, 2.0, 4.0, 8.0)]
        assert all(a > b for a, b in zip(va, va[1:]))
        assert va[-1] < 1e-8

    def test_region_suprema_stay_below_caps(self):
        sup_a, _ = bounds.epsilon_a_sup(step=2e-3)
        sup_b, _ = bounds.epsilon_b_sup(step=2e-3)
        assert sup_a < bounds.EPS_A_CAP
        assert sup_b < bounds.EPS_B_CAP

    def test_reference_constants(self):
        assert bounds.epsilon_a_reference() == pytest.approx(0.1264717, abs=1e-6)
        assert bounds.epsilon_b_reference() == pytest.approx(0.0054169, abs=1e-6)

    def test_joint_supremum_below_ledger_reference(self):
        sup_a, _ = bounds.epsilon_a_sup(step=2e-3)
        assert sup_a < bounds.epsilon_a_reference()


class TestWLowerBound:
    def test_positive_within_near_branch(self):
        for y in (S32, 0.95, 1.0):
            assert bounds.w_lower_bound(1.0, y) > 0.414852 - 1e-3

    def test_positive_within_mid_branch(self):
        for y in (1.0, 1.05, 1.1, 1.13):
            assert bounds.w_lower_bound(1.0, y) > 0.491478 - 1.2e-1

    def test_positive_at_edge(self):
        assert bounds.w_lower_bound(1.0, 1.8) > 0.0

    def test_far_branch_turns_negative(self):
        eb = bounds.epsilon_b(1.0, 50.0)
        far = 1.0 - 4.0 * SQRT2 * (1.0 + eb) * math.exp(-math.pi / 50.0)
        assert far < 0.0

    def test_branch_constants(self):
        consts = bounds.w_branch_constants()
        assert consts["near"] == pytest.approx(0.414852, abs=1e-5)
        assert consts["mid"] == pytest.approx(0.491478, abs=1e-5)
        assert 1.0 / consts["ratio_cap"] == pytest.approx(0.553493, abs=1e-5)
        assert consts["ratio_cap"] == pytest.approx(1.806707, abs=1e-5)


class TestYEpsilonRoot:
    def test_value(self):
        assert bounds.y_epsilon_root() == pytest.approx(1.130998, abs=1e-5)

    def test_residual_vanishes(self):
        y = bounds.y_epsilon_root()
        assert abs(bounds._y_eps_poly(y, bounds.EPS_A_CAP)) < 1e-10

    def test_bracket_signs(self):
        assert bounds._y_eps_poly(S32, bounds.EPS_A_CAP) < 0.0
        assert bounds._y_eps_poly(2.0, bounds.EPS_A_CAP) > 0.0

    def test_unbracketable_cap_raises(self):
        with pytest.raises(RootNotBracketedError):
            bounds.y_epsilon_root(eps_a_cap=50.0)


class TestPQ:
    def test_p_anchor_values(self):
        assert 1.0 * bounds.p_function(1.0, 1.0) == pytest.approx(4.2291292, abs=1e-6)
        assert 1.0 * bounds.p_function(2.0, 1.0) == pytest.approx(10.3052616, abs=1e-6)

    def test_bound_constants(self):
        c1, c2 = bounds.p_bound_constants()
        assert c1 == pytest.approx(4.232412, abs=1e-4)
        # the second anchor constant sits 1.77e-4 above the printed 10.268696
        assert c2 == pytest.approx(10.268519, abs=1e-5)

    def test_envelope_margins_nonnegative(self, rng):
        for _ in range(60):
            alpha = rng.uniform(1.0, 4.0)
            x = rng.uniform(1.0, 20.0)
            m1, m2 = bounds.p_envelope_margins(alpha, alpha * x)
            assert m1 >= -1e-12 and m2 >= -1e-12

    def test_q_positive_on_claim_window(self, rng):
        for _ in range(60):
            alpha = rng.uniform(1.0, 4.0)
            x = rng.uniform(1.15, 30.0)
            assert bounds.q_function(alpha, alpha * x) > 0.0

    def test_q_goes_negative_below_window(self):
        assert bounds.q_function(1.0, 0.9) < 0.0


class TestScriptE:
    def test_identity_with_x_derivative(self, rng):
        # -dW/dx = 2 sqrt(y/2a) e^{-pi a y} * script_e
        for _ in range(8):
            alpha = rng.uniform(1.0, 2.5)
            beta = rng.uniform(-1.0, 2.0)
            x, y = rng.uniform(0.05, 0.45), rng.uniform(0.95, 2.0)
            z = UpperHalfPoint(x, y)
            dwdx = (theta2d_dx(alpha, z, 1e-13)
                    - beta * theta2d_dx(2.0 * alpha, z, 1e-13))
            pref = 2.0 * math.sqrt(y / (2.0 * alpha)) * math.exp(-math.pi * alpha * y)
            assert bounds.script_e(alpha, beta, z) == pytest.approx(
                -dwdx / pref, rel=1e-8, abs=1e-9)

    def test_lower_bound_holds(self, rng):
        # the assembled estimate treats beta as a nonnegative prefactor
        for _ in range(40):
            alpha = rng.uniform(1.0, 3.0)
            beta = rng.uniform(0.0, 2.0)
            x, y = rng.uniform(0.02, 0.48), rng.uniform(0.9, 3.0)
            if x * x + y * y < 1.0:
                continue
            actual = bounds.script_e(alpha, beta, UpperHalfPoint(x, y))
            assert actual >= bounds.script_e_lower(alpha, beta, x, y) - 1e-10

    def test_proof_variant_is_weaker_constraintwise(self):
        # dropping a negative term can only raise the bound on the near branch
        args = (1.0, SQRT2, 0.3, 1.1)
        assert (bounds.script_e_lower(*args, variant="proof")
                >= bounds.script_e_lower(*args))


class TestDoubleSums:
    def test_square_weight_upper_bound_is_exact_regroup(self):
        up_sq, _, _, _ = bounds.double_sum_bounds(1.0, 1.0)
        sq_a, _, _, _ = bounds.double_sums_direct(1.0, 1.0)
        assert up_sq == pytest.approx(sq_a, abs=1e-12)

    def test_lower_bounds_hold(self, rng):
        for _ in range(25):
            alpha = rng.uniform(1.0, 3.0)
            y = rng.uniform(S32, 6.0)
            _, _, lo_quad, lo_sq = bounds.double_sum_bounds(alpha, y)
            _, quad_2a, quad_a, sq_2a = bounds.double_sums_direct(alpha, y)
            assert quad_a >= lo_quad - 1e-12
            assert sq_2a >= lo_sq - 1e-12

    def test_quartic_upper_bound_fails_near_unit_height(self):
        # the printed quartic-weight bound is violated there; the ledger
        # records this as a defect of the source estimate
        _, up_quad, _, _ = bounds.double_sum_bounds(1.0, 1.0)
        _, quad_2a, _, _ = bounds.double_sums_direct(1.0, 1.0)
        assert quad_2a > up_quad

    def test_square_weight_pair_exact_at_all_heights(self):
        # the n^2-weight upper bound is an exact regrouping at every height,
        # while the slowly decaying n = 0 row keeps the lower pairs loose
        for y in (2.0, 5.0, 10.0):
            up_sq, _, lo_quad, lo_sq = bounds.double_sum_bounds(1.0, y)
            sq_a, _, quad_a, sq_2a = bounds.double_sums_direct(1.0, y)
            assert up_sq / sq_a == pytest.approx(1.0, abs=1e-12)
            assert quad_a >= lo_quad and sq_2a >= lo_sq


class TestSweeps:
    def test_r_positivity(self):
        report = bounds.verify_sweep("r-positivity", n_alpha=40, n_y=40)
        assert report.claim_holds and report.min_value > 0.0

    def test_w_positivity(self):
        report = bounds.verify_sweep("w-positivity", n_alpha=30, n_y=30)
        assert report.claim_holds

    def test_q_positivity(self):
        report = bounds.verify_sweep("q-positivity", n_alpha=30, n_y=30)
        assert report.claim_holds

    def test_epsilon_bounds(self):
        report = bounds.verify_sweep("epsilon-bounds", n_alpha=25, n_y=25)
        assert report.claim_holds

    def test_p_bounds(self):
        report = bounds.verify_sweep("p-bounds", n_alpha=20, n_y=25)
        assert report.claim_holds

    def test_dx_negative(self):
        report = bounds.verify_sweep("dx-negative", n_alpha=10, n_y=5)
        assert report.claim_holds and report.min_value > 0.0

    def test_double_sum_sandwich_reports_the_defect(self):
        report = bounds.verify_sweep("double-sum-sandwich", n_alpha=12, n_y=12)
        assert not report.claim_holds  # quartic upper bound fails as printed

    def test_window_validation(self):
        with pytest.raises(GridOutsideWindowError):
            bounds.verify_sweep("r-positivity", alpha_range=(0.5, 2.0))
        with pytest.raises(GridOutsideWindowError):
            bounds.verify_sweep("r-positivity", beta=4.0)
        with pytest.raises(GridOutsideWindowError):
            bounds.verify_sweep("q-positivity", y_range=(1.0, 5.0))

    def test_report_serialization(self):
        report = bounds.verify_sweep("epsilon-bounds", n_alpha=5, n_y=5)
        doc = report.to_dict()
        assert set(doc) == {"name", "grid", "min", "argmin", "holds"}


class TestInternalTails:
    def test_mu_matches_oracle(self):
        for X in (0.25, 0.5, 1.0, S32):
            assert bounds._mu(X) == pytest.approx(float(mu_ref(X)), rel=1e-12)
