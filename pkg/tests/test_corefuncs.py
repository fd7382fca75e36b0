import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import hestondist as hd
from hestondist import DegenerateLineError, DomainError

from conftest import angles_open, variances

PI = math.pi


class TestPsi:
    def test_value_at_pi(self):
        assert hd.psi(PI) == pytest.approx(PI / 2, abs=1e-15)

    def test_value_at_three_half_pi(self):
        assert hd.psi(1.5 * PI) == pytest.approx(1.5 * PI + 1.0, abs=1e-14)

    def test_small_angle_limit(self):
        # psi(t) ~ t/3 as t -> 0+
        for t in (1e-6, 1e-4, 1e-3):
            assert hd.psi(t) == pytest.approx(t / 3.0, rel=1e-6)

    @given(angles_open)
    def test_odd(self, t):
        assert hd.psi(-t) == -hd.psi(t)

    def test_strictly_increasing(self):
        ts = [1e-4 + (2 * PI - 2e-4) * i / 400 for i in range(401)]
        vals = [hd.psi(t) for t in ts]
        assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_domain(self):
        with pytest.raises(DomainError):
            hd.psi(0.0)
        with pytest.raises(DomainError):
            hd.psi(2 * PI)


class TestFOf:
    def test_boundary_is_psi(self):
        for d in (0.5, 1.0, 2.5, 4.0, 6.0):
            assert hd.f_of(0.0, d) == pytest.approx(hd.psi(d), rel=1e-14)

    def test_value_at_pi(self):
        assert hd.f_of(1.0, PI) == pytest.approx(PI + 2.0, abs=1e-13)

    @given(variances, angles_open)
    def test_odd(self, v, d):
        assert hd.f_of(v, -d) == -hd.f_of(v, d)

    def test_zero_delta_limit(self):
        assert hd.f_of(3.7, 0.0) == 0.0

    def test_increasing_in_delta(self):
        for v in (0.0, 0.3, 1.0, 4.0, 25.0):
            ts = [1e-3 + (2 * PI - 2e-3) * i / 300 for i in range(301)]
            vals = [hd.f_of(v, t) for t in ts]
            assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_domain(self):
        with pytest.raises(DomainError):
            hd.f_of(-1.0, 1.0)
        with pytest.raises(DomainError):
            hd.f_of(1.0, 2 * PI)


class TestLambdaBig:
    def test_at_critical_abscissa(self):
        for t in (0.4, 1.0, 2.0, 3.0):
            x0 = 0.5 * (t + math.sin(t))
            assert hd.lambda_big(x0, t) == pytest.approx(t * t / 2, rel=1e-12)

    def test_at_boundary_abscissa(self):
        for t in (0.4, 1.3, 2.9, 4.5):
            expected = t * t / (1.0 - math.cos(t))
            assert hd.lambda_big(hd.psi(t), t) == pytest.approx(expected, rel=1e-11)

    def test_grows_unboundedly(self):
        t = 1.2
        vals = [hd.lambda_big(x, t) for x in (10.0, 100.0, 1000.0, 10000.0)]
        assert all(a < b for a, b in zip(vals, vals[1:]))
        assert vals[-1] > 1e3

    def test_reflected_branch(self):
        # negative index evaluates through the mirrored curve
        assert hd.lambda_big(-2.0, -1.1) == hd.lambda_big(2.0, 1.1)

    def test_domain(self):
        with pytest.raises(DomainError):
            hd.lambda_big(1.0, 0.0)
        with pytest.raises(DomainError):
            # x far left of the curve start
            hd.lambda_big(0.0, 3.0)


class TestCoefficients:
    def test_values_at_pi(self):
        assert hd.coef_A(PI) == pytest.approx(-2.0 / PI, abs=1e-15)
        assert hd.coef_B(PI) == pytest.approx(2.0 / PI, abs=1e-15)

    @given(angles_open)
    @settings(max_examples=50)
    def test_b_is_reciprocal_psi(self, t):
        assert hd.coef_B(t) * hd.psi(t) == pytest.approx(1.0, rel=1e-12)

    def test_monotonicity(self):
        ts = [1e-3 + (2 * PI - 2e-3) * i / 300 for i in range(301)]
        neg_a = [-hd.coef_A(t) for t in ts]
        b = [hd.coef_B(t) for t in ts]
        assert all(x < y for x, y in zip(neg_a, neg_a[1:]))
        assert all(x > y for x, y in zip(b, b[1:]))

    def test_domain(self):
        for bad in (0.0, -1.0, 2 * PI):
            with pytest.raises(DomainError):
                hd.coef_A(bad)
            with pytest.raises(DomainError):
                hd.coef_B(bad)


class TestIndexFunctions:
    def test_x_crit_at_pi(self):
        assert hd.x_crit(PI) == pytest.approx(PI / 2, abs=1e-15)

    def test_zeta_kills_gamma_at_pi(self):
        for g in (-2.0, 0.0, 0.7, 10.0):
            assert hd.zeta(g, PI) == pytest.approx(PI / 2, abs=1e-12)

    def test_eta_vanishes_at_origin(self):
        assert hd.eta(1e-8) < 1e-7

    def test_eta_increasing(self):
        ts = [1e-3 + (2 * PI - 2e-3) * i / 200 for i in range(201)]
        vals = [hd.eta(t) for t in ts]
        assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_eta_alpha_increasing(self):
        alpha = 2.0
        ceiling = hd.psi_inv(alpha)
        ts = [ceiling * (0.01 + 0.98 * i / 100) for i in range(101)]
        vals = [hd.eta_alpha(alpha, t) for t in ts]
        assert all(a < b for a, b in zip(vals, vals[1:]))

    def test_zeta_x_crit_increasing_onto(self):
        g = 0.8
        ts = [PI * i / 100 for i in range(101)]
        zv = [hd.zeta(g, t) for t in ts]
        xv = [hd.x_crit(t) for t in ts]
        assert all(a < b for a, b in zip(zv, zv[1:]))
        assert all(a < b for a, b in zip(xv, xv[1:]))
        assert zv[0] == pytest.approx(-g) and zv[-1] == pytest.approx(PI / 2)
        assert xv[0] == 0.0 and xv[-1] == pytest.approx(PI / 2)

    def test_xi_at_pi_is_stationary_minimum(self):
        assert hd.xi(PI) == pytest.approx(PI, rel=1e-14)
        h = 1e-5
        deriv = (hd.xi(PI + h) - hd.xi(PI - h)) / (2 * h)
        assert abs(deriv) < 1e-8

    def test_xi_v_shape(self):
        down = [hd.xi(t) for t in (0.3, 1.0, 2.0, 3.0, PI)]
        up = [hd.xi(t) for t in (PI, 3.5, 4.5, 5.5, 6.2)]
        assert all(a > b for a, b in zip(down, down[1:]))
        assert all(a < b for a, b in zip(up, up[1:]))

    def test_eta_alpha_domain(self):
        with pytest.raises(DomainError):
            hd.eta_alpha(1.0, hd.psi_inv(1.0) + 0.1)


class TestIntersectionRoots:
    def test_tangency_collapses_roots(self):
        beta, t = 0.7, 1.3
        a, b = hd.coef_A(t), hd.coef_B(t)
        gamma = (1.0 - a * a / (1.0 - beta * b)) / b
        assert abs(hd.discriminant(beta, gamma, t)) < 1e-12
        sp = hd.s_plus(beta, gamma, t)
        sm = hd.s_minus(beta, gamma, t)
        assert sp == pytest.approx(a / (1.0 - gamma * b), rel=1e-9)
        assert sm == pytest.approx(sp, rel=1e-9)

    def test_vertical_root_matches_level_curve(self):
        # gamma = 0: the squared root reproduces the curve ordinate
        for t, beta in ((0.9, 0.8), (2.1, 3.0), (4.0, 9.0)):
            v_root = hd.s_plus(beta, 0.0, t) ** 2
            assert v_root == pytest.approx(hd.curve_v(t, beta), rel=1e-12)

    def test_boundary_line_roots(self):
        # beta = psi(theta) with steeper slope: roots 0 and -2A/(gamma*B - 1)
        t = 2.0
        beta = hd.psi(t)
        gamma = beta + 1.0
        a, b = hd.coef_A(t), hd.coef_B(t)
        assert hd.s_plus(beta, gamma, t) == pytest.approx(0.0, abs=1e-14)
        assert hd.s_minus(beta, gamma, t) == pytest.approx(
            -2.0 * a / (gamma * b - 1.0), rel=1e-12
        )

    def test_degenerate_configuration_raises(self):
        t = 1.7
        b = hd.coef_B(t)
        gamma = 1.0 / b
        # land exactly on 1 - gamma*B == 0 (rounding can leave an ulp gap)
        while 1.0 - gamma * b != 0.0:
            gamma = math.nextafter(gamma, math.inf if gamma * b < 1.0 else -math.inf)
        with pytest.raises(DegenerateLineError):
            hd.s_minus(2.0, gamma, t)
        with pytest.raises(DegenerateLineError):
            hd.s_plus(2.0, gamma, t)
        # the single-root formula applies instead
        s = hd.s_tangent(2.0, t)
        assert math.isfinite(s)

    def test_discriminant_negative_raises(self):
        with pytest.raises(DomainError):
            hd.s_plus(0.01, 0.005, 3.0)


class TestLambdaBranches:
    def test_vertical_plus_equals_level_formula(self):
        # two independent formula paths must agree tightly
        for t, beta in ((0.8, 1.0), (1.7, 2.0), (3.1, 4.0)):
            lp = hd.lambda_plus(beta, 0.0, t)
            lb = hd.lambda_big(beta, t)
            assert lp == pytest.approx(lb, rel=1e-12)

    def test_sign_law(self, rng):
        # sign(lambda_plus - lambda_minus) = sign(gamma*cot(theta/2) - 1)
        checked = 0
        while checked < 200:
            beta = rng.uniform(0.05, 3.0)
            gamma = beta * rng.uniform(1.05, 4.0)
            lo = hd.eta_alpha_inv(gamma, beta)
            hi = min(hd.psi_inv(beta), hd.psi_inv(gamma) - 1e-6)
            if hi <= lo:
                continue
            t = rng.uniform(lo + 1e-4 * (hi - lo), hi - 1e-4 * (hi - lo))
            if hd.discriminant(beta, gamma, t) <= 0:
                continue
            diff = hd.lambda_plus(beta, gamma, t) - hd.lambda_minus(beta, gamma, t)
            marker = gamma / math.tan(t / 2) - 1.0
            if abs(diff) < 1e-12:
                continue
            assert diff * marker > 0, (beta, gamma, t, diff, marker)
            checked += 1

    def test_far_indices_prefer_plus(self, rng):
        # theta >= pi with both branches defined: plus branch is closer
        checked = 0
        while checked < 100:
            beta = rng.uniform(2.0, 8.0)
            gamma = beta * rng.uniform(1.05, 3.0)
            lo = max(hd.eta_alpha_inv(gamma, beta), PI)
            hi = min(hd.psi_inv(beta), hd.psi_inv(gamma) - 1e-6)
            if hi <= lo:
                continue
            t = rng.uniform(lo, hi)
            if hd.discriminant(beta, gamma, t) <= 0:
                continue
            assert hd.lambda_plus(beta, gamma, t) <= hd.lambda_minus(
                beta, gamma, t
            ) + 1e-12
            checked += 1


class TestBounds:
    def test_majorant_continuous_at_pi(self):
        for v in (0.0, 1.0, 7.3):
            expected = (PI**3 / 12.0) * (v + math.sqrt(v) + 1.0)
            assert hd.g_major(v, PI) == pytest.approx(expected, rel=1e-14)
            assert hd.g_major(v, PI - 1e-12) == pytest.approx(expected, rel=1e-9)
            assert hd.g_major(v, PI + 1e-12) == pytest.approx(expected, rel=1e-9)

    def test_lower_bound_continuous_at_knee(self):
        for v in (0.0, 2.0, 11.0):
            knee = (PI**3 / 12.0) * (v + math.sqrt(v) + 1.0)
            assert hd.h_lower(knee, v) == pytest.approx(PI, rel=1e-12)
            assert hd.h_lower(knee * (1 + 1e-12), v) == pytest.approx(PI, rel=1e-9)

    @given(variances, st.floats(min_value=1e-3, max_value=2 * PI - 1e-3))
    @settings(max_examples=200)
    def test_majorant_dominates(self, v, d):
        assert hd.f_of(v, d) <= hd.g_major(v, d) * (1 + 1e-12)

    def test_t_bound_coincident(self):
        assert hd.t_bound((0.0, 1.0), (0.0, 1.0)) == 0.0

    def test_domains(self):
        with pytest.raises(DomainError):
            hd.g_major(1.0, 0.0)
        with pytest.raises(DomainError):
            hd.h_lower(0.0, 1.0)
        with pytest.raises(DomainError):
            hd.t_bound((0.0, -1.0), (0.0, 1.0))


class TestSeriesSwitchContinuity:
    """The series and closed-form paths must agree at the switch point."""

    @pytest.mark.parametrize("t", [hd.SMALL_ANGLE, hd.SMALL_ANGLE * 1.0000001])
    def test_psi(self, t):
        assert hd.psi(t, _mode="series") == pytest.approx(
            hd.psi(t, _mode="direct"), rel=1e-9
        )

    @pytest.mark.parametrize("t", [hd.SMALL_ANGLE])
    def test_coefficients(self, t):
        assert hd.coef_A(t, _mode="series") == pytest.approx(
            hd.coef_A(t, _mode="direct"), rel=1e-9
        )
        assert hd.coef_B(t, _mode="series") == pytest.approx(
            hd.coef_B(t, _mode="direct"), rel=1e-9
        )

    @pytest.mark.parametrize("v", [0.0, 0.4, 1.0, 9.0])
    def test_f_of(self, v):
        t = hd.SMALL_ANGLE
        assert hd.f_of(v, t, _mode="series") == pytest.approx(
            hd.f_of(v, t, _mode="direct"), rel=1e-9
        )

    @pytest.mark.parametrize("x", [0.5, 2.0, 40.0])
    def test_lambda_big(self, x):
        t = hd.SMALL_ANGLE
        assert hd.lambda_big(x, t, _mode="series") == pytest.approx(
            hd.lambda_big(x, t, _mode="direct"), rel=1e-9
        )
