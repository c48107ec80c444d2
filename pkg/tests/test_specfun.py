import math

import numpy as np
import pytest
import scipy.special as sp

from besselvisc.errors import PoleError
from besselvisc.specfun import (
    EvalAccuracy,
    Order,
    bessel_i,
    bessel_i_ratio,
    bessel_j,
    bessel_j_deriv,
    gamma,
)

# High-precision reference values (30+ digit arithmetic, frozen).
GAMMA_7_3 = 1271.4236336639092731
I1_AT_2 = 1.5906368546373290634
RATIO_I2_I1_AT_10 = 0.85418530832368160972
J2_AT_5 = 0.046565116277752215532


class TestOrder:
    def test_accepts_valid(self):
        assert Order(0.0).nu == 0.0
        assert Order(-0.999).nu == -0.999

    @pytest.mark.parametrize("bad", [-1.0, -2.0, float("nan"), float("inf")])
    def test_rejects_invalid(self, bad):
        with pytest.raises(ValueError):
            Order(bad)

    def test_accuracy_validation(self):
        with pytest.raises(ValueError):
            EvalAccuracy(rel_tol=0.0)
        with pytest.raises(ValueError):
            EvalAccuracy(max_terms=5)


class TestGamma:
    def test_known_points(self):
        assert gamma(1.0) == pytest.approx(1.0, rel=1e-14)
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
        assert gamma(7.3) == pytest.approx(GAMMA_7_3, rel=1e-14)

    def test_accuracy_on_working_range(self):
        for x in np.linspace(0.5, 50.0, 997):
            assert gamma(float(x)) == pytest.approx(math.gamma(float(x)), rel=1e-13)

    def test_reflection_region(self):
        for x in [0.05, 0.25, -0.5, -1.5, -2.7]:
            assert gamma(x) == pytest.approx(math.gamma(x), rel=5e-13)

    def test_poles(self):
        for x in [0.0, -1.0, -7.0]:
            with pytest.raises(PoleError):
                gamma(x)

    def test_recurrence(self):
        rng = np.random.default_rng(42)
        for x in rng.uniform(0.5, 40.0, size=50):
            assert gamma(x + 1.0) == pytest.approx(x * gamma(float(x)), rel=1e-12)


class TestBesselI:
    def test_small_argument_series_leading_terms(self):
        z = 1e-3
        assert bessel_i(0.0, z) == pytest.approx(1.0 + z * z / 4.0, rel=1e-12)

    def test_half_integer_closed_form(self):
        for z in [0.3, 1.7, 12.0, 28.0]:
            expect = math.sqrt(2.0 / (math.pi * z)) * math.sinh(z)
            assert bessel_i(0.5, z) == pytest.approx(expect, rel=1e-12)

    def test_frozen_value(self):
        assert bessel_i(1.0, 2.0) == pytest.approx(I1_AT_2, rel=1e-13)

    def test_against_scipy_across_branches(self):
        orders = [-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0, 3.5]
        args = np.concatenate([np.linspace(0.05, 29.5, 60), np.linspace(30.5, 150.0, 60)])
        for nu in orders:
            for z in args:
                assert bessel_i(nu, float(z)) == pytest.approx(
                    float(sp.iv(nu, float(z))), rel=1e-12
                ), (nu, z)

    def test_recurrence_residual(self):
        # I_{nu-1}(z) - (2 nu / z) I_nu(z) = I_{nu+1}(z)
        rng = np.random.default_rng(7)
        for _ in range(120):
            nu = float(rng.uniform(0.0, 3.0))
            z = float(rng.uniform(0.1, 50.0))
            lhs = bessel_i(nu - 1.0, z) - (2.0 * nu / z) * bessel_i(nu, z)
            rhs = bessel_i(nu + 1.0, z)
            assert abs(lhs - rhs) <= 1e-10 * bessel_i(nu - 1.0, z)

    def test_positivity(self):
        rng = np.random.default_rng(11)
        for _ in range(60):
            nu = float(rng.uniform(-0.99, 4.0))
            z = float(rng.uniform(1e-3, 200.0))
            assert bessel_i(nu, z) > 0.0

    def test_overflow_raises(self):
        with pytest.raises(OverflowError):
            bessel_i(0.0, 800.0)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            bessel_i(0.0, -1.0)
        with pytest.raises(ValueError):
            bessel_i(-1.5, 1.0)


class TestBesselIRatio:
    def test_small_argument_limit(self):
        # I_{nu+1}/I_nu -> z / (2 (nu+1)) as z -> 0
        for nu in [-0.5, 0.0, 1.3]:
            z = 1e-6
            assert bessel_i_ratio(nu + 1.0, nu, z) == pytest.approx(
                z / (2.0 * (nu + 1.0)), rel=1e-10
            )

    def test_half_integer_closed_form(self):
        for z in [0.2, 1.0, 8.0, 40.0, 300.0]:
            expect = 1.0 / math.tanh(z) - 1.0 / z
            assert bessel_i_ratio(1.5, 0.5, z) == pytest.approx(expect, rel=1e-12)

    def test_frozen_value(self):
        assert bessel_i_ratio(2.0, 1.0, 10.0) == pytest.approx(
            RATIO_I2_I1_AT_10, rel=1e-12
        )

    def test_no_overflow_at_huge_argument(self):
        val = bessel_i_ratio(1.0, 0.0, 1e6)
        assert 0.0 < val < 1.0
        # leading large-z behaviour: 1 - (mu1-mu0)/(8z) = 1 - 1/(2z)
        assert val == pytest.approx(1.0 - 0.5e-6, rel=1e-10)

    def test_ratio_times_denominator(self):
        rng = np.random.default_rng(3)
        for _ in range(80):
            nu = float(rng.uniform(-0.9, 2.5))
            z = float(rng.uniform(0.05, 60.0))
            ratio = bessel_i_ratio(nu + 1.0, nu, z)
            assert ratio * bessel_i(nu, z) == pytest.approx(
                bessel_i(nu + 1.0, z), rel=1e-10
            )

    def test_descending_direction(self):
        for z in [0.5, 5.0, 50.0]:
            up = bessel_i_ratio(2.0, 1.0, z)
            down = bessel_i_ratio(1.0, 2.0, z)
            assert up * down == pytest.approx(1.0, rel=1e-12)

    def test_complex_argument(self):
        import mpmath

        mpmath.mp.dps = 30
        for z in [1.5 + 2.0j, 0.4 + 9.0j, 30.0 + 40.0j]:
            got = bessel_i_ratio(1.5, 0.5, z)
            ref = complex(mpmath.besseli(1.5, z) / mpmath.besseli(0.5, z))
            assert abs(got - ref) / abs(ref) < 1e-10

    def test_non_contiguous_orders_rejected(self):
        with pytest.raises(ValueError):
            bessel_i_ratio(2.0, 0.0, 1.0)


class TestBesselJ:
    def test_half_integer_closed_forms(self):
        for x in np.linspace(0.1, 100.0, 173):
            x = float(x)
            sin_form = math.sqrt(2.0 / (math.pi * x)) * math.sin(x)
            cos_form = math.sqrt(2.0 / (math.pi * x)) * math.cos(x)
            env = math.sqrt(2.0 / (math.pi * x))
            assert abs(bessel_j(0.5, x) - sin_form) <= 1e-12 * env
            assert abs(bessel_j(-0.5, x) - cos_form) <= 1e-12 * env

    def test_frozen_value(self):
        assert bessel_j(2.0, 5.0) == pytest.approx(J2_AT_5, rel=1e-12)

    def test_against_scipy_all_branches(self):
        orders = [-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 2.7, 3.5]
        args = np.concatenate(
            [np.linspace(0.05, 8.9, 45), np.linspace(9.1, 15.9, 35),
             np.linspace(16.1, 400.0, 80)]
        )
        for nu in orders:
            for x in args:
                x = float(x)
                ref = float(sp.jv(nu, x))
                env = math.sqrt(2.0 / (math.pi * max(x, 0.3)))
                assert abs(bessel_j(nu, x) - ref) <= max(1e-12 * x, 5e-14) * env + 1e-13 * abs(ref), (nu, x)

    def test_large_order(self):
        for nu, x in [(20.0, 10.0), (20.0, 30.0), (50.0, 57.0), (50.0, 200.0)]:
            assert bessel_j(nu, x) == pytest.approx(float(sp.jv(nu, x)), rel=1e-11)


class TestBesselJDeriv:
    def test_order_zero_identity(self):
        for x in [0.4, 3.0, 12.0, 80.0]:
            assert bessel_j_deriv(0.0, x) == pytest.approx(-bessel_j(1.0, x), rel=1e-14)

    def test_half_integer_closed_form(self):
        x = math.pi
        # d/dx [sqrt(2/(pi x)) sin x] at x = pi
        expect = math.sqrt(2.0 / (math.pi * x)) * (math.cos(x) - math.sin(x) / (2.0 * x))
        assert bessel_j_deriv(0.5, x) == pytest.approx(expect, rel=1e-12)

    def test_finite_difference_consistency(self):
        h = 1e-6
        rng = np.random.default_rng(19)
        for _ in range(60):
            nu = float(rng.uniform(-0.9, 3.0))
            x = float(rng.uniform(0.5, 40.0))
            fd = (bessel_j(nu, x + h) - bessel_j(nu, x - h)) / (2.0 * h)
            assert abs(bessel_j_deriv(nu, x) - fd) <= 1e-6

    def test_near_extremum_point(self):
        # J'_1 at the first zero of J_1 equals J_0 there minus J_1/x = J_0.
        x = 3.831706
        assert bessel_j_deriv(1.0, x) == pytest.approx(-0.40275939257099617351, rel=1e-9)
