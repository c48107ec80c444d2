import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from besselvisc.errors import ExtrapolationError
from besselvisc.hereditary import LoadHistory, strain_response, stress_response
from besselvisc.timedomain import SeriesPolicy, creep_compliance, phi, psi, relaxation_modulus

ORDERS = [-0.5, 0.0, 0.5, 1.0]


def unit_step(t_end=2.0, interpolation="piecewise_linear"):
    return LoadHistory(np.array([0.0, t_end]), np.array([1.0, 1.0]), interpolation)


class TestLoadHistory:
    def test_validation(self):
        with pytest.raises(ValueError):
            LoadHistory(np.array([0.5, 1.0]), np.array([1.0, 1.0]))
        with pytest.raises(ValueError):
            LoadHistory(np.array([0.0, 0.0]), np.array([1.0, 1.0]))
        with pytest.raises(ValueError):
            LoadHistory(np.array([0.0, 1.0]), np.array([1.0]))
        with pytest.raises(ValueError):
            LoadHistory(np.array([0.0, 1.0]), np.array([1.0, 1.0]), "quadratic")

    def test_interpolation_rules(self):
        h = LoadHistory(np.array([0.0, 1.0, 2.0]), np.array([0.0, 2.0, 1.0]))
        assert h.value_at(0.5) == pytest.approx(1.0)
        assert h.value_at(1.5) == pytest.approx(1.5)
        hc = LoadHistory(np.array([0.0, 1.0, 2.0]), np.array([0.0, 2.0, 1.0]),
                         "piecewise_constant")
        assert hc.value_at(0.5) == 0.0
        assert hc.value_at(1.0) == 2.0
        assert hc.value_at(1.999) == 2.0

    def test_extrapolation_guard(self):
        h = unit_step(1.0)
        with pytest.raises(ExtrapolationError):
            h.value_at(1.5)


class TestStepIdentities:
    @pytest.mark.parametrize("nu", ORDERS)
    def test_step_stress_gives_compliance(self, nu):
        t_eval = np.concatenate([[0.0], np.linspace(0.04, 2.0, 50)])
        eps = strain_response(nu, unit_step(), t_eval)
        expect = np.array([creep_compliance(nu, float(t)) for t in t_eval])
        assert np.max(np.abs(eps.values - expect) / np.maximum(np.abs(expect), 1.0)) <= 1e-8

    @pytest.mark.parametrize("nu", ORDERS)
    def test_step_strain_gives_modulus(self, nu):
        t_eval = np.concatenate([[0.0], np.linspace(0.04, 2.0, 50)])
        sig = stress_response(nu, unit_step(), t_eval)
        expect = np.array([relaxation_modulus(nu, float(t)) for t in t_eval])
        assert np.max(np.abs(sig.values - expect) / np.maximum(np.abs(expect), 1.0)) <= 1e-8

    def test_piecewise_constant_step_matches_too(self):
        t_eval = np.linspace(0.0, 2.0, 21)
        eps = strain_response(1.0, unit_step(interpolation="piecewise_constant"), t_eval)
        expect = np.array([creep_compliance(1.0, float(t)) for t in t_eval])
        assert_allclose(eps.values, expect, rtol=0.0, atol=1e-10)


class TestLinearityAndCausality:
    def test_zero_input(self):
        zero = LoadHistory(np.array([0.0, 1.0]), np.array([0.0, 0.0]))
        assert np.all(strain_response(0.5, zero, np.linspace(0, 1, 9)).values == 0.0)
        assert np.all(stress_response(0.5, zero, np.linspace(0, 1, 9)).values == 0.0)

    def test_superposition(self):
        tt = np.linspace(0.0, 1.5, 31)
        h1 = LoadHistory(np.array([0.0, 0.5, 1.5]), np.array([0.0, 1.0, 0.3]))
        h2 = LoadHistory(np.array([0.0, 0.7, 1.5]), np.array([1.0, -0.4, 0.9]))
        a, b = 2.3, -1.7
        knots = np.unique(np.concatenate([h1.times, h2.times]))
        mixed = LoadHistory(
            knots,
            a * np.array([h1.value_at(float(t)) for t in knots])
            + b * np.array([h2.value_at(float(t)) for t in knots]),
        )
        for responder in (strain_response, stress_response):
            combined = responder(1.0, mixed, tt).values
            separate = a * responder(1.0, h1, tt).values + b * responder(1.0, h2, tt).values
            assert np.max(np.abs(combined - separate)) <= 1e-12 * max(
                1.0, float(np.max(np.abs(combined)))
            )

    def test_causality_bitwise(self):
        full = LoadHistory(np.array([0.0, 0.5, 1.0, 2.0]), np.array([0.2, 1.0, -0.5, 0.7]))
        trunc = LoadHistory(np.array([0.0, 0.5, 1.0]), np.array([0.2, 1.0, -0.5]))
        te = np.linspace(0.0, 1.0, 21)
        assert np.array_equal(
            strain_response(0.0, full, te).values,
            strain_response(0.0, trunc, te).values,
        )
        assert np.array_equal(
            stress_response(0.0, full, te).values,
            stress_response(0.0, trunc, te).values,
        )


class TestQuadratureOracles:
    def test_ramp_stress(self):
        # sigma(t) = t: eps(t) = t + int_0^t Psi(t-u) u du, with the
        # integrable edge at u -> t handled by the creep-compliance
        # increment over the final sliver.
        from scipy.integrate import quad

        nu, t, delta = 0.0, 1.0, 1e-5
        ramp = LoadHistory(np.array([0.0, 1.0]), np.array([0.0, 1.0]))
        got = strain_response(nu, ramp, np.array([t])).values[0]
        policy = SeriesPolicy(min_time=0.9 * delta)
        val, _ = quad(lambda u: psi(nu, t - u, policy) * u, 0.0, t - delta,
                      limit=400, epsabs=1e-12, epsrel=1e-12)
        edge = t * (creep_compliance(nu, delta) - 1.0)  # sigma ~ sigma(t) on the sliver
        assert got == pytest.approx(t + val + edge, rel=1e-6)

    def test_sinusoidal_strain(self):
        # one period of eps(t) = sin(2 pi t): direct high-resolution
        # quadrature of sigma = eps - int Phi(t-u) eps(u) du
        from scipy.integrate import quad

        nu, t, delta = 0.5, 1.0, 1e-5
        times = np.linspace(0.0, 1.0, 2001)
        hist = LoadHistory(times, np.sin(2.0 * math.pi * times))
        got = stress_response(nu, hist, np.array([t])).values[0]
        policy = SeriesPolicy(min_time=0.9 * delta)
        val, _ = quad(lambda u: phi(nu, t - u, policy) * math.sin(2.0 * math.pi * u),
                      0.0, t - delta, limit=800, epsabs=1e-12, epsrel=1e-12)
        eps_t = math.sin(2.0 * math.pi * t)
        edge = eps_t * (1.0 - relaxation_modulus(nu, delta))
        expect = eps_t - val - edge
        assert got == pytest.approx(expect, abs=5e-6)


class TestRoundTrip:
    @pytest.mark.parametrize("nu", [0.0, 1.0])
    def test_step_recovery_and_convergence(self, nu):
        step = unit_step()
        errors = []
        for n_pts in (201, 401):
            grid = np.linspace(0.0, 2.0, n_pts)
            eps = strain_response(nu, step, grid)
            sig = stress_response(nu, LoadHistory(eps.times, eps.values), grid)
            window = grid >= 0.1
            errors.append(float(np.max(np.abs(sig.values[window] - 1.0))))
        assert errors[0] <= 0.02
        assert math.log2(errors[0] / errors[1]) >= 1.0


class TestEvaluationGrid:
    def test_eval_outside_history_rejected(self):
        with pytest.raises(ExtrapolationError):
            strain_response(0.0, unit_step(1.0), np.array([0.0, 1.2]))

    def test_eval_grid_need_not_hit_knots(self):
        h = LoadHistory(np.array([0.0, 0.3, 1.0]), np.array([0.0, 1.0, 1.0]))
        curve = strain_response(0.0, h, np.array([0.1, 0.45, 0.77]))
        assert curve.values.shape == (3,)
        assert np.all(np.isfinite(curve.values))
        assert curve.kind == "strain"
