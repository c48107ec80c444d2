"""Responses to arbitrary causal load histories.

The constitutive law is a convolution against the model's rate kernels.
The engine carries one internal state per exponential mode with exact
per-step updates, so a unit step reproduces the material functions to
machine precision, and general histories cost O(samples x modes).
"""

import numpy as np

from besselvisc import (
    LoadHistory,
    creep_compliance,
    relaxation_modulus,
    strain_response,
    stress_response,
)

nu = 0.5

print("Unit step of stress: the strain response IS the creep compliance.")
step = LoadHistory(np.array([0.0, 2.0]), np.array([1.0, 1.0]))
t_eval = np.array([0.0, 0.1, 0.5, 1.0, 2.0])
eps = strain_response(nu, step, t_eval)
print(f"{'t':>6} {'strain':>18} {'compliance':>18}")
for t, v in zip(eps.times, eps.values):
    print(f"{t:>6.2f} {v:>18.12f} {creep_compliance(nu, float(t)):>18.12f}")
print()

print("Unit step of strain: the stress response IS the relaxation modulus.")
sig = stress_response(nu, step, t_eval)
print(f"{'t':>6} {'stress':>18} {'modulus':>18}")
for t, v in zip(sig.times, sig.values):
    print(f"{t:>6.2f} {v:>18.12f} {relaxation_modulus(nu, float(t)):>18.12f}")
print()

print("Ramp stress sigma(t) = t: strain runs ahead of the elastic response.")
ramp = LoadHistory(np.array([0.0, 1.0]), np.array([0.0, 1.0]))
for t, v in zip(*[strain_response(nu, ramp, np.linspace(0.0, 1.0, 6)).times,
                  strain_response(nu, ramp, np.linspace(0.0, 1.0, 6)).values]):
    print(f"  t={t:.2f}: sigma={t:.2f}  eps={v:.6f}")
print()

print("One period of sinusoidal strain: stress leads, with viscous loss.")
times = np.linspace(0.0, 1.0, 401)
hist = LoadHistory(times, np.sin(2.0 * np.pi * times))
out = stress_response(nu, hist, np.linspace(0.0, 1.0, 9))
for t, v in zip(out.times, out.values):
    print(f"  t={t:.3f}: eps={np.sin(2*np.pi*t):+.4f}  sigma={v:+.6f}")
print()

print("Round trip: feed the step's strain back through the stress law.")
grid = np.linspace(0.0, 2.0, 201)
eps = strain_response(nu, step, grid)
sig = stress_response(nu, LoadHistory(eps.times, eps.values), grid)
window = grid >= 0.1
print(f"  max |sigma - 1| on [0.1, 2] at 201 points: "
      f"{np.max(np.abs(sig.values[window] - 1.0)):.5f} (discretization-limited)")
