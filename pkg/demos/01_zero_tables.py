"""Zero tables: the decay-rate spectrum of the model class.

Every member of the family is built on the positive zeros j_{nu,n} of a
Bessel function of the first kind: their squares are the decay rates of
the relaxation spectrum, and the inverse-square sum closes the material
functions at t = 0.
"""

import numpy as np

from besselvisc import compute_zeros, rayleigh_sum

orders = [-0.5, 0.0, 0.5, 1.0]

print("First zeros and squared first zeros (the slowest relaxation rate):")
print(f"{'nu':>6} {'j_1':>10} {'j_1^2':>10}")
for nu in orders:
    j1 = float(compute_zeros(nu, 1, 1e-12).zeros[0])
    print(f"{nu:>6} {j1:>10.4f} {j1 * j1:>10.4f}")

print()
print("A deeper table for nu = 0 (first 8 zeros):")
table = compute_zeros(0.0, 8, 1e-12)
for n, j in enumerate(table.zeros, start=1):
    print(f"  n={n}: j={j:.12f}  gap to previous ~ {j - table.zeros[n-2] if n > 1 else j:.6f}")
print("Gaps approach pi =", np.pi)

print()
print("Inverse-square sum over 100 zeros vs the closed form 1/(4(nu+1)):")
for nu in orders:
    rs = rayleigh_sum(compute_zeros(nu, 100, 1e-11))
    target = 0.25 / (nu + 1.0)
    print(
        f"  nu={nu:>4}: partial={rs.partial_sum:.10f}  "
        f"tail-corrected={rs.corrected:.12f}  target={target:.12f}  "
        f"error={abs(rs.corrected - target):.2e}"
    )
