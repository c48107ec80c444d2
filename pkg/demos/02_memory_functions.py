"""Creep-rate and relaxation-rate memory functions over time.

Both are completely monotone Dirichlet series over squared Bessel zeros.
The creep rate tends to the Newtonian plateau 4(nu+1)(nu+2); the
relaxation rate decays to zero like a single exponential.  Sampled on a
log grid, these are the data behind the usual log-log curve plots for
nu = -0.5, 0, 0.5, 1.
"""

import numpy as np

from besselvisc import sample_curve

orders = [-0.5, 0.0, 0.5, 1.0]
grid = np.logspace(-3, 1, 13)

for kind, label in (("creep_rate", "creep rate"), ("relax_rate", "relaxation rate")):
    print(f"=== {label} ===")
    header = "t".rjust(12) + "".join(f"nu={nu}".rjust(14) for nu in orders)
    print(header)
    curves = [sample_curve(nu, kind, grid) for nu in orders]
    for i, t in enumerate(grid):
        row = f"{t:>12.5f}" + "".join(f"{c.values[i]:>14.6e}" for c in curves)
        print(row)
    print()

print("Long-time plateaus of the creep rate, 4(nu+1)(nu+2):")
for nu in orders:
    print(f"  nu={nu:>4}: {4.0 * (nu + 1.0) * (nu + 2.0)}")
