"""Where the short- and long-time approximants take over from the series.

Short times follow the inverse-square-root law of a half-order fractional
element; long times behave like a single-mode classical element.  The
crossover report shows which branch is closer at each time, and the
bisection locates the exchange point.
"""

import numpy as np

from besselvisc import crossover_report, find_crossover_time

nu = 1.0
grid = np.logspace(-4, 1, 11)

for kind in ("creep_rate", "relax_rate", "creep_compliance", "relax_modulus"):
    print(f"=== {kind}, nu = {nu} ===")
    print(f"{'t':>12} {'series':>14} {'short':>14} {'long':>14}  best")
    for t, series, short, long_, best in crossover_report(nu, kind, grid):
        print(f"{t:>12.5f} {series:>14.6e} {short:>14.6e} {long_:>14.6e}  {best}")
    print()

print("Error-exchange times (short and long branches equally wrong):")
for kind in ("relax_rate", "relax_modulus"):
    t_star = find_crossover_time(nu, kind, 1e-4, 5.0)
    print(f"  {kind}: t* = {t_star:.6f}")

print()
print("Short-time law check: the series times sqrt(t) approaches "
      "2(nu+1)/sqrt(pi) from above;")
print("the residual gap at time t is the next-order constant times sqrt(t), "
      "about 4.3% for the")
print("creep rate and 2.7% for the relaxation rate at t = 1e-4 (nu = 1).")
