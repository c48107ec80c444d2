"""Short- and long-time closed-form approximants and crossover diagnostics.

Short times follow the inverse-square-root law shared by the whole model
class; long times reduce to the Newtonian-plus-constant creep behaviour
and to single-exponential relaxation at the first squared zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import order_value
from .zeros import compute_zeros

__all__ = [
    "AsymptoticBranch",
    "psi_asymptotic",
    "phi_asymptotic",
    "creep_asymptotic",
    "modulus_asymptotic",
    "psi_short_time",
    "phi_short_time",
    "creep_short_time",
    "modulus_short_time",
    "crossover_report",
    "find_crossover_time",
]

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class AsymptoticBranch:
    """Selects the short_time or long_time approximant for one order."""

    kind: str
    nu: float

    def __post_init__(self):
        if self.kind not in ("short_time", "long_time"):
            raise ValueError(f"kind must be short_time or long_time, got {self.kind!r}")
        object.__setattr__(self, "nu", order_value(self.nu))


def _first_rate(nu: float) -> float:
    return float(compute_zeros(nu, 1, 1e-12).zeros[0]) ** 2


def psi_short_time(nu: float, t: float) -> float:
    return 2.0 * (nu + 1.0) / _SQRT_PI / math.sqrt(t)


def phi_short_time(nu: float, t: float) -> float:
    return psi_short_time(nu, t)


def creep_short_time(nu: float, t: float) -> float:
    return 1.0 + 4.0 * (nu + 1.0) / _SQRT_PI * math.sqrt(t)


def modulus_short_time(nu: float, t: float) -> float:
    # Goes negative past t ~ pi/(16 (nu+1)^2); returned unclamped, the
    # branch label tells consumers what they are looking at.
    return 1.0 - 4.0 * (nu + 1.0) / _SQRT_PI * math.sqrt(t)


def psi_asymptotic(branch: AsymptoticBranch, t: float) -> float:
    """Rate-of-creep approximant on the selected branch."""
    if t <= 0.0:
        raise ValueError(f"asymptotic forms require t > 0, got {t}")
    nu = branch.nu
    if branch.kind == "short_time":
        return psi_short_time(nu, t)
    return 4.0 * (nu + 1.0) * (nu + 2.0)


def phi_asymptotic(branch: AsymptoticBranch, t: float) -> float:
    """Rate-of-relaxation approximant on the selected branch."""
    if t <= 0.0:
        raise ValueError(f"asymptotic forms require t > 0, got {t}")
    nu = branch.nu
    if branch.kind == "short_time":
        return phi_short_time(nu, t)
    return 4.0 * (nu + 1.0) * math.exp(-_first_rate(nu) * t)


def creep_asymptotic(branch: AsymptoticBranch, t: float) -> float:
    """Creep-compliance approximant on the selected branch."""
    if t <= 0.0:
        raise ValueError(f"asymptotic forms require t > 0, got {t}")
    nu = branch.nu
    if branch.kind == "short_time":
        return creep_short_time(nu, t)
    return 2.0 * (nu + 2.0) / (nu + 3.0) + 4.0 * (nu + 1.0) * (nu + 2.0) * t


def modulus_asymptotic(branch: AsymptoticBranch, t: float) -> float:
    """Relaxation-modulus approximant on the selected branch."""
    if t <= 0.0:
        raise ValueError(f"asymptotic forms require t > 0, got {t}")
    nu = branch.nu
    if branch.kind == "short_time":
        return modulus_short_time(nu, t)
    rate = _first_rate(nu)
    return 4.0 * (nu + 1.0) / rate * math.exp(-rate * t)


_ASYMPTOTIC_BY_KIND = {
    "creep_rate": psi_asymptotic,
    "relax_rate": phi_asymptotic,
    "creep_compliance": creep_asymptotic,
    "relax_modulus": modulus_asymptotic,
}


def _branch_values(nu: float, kind: str, t: float) -> tuple[float, float]:
    f = _ASYMPTOTIC_BY_KIND[kind]
    short = f(AsymptoticBranch("short_time", nu), t)
    long_ = f(AsymptoticBranch("long_time", nu), t)
    return short, long_


def crossover_report(order, kind: str, t_grid, policy=None):
    """Per-point comparison of the series value against both approximants.

    Returns a list of (t, series, short, long, best_branch) rows, where
    best_branch is whichever approximant has the smaller relative error.
    """
    from . import timedomain  # deferred: timedomain imports this module

    nu = order_value(order)
    if kind not in _ASYMPTOTIC_BY_KIND:
        raise ValueError(f"unknown curve kind {kind!r}")
    policy = policy if policy is not None else timedomain.DEFAULT_POLICY
    curve = timedomain.sample_curve(nu, kind, np.asarray(t_grid, dtype=float), policy)
    rows = []
    for t, series in zip(curve.times, curve.values):
        short, long_ = _branch_values(nu, kind, float(t))
        err_s = abs(short - series) / max(abs(series), 1e-300)
        err_l = abs(long_ - series) / max(abs(series), 1e-300)
        best = "short_time" if err_s <= err_l else "long_time"
        rows.append((float(t), float(series), short, long_, best))
    return rows


def find_crossover_time(order, kind: str, t_lo: float = 1e-4, t_hi: float = 5.0,
                        policy=None, iterations: int = 60) -> float:
    """Time where the short- and long-branch errors coincide (bisection).

    Assumes the short branch wins at t_lo and the long branch at t_hi;
    raises ValueError when the bracket does not exhibit that exchange.
    """
    from . import timedomain

    nu = order_value(order)
    policy = policy if policy is not None else timedomain.DEFAULT_POLICY

    def gap(t: float) -> float:
        (_, series, short, long_, _), = crossover_report(nu, kind, [t], policy)
        scale = max(abs(series), 1e-300)
        return abs(short - series) / scale - abs(long_ - series) / scale

    g_lo, g_hi = gap(t_lo), gap(t_hi)
    if g_lo >= 0.0 or g_hi <= 0.0:
        raise ValueError(
            f"no short/long error exchange on [{t_lo}, {t_hi}] "
            f"(gap endpoints {g_lo:.3g}, {g_hi:.3g})"
        )
    lo, hi = t_lo, t_hi
    for _ in range(iterations):
        mid = math.sqrt(lo * hi)  # bisect in log time
        if gap(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi / lo < 1.0 + 1e-12:
            break
    return math.sqrt(lo * hi)
