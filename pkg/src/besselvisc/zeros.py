"""Positive real zeros of J_nu and the inverse-square sum over them.

The zero finder seeds each root with the McMahon expansion (or a coarse
scan where McMahon is unreliable), brackets it against its neighbours and
polishes with a safeguarded Newton iteration.  Tables are memoized, since
recomputation is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError
from .specfun import bessel_j, bessel_j_deriv, order_value

__all__ = ["ZeroTable", "compute_zeros", "rayleigh_sum", "mcmahon_zero", "RayleighResult"]


@dataclass(frozen=True)
class ZeroTable:
    """First ``count`` positive zeros of J_nu, strictly increasing."""

    nu: float
    zeros: np.ndarray
    abs_tol: float

    def __post_init__(self):
        z = np.asarray(self.zeros, dtype=float)
        object.__setattr__(self, "zeros", z)
        if z.ndim != 1 or z.size == 0:
            raise ValueError("zero table must hold at least one zero")
        if z[0] <= 0.0 or np.any(np.diff(z) <= 0.0):
            raise ValueError("zeros must be positive and strictly increasing")

    def __len__(self):
        return self.zeros.size

    @property
    def rates(self) -> np.ndarray:
        """Squared zeros: the decay rates of the associated Dirichlet series."""
        return self.zeros**2


def mcmahon_zero(nu: float, n: int) -> float:
    """McMahon expansion estimate of the n-th zero of J_nu (three terms)."""
    mu = 4.0 * nu * nu
    beta = (n + 0.5 * nu - 0.25) * math.pi
    b8 = 8.0 * beta
    return (
        beta
        - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8**3)
    )


def _newton_refine(nu: float, lo: float, hi: float, abs_tol: float) -> float:
    """Safeguarded Newton on J_nu within a sign-change bracket [lo, hi]."""
    f_lo = bessel_j(nu, lo)
    f_hi = bessel_j(nu, hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    sign_lo = math.copysign(1.0, f_lo)
    if sign_lo == math.copysign(1.0, f_hi):
        raise ConvergenceError(
            f"bracket [{lo}, {hi}] does not straddle a zero of J_{nu}"
        )
    x = 0.5 * (lo + hi)
    for _ in range(100):
        f = bessel_j(nu, x)
        if f == 0.0:
            return x
        if math.copysign(1.0, f) == sign_lo:
            lo = x
        else:
            hi = x
        df = bessel_j_deriv(nu, x)
        x_new = x - f / df if df != 0.0 else math.inf
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)  # Newton left the bracket; bisect
        step = abs(x_new - x)
        x = x_new
        if step <= 0.25 * abs_tol:
            return x
    raise ConvergenceError(
        f"Newton refinement for zero of J_{nu} near {x} did not reach {abs_tol}"
    )


def _scan_bracket(nu: float, start: float, step: float, limit: float) -> tuple[float, float]:
    """Bracket the first sign change of J_nu beyond ``start``."""
    x = start
    f_prev = bessel_j(nu, x)
    while x < limit:
        x_next = x + step
        f_next = bessel_j(nu, x_next)
        if f_prev == 0.0:
            return (x - 1e-12, x + 1e-12)
        if math.copysign(1.0, f_prev) != math.copysign(1.0, f_next):
            return (x, x_next)
        x, f_prev = x_next, f_next
    raise ConvergenceError(
        f"failed to bracket a zero of J_{nu} on ({start}, {limit})"
    )


@lru_cache(maxsize=256)
def _zero_tuple(nu_key: float, count: int, abs_tol: float) -> tuple[float, ...]:
    nu = nu_key
    zeros = []
    prev = 0.0
    for n in range(1, count + 1):
        if n == 1:
            # The Rayleigh sum forces j_{nu,1} > 2 sqrt(nu+1), which both
            # caps the scan resolution (the first zero collapses toward 0
            # as nu -> -1) and anchors the start.  McMahon is unreliable
            # here: it misplaces the first zero at small and at large nu.
            floor = 2.0 * math.sqrt(nu + 1.0)
            step = min(math.pi / 10.0, floor / 6.0)
            start = 0.5 * step
            limit = nu + 2.5 * (nu + 1.0) ** (1.0 / 3.0) + 8.0
        else:
            step = math.pi / 10.0
            start = prev + 0.05
            limit = prev + nu + 50.0
            guess = mcmahon_zero(nu, n)
            # Fast-forward only when the guess lands in the plausible
            # next-gap window; otherwise fall back to a sequential scan,
            # which cannot skip a zero.
            if 0.5 * math.pi < guess - prev < 1.6 * math.pi:
                start = max(start, guess - 0.45 * math.pi)
        lo, hi = _scan_bracket(nu, start, step, limit)
        z = _newton_refine(nu, lo, hi, abs_tol)
        if z <= prev:
            raise ConvergenceError(
                f"zero ordering violated for J_{nu} at n={n}: {z} <= {prev}"
            )
        zeros.append(z)
        prev = z
    return tuple(zeros)


def compute_zeros(order, count: int, abs_tol: float = 1e-11) -> ZeroTable:
    """First ``count`` positive zeros of J_nu for nu > -1.

    Each zero satisfies |J_nu(z)| <= abs_tol * |J'_nu(z)|.  Results are
    memoized on (nu, count, abs_tol); the computation is deterministic, so
    the cache is a pure memo and is safe under concurrent use.
    """
    nu = order_value(order)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if not (0.0 < abs_tol <= 1e-6):
        raise ValueError(f"abs_tol must lie in (0, 1e-6], got {abs_tol}")
    nu_key = round(nu / 1e-14) * 1e-14  # collapse representation noise
    zeros = _zero_tuple(nu_key, int(count), float(abs_tol))
    return ZeroTable(nu=nu, zeros=np.array(zeros), abs_tol=abs_tol)


# --- Rayleigh-type inverse-square sum ---------------------------------------


@dataclass(frozen=True)
class RayleighResult:
    """Partial sum of 1/j^2 over a zero table, with an asymptotic tail."""

    partial_sum: float
    tail_estimate: float

    @property
    def corrected(self) -> float:
        return self.partial_sum + self.tail_estimate


def _trigamma(y: float) -> float:
    """psi'(y) for y > 0 via upward recurrence and the asymptotic series."""
    acc = 0.0
    while y < 10.0:
        acc += 1.0 / (y * y)
        y += 1.0
    inv = 1.0 / y
    inv2 = inv * inv
    # 1/y + 1/(2y^2) + 1/(6y^3) - 1/(30y^5) + 1/(42y^7) - 1/(30y^9)
    series = inv * (
        1.0
        + inv * (0.5 + inv * (1.0 / 6.0 + inv2 * (-1.0 / 30.0 + inv2 * (1.0 / 42.0 - inv2 / 30.0))))
    )
    return acc + series


def rayleigh_sum(table: ZeroTable) -> RayleighResult:
    """Sum of 1/j_{nu,n}^2 over the table plus an analytic tail estimate.

    The tail models the remaining zeros by their leading McMahon location
    j_{nu,n} ~ (n + nu/2 - 1/4) pi, which reduces the remainder to a
    trigamma value.  Both the raw partial sum and the tail-corrected value
    are exposed (the corrected value converges to 1/(4(nu+1))).
    """
    partial = float(np.sum(1.0 / table.rates))
    n_terms = len(table)
    offset = 0.5 * table.nu - 0.25
    tail = _trigamma(n_terms + 1.0 + offset) / (math.pi * math.pi)
    return RayleighResult(partial_sum=partial, tail_estimate=tail)
