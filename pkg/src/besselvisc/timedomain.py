"""Time-domain memory and material functions as truncated Dirichlet series.

The memory functions are infinite Prony series over squared Bessel zeros.
Truncation is adaptive: a geometric comparison against the (increasing)
gaps between consecutive decay rates certifies that the neglected tail
stays below the policy's tolerance, and the evaluator reports how many
zeros it would need whenever a table is too short.

The material functions carry an explicit tail correction built from the
exact inverse-square sum over the zeros, which pins their t = 0 values to
the unit normalization regardless of the truncation depth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BelowMinTimeError, InsufficientZerosError
from .specfun import order_value
from .zeros import ZeroTable, compute_zeros, mcmahon_zero

__all__ = [
    "SeriesPolicy",
    "MaterialCurve",
    "CURVE_KINDS",
    "psi",
    "phi",
    "creep_compliance",
    "relaxation_modulus",
    "sample_curve",
    "required_zero_count",
    "prony_modes",
    "PronyModes",
]

DEFAULT_ZERO_TOL = 1e-11

CURVE_KINDS = ("creep_rate", "relax_rate", "creep_compliance", "relax_modulus")

# Memory-function kinds differentiate the material functions; the zero
# order is nu+2 on the creep side and nu on the relaxation side.
_CREEP_KINDS = ("creep_rate", "creep_compliance")

PROVENANCES = ("series", "asymptotic_short", "asymptotic_long", "oracle")


@dataclass(frozen=True)
class SeriesPolicy:
    """Truncation policy for Dirichlet-series evaluation.

    ``tail_tol`` bounds the neglected tail absolutely; ``min_time`` is the
    time below which memory-function evaluation refuses the series and
    defers to the short-time asymptotic branch.
    """

    tail_tol: float = 1e-12
    max_terms: int = 10000
    min_time: float = 1e-6

    def __post_init__(self):
        if not (0.0 < self.tail_tol < 1.0):
            raise ValueError(f"tail_tol must lie in (0, 1), got {self.tail_tol}")
        if self.max_terms < 100:
            raise ValueError(f"max_terms must be >= 100, got {self.max_terms}")
        if self.min_time <= 0.0:
            raise ValueError(f"min_time must be positive, got {self.min_time}")


DEFAULT_POLICY = SeriesPolicy()


@dataclass(frozen=True)
class MaterialCurve:
    """Sampled curve with per-sample provenance."""

    nu: float
    kind: str
    times: np.ndarray
    values: np.ndarray
    provenance: tuple[str, ...]

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        v = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "provenance", tuple(self.provenance))
        if t.ndim != 1 or t.shape != v.shape or len(self.provenance) != t.size:
            raise ValueError("times, values and provenance must have equal length")
        if t.size == 0:
            raise ValueError("curve must hold at least one sample")
        if np.any(np.diff(t) <= 0.0):
            raise ValueError("times must be strictly increasing")

    def validate_shape(self, tol: float = 1e-9) -> None:
        """Check the monotonicity expected of the canonical curve kinds."""
        scale = max(float(np.max(np.abs(self.values))), 1.0)
        d = np.diff(self.values)
        if self.kind == "creep_compliance":
            bad = d < -tol * scale
        elif self.kind in ("relax_modulus", "creep_rate", "relax_rate"):
            bad = d > tol * scale
        else:
            return
        if np.any(bad):
            raise ValueError(f"{self.kind} curve violates monotonicity")


# --- mode bookkeeping --------------------------------------------------------


@dataclass(frozen=True)
class PronyModes:
    """Exponential-mode decomposition of a memory function.

    ``rates``/``amps`` are the tabulated modes; ``constant`` is the
    Newtonian (zero-rate) contribution of the creep kernel.  The tail of
    the infinite spectrum is lumped into one surrogate mode whose
    integrated weight matches the exact inverse-square remainder, so step
    responses built from these modes agree with the tail-corrected
    material functions identically.
    """

    nu: float
    constant: float
    amps: np.ndarray
    rates: np.ndarray
    tail_weight: float  # integrated weight of the surrogate tail mode
    tail_rate: float

    @property
    def tail_amp(self) -> float:
        return self.tail_weight * self.tail_rate


def _rayleigh_remainder(zeros_order: float, table: ZeroTable) -> float:
    """Exact remainder of sum(1/j^2) beyond the table: 1/(4(o+1)) - partial."""
    return 0.25 / (zeros_order + 1.0) - float(np.sum(1.0 / table.rates))


def prony_modes(order, kind: str, table: ZeroTable) -> PronyModes:
    """Mode decomposition of the creep or relaxation rate function."""
    nu = order_value(order)
    if kind not in ("creep", "relax"):
        raise ValueError(f"kind must be 'creep' or 'relax', got {kind!r}")
    zeros_order = nu + 2.0 if kind == "creep" else nu
    if abs(table.nu - zeros_order) > 1e-12:
        raise ValueError(
            f"zero table is for order {table.nu}, expected {zeros_order}"
        )
    amp = 4.0 * (nu + 1.0)
    rates = table.rates
    remainder = _rayleigh_remainder(zeros_order, table)
    tail_rate = mcmahon_zero(zeros_order, len(table) + 1) ** 2
    constant = 4.0 * (nu + 1.0) * (nu + 2.0) if kind == "creep" else 0.0
    return PronyModes(
        nu=nu,
        constant=constant,
        amps=np.full(rates.shape, amp),
        rates=rates,
        tail_weight=amp * remainder,
        tail_rate=tail_rate,
    )


# --- adaptive truncation -----------------------------------------------------


def required_zero_count(zeros_order: float, t: float, tail_tol: float, amplitude: float) -> int:
    """Estimate of the table size needed to certify the tail at time t."""
    if t <= 0.0:
        raise ValueError(f"tail certification needs t > 0, got {t}")
    arg = max(amplitude / tail_tol, 10.0)
    j_req = math.sqrt(math.log(arg) / t)
    n = j_req / math.pi - 0.5 * zeros_order + 0.25
    return max(4, math.ceil(1.15 * n) + 6)


def _certified_terms(table: ZeroTable, t: float, tail_tol: float, amplitude: float,
                     max_terms: int) -> int:
    """Smallest m with amplitude * tail(m) <= tail_tol, or raise.

    The tail after m kept terms is bounded geometrically by the smallest
    gap between consecutive decay rates at or beyond the first neglected
    one.  Rate gaps grow like the zeros themselves at large index, but at
    large order they first shrink through the turning-point region, so
    the in-table suffix minimum is used and the table must end in the
    increasing-gap regime for the beyond-table portion to be covered.
    """
    rates = table.rates
    n = rates.size
    gaps = np.diff(rates)
    if n < 3 or gaps[-1] <= gaps[-2]:
        raise InsufficientZerosError(
            f"table of {n} zeros ends before its rate gaps start growing; "
            "extend it to certify tail bounds",
            required_count=max(2 * n, 16),
        )
    suffix_min = np.minimum.accumulate(gaps[::-1])[::-1]
    cap = min(n - 1, max_terms)
    for m in range(1, cap + 1):
        lam_next = rates[m]  # first neglected rate
        gap = float(suffix_min[m]) if m < gaps.size else float(gaps[-1])
        gt = gap * t
        denom = -math.expm1(-gt) if gt < 700.0 else 1.0
        lt = lam_next * t
        head = math.exp(-lt) if lt < 745.0 else 0.0
        if amplitude * head / denom <= tail_tol:
            return m
    required = required_zero_count(table.nu, t, tail_tol, amplitude)
    raise InsufficientZerosError(
        f"table of {n} zeros cannot certify tail <= {tail_tol} at t={t}; "
        f"approximately {required} zeros needed",
        required_count=max(required, n + 8),
    )


# --- evaluators --------------------------------------------------------------


def _auto_table(zeros_order: float, t: float, policy: SeriesPolicy, amplitude: float) -> ZeroTable:
    count = required_zero_count(zeros_order, t, policy.tail_tol, amplitude)
    count = min(count, policy.max_terms + 1)
    count = 64 * math.ceil(count / 64)  # round up for cache friendliness
    return compute_zeros(zeros_order, count, DEFAULT_ZERO_TOL)


def psi(order, t: float, policy: SeriesPolicy = DEFAULT_POLICY,
        zeros: ZeroTable | None = None) -> float:
    """Rate-of-creep memory function: constant + Dirichlet series.

    ``zeros`` must tabulate zeros of order nu+2; when omitted, a table
    sized for (t, tail_tol) is computed and memoized internally.
    """
    nu = order_value(order)
    if t < policy.min_time:
        raise BelowMinTimeError(
            f"t={t} is below min_time={policy.min_time}; "
            "use the short-time asymptotic branch"
        )
    amp = 4.0 * (nu + 1.0)
    if zeros is None:
        zeros = _auto_table(nu + 2.0, t, policy, amp)
    m = _certified_terms(zeros, t, policy.tail_tol, amp, policy.max_terms)
    decay = np.exp(-zeros.rates[:m] * t)
    return 4.0 * (nu + 1.0) * (nu + 2.0) + amp * float(np.sum(decay))


def phi(order, t: float, policy: SeriesPolicy = DEFAULT_POLICY,
        zeros: ZeroTable | None = None) -> float:
    """Rate-of-relaxation memory function: pure Dirichlet series.

    ``zeros`` must tabulate zeros of order nu.
    """
    nu = order_value(order)
    if t < policy.min_time:
        raise BelowMinTimeError(
            f"t={t} is below min_time={policy.min_time}; "
            "use the short-time asymptotic branch"
        )
    amp = 4.0 * (nu + 1.0)
    if zeros is None:
        zeros = _auto_table(nu, t, policy, amp)
    m = _certified_terms(zeros, t, policy.tail_tol, amp, policy.max_terms)
    decay = np.exp(-zeros.rates[:m] * t)
    return amp * float(np.sum(decay))


def creep_compliance(order, t: float, policy: SeriesPolicy = DEFAULT_POLICY,
                     zeros: ZeroTable | None = None,
                     return_tail_bound: bool = False):
    """Creep compliance, tail-corrected so that the t = 0 value is exactly 1.

    The integrated series converges for all t >= 0 thanks to the
    inverse-square damping; the neglected tail is replaced by the exact
    inverse-square remainder decaying at the first untabulated rate, which
    also bounds the residual error (reported when requested).
    """
    nu = order_value(order)
    if t < 0.0:
        raise ValueError(f"creep compliance requires t >= 0, got {t}")
    if zeros is None:
        zeros = _auto_table(nu + 2.0, max(t, policy.min_time), policy, 4.0 * (nu + 1.0))
    modes = prony_modes(nu, "creep", zeros)
    m = min(len(zeros), policy.max_terms)
    rates = modes.rates[:m]
    decay_sum = float(np.sum(np.exp(-rates * t) / rates))
    tail_term = (modes.tail_weight / (4.0 * (nu + 1.0))) * math.exp(
        -min(modes.tail_rate * t, 745.0)
    )
    value = (
        2.0 * (nu + 2.0) / (nu + 3.0)
        + 4.0 * (nu + 1.0) * (nu + 2.0) * t
        - 4.0 * (nu + 1.0) * (decay_sum + tail_term)
    )
    if return_tail_bound:
        return value, 4.0 * (nu + 1.0) * tail_term
    return value


def relaxation_modulus(order, t: float, policy: SeriesPolicy = DEFAULT_POLICY,
                       zeros: ZeroTable | None = None,
                       return_tail_bound: bool = False):
    """Relaxation modulus, tail-corrected so that the t = 0 value is exactly 1."""
    nu = order_value(order)
    if t < 0.0:
        raise ValueError(f"relaxation modulus requires t >= 0, got {t}")
    if zeros is None:
        zeros = _auto_table(nu, max(t, policy.min_time), policy, 4.0 * (nu + 1.0))
    modes = prony_modes(nu, "relax", zeros)
    m = min(len(zeros), policy.max_terms)
    rates = modes.rates[:m]
    decay_sum = float(np.sum(np.exp(-rates * t) / rates))
    tail_term = (modes.tail_weight / (4.0 * (nu + 1.0))) * math.exp(
        -min(modes.tail_rate * t, 745.0)
    )
    value = 4.0 * (nu + 1.0) * (decay_sum + tail_term)
    if return_tail_bound:
        return value, 4.0 * (nu + 1.0) * tail_term
    return value


def sample_curve(order, kind: str, t_grid, policy: SeriesPolicy = DEFAULT_POLICY) -> MaterialCurve:
    """Sample one of the four canonical curves over a strictly increasing grid.

    Memory-function samples below policy.min_time use the short-time
    asymptotic closed form and are flagged as such in the provenance.
    """
    from . import asymptotics  # deferred: asymptotics imports this module

    nu = order_value(order)
    if kind not in CURVE_KINDS:
        raise ValueError(f"kind must be one of {CURVE_KINDS}, got {kind!r}")
    grid = np.asarray(t_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0 or np.any(np.diff(grid) <= 0.0):
        raise ValueError("t_grid must be a non-empty strictly increasing 1-d grid")
    is_memory = kind in ("creep_rate", "relax_rate")
    if grid[0] <= 0.0 and is_memory:
        raise ValueError("memory functions require strictly positive times")
    if grid[0] < 0.0:
        raise ValueError("times must be non-negative")

    zeros_order = nu + 2.0 if kind in _CREEP_KINDS else nu
    amp = 4.0 * (nu + 1.0)
    series_times = grid[grid >= policy.min_time] if is_memory else grid
    t_min_series = float(series_times[0]) if series_times.size else None
    table = None
    if t_min_series is not None:
        count = required_zero_count(zeros_order, max(t_min_series, policy.min_time),
                                    policy.tail_tol, amp)
        count = min(count, policy.max_terms + 1)
        count = 64 * math.ceil(count / 64)
        table = compute_zeros(zeros_order, count, DEFAULT_ZERO_TOL)

    evaluator = {
        "creep_rate": psi,
        "relax_rate": phi,
        "creep_compliance": creep_compliance,
        "relax_modulus": relaxation_modulus,
    }[kind]
    short_form = {
        "creep_rate": asymptotics.psi_short_time,
        "relax_rate": asymptotics.phi_short_time,
    }.get(kind)

    values = np.empty(grid.shape)
    provenance = []
    for i, t in enumerate(grid):
        t = float(t)
        if is_memory and t < policy.min_time:
            values[i] = short_form(nu, t)
            provenance.append("asymptotic_short")
        else:
            values[i] = evaluator(nu, t, policy, table)
            provenance.append("series")
    return MaterialCurve(nu=nu, kind=kind, times=grid, values=values,
                         provenance=tuple(provenance))
