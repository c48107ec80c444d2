"""Gamma and Bessel-function evaluation for real order nu > -1.

All evaluators here are pure functions of their arguments and are written
for scalar inputs.  The ratio evaluator is overflow-safe: it never forms
an unscaled I_nu(z), so it stays finite for arguments far beyond the range
where I_nu itself is representable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, PoleError

__all__ = [
    "Order",
    "EvalAccuracy",
    "DEFAULT_ACCURACY",
    "gamma",
    "bessel_i",
    "bessel_i_ratio",
    "bessel_j",
    "bessel_j_deriv",
]


@dataclass(frozen=True)
class Order:
    """Model-class parameter nu, restricted to nu > -1."""

    nu: float

    def __post_init__(self):
        nu = float(self.nu)
        if not math.isfinite(nu) or nu <= -1.0:
            raise ValueError(f"order must be a finite real > -1, got {self.nu!r}")
        object.__setattr__(self, "nu", nu)


def order_value(order) -> float:
    """Accept an Order or a bare real and return the validated float."""
    if isinstance(order, Order):
        return order.nu
    return Order(float(order)).nu


@dataclass(frozen=True)
class EvalAccuracy:
    """Truncation policy for the power-series evaluators."""

    rel_tol: float = 1e-12
    max_terms: int = 200

    def __post_init__(self):
        if not (0.0 < self.rel_tol < 1.0):
            raise ValueError(f"rel_tol must lie in (0, 1), got {self.rel_tol!r}")
        if self.max_terms < 10:
            raise ValueError(f"max_terms must be >= 10, got {self.max_terms!r}")


DEFAULT_ACCURACY = EvalAccuracy()

# Lanczos approximation, g = 607/128 with 15 coefficients (Godfrey's set).
# Accurate to ~1e-15 relative on the positive real axis.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def gamma(x: float) -> float:
    """Gamma function on the real line (poles at non-positive integers)."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"gamma requires a finite argument, got {x!r}")
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"gamma has a pole at {x}")
    if x < 0.5:
        # Reflection keeps the Lanczos sum on its well-conditioned range.
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    z = x - 1.0
    acc = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        acc += _LANCZOS_C[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    value = math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc
    if not math.isfinite(value):
        raise OverflowError(f"gamma({x}) exceeds the representable range")
    return value


def _iv_series(order: float, z, rel_tol: float, max_terms: int):
    """Ascending series for I_order(z); works for real or complex z."""
    q = 0.25 * z * z
    term = (0.5 * z) ** order / gamma(order + 1.0)
    total = term
    for k in range(1, max_terms + 1):
        term = term * q / (k * (order + k))
        total += term
        if abs(term) <= rel_tol * abs(total) and k * (order + k) > abs(q):
            return total
    raise ConvergenceError(
        f"I_{order}({z}): series did not converge within {max_terms} terms"
    )


def _asymptotic_tail_sum(order: float, z):
    """Large-argument series sum_k (-1)^k a_k(order)/z^k.

    Truncated at the smallest term (the series is asymptotic); for the
    orders and arguments this library uses, the smallest term is far below
    double-precision resolution.
    """
    mu = 4.0 * order * order
    term = 1.0 + 0.0 * z  # promotes to complex when z is complex
    total = term
    prev_mag = abs(term)
    for k in range(1, 60):
        term = -term * (mu - (2 * k - 1) ** 2) / (8.0 * k * z)
        mag = abs(term)
        if mag >= prev_mag:
            break
        total += term
        if mag < 1e-17 * abs(total):
            break
        prev_mag = mag
    return total


def _iv_asymptotic_ok(order: float, zmag: float) -> bool:
    return zmag >= 30.0 and 4.0 * order * order + 10.0 <= zmag


def bessel_i(order: float, z: float, acc: EvalAccuracy = DEFAULT_ACCURACY) -> float:
    """Modified Bessel function I_order(z) for real order >= -1, z > 0.

    Raises OverflowError when the unscaled value is not representable;
    callers needing large arguments should use :func:`bessel_i_ratio`.
    """
    order = float(order)
    z = float(z)
    if order < -1.0:
        raise ValueError(f"bessel_i requires order >= -1, got {order}")
    if z <= 0.0:
        raise ValueError(f"bessel_i requires z > 0, got {z}")
    if order == -1.0:
        order = 1.0  # I_{-1} = I_1
    if z > 30.0:
        if _iv_asymptotic_ok(order, z):
            log_lead = z - 0.5 * math.log(2.0 * math.pi * z)
            if log_lead > 709.0:
                raise OverflowError(
                    f"I_{order}({z}) overflows; use bessel_i_ratio for large z"
                )
            return math.exp(log_lead) * _asymptotic_tail_sum(order, z)
        # Large order relative to z: the series still converges, it just
        # needs more terms than the default budget.
        value = _iv_series(order, z, acc.rel_tol, max(acc.max_terms, int(3 * z) + 80))
        if not math.isfinite(value):
            raise OverflowError(f"I_{order}({z}) overflows")
        return value
    return _iv_series(order, z, acc.rel_tol, acc.max_terms)


def _iv_ratio_cf(lo: float, z: float) -> float:
    """I_{lo+1}(z)/I_{lo}(z) by modified Lentz on the recurrence fraction."""
    tiny = 1e-290
    f = tiny
    c = tiny
    d = 0.0
    for k in range(1, 20001):
        b = 2.0 * (lo + k) / z
        d = b + d
        if d == 0.0:
            d = tiny
        c = b + 1.0 / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            return f
    raise ConvergenceError(f"I-ratio continued fraction stalled at z={z}")


def _iv_ratio_up(lo: float, z) -> "float | complex":
    """I_{lo+1}(z)/I_{lo}(z) for real z > 0 or complex z off the negative axis."""
    zmag = abs(z)
    hi = lo + 1.0
    if zmag >= 35.0 and 4.0 * hi * hi + 10.0 <= zmag and (
        not isinstance(z, complex) or z.real > 0.0
    ):
        # Quotient of the large-argument expansions; the common factor
        # e^z / sqrt(2 pi z) cancels exactly, so nothing can overflow.
        return _asymptotic_tail_sum(hi, z) / _asymptotic_tail_sum(lo, z)
    if isinstance(z, complex):
        if zmag <= 120.0:
            # Series quotient: stays well-behaved arbitrarily close to the
            # ratio's poles on the imaginary axis, which the continued
            # fraction does not.
            num = _iv_series(hi, z, 1e-15, 1200)
            den = _iv_series(lo, z, 1e-15, 1200)
            if den == 0:
                raise PoleError(f"I_{lo}({z}) vanishes; ratio has a pole here")
            return num / den
        if z.real <= 0.0:
            raise ConvergenceError(
                f"complex I-ratio needs Re z > 0 at |z|={zmag:.3g}"
            )
    return _iv_ratio_cf(lo, z)


def bessel_i_ratio(order_num: float, order_den: float, z) -> "float | complex":
    """Ratio I_{order_num}(z)/I_{order_den}(z) for contiguous orders.

    Evaluated without forming either function, so the result stays finite
    for z up to at least 1e6.  Real z must be positive; complex z (used by
    the Laplace-domain module) must lie off the negative real axis.
    """
    a = float(order_num)
    b = float(order_den)
    if abs(abs(a - b) - 1.0) > 1e-12:
        raise ValueError(f"orders must be contiguous (|diff| = 1), got {a}, {b}")
    if min(a, b) < -1.0 + 1e-15:
        raise ValueError(f"orders must exceed -1, got {a}, {b}")
    if isinstance(z, complex) and z.imag == 0.0:
        z = z.real
    if not isinstance(z, complex):
        z = float(z)
        if z <= 0.0:
            raise ValueError(f"real z must be positive, got {z}")
    if a > b:
        return _iv_ratio_up(b, z)
    ratio = _iv_ratio_up(a, z)
    # I_{b-1}/I_b is the reciprocal of the ascending ratio from b-1.
    return 1.0 / ratio


# --- Bessel functions of the first kind ------------------------------------


def _jv_series(order: float, x: float, rel_tol: float, max_terms: int) -> float:
    q = 0.25 * x * x
    term = (0.5 * x) ** order / gamma(order + 1.0)
    total = term
    for k in range(1, max_terms + 1):
        term = -term * q / (k * (order + k))
        total += term
        if abs(term) <= rel_tol * (abs(total) + 1e-300) and k * (order + k) > q:
            return total
    raise ConvergenceError(
        f"J_{order}({x}): series did not converge within {max_terms} terms"
    )


def _jv_hankel(order: float, x: float) -> float:
    """Phase-amplitude asymptotic form, valid for x >> order^2."""
    mu = 4.0 * order * order
    p = 1.0
    q = 0.0
    c = 1.0
    prev = math.inf
    sign = (1.0, 1.0, -1.0, -1.0)  # sign pattern of (-1)^floor(k/2)
    for k in range(1, 40):
        c *= (mu - (2 * k - 1) ** 2) / (8.0 * k * x)
        mag = abs(c)
        if mag >= prev:
            break
        s = sign[k % 4]
        if k % 2:
            q += s * c
        else:
            p += s * c
        if mag < 1e-17:
            break
        prev = mag
    omega = x - (0.5 * order + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (
        math.cos(omega) * p - math.sin(omega) * q
    )


def _jv_miller(order: float, x: float) -> float:
    """Backward recurrence normalized by the Neumann-series identity

        sum_k (order + 2k) Gamma(order + k) / k! * J_{order+2k}(x) = (x/2)^order,

    which is free of the cancellation that limits the ascending series at
    intermediate arguments.
    """
    m = int(x + 14.0 * x ** (1.0 / 3.0) + 22.0)
    if m % 2:
        m += 1
    trial_hi = 0.0
    trial = 1e-155
    values = [0.0] * (m + 1)  # values[i] ~ J_{order+i}(x), unnormalized
    values[m] = trial
    for i in range(m, 0, -1):
        mu_i = order + i
        trial_lo = (2.0 * mu_i / x) * trial - trial_hi
        trial_hi = trial
        trial = trial_lo
        values[i - 1] = trial
        if abs(trial) > 1e250:
            scale = 1e-250
            trial *= scale
            trial_hi *= scale
            for j in range(i - 1, m + 1):
                values[j] *= scale
    # Neumann normalization over even offsets.
    d = gamma(order + 1.0)
    norm = d * values[0]
    for k in range(1, m // 2 + 1):
        if k == 1:
            d *= order + 2.0
        else:
            d *= (order + 2.0 * k) * (order + k - 1.0) / (k * (order + 2.0 * k - 2.0))
        norm += d * values[2 * k]
    return values[0] * (0.5 * x) ** order / norm


def bessel_j(order: float, x: float, acc: EvalAccuracy = DEFAULT_ACCURACY) -> float:
    """Bessel function of the first kind J_order(x) for order > -1, x > 0."""
    order = float(order)
    x = float(x)
    if order <= -1.0:
        raise ValueError(f"bessel_j requires order > -1, got {order}")
    if x <= 0.0:
        raise ValueError(f"bessel_j requires x > 0, got {x}")
    if x <= 9.0:
        return _jv_series(order, x, acc.rel_tol, acc.max_terms)
    if x >= max(16.0, 4.0 * order * order + 10.0):
        return _jv_hankel(order, x)
    return _jv_miller(order, x)


def bessel_j_deriv(order: float, x: float) -> float:
    """Derivative J'_order(x) via the recurrence J' = (order/x) J - J_{order+1}."""
    order = float(order)
    x = float(x)
    if order <= -1.0:
        raise ValueError(f"bessel_j_deriv requires order > -1, got {order}")
    if x <= 0.0:
        raise ValueError(f"bessel_j_deriv requires x > 0, got {x}")
    return (order / x) * bessel_j(order, x) - bessel_j(order + 1.0, x)
