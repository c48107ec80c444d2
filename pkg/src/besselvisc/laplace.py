"""Laplace-domain memory functions and a fixed-contour inversion oracle.

The transformed rate-of-creep and rate-of-relaxation functions are ratios
of modified Bessel functions of contiguous order evaluated at sqrt(s).
Their poles all sit on the negative real s-axis (at minus squared Bessel
zeros), which is what makes the deformed-contour quadrature in
:func:`invert_numeric` legitimate: the contour wraps the negative axis and
every singularity stays inside it.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from .errors import PoleError
from .specfun import bessel_i_ratio, bessel_j, bessel_j_deriv, order_value

__all__ = [
    "TalbotConfig",
    "psi_tilde",
    "phi_tilde",
    "check_reciprocity",
    "invert_numeric",
]

_POLE_EXCLUSION = 1e-6  # radius in s around each pole where we refuse to evaluate


@dataclass(frozen=True)
class TalbotConfig:
    """Fixed-Talbot quadrature parameters.

    ``contour_scale`` is the base abscissa r of the contour; when None it
    defaults to the usual rule of thumb 2*node_count/(5*t) per evaluation
    time.  ``compare_half`` re-runs the sum with half the nodes and warns
    when the two estimates disagree beyond ``agree_tol`` relative.
    """

    node_count: int = 48
    contour_scale: float | None = None
    compare_half: bool = True
    agree_tol: float = 1e-6

    def __post_init__(self):
        if self.node_count < 16 or self.node_count % 2:
            raise ValueError(
                f"node_count must be even and >= 16, got {self.node_count}"
            )
        if self.contour_scale is not None and self.contour_scale <= 0.0:
            raise ValueError("contour_scale must be positive")


def _guard_pole(order_of_zeros: float, s) -> None:
    """Reject s within the exclusion radius of a pole -j_{order,n}^2.

    Proximity is measured without a zero table: x = sqrt(-Re s) sits near
    a zero j exactly when |J(x)/J'(x)| is small, and |s + j^2| ~ 2x|x - j|.
    """
    re = s.real if isinstance(s, complex) else float(s)
    im = s.imag if isinstance(s, complex) else 0.0
    if re >= 0.0 or abs(im) > _POLE_EXCLUSION:
        return
    x = math.sqrt(-re)
    if x < 1e-8:
        return
    j = bessel_j(order_of_zeros, x)
    dj = bessel_j_deriv(order_of_zeros, x)
    if dj == 0.0:
        return
    dist = abs(j / dj) * 2.0 * x
    if dist < _POLE_EXCLUSION:
        raise PoleError(
            f"s={s} lies within {_POLE_EXCLUSION} of a pole of the "
            f"order-{order_of_zeros} Bessel ratio"
        )


def _memory_transform(nu: float, s, denominator_order: float):
    """Common core: 2(nu+1)/sqrt(s) * I_{nu+1}(sqrt(s)) / I_den(sqrt(s))."""
    if isinstance(s, complex) and s.imag == 0.0:
        s = s.real
    if s == 0:
        raise PoleError("s = 0 is a pole of the transform")
    _guard_pole(denominator_order, s)
    if isinstance(s, complex):
        root = cmath.sqrt(s)
        ratio = bessel_i_ratio(nu + 1.0, denominator_order, root)
        return 2.0 * (nu + 1.0) / root * ratio
    s = float(s)
    if s > 0.0:
        root = math.sqrt(s)
        ratio = bessel_i_ratio(nu + 1.0, denominator_order, root)
        return 2.0 * (nu + 1.0) / root * ratio
    # Negative real axis, off the poles: sqrt(s) = i x and
    # I_mu(i x) = i^mu J_mu(x) reduce the transform to a real J ratio with
    # a sign fixed by i^(nu+1-den)/i = +1 (den = nu) or -1 (den = nu+2).
    x = math.sqrt(-s)
    ratio = bessel_j(nu + 1.0, x) / bessel_j(denominator_order, x)
    sign = 1.0 if denominator_order == nu else -1.0
    return sign * 2.0 * (nu + 1.0) / x * ratio


def psi_tilde(order, s):
    """Laplace transform of the rate-of-creep memory function.

    2(nu+1)/sqrt(s) * I_{nu+1}(sqrt(s))/I_{nu+2}(sqrt(s)); simple pole at
    s = 0 and at s = -j_{nu+2,n}^2.  Real positive s gives a real positive
    value; complex s uses the principal branch of sqrt.
    """
    nu = order_value(order)
    return _memory_transform(nu, s, nu + 2.0)


def phi_tilde(order, s):
    """Laplace transform of the rate-of-relaxation memory function.

    2(nu+1)/sqrt(s) * I_{nu+1}(sqrt(s))/I_nu(sqrt(s)); poles at
    s = -j_{nu,n}^2.  On the positive real axis the value lies in (0, 1).
    """
    nu = order_value(order)
    return _memory_transform(nu, s, nu)


def check_reciprocity(order, s: float) -> float:
    """Residual |(1 + psi_tilde)(1 - phi_tilde) - 1| at real s > 0."""
    if s <= 0.0:
        raise ValueError(f"reciprocity check requires real s > 0, got {s}")
    ps = psi_tilde(order, s)
    ph = phi_tilde(order, s)
    return abs((1.0 + ps) * (1.0 - ph) - 1.0)


def _talbot_sum(f, t: float, m: int, r: float) -> float:
    """Fixed-Talbot quadrature with m nodes and base abscissa r."""
    # theta = 0 node: s = r on the positive real axis.
    total = 0.5 * math.exp(r * t) * _as_complex(f(complex(r, 0.0))).real
    for k in range(1, m):
        theta = k * math.pi / m
        cot = 1.0 / math.tan(theta)
        s = r * theta * complex(cot, 1.0)
        sigma = complex(1.0, theta * (1.0 + cot * cot) - cot)
        # exp(s t) can underflow harmlessly for the extreme nodes.
        st = s * t
        if st.real < -745.0:
            continue
        total += (cmath.exp(st) * _as_complex(f(s)) * sigma).real
    return (r / m) * total


def _as_complex(v) -> complex:
    return v if isinstance(v, complex) else complex(v, 0.0)


def invert_numeric(f, t: float, cfg: TalbotConfig = TalbotConfig(),
                   shift: float = 0.0) -> float:
    """Numerically invert a Laplace transform at time t > 0.

    Deformed-contour (fixed Talbot) quadrature; valid when all
    singularities of f lie on the negative real axis, as they do for
    psi_tilde and phi_tilde.  With the default 48 nodes the accuracy for
    smooth targets is around 1e-8 relative; a half-resolution comparison
    emits a warning when the two estimates disagree beyond cfg.agree_tol.

    ``shift`` translates the transform before inversion and undoes the
    translation afterwards (f(t) = e^{-a t} L^{-1}[F(. - a)]).  The result
    is shift-invariant in exact arithmetic; a shift near the decay rate of
    an exponentially small target keeps the quadrature's rounding floor
    below the answer instead of above it.  It must not exceed the distance
    from the origin to the transform's rightmost singularity.
    """
    if t <= 0.0:
        raise ValueError(f"inversion time must be positive, got {t}")
    if shift != 0.0:
        g = lambda s: f(s - shift)  # noqa: E731
        damp = math.exp(-shift * t)
    else:
        g = f
        damp = 1.0
    m = cfg.node_count
    r = cfg.contour_scale if cfg.contour_scale is not None else 2.0 * m / (5.0 * t)
    value = _talbot_sum(g, t, m, r)
    if cfg.compare_half:
        half = _talbot_sum(g, t, m // 2, 2.0 * (m // 2) / (5.0 * t))
        denom = max(abs(value), 1e-300)
        if abs(value - half) / denom > cfg.agree_tol:
            warnings.warn(
                f"Talbot inversion at t={t}: full/half-resolution estimates "
                f"disagree by {abs(value - half) / denom:.3e} relative",
                stacklevel=2,
            )
    return damp * value
