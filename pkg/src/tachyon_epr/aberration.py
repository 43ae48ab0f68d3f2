"""Oblique flight axes: aberration of the tachyon direction and effective 1D parameters.

The particle flight axis makes the lab angle ``theta`` with the aether
velocity.  For large ``beta_t`` the oblique problem collapses onto the 1D
formulas with the effective parameters ``(beta_star, gamma_star,
beta_t_star)``.  The exact angle inversion and the aether-frame transit
solver are kept alongside the closed forms so the approximations can be
checked against them.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, InversionError, RegimeWarning, ValidityDomainError
from .kinematics import INFINITE_SPEED, POLE_EPS, lorentz_gamma, subluminal, tachyonic
from .window import WindowSummary

LARGE_BETA_T = 10.0
LARGE_GAMMA = 5.0


@dataclass(frozen=True)
class Orientation:
    """Flight axis direction in the lab; ``phi`` is carried but never enters a formula."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta < 0.5 * math.pi:
            raise DomainError(f"theta must lie in [0, pi/2), got {self.theta!r}")
        if not 0.0 <= self.phi < 2.0 * math.pi:
            raise DomainError(f"phi must lie in [0, 2*pi), got {self.phi!r}")

    @property
    def reversed(self) -> tuple[float, float]:
        """Angles of the opposite direction, ``(pi - theta, phi + pi)``."""
        return math.pi - self.theta, (self.phi + math.pi) % (2.0 * math.pi)


@dataclass(frozen=True)
class EffectiveParams:
    beta_star: float
    gamma_star: float
    beta_t_star: float


def lab_angle(theta_prime: float, beta_t: float, beta: float) -> float:
    """Lab angle of a tachyon emitted at ``theta_prime`` in the aether frame."""
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    if not 0.0 <= theta_prime <= math.pi:
        raise DomainError(f"theta_prime must lie in [0, pi], got {theta_prime!r}")
    g = lorentz_gamma(beta)
    return math.atan2(beta_t * math.sin(theta_prime),
                      g * (beta_t * math.cos(theta_prime) + beta))


def _speed_parts(theta_prime, beta_t, beta):
    c = math.cos(theta_prime)
    num = math.sqrt(beta_t ** 2 + beta ** 2 + 2.0 * beta_t * beta * c
                    - (beta_t * beta) ** 2 * (1.0 - c * c))
    return num, 1.0 + beta_t * beta * c


def tachyon_speed_3d(theta_prime: float, beta_t: float, beta: float) -> float:
    """Signed lab speed of a tachyon emitted at ``theta_prime`` in the aether frame.

    The sign is that of ``1 + beta_t*beta*cos(theta_prime)``, matching the
    1D composition at ``theta_prime`` in {0, pi}.
    """
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    if not 0.0 <= theta_prime <= math.pi:
        raise DomainError(f"theta_prime must lie in [0, pi], got {theta_prime!r}")
    num, den = _speed_parts(theta_prime, beta_t, beta)
    if abs(den) < POLE_EPS:
        return INFINITE_SPEED
    return num / den


def tachyon_slope_3d(theta_prime: float, beta_t: float, beta: float) -> float:
    """Reciprocal of :func:`tachyon_speed_3d`; finite at the pole."""
    num, den = _speed_parts(theta_prime, tachyonic(beta_t), subluminal(beta))
    return den / num


def invert_angle_exact(theta: float, beta_t: float, beta: float, *, xtol: float = 1e-15) -> float:
    """Aether-frame emission angle whose lab angle is ``theta``."""
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"theta must lie in [0, pi], got {theta!r}")
    if theta == 0.0 or theta == math.pi:
        return theta

    def f(tp):
        return lab_angle(tp, beta_t, beta) - theta

    lo, hi = f(0.0), f(math.pi)
    if not (lo <= 0.0 <= hi):
        raise InversionError(f"lab angle not bracketed on [0, pi]: f(0)={lo!r}, f(pi)={hi!r}")
    return brentq(f, 0.0, math.pi, xtol=xtol, rtol=4 * np.finfo(float).eps)


def approx_inverse_cos(theta: float, gamma: float, positive_branch: bool = True) -> float:
    """Large-``beta_t`` estimate of ``cos(theta_prime)``: ``+-1/sqrt(1 + gamma**2 tan**2 theta)``.

    Breaks down near ``theta = pi/2``, where it raises.
    """
    if abs(math.cos(theta)) < 1e-12:
        raise ValidityDomainError("approximate inversion is undefined at theta = pi/2")
    value = 1.0 / math.sqrt(1.0 + (gamma * math.tan(theta)) ** 2)
    return value if positive_branch else -value


def _warn_regime(beta_t, gamma):
    if beta_t < LARGE_BETA_T:
        warnings.warn(f"beta_t={beta_t:g} is not >> 1; effective-parameter "
                      "reduction is inaccurate", RegimeWarning, stacklevel=3)
    if gamma > LARGE_GAMMA:
        warnings.warn(f"gamma={gamma:g} is large; the reduction degrades near "
                      "theta_prime = pi/2", RegimeWarning, stacklevel=3)


def effective_params(theta: float, beta: float, beta_t: float) -> EffectiveParams:
    """Effective 1D parameters for a flight axis at lab angle ``theta``.

    >>> p = effective_params(0.0, 0.5, 100.0)
    >>> p.beta_star, p.beta_t_star
    (0.5, 100.0)
    """
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    if not 0.0 <= theta < 0.5 * math.pi:
        raise DomainError(f"theta must lie in [0, pi/2), got {theta!r}")
    g = lorentz_gamma(beta)
    _warn_regime(beta_t, g)
    beta_star = beta * math.cos(theta)
    gamma_star = lorentz_gamma(beta_star)
    beta_t_star = beta_t * gamma_star / g
    direct = beta_t / (math.cos(theta) * math.sqrt(1.0 + (g * math.tan(theta)) ** 2))
    assert math.isclose(direct, beta_t_star, rel_tol=1e-12), (direct, beta_t_star)
    return EffectiveParams(beta_star, gamma_star, beta_t_star)


def window_3d(theta: float, beta: float, beta_t: float) -> WindowSummary:
    """Approximate window center and width for photons along an oblique axis."""
    p = effective_params(theta, beta, beta_t)
    return WindowSummary(-p.beta_star, 2.0 / (p.beta_t_star * p.gamma_star ** 2))


def axis_slopes(theta: float, beta_t: float, beta: float) -> tuple[float, float]:
    """Clock-reading change per unit length for tachyons along the axis, +dir then -dir.

    Goes through the exact angle inversion and the oblique speed formula.
    """
    tp_plus = invert_angle_exact(theta, beta_t, beta)
    tp_minus = invert_angle_exact(math.pi - theta, beta_t, beta)
    return tachyon_slope_3d(tp_plus, beta_t, beta), tachyon_slope_3d(tp_minus, beta_t, beta)


def aether_transit_slope(theta: float, beta_t: float, beta: float, toward_plus: bool = True) -> float:
    """Clock-reading change per unit length along the axis, solved in the aether frame.

    Independent of :func:`axis_slopes`: the target point drifts at ``-beta``
    along x in R' and the tachyon sphere grows at ``beta_t``; the single
    root with positive aether time is boosted back to the lab.
    """
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    sign = 1.0 if toward_plus else -1.0
    cx, cy = sign * math.cos(theta), sign * math.sin(theta)
    g = lorentz_gamma(beta)
    # gamma*(T - beta*cx) = aether time per unit length, u below
    a = g * g * (beta_t * beta_t - beta * beta)
    b = cx * beta
    q = cx * cx / (g * g) + cy * cy
    disc = math.sqrt(b * b + a * q)
    u = (disc - b) / a if b <= 0.0 else q / (b + disc)
    return u + beta * cx


def window_3d_arrays(theta, beta: float, beta_t: float):
    """Vectorized :func:`window_3d` returning ``(center, width)`` arrays.

    ``theta`` may run past pi/2 (the axis then points against the aether
    velocity); the center changes sign and the width is unchanged.
    """
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    theta = np.asarray(theta, dtype=float)
    g = lorentz_gamma(beta)
    beta_star = beta * np.cos(theta)
    gamma_star = 1.0 / np.sqrt(1.0 - beta_star ** 2)
    width = 2.0 * g / (beta_t * gamma_star ** 3)
    return -beta_star, width
