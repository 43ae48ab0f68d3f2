"""One-dimensional tachyon kinematics between the aether frame and the lab.

Units are natural throughout: ``c = 1`` and the detector half-separation
``d = 1``, so lengths are in units of ``d`` and times in units of ``d/c``.

The aether frame R' moves with signed speed ``beta`` along +x relative to
the lab frame R.  Tachyons propagate isotropically in R' with speed
``beta_t > 1``.  Lab coordinate speeds may come out negative: the sign
encodes the gradient of standard-synchronized clock readings along the
path, not the direction of propagation.
"""

from __future__ import annotations

import math

from .errors import DegenerateInputError, DomainError

#: Marker returned for the pole ``1 +/- beta*beta_t = 0``.  Any finite
#: distance divided by it gives a zero transit time, which is the correct
#: clock-reading difference at the pole.
INFINITE_SPEED = math.inf

POLE_EPS = 1e-12


def subluminal(beta: float) -> float:
    """Validate a frame speed, ``-1 < beta < 1``."""
    beta = float(beta)
    if not -1.0 < beta < 1.0:
        raise DomainError(f"frame speed must satisfy -1 < beta < 1, got {beta!r}")
    return beta


def tachyonic(beta_t: float) -> float:
    """Validate a tachyon speed in the aether frame, ``beta_t > 1``."""
    beta_t = float(beta_t)
    if not (beta_t > 1.0 and math.isfinite(beta_t)):
        raise DomainError(f"tachyon speed must satisfy beta_t > 1, got {beta_t!r}")
    return beta_t


def particle_speed(beta1: float) -> float:
    """Validate the entangled-particle speed, ``0 < beta1 <= 1``."""
    beta1 = float(beta1)
    if not 0.0 < beta1 <= 1.0:
        raise DomainError(f"particle speed must satisfy 0 < beta1 <= 1, got {beta1!r}")
    return beta1


def lorentz_gamma(beta: float) -> float:
    return 1.0 / math.sqrt(1.0 - beta * beta)


def is_infinite(speed: float) -> bool:
    return math.isinf(speed)


def compose_plus(beta_t: float, beta: float) -> float:
    """Lab coordinate speed of a tachyon sent toward +x.

    Returns :data:`INFINITE_SPEED` when ``|1 + beta*beta_t| < 1e-12``.

    >>> compose_plus(8.0, 0.0)
    8.0
    """
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    den = 1.0 + beta * beta_t
    if abs(den) < POLE_EPS:
        return INFINITE_SPEED
    return (beta_t + beta) / den


def compose_minus(beta_t: float, beta: float) -> float:
    """Lab coordinate speed of a tachyon sent toward -x (counted positive along -x)."""
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    den = 1.0 - beta * beta_t
    if abs(den) < POLE_EPS:
        return INFINITE_SPEED
    return (beta_t - beta) / den


def to_aether(t: float, x: float, beta: float) -> tuple[float, float]:
    """Boost a lab event ``(t, x)`` into the aether frame."""
    g = lorentz_gamma(beta)
    return g * (t - beta * x), g * (x - beta * t)


def to_lab(t_prime: float, x_prime: float, beta: float) -> tuple[float, float]:
    """Inverse of :func:`to_aether`."""
    g = lorentz_gamma(beta)
    return g * (t_prime + beta * x_prime), g * (x_prime + beta * t_prime)


def tachyon_arrival_time(depart_t: float, from_x: float, to_x: float,
                         beta_t: float, beta: float) -> float:
    """Clock reading at ``to_x`` when a tachyon sent from ``from_x`` arrives.

    Both points are at rest in the lab.  The transit is solved in the
    aether frame, where the tachyon moves at ``beta_t`` and the target
    point drifts at ``-beta``, and the arrival event is boosted back.
    Nothing is divided by the lab speed, so the pole needs no special case.
    The result can be earlier than ``depart_t``.
    """
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    if from_x == to_x:
        raise DegenerateInputError("tachyon source and target coincide")
    sign = 1.0 if to_x > from_x else -1.0
    # work with displacements from the departure event to avoid cancellation
    tau0, xi0 = to_aether(0.0, to_x - from_x, beta)
    # target drifts at -beta in R'; tachyon leaves the origin at sign*beta_t
    tp = (xi0 + beta * tau0) / (sign * beta_t + beta)
    dt, _ = to_lab(tp, sign * beta_t * tp, beta)
    return depart_t + dt


def arrival_time_via_speed(depart_t: float, from_x: float, to_x: float,
                           beta_t: float, beta: float) -> float:
    """Same as :func:`tachyon_arrival_time` but by dividing by the lab speed.

    Kept as a cross-check; loses precision next to the poles.
    """
    if from_x == to_x:
        raise DegenerateInputError("tachyon source and target coincide")
    if to_x > from_x:
        v = compose_plus(beta_t, beta)
    else:
        v = compose_minus(beta_t, beta)
    return depart_t + abs(to_x - from_x) / v


def transit_slope(beta_t: float, beta: float, toward_plus: bool = True) -> float:
    """Clock-reading change per unit distance, ``1/V``, without the pole.

    >>> transit_slope(8.0, 0.0)
    0.125
    """
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    if toward_plus:
        return (1.0 + beta * beta_t) / (beta_t + beta)
    return (1.0 - beta * beta_t) / (beta_t - beta)


def transport_sync_setting(t_bar: float, delta_tau: float, dist: float) -> float:
    """Clock setting for slow clock transport over ``dist`` taking proper time ``delta_tau``."""
    if not delta_tau > 0:
        raise DomainError(f"proper time must be positive, got {delta_tau!r}")
    if dist < 0:
        raise DomainError(f"distance must be non-negative, got {dist!r}")
    return t_bar + delta_tau * math.sqrt(1.0 + (dist / delta_tau) ** 2)
