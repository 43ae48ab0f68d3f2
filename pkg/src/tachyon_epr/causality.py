"""Round-trip signalling times on a single clock.

Two constructions over a segment of length ``d = 1``:

* relativity-principle model: the outbound signal moves at ``beta_g`` in
  R1; the return signal moves at ``beta_g`` toward -x in a frame R2 that
  moves at ``beta`` relative to R1.
* aether model: both legs follow the composition law from one preferred
  frame.

The elapsed time is the reading of the origin clock at the return minus
the reading at departure, in units of ``d/c``.

Summing the two legs gives the numerator ``2*beta_g - beta*(1 + beta_g**2)``;
this is what reproduces the sign threshold ``2*beta_g/(1 + beta_g**2)``.
The often-quoted form ``2*beta_g - beta*(1 + beta_g)`` does not.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .errors import DomainError
from .kinematics import subluminal, tachyon_arrival_time, tachyonic


@dataclass(frozen=True)
class RoundTripResult:
    elapsed: float
    paradoxical: bool
    threshold_beta: float
    # False when the return leg moves away from the origin in R1
    return_reaches_origin: bool = True

    def __post_init__(self):
        assert self.paradoxical == (self.elapsed < 0)


def _threshold(beta_g):
    return 2.0 * beta_g / (1.0 + beta_g * beta_g)


def _two_leg_elapsed(beta_g, beta):
    return (2.0 * beta_g - beta * (1.0 + beta_g * beta_g)) / (beta_g * (beta_g - beta))


def rp_round_trip(beta_g: float, beta: float) -> RoundTripResult:
    """Tachyonic round trip when every frame sees isotropic tachyons.

    >>> rp_round_trip(8.0, 0.5).paradoxical
    True
    """
    beta = subluminal(beta)
    if not beta_g > 1.0:
        raise DomainError(f"outbound speed must exceed 1, got {beta_g!r}")
    elapsed = _two_leg_elapsed(beta_g, beta)
    return RoundTripResult(elapsed, elapsed < 0, _threshold(beta_g))


def rp_subluminal_round_trip(beta_g: float, beta: float) -> RoundTripResult:
    """Same construction with an ordinary signal, ``0 < beta_g < 1``.

    When ``beta > beta_g`` the return signal moves away from the origin in
    R1 and never comes back; the elapsed value is then only the formal
    leg sum and ``return_reaches_origin`` is False.
    """
    beta = subluminal(beta)
    if not 0.0 < beta_g < 1.0:
        raise DomainError(f"subluminal speed must lie in (0, 1), got {beta_g!r}")
    if beta == beta_g:
        raise DomainError("return leg is at rest in R1")
    elapsed = _two_leg_elapsed(beta_g, beta)
    return RoundTripResult(elapsed, elapsed < 0, _threshold(beta_g),
                           return_reaches_origin=beta < beta_g)


def aether_round_trip(beta_t: float, beta: float) -> RoundTripResult:
    """Round trip over a lab segment with tachyons isotropic only in the aether.

    Each leg is solved in the aether frame, so a leg at the composition
    pole contributes zero instead of dividing by zero.
    """
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    out = tachyon_arrival_time(0.0, 0.0, 1.0, beta_t, beta)
    back = tachyon_arrival_time(out, 1.0, 0.0, beta_t, beta)
    closed = 2.0 * beta_t * (1.0 - beta * beta) / (beta_t * beta_t - beta * beta)
    # the two legs nearly cancel for large beta_t; allow their rounding scale
    scale = abs(out) + abs(back - out)
    assert math.isclose(back, closed, rel_tol=1e-12, abs_tol=4 * sys.float_info.epsilon * scale), \
        (back, closed)
    return RoundTripResult(back, back < 0, _threshold(beta_t))
