"""Four-momenta of photons and tachyons and their boosts.

A tachyon with wave vector magnitude ``k`` along unit vector ``n`` in the
aether frame has momentum ``hbar_t*k*(1/beta_t, n)``.  After a boost the
time component is proportional to ``1 + beta_t*(beta_vec . n)`` and can be
negative; the spatial momentum still points along the propagation
direction while ``p_vec/p0`` (the coordinate velocity) flips.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .kinematics import tachyonic

UNIT_TOL = 1e-12
P0_EPS = 1e-14


@dataclass(frozen=True)
class FourMomentum:
    p0: float
    p_vec: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "p_vec", np.asarray(self.p_vec, dtype=float).reshape(3))

    @property
    def norm2(self) -> float:
        """Minkowski square ``p0**2 - |p|**2``; negative for tachyons."""
        return self.p0 ** 2 - float(self.p_vec @ self.p_vec)


@dataclass(frozen=True)
class BoostVector:
    """Velocity of R' relative to R, in units of c."""

    beta_vec: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.beta_vec, dtype=float).reshape(3)
        if not float(b @ b) < 1.0:
            raise DomainError(f"boost speed must be below 1, got |beta|={math.sqrt(b @ b)!r}")
        object.__setattr__(self, "beta_vec", b)


def _unit(direction):
    n = np.asarray(direction, dtype=float).reshape(3)
    if abs(np.linalg.norm(n) - 1.0) > UNIT_TOL:
        raise DomainError(f"direction must be a unit vector, got {n}")
    return n


def photon_momentum(omega: float, direction, h: float = 1.0) -> FourMomentum:
    """Null momentum ``(h*omega, h*omega*n)`` with ``c = 1``."""
    if not omega > 0:
        raise DomainError("omega must be positive")
    n = _unit(direction)
    return FourMomentum(h * omega, h * omega * n)


def tachyon_momentum(k_mag: float, direction, beta_t: float, hbar_tach: float = 1.0) -> FourMomentum:
    """Aether-frame tachyon momentum ``hbar_tach*k*(1/beta_t, n)``."""
    if not k_mag > 0:
        raise DomainError("wave number must be positive")
    beta_t = tachyonic(beta_t)
    n = _unit(direction)
    p = hbar_tach * k_mag
    return FourMomentum(p / beta_t, p * n)


def boost(p: FourMomentum, b: BoostVector) -> FourMomentum:
    """Express a momentum given in R' in the frame R, where R' moves at ``b``."""
    beta = b.beta_vec
    b2 = float(beta @ beta)
    if b2 == 0.0:
        return FourMomentum(p.p0, p.p_vec.copy())
    g = 1.0 / math.sqrt(1.0 - b2)
    bp = float(beta @ p.p_vec)
    p0 = g * (p.p0 + bp)
    p_vec = p.p_vec + ((g - 1.0) * bp / b2 + g * p.p0) * beta
    return FourMomentum(p0, p_vec)


def velocity_from_momentum(p: FourMomentum) -> np.ndarray:
    """Coordinate velocity ``p_vec/p0``.

    Infinite components (signed like ``p_vec``) mark ``|p0| <= 1e-14``.
    """
    if abs(p.p0) <= P0_EPS:
        return np.where(p.p_vec == 0.0, 0.0, np.copysign(np.inf, p.p_vec))
    return p.p_vec / p.p0


def p0_sign(direction, beta_t: float, b: BoostVector) -> int:
    """Sign of the lab time component of a boosted tachyon momentum."""
    n = _unit(direction)
    s = 1.0 + tachyonic(beta_t) * float(b.beta_vec @ n)
    return int(np.sign(s))


@dataclass(frozen=True)
class PropagationReport:
    velocity: np.ndarray
    momentum_direction: np.ndarray
    backward_in_time: bool


def propagation(p: FourMomentum) -> PropagationReport:
    """Coordinate velocity next to the momentum direction.

    ``backward_in_time`` flags the two disagreeing, which happens exactly
    when ``p0 < 0``.
    """
    v = velocity_from_momentum(p)
    n = p.p_vec / np.linalg.norm(p.p_vec)
    return PropagationReport(v, n, bool(p.p0 < 0))
