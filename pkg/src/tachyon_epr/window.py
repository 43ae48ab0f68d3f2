"""The uncorrelation window and its inversion.

A pair created at ``Delta = x_bar/d`` gives uncorrelated measurements when
``delta_m < Delta < delta_M``.  Both edges depend on the particle speed
``beta1``, the aether-frame tachyon speed ``beta_t`` and the aether speed
``beta``.  For photons (``beta1 = 1``) the edges can be inverted back to
``(beta, beta_t)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateInputError, DomainError, InfeasibleWindowError
from .kinematics import particle_speed, subluminal, tachyonic

ZERO_SUM_EPS = 1e-14
DEGENERATE_WIDTH_EPS = 1e-14


@dataclass(frozen=True)
class UncorrelationWindow:
    delta_m: float
    delta_M: float

    def __post_init__(self):
        if not (-1.0 < self.delta_m < 1.0 and -1.0 < self.delta_M < 1.0):
            raise DomainError(
                f"window edges must lie in (-1, 1), got ({self.delta_m!r}, {self.delta_M!r})")
        if not self.delta_M > self.delta_m:
            raise DomainError(
                f"window requires delta_M > delta_m, got ({self.delta_m!r}, {self.delta_M!r})")

    @property
    def center(self) -> float:
        return 0.5 * (self.delta_M + self.delta_m)

    @property
    def width(self) -> float:
        return self.delta_M - self.delta_m

    def summary(self) -> WindowSummary:
        return WindowSummary(self.center, self.width)

    def contains(self, delta: float) -> bool:
        """Strict membership; the edges count as correlated."""
        return self.delta_m < delta < self.delta_M


@dataclass(frozen=True)
class WindowSummary:
    center: float
    width: float

    def __post_init__(self):
        if not self.width > 0:
            raise DomainError(f"window width must be positive, got {self.width!r}")


def compute_window(beta1: float, beta_t: float, beta: float) -> UncorrelationWindow:
    """Window edges for particle speed ``beta1``.

    >>> w = compute_window(1.0, 2.0, 0.0)
    >>> (w.delta_m, w.delta_M)
    (-0.5, 0.5)
    """
    beta1 = particle_speed(beta1)
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    delta_m = -beta1 * (1.0 + beta_t * beta) / (beta_t + beta)
    delta_M = beta1 * (1.0 - beta_t * beta) / (beta_t - beta)
    return UncorrelationWindow(delta_m, delta_M)


def window_width(beta1: float, beta_t: float, beta: float) -> float:
    """Closed-form ``delta_M - delta_m``; shrinks like ``2*beta1/beta_t``."""
    beta1 = particle_speed(beta1)
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    return 2.0 * beta1 * beta_t * (1.0 - beta * beta) / (beta_t * beta_t - beta * beta)


def _unit_product_roots(half_b: float) -> tuple[float, float]:
    """Roots of ``x**2 - 2*half_b*x + 1 = 0`` as (larger |x|, smaller |x|).

    The large root is formed without cancellation and the small one from
    the product of the roots being 1.
    """
    disc = half_b * half_b - 1.0
    if disc < 0.0:
        raise InfeasibleWindowError(f"negative discriminant {disc!r}")
    big = half_b + math.copysign(math.sqrt(disc), half_b)
    return big, 1.0 / big


def _as_window(window) -> UncorrelationWindow:
    if isinstance(window, UncorrelationWindow):
        return window
    return UncorrelationWindow(*window)


def invert_beta_t(window) -> float:
    """Recover ``beta_t`` from a photon window (``beta1 = 1``)."""
    w = _as_window(window)
    half_b = (1.0 - w.delta_M * w.delta_m) / (w.delta_M - w.delta_m)
    roots = [r for r in _unit_product_roots(half_b) if r > 1.0]
    if len(roots) != 1:
        raise InfeasibleWindowError(f"no unique root beta_t > 1 for {w}")
    return roots[0]


def invert_beta(window) -> float:
    """Recover the aether speed ``beta`` from a photon window (``beta1 = 1``)."""
    w = _as_window(window)
    s = w.delta_M + w.delta_m
    if abs(s) < ZERO_SUM_EPS:
        return 0.0
    # beta**2 + 2*(1 + dM*dm)/s * beta + 1 = 0
    half_b = -(1.0 + w.delta_M * w.delta_m) / s
    roots = [r for r in _unit_product_roots(half_b) if -1.0 < r < 1.0]
    if len(roots) != 1:
        raise InfeasibleWindowError(f"no unique root |beta| < 1 for {w}")
    return roots[0]


def approx_beta_t(window) -> float:
    """Large-``beta_t`` estimate ``2(1 - dM*dm)/(dM - dm)``."""
    if isinstance(window, UncorrelationWindow):
        dm, dM = window.delta_m, window.delta_M
    else:
        dm, dM = map(float, window)
    if dM - dm < DEGENERATE_WIDTH_EPS:
        raise DegenerateInputError("window width too small to estimate beta_t")
    return 2.0 * (1.0 - dM * dm) / (dM - dm)


def approx_beta(window) -> float:
    """Large-``beta_t`` estimate: minus the window center."""
    w = _as_window(window)
    return -0.5 * (w.delta_M + w.delta_m)
