"""Daily drift of the window from Earth rotation, and the Faraci inference.

The aether velocity is fixed in space at angle ``tilt`` from the Earth
axis.  A lab flight axis at angle ``psi`` from the Earth axis sees the
aether direction sweep a cone once per sidereal day, so the lab angle obeys

    cos(theta) = cos(psi) cos(tilt) + sin(psi) sin(tilt) cos(2 pi t / P + phase)

For a horizontal South-North axis ``psi`` is the latitude.
"""

from __future__ import annotations

import csv
import io
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .aberration import window_3d_arrays
from .errors import DomainError, RegimeWarning, SuperluminalAetherError, UnconstrainedError
from .kinematics import lorentz_gamma, subluminal, tachyonic

SIDEREAL_DAY = 86164.0905


@dataclass(frozen=True)
class SiderealConfig:
    latitude: float
    tilt: float
    beta: float
    beta_t: float
    phase: float = 0.0
    sidereal_period: float = SIDEREAL_DAY
    # 0 = flight axis along local South-North
    flight_azimuth: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.latitude <= 0.5 * math.pi:
            raise DomainError(f"latitude must lie in [0, pi/2], got {self.latitude!r}")
        if not 0.0 <= self.tilt <= 0.5 * math.pi:
            raise DomainError(f"tilt must lie in [0, pi/2], got {self.tilt!r}")
        if not self.sidereal_period > 0:
            raise DomainError("sidereal period must be positive")
        subluminal(self.beta)
        tachyonic(self.beta_t)

    @property
    def axis_angle(self) -> float:
        """Angle between the flight axis and the Earth axis."""
        if self.flight_azimuth == 0.0:
            return self.latitude
        c = math.cos(self.flight_azimuth) * math.cos(self.latitude)
        return math.acos(min(1.0, max(-1.0, c)))


@dataclass(frozen=True)
class DriftSeries:
    t: np.ndarray
    theta: np.ndarray
    delta_bar: np.ndarray
    d_delta_window: np.ndarray
    d_delta_bar: float

    def to_csv(self, delimiter: str = ",") -> str:
        buf = io.StringIO()
        w = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
        w.writerow(["t_seconds", "theta_rad", "delta_bar", "d_delta_window"])
        for row in zip(self.t, self.theta, self.delta_bar, self.d_delta_window):
            w.writerow([f"{v:.12g}" for v in row])
        return buf.getvalue()


def _theta_at_phase(phase, cfg: SiderealConfig):
    psi = cfg.axis_angle
    c = (math.cos(psi) * math.cos(cfg.tilt)
         + math.sin(psi) * math.sin(cfg.tilt) * np.cos(phase))
    return np.arccos(np.clip(c, -1.0, 1.0))


def theta_of_time(t, cfg: SiderealConfig):
    """Lab angle between flight axis and aether velocity at time ``t`` (seconds)."""
    phase = 2.0 * math.pi * np.asarray(t, dtype=float) / cfg.sidereal_period + cfg.phase
    theta = _theta_at_phase(phase, cfg)
    return float(theta) if theta.ndim == 0 else theta


def drift_series(cfg: SiderealConfig, n_samples: int = 1441) -> DriftSeries:
    """Window center and width sampled over one sidereal period.

    ``d_delta_bar`` is the exact peak-to-peak of the continuous curve,
    taken at the two extremal phases rather than from the samples.
    """
    if n_samples < 2:
        raise DomainError("need at least two samples")
    t = np.linspace(0.0, cfg.sidereal_period, n_samples)
    theta = theta_of_time(t, cfg)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        center, width = window_3d_arrays(theta, cfg.beta, cfg.beta_t)
    extremes = _theta_at_phase(np.array([0.0, math.pi]), cfg)
    ends = -cfg.beta * np.cos(extremes)
    return DriftSeries(t, theta, center, width, float(abs(ends[1] - ends[0])))


def _inside_margin(u, cfg, delta_obs):
    """Positive inside the window; ``u`` is the fraction of a sidereal day."""
    theta = _theta_at_phase(2.0 * math.pi * u + cfg.phase, cfg)
    center, width = window_3d_arrays(theta, cfg.beta, cfg.beta_t)
    return 0.5 * width - np.abs(delta_obs - center)


def _scan(cfg, delta_obs, lo, hi, n):
    """Inside-time over grid intervals ``lo..hi-1`` of ``n``: (whole count, partial lengths)."""
    nodes = np.arange(lo, hi + 1) / n
    g = _inside_margin(nodes, cfg, delta_obs)
    ins = g >= 0.0
    whole = int(np.count_nonzero(ins[:-1] & ins[1:]))
    partials = []
    f = lambda u: float(_inside_margin(np.array(u), cfg, delta_obs))
    for k in np.flatnonzero(ins[:-1] != ins[1:]):
        a, b = nodes[k], nodes[k + 1]
        root = brentq(f, a, b, xtol=1e-15)
        partials.append((lo + int(k), (b - root) if ins[k + 1] else (root - a)))
    return whole, partials


def occupancy_fraction(cfg: SiderealConfig, delta_obs: float, n_samples: int = 10 ** 6,
                       threads: int = 1) -> float:
    """Fraction of a sidereal day the source ratio ``delta_obs`` sits inside the window.

    The day is cut into ``n_samples`` intervals; intervals whose ends fall
    on opposite sides of a window edge are refined by root finding.
    Splitting across ``threads`` does not change the result.
    """
    if n_samples < 2:
        raise DomainError("need at least two samples")
    threads = max(1, int(threads))
    bounds = np.linspace(0, n_samples, threads + 1).astype(int)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        if threads == 1:
            parts = [_scan(cfg, delta_obs, 0, n_samples, n_samples)]
        else:
            with ThreadPoolExecutor(threads) as pool:
                parts = list(pool.map(lambda ab: _scan(cfg, delta_obs, ab[0], ab[1], n_samples),
                                      zip(bounds[:-1], bounds[1:])))
    whole = sum(p[0] for p in parts)
    partials = sorted(x for p in parts for x in p[1])
    return whole / n_samples + math.fsum(length for _, length in partials)


def faraci_beta(delta_obs: float, latitude: float, tilt: float) -> tuple[float, float]:
    """Aether speed band ``(center, halfwidth)`` that places ``delta_obs`` inside the drift band."""
    if not 0.0 <= delta_obs < 1.0:
        raise DomainError(f"observed source ratio must lie in [0, 1), got {delta_obs!r}")
    if not 0.0 <= latitude < 0.5 * math.pi:
        raise DomainError(f"latitude must lie in [0, pi/2), got {latitude!r}")
    center = delta_obs / math.cos(latitude)
    if center >= 1.0:
        raise SuperluminalAetherError(f"inferred aether speed {center:.6g} is not below c")
    return center, tilt * math.tan(latitude)


def faraci_beta_t(tilt: float, beta: float, latitude: float) -> float:
    """Tachyon speed for which the daily drift is three window widths."""
    beta = subluminal(beta)
    if tilt == 0.0:
        raise UnconstrainedError("tilt = 0 leaves beta_t unconstrained")
    if not (tilt > 0 and beta > 0):
        raise DomainError("tilt and beta must be positive")
    g = lorentz_gamma(beta)
    g_star = lorentz_gamma(beta * math.cos(latitude))
    return 3.0 * g / (tilt * beta * math.sin(latitude) * g_star ** 3)
