"""Event timeline of a single entangled pair and its regime classification.

A pair is created at ``x_bar`` at clock time ``t_bar``; the left particle
is detected at ``x = -1`` and the right one at ``x = +1``.  Each detection
emits a tachyon toward the other detector.  The second measurement is
correlated when the tachyon from the first one gets to its detector first.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, field

from .errors import DomainError
from .kinematics import particle_speed, subluminal, tachyonic, transit_slope
from .window import UncorrelationWindow


class RegimeLabel(enum.Enum):
    CorrelatedViaLeftTachyon = "CorrelatedViaLeftTachyon"
    Uncorrelated = "Uncorrelated"
    CorrelatedViaRightTachyon = "CorrelatedViaRightTachyon"

    def __str__(self):
        return self.value


class EventKind(enum.Enum):
    Creation = "Creation"
    LeftDetection = "LeftDetection"
    RightDetection = "RightDetection"
    LeftTachyonArrival = "LeftTachyonArrival"
    RightTachyonArrival = "RightTachyonArrival"
    TachyonInterception = "TachyonInterception"


@dataclass(frozen=True)
class Geometry1D:
    """Source position and particle speed, lengths in units of ``d``."""

    x_bar: float
    beta1: float = 1.0
    t_bar: float = 0.0
    d: float = field(default=1.0, init=False)

    def __post_init__(self):
        if not -1.0 < self.x_bar < 1.0:
            raise DomainError(f"source must satisfy -1 < x_bar/d < 1, got {self.x_bar!r}")
        particle_speed(self.beta1)


@dataclass(frozen=True)
class Event:
    kind: EventKind
    x: float
    t: float


@dataclass(frozen=True)
class TimelineResult:
    geometry: Geometry1D
    label: RegimeLabel
    events: tuple[Event, ...]
    condition_a: bool
    condition_b: bool
    # clock-reading change per unit length for the L->R and R->L tachyons
    slopes: tuple[float, float]

    def event(self, kind: EventKind) -> Event | None:
        for e in self.events:
            if e.kind is kind:
                return e
        return None


def _interception(x0, t0, slope, direction, geom):
    """Tachyon leaving ``(x0, t0)`` meets the opposite in-flight particle, or None.

    Tachyon worldline: t = t0 + slope*direction*(x - x0); the particle
    moves with velocity ``direction*beta1`` from the source.
    """
    b1 = geom.beta1
    # particle: x = x_bar + direction*b1*(t - t_bar)
    den = 1.0 - b1 * slope
    x = (geom.x_bar + direction * b1 * (t0 - geom.t_bar - slope * direction * x0)) / den
    if direction > 0 and not geom.x_bar < x < 1.0:
        return None
    if direction < 0 and not -1.0 < x < geom.x_bar:
        return None
    t = t0 + slope * direction * (x - x0)
    return Event(EventKind.TachyonInterception, x, t)


def run_with_slopes(geom: Geometry1D, slope_plus: float, slope_minus: float) -> TimelineResult:
    """Timeline for given tachyon transit slopes (clock change per unit length)."""
    b1 = geom.beta1
    t_right = geom.t_bar + (1.0 - geom.x_bar) / b1
    t_left = geom.t_bar + (1.0 + geom.x_bar) / b1
    arrive_right = t_left + 2.0 * slope_plus
    arrive_left = t_right + 2.0 * slope_minus
    cond_a = t_right < arrive_right
    cond_b = t_left < arrive_left
    if not cond_a and not cond_b:
        raise AssertionError("both correlation conditions failed; window ordering violated")
    if cond_a and cond_b:
        label = RegimeLabel.Uncorrelated
    elif not cond_a:
        label = RegimeLabel.CorrelatedViaLeftTachyon
    else:
        label = RegimeLabel.CorrelatedViaRightTachyon

    events = [
        Event(EventKind.Creation, geom.x_bar, geom.t_bar),
        Event(EventKind.LeftDetection, -1.0, t_left),
        Event(EventKind.RightDetection, 1.0, t_right),
        Event(EventKind.LeftTachyonArrival, 1.0, arrive_right),
        Event(EventKind.RightTachyonArrival, -1.0, arrive_left),
    ]
    if label is RegimeLabel.CorrelatedViaLeftTachyon:
        hit = _interception(-1.0, t_left, slope_plus, +1, geom)
    elif label is RegimeLabel.CorrelatedViaRightTachyon:
        hit = _interception(1.0, t_right, slope_minus, -1, geom)
    else:
        hit = None
    if hit is not None:
        events.append(hit)
    events.sort(key=lambda e: e.t)
    return TimelineResult(geom, label, tuple(events), cond_a, cond_b,
                          (slope_plus, slope_minus))


def run_timeline(geom: Geometry1D, beta_t: float, beta: float) -> TimelineResult:
    """Simulate one pair on the collinear axis and classify it.

    >>> run_timeline(Geometry1D(0.42), 8.0, -0.4).label
    <RegimeLabel.Uncorrelated: 'Uncorrelated'>
    """
    beta_t, beta = tachyonic(beta_t), subluminal(beta)
    return run_with_slopes(geom, transit_slope(beta_t, beta, True),
                           transit_slope(beta_t, beta, False))


def run_timeline_3d(geom: Geometry1D, theta: float, beta_t: float, beta: float) -> TimelineResult:
    """Same as :func:`run_timeline` for a flight axis at lab angle ``theta``.

    Transit slopes come from the exact oblique aberration, not from the
    effective-parameter reduction.
    """
    from .aberration import axis_slopes

    return run_with_slopes(geom, *axis_slopes(theta, beta_t, beta))


def classify_delta(delta: float, window: UncorrelationWindow) -> RegimeLabel:
    """Regime from the source ratio alone; the edges count as correlated."""
    if not -1.0 < delta < 1.0:
        raise DomainError(f"source ratio must satisfy -1 < delta < 1, got {delta!r}")
    if delta <= window.delta_m:
        return RegimeLabel.CorrelatedViaLeftTachyon
    if delta >= window.delta_M:
        return RegimeLabel.CorrelatedViaRightTachyon
    return RegimeLabel.Uncorrelated


def find_boundaries(run, beta1: float = 1.0, t_bar: float = 0.0,
                    tol: float = 1e-13) -> tuple[float, float]:
    """Locate the label changes of ``run(geometry)`` along ``x_bar`` by bisection.

    ``run`` maps a :class:`Geometry1D` to a :class:`TimelineResult`.
    """
    def bisect(pred):
        lo, hi = -1.0 + 1e-15, 1.0 - 1e-15
        if not pred(lo) or pred(hi):
            raise DomainError("label does not change inside (-1, 1)")
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if pred(mid):
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    def label(x):
        return run(Geometry1D(x, beta1, t_bar)).label

    left = bisect(lambda x: label(x) is RegimeLabel.CorrelatedViaLeftTachyon)
    right = bisect(lambda x: label(x) is not RegimeLabel.CorrelatedViaRightTachyon)
    return left, right


WORLDLINES = ("Lparticle", "Rparticle", "Ldetector", "Rdetector", "tachyon")


@dataclass(frozen=True)
class MinkowskiTable:
    # (worldline, label, x_over_d, ct_over_d)
    rows: tuple[tuple[str, str, float, float], ...]
    tachyon_endpoint: str

    def to_csv(self, delimiter: str = ",") -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
        writer.writerow(["worldline", "label", "x_over_d", "ct_over_d"])
        for name, label, x, t in self.rows:
            writer.writerow([name, label, f"{x:.12g}", f"{t:.12g}"])
        return buf.getvalue()


def _tachyon_segment(start: Event, arrival: Event, slope: float, direction: int,
                     t_late: float) -> list[tuple[str, float, float]]:
    """Departure to arrival, cut where the clock reading first reaches ``t_late``."""
    verts = [(start.kind.value, start.x, start.t)]
    if slope > 0 and arrival.t > t_late:
        x = start.x + direction * (t_late - start.t) / slope
        verts.append(("Truncated", x, t_late))
    else:
        verts.append((arrival.kind.value, arrival.x, arrival.t))
    return verts


def export_minkowski(result: TimelineResult) -> MinkowskiTable:
    """Worldline polylines of a run, in the fixed order of :data:`WORLDLINES`.

    The correlating tachyon ends at its interception with the in-flight
    particle when there is one, otherwise at the detector.  In an
    uncorrelated run both tachyons are drawn and cut at the later detection.
    """
    ev = {e.kind: e for e in result.events}
    create = ev[EventKind.Creation]
    left, right = ev[EventKind.LeftDetection], ev[EventKind.RightDetection]
    t_end = max(e.t for e in result.events)
    t_start = min(e.t for e in result.events)
    rows = []

    def add(name, verts):
        rows.extend((name, label, x, t) for label, x, t in verts)

    add("Lparticle", [(create.kind.value, create.x, create.t), (left.kind.value, left.x, left.t)])
    add("Rparticle", [(create.kind.value, create.x, create.t), (right.kind.value, right.x, right.t)])
    add("Ldetector", [("Start", -1.0, t_start), ("End", -1.0, t_end)])
    add("Rdetector", [("Start", 1.0, t_start), ("End", 1.0, t_end)])

    slope_plus, slope_minus = result.slopes
    hit = ev.get(EventKind.TachyonInterception)
    if result.label is RegimeLabel.CorrelatedViaLeftTachyon:
        end = hit or ev[EventKind.LeftTachyonArrival]
        add("tachyon", [(left.kind.value, left.x, left.t), (end.kind.value, end.x, end.t)])
    elif result.label is RegimeLabel.CorrelatedViaRightTachyon:
        end = hit or ev[EventKind.RightTachyonArrival]
        add("tachyon", [(right.kind.value, right.x, right.t), (end.kind.value, end.x, end.t)])
    else:
        t_late = max(left.t, right.t)
        add("tachyon", _tachyon_segment(left, ev[EventKind.LeftTachyonArrival],
                                        slope_plus, +1, t_late))
        add("tachyon", _tachyon_segment(right, ev[EventKind.RightTachyonArrival],
                                        slope_minus, -1, t_late))
        hit = None
    if result.label is RegimeLabel.Uncorrelated:
        endpoint = "none"
    else:
        endpoint = "interception" if hit is not None else "detector"
    return MinkowskiTable(tuple(rows), endpoint)
