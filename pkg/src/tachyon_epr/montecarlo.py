"""Measurement statistics over many pairs with aligned analyzers.

Outside the window the pair is perfectly anticorrelated: the left result
is a fair coin and the right one its opposite.  Inside the window both
results are independent fair coins, so all four outcomes are equally
likely.

Random bits come from a counter-based Philox stream keyed by the seed.
Trial ``i`` always reads stream words ``2*i`` and ``2*i + 1``, so any
split of the trial range across workers reproduces the serial run.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.special import ndtri

from .errors import DomainError, ModelViolationError
from .timeline import RegimeLabel
from .window import UncorrelationWindow, compute_window

RNG_ALGORITHM = "numpy.random.Philox-4x64-10; trial i reads stream words 2i, 2i+1"
WORDS_PER_TRIAL = 2
THREADS_ENV = "TACHYON_EPR_THREADS"

_LABELS = (RegimeLabel.CorrelatedViaLeftTachyon, RegimeLabel.Uncorrelated,
           RegimeLabel.CorrelatedViaRightTachyon)
_OUTCOMES = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class ExperimentConfig:
    """One run of ``n_pairs`` trials.

    ``deltas`` is a scalar source ratio or one value per pair.  The window
    is either given, derived from ``(beta1, beta_t, beta)``, or supplied
    per pair as ``windows = (delta_m array, delta_M array)``.
    ``source_jitter`` adds zero-mean Gaussian noise of that width to each
    pair's source ratio.
    """

    n_pairs: int
    deltas: float | np.ndarray = 0.0
    window: UncorrelationWindow | None = None
    beta: float | None = None
    beta_t: float | None = None
    beta1: float = 1.0
    windows: tuple[np.ndarray, np.ndarray] | None = None
    rng_seed: int = 0
    source_jitter: float = 0.0

    def __post_init__(self):
        if self.n_pairs < 1:
            raise DomainError("n_pairs must be at least 1")
        if not 0 <= self.rng_seed < 2 ** 64:
            raise DomainError("seed must be a 64-bit unsigned integer")
        if self.window is None and self.windows is None and (self.beta is None or self.beta_t is None):
            raise DomainError("need a window, per-pair windows, or (beta, beta_t)")
        if np.ndim(self.deltas) == 1 and len(self.deltas) != self.n_pairs:
            raise DomainError("per-pair deltas must have n_pairs entries")
        if self.source_jitter < 0:
            raise DomainError("source jitter must be non-negative")

    def resolved_window(self) -> UncorrelationWindow | None:
        if self.window is not None:
            return self.window
        if self.windows is not None:
            return None
        return compute_window(self.beta1, self.beta_t, self.beta)


@dataclass(frozen=True)
class TrialLog:
    trial: np.ndarray
    delta: np.ndarray
    regime: np.ndarray  # index into (Left, Uncorrelated, Right)
    left: np.ndarray
    right: np.ndarray

    def to_csv(self, delimiter: str = ",") -> str:
        buf = io.StringIO()
        w = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
        w.writerow(["trial", "delta", "regime", "left", "right"])
        for i, d, r, a, b in zip(self.trial, self.delta, self.regime, self.left, self.right):
            w.writerow([int(i), f"{d:.12g}", _LABELS[r].value, f"{int(a):+d}", f"{int(b):+d}"])
        return buf.getvalue()


@dataclass(frozen=True)
class CorrelationStats:
    n: int
    correlation: float
    coincidence_rate: float
    occupancy: float
    stderr_correlation: float
    stderr_occupancy: float
    seed: int
    rng_algorithm: str = RNG_ALGORITHM
    # counts[regime][outcome], regimes and outcomes in module order
    counts: tuple[tuple[int, ...], ...] = field(default=((0,) * 4,) * 3, repr=False)

    def outcome_counts(self, regime: RegimeLabel) -> dict[tuple[int, int], int]:
        row = self.counts[_LABELS.index(regime)]
        return dict(zip(_OUTCOMES, row))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "correlation": self.correlation,
            "occupancy": self.occupancy,
            "stderr_correlation": self.stderr_correlation,
            "coincidence_rate": self.coincidence_rate,
            "stderr_occupancy": self.stderr_occupancy,
            "seed": self.seed,
            "rng_algorithm": self.rng_algorithm,
            "counts": {lab.value: dict(zip(["++", "+-", "-+", "--"], row))
                       for lab, row in zip(_LABELS, self.counts)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _stream_words(seed: int, start: int, count: int) -> np.ndarray:
    """Words ``start .. start+count-1`` of the Philox stream keyed by ``seed``."""
    bitgen = np.random.Philox(key=seed)
    # one Philox block yields four 64-bit words
    bitgen.advance(int(start) // 4)
    skip = int(start) % 4
    return bitgen.random_raw(skip + int(count))[skip:]


def _trial_chunk(cfg: ExperimentConfig, lo: int, hi: int, keep_log: bool):
    words = _stream_words(cfg.rng_seed, WORDS_PER_TRIAL * lo, WORDS_PER_TRIAL * (hi - lo))
    bits, jitter_words = words[0::2], words[1::2]

    deltas = np.broadcast_to(np.asarray(cfg.deltas, dtype=float), (cfg.n_pairs,))[lo:hi].copy()
    if cfg.source_jitter > 0:
        # 53-bit uniforms in the open interval (0, 1)
        u = ((jitter_words >> np.uint64(11)).astype(float) + 0.5) / 2.0 ** 53
        deltas += cfg.source_jitter * ndtri(u)
    w = cfg.resolved_window()
    if w is not None:
        dm, dM = w.delta_m, w.delta_M
    else:
        dm, dM = cfg.windows[0][lo:hi], cfg.windows[1][lo:hi]
    # edges count as correlated
    regime = np.where(deltas <= dm, 0, np.where(deltas >= dM, 2, 1))

    left = np.where(bits & np.uint64(1), 1, -1)
    free_right = np.where(bits & np.uint64(2), 1, -1)
    right = np.where(regime == 1, free_right, -left)

    outcome = (left < 0) * 2 + (right < 0)  # index into _OUTCOMES
    counts = np.zeros((3, 4), dtype=np.int64)
    np.add.at(counts, (regime, outcome), 1)
    log = None
    if keep_log:
        log = (np.arange(lo, hi), deltas, regime, left, right)
    return counts, log


def simulate(config: ExperimentConfig, *, threads: int | None = None,
             keep_log: bool = False) -> tuple[CorrelationStats, TrialLog | None]:
    """Run the experiment; identical for any thread count given the seed."""
    threads = default_threads() if threads is None else max(1, int(threads))
    n = config.n_pairs
    bounds = np.linspace(0, n, min(threads, n) + 1).astype(int)
    spans = list(zip(bounds[:-1], bounds[1:]))
    if len(spans) == 1:
        parts = [_trial_chunk(config, 0, n, keep_log)]
    else:
        with ThreadPoolExecutor(len(spans)) as pool:
            parts = list(pool.map(lambda s: _trial_chunk(config, s[0], s[1], keep_log), spans))

    counts = sum(p[0] for p in parts)
    same = int(counts[:, 0].sum() + counts[:, 3].sum())
    corr = (2 * same - n) / n
    occ = int(counts[1].sum()) / n
    denom = max(n - 1, 1)
    stats = CorrelationStats(
        n=n,
        correlation=corr,
        coincidence_rate=same / n,
        occupancy=occ,
        stderr_correlation=math.sqrt(max(0.0, 1.0 - corr * corr) / denom),
        stderr_occupancy=math.sqrt(occ * (1.0 - occ) / denom),
        seed=config.rng_seed,
        counts=tuple(tuple(int(c) for c in row) for row in counts),
    )
    log = None
    if keep_log:
        cols = [np.concatenate([p[1][k] for p in parts]) for k in range(5)]
        log = TrialLog(*cols)
    return stats, log


def expected_correlation(occupancy: float) -> float:
    """Mixing model: anticorrelated outside the window, zero inside."""
    if not 0.0 <= occupancy <= 1.0:
        raise DomainError(f"occupancy must lie in [0, 1], got {occupancy!r}")
    return -(1.0 - occupancy)


def infer_occupancy(observed_corr: float) -> float:
    if not -1.0 <= observed_corr <= 0.0:
        raise ModelViolationError(
            f"correlation {observed_corr!r} is outside [-1, 0], the mixing model's range")
    return 1.0 + observed_corr


def occupancy_schedule(window: UncorrelationWindow, fraction: float, n_pairs: int) -> np.ndarray:
    """Per-pair source ratios with ``round(fraction*n_pairs)`` pairs inside the window.

    Inside pairs sit at the window center and are spread evenly over the
    run; the rest alternate between the midpoints of the two correlated
    intervals.
    """
    if not 0.0 <= fraction <= 1.0:
        raise DomainError(f"fraction must lie in [0, 1], got {fraction!r}")
    i = np.arange(n_pairs)
    k = round(fraction * n_pairs)
    inside = np.floor((i + 1) * k / n_pairs) > np.floor(i * k / n_pairs)
    below = 0.5 * (-1.0 + window.delta_m)
    above = 0.5 * (window.delta_M + 1.0)
    outside = np.where(np.cumsum(~inside) % 2 == 1, below, above)
    return np.where(inside, window.center, outside)


def sidereal_schedule(cfg, n_pairs: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-pair window edges for pairs spread evenly over one sidereal day."""
    from .aberration import window_3d_arrays
    from .sidereal import theta_of_time

    t = (np.arange(n_pairs) + 0.5) / n_pairs * cfg.sidereal_period
    center, width = window_3d_arrays(theta_of_time(t, cfg), cfg.beta, cfg.beta_t)
    return center - 0.5 * width, center + 0.5 * width
