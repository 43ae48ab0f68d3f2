"""Acceptance suite: one PASS/FAIL line per criterion at the pinned tolerances.

Each test prints its verdict outside pytest's capture, so ``pytest -v`` shows
the lines in order; the assertion then makes the test fail on a miss.
"""

import math
import subprocess
import sys
import time
import warnings
from fractions import Fraction

import numpy as np
import pytest

from tachyon_epr.aberration import effective_params
from tachyon_epr.causality import aether_round_trip, rp_round_trip, rp_subluminal_round_trip
from tachyon_epr.errors import RegimeWarning
from tachyon_epr.kinematics import compose_plus, compose_minus
from tachyon_epr.momentum import (BoostVector, boost, photon_momentum, tachyon_momentum,
                                  velocity_from_momentum)
from tachyon_epr.montecarlo import ExperimentConfig, occupancy_schedule, simulate
from tachyon_epr.sidereal import SiderealConfig, drift_series, faraci_beta, faraci_beta_t, \
    occupancy_fraction, theta_of_time
from tachyon_epr.timeline import Geometry1D, RegimeLabel, find_boundaries, run_timeline, \
    run_timeline_3d
from tachyon_epr.window import approx_beta, approx_beta_t, compute_window, invert_beta, \
    invert_beta_t

pytestmark = pytest.mark.acceptance


@pytest.fixture
def report(capsys):
    t0 = time.perf_counter()

    def _report(n, ok, detail, limit=None):
        elapsed = time.perf_counter() - t0
        timed_ok = limit is None or elapsed < limit
        verdict = "PASS" if ok and timed_ok else "FAIL"
        budget = f" ({elapsed:.2f}s" + (f" < {limit}s)" if limit else ")")
        with capsys.disabled():
            print(f"\nACCEPTANCE {n}: {verdict} - {detail}{budget}")
        assert ok, detail
        assert timed_ok, f"runtime {elapsed:.2f}s over {limit}s"
    return _report


def test_criterion_1_reference_case(report):
    w = compute_window(1.0, 8.0, -0.4)
    err = max(abs(w.delta_m - 11 / 38), abs(w.delta_M - 0.5))
    labels = [run_timeline(Geometry1D(x), 8.0, -0.4).label for x in (0.2, 0.42, 0.6)]
    want = [RegimeLabel.CorrelatedViaLeftTachyon, RegimeLabel.Uncorrelated,
            RegimeLabel.CorrelatedViaRightTachyon]
    ok = err <= 1e-12 and labels == want
    report(1, ok, f"window error {err:.1e}, regimes {[l.name for l in labels]}", limit=1)


def test_criterion_2_inversion(report):
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(10_000):
        beta = rng.uniform(-0.95, 0.95)
        beta_t = 10 ** rng.uniform(math.log10(1.05), 4)
        w = compute_window(1.0, beta_t, beta)
        rb, rt = invert_beta(w), invert_beta_t(w)
        worst = max(worst, abs(rb - beta) / max(abs(beta), 1e-300) if beta else abs(rb),
                    abs(rt - beta_t) / beta_t)
    monotone = True
    for beta in (-0.6, -0.25, 0.1, 0.45, 0.8):
        eb, et = [], []
        for beta_t in (10.0, 1e2, 1e3, 1e4):
            w = compute_window(1.0, beta_t, beta)
            eb.append(abs(approx_beta(w) - invert_beta(w)))
            et.append(abs(approx_beta_t(w) - invert_beta_t(w)) / invert_beta_t(w))
        monotone &= all(a > b for a, b in zip(eb, eb[1:])) and all(a > b for a, b in zip(et, et[1:]))
    ok = worst <= 1e-9 and monotone
    report(2, ok, f"worst roundtrip rel error {worst:.1e}, approximations monotone={monotone}",
           limit=10)


def test_criterion_3_faraci(report):
    lat = math.radians(37.5)
    center, half = faraci_beta(0.72, lat, 0.01)
    coeff = half / 0.01
    beta_t = faraci_beta_t(0.01, 0.91, lat)
    # by hand: drift 2*delta*beta*sin(theta_C) equal to three widths 2*gamma/(beta_t*gamma*^3)
    gamma = 1 / math.sqrt(1 - 0.91 ** 2)
    gamma_star = 1 / math.sqrt(1 - (0.91 * math.cos(lat)) ** 2)
    drift = 2 * 0.01 * 0.91 * math.sin(lat)
    hand = 3 * 2 * gamma / (drift * gamma_star ** 3)
    ok = (abs(center - 0.9075) < 5e-5 and abs(round(center, 2) - 0.91) < 1e-12
          and abs(coeff - 0.7673) < 5e-5 and abs(coeff - 0.76) <= 0.02
          and abs(beta_t - hand) / hand < 0.01 and abs(beta_t - 432.7) / 432.7 < 0.01)
    report(3, ok, f"beta center {center:.5f}, halfwidth coeff {coeff:.5f} (printed 0.76), "
                  f"beta_t {beta_t:.2f} vs hand {hand:.2f}", limit=1)


def test_criterion_4_sidereal(report):
    lat = math.radians(37.5)
    worst_exact = worst_small = worst_theta = 0.0
    occ = None
    for tilt in (1e-3, 0.01, 0.03, 0.05):
        cfg = SiderealConfig(lat, tilt, 0.91, 432.7)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RegimeWarning)
            s = drift_series(cfg, n_samples=10 ** 6)
        exact = 2 * 0.91 * math.sin(lat) * math.sin(tilt)
        worst_exact = max(worst_exact, abs(s.d_delta_bar - exact))
        small = 2 * tilt * 0.91 * math.sin(lat)
        worst_small = max(worst_small, abs(s.d_delta_bar - small) / small / (tilt ** 2 / 2))
        th = theta_of_time(np.array([0.0, cfg.sidereal_period / 2]), cfg)
        worst_theta = max(worst_theta, abs(th.min() - (lat - tilt)), abs(th.max() - (lat + tilt)),
                          abs(s.theta.min() - (lat - tilt)), abs(s.theta.max() - (lat + tilt)))
        if tilt == 0.01:
            occ = occupancy_fraction(cfg, -0.91 * math.cos(lat) * math.cos(tilt), n_samples=10 ** 6)
    ok = worst_exact <= 1e-9 and worst_small <= 1.0 and worst_theta <= 1e-9 and 0 < occ < 1
    report(4, ok, f"drift error {worst_exact:.1e}, small-angle form error/(d^2/2) {worst_small:.3f}, "
                  f"theta extrema error {worst_theta:.1e}", limit=5)


def test_criterion_5_causality(report):
    # relativity-principle round trip over a 1000 x 1000 grid
    beta_gs = np.geomspace(1.001, 1e4, 1000)
    betas = np.linspace(-0.999, 0.999, 1000)
    mis = 0
    for g in beta_gs:
        thr = 2 * g / (1 + g * g)
        for b in betas:
            if b == thr:
                continue
            mis += rp_round_trip(g, b).paradoxical != (b > thr)
    # aether model, including both composition poles
    aether_min = math.inf
    for bt in np.geomspace(1.001, 1e4, 200):
        for b in list(np.linspace(-0.999, 0.999, 200)) + [-1 / bt, 1 / bt]:
            aether_min = min(aether_min, aether_round_trip(bt, b).elapsed)
    # ordinary signals over every sampled frame speed
    sub_neg = []
    for g in np.linspace(0.01, 0.99, 99):
        for b in np.linspace(-0.99, 0.99, 199):
            if b != g and rp_subluminal_round_trip(g, b).elapsed <= 0:
                sub_neg.append((round(float(g), 3), round(float(b), 3)))
    realizable_neg = sum(rp_subluminal_round_trip(g, b).elapsed <= 0
                         for g in np.linspace(0.01, 0.99, 99)
                         for b in np.linspace(-0.99, 0.99, 199) if b < g)
    ok = mis == 0 and aether_min > 0 and not sub_neg
    report(5, ok, f"rp misclassified {mis}, aether min elapsed {aether_min:.3e}, "
                  f"subluminal non-positive at {len(sub_neg)} samples (beta_g, beta) e.g. {sub_neg[len(sub_neg) // 2]}, "
                  f"{realizable_neg} of them where the return signal reaches the origin", limit=10)


def test_criterion_6_montecarlo(report):
    w = compute_window(1.0, 8.0, -0.4)
    n = 100_000
    deltas = occupancy_schedule(w, 1 / 3, n)
    hits, worst_z = 0, 0.0
    for seed in range(20):
        stats, log = simulate(ExperimentConfig(n, deltas, window=w, rng_seed=seed), keep_log=True)
        hits += abs(stats.correlation + 2 / 3) <= 3 * stats.stderr_correlation
        unc = log.regime == 1
        m = int(unc.sum())
        sigma = math.sqrt(0.25 * 0.75 / m)
        for a in (1, -1):
            freq = np.mean((log.left[unc] == a) & (log.right[unc] == a))
            worst_z = max(worst_z, abs(freq - 0.25) / sigma)
    ok = hits >= 19 and worst_z <= 5
    report(6, ok, f"{hits}/20 seeds within 3 SE of -2/3, worst (+,+)/(-,-) deviation "
                  f"{worst_z:.2f} sigma", limit=30)


def test_criterion_7_reduction(report):
    beta_t = 1e4
    worst = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        for deg in (0, 20, 40, 60):
            th = math.radians(deg)
            for beta in np.linspace(-0.6, 0.6, 13):
                eff = effective_params(th, beta, beta_t)
                w = compute_window(1.0, eff.beta_t_star, eff.beta_star)
                lo, hi = find_boundaries(lambda g: run_timeline_3d(g, th, beta_t, beta))
                worst = max(worst, abs(lo - w.delta_m) / abs(w.delta_m),
                            abs(hi - w.delta_M) / abs(w.delta_M))
    ok = worst <= 1e-3
    report(7, ok, f"worst relative boundary error {worst:.2e}", limit=30)


def test_criterion_8_momentum(report):
    rng = np.random.default_rng(8)
    worst_v = 0.0
    back = 0
    for _ in range(2000):
        bt = 10 ** rng.uniform(0.05, 3)
        b = rng.uniform(-0.95, 0.95)
        k = 10 ** rng.uniform(-1, 1)
        for sign, compose in ((1.0, compose_plus), (-1.0, compose_minus)):
            p = boost(tachyon_momentum(k, [sign, 0, 0], bt), BoostVector([b, 0, 0]))
            v = velocity_from_momentum(p)[0]
            want = sign * compose(bt, b)
            if not math.isfinite(want):
                continue
            back += p.p0 < 0
            worst_v = max(worst_v, abs(v - want) / abs(want))
    photon_ok = True
    worst_norm = worst_abs = 0.0
    for _ in range(10_000):
        v = rng.normal(size=3)
        v /= np.linalg.norm(v)
        bvec = v * rng.uniform(0, 0.99)
        bv = BoostVector(bvec)
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        ph = photon_momentum(10 ** rng.uniform(-1, 1), n)
        photon_ok &= boost(ph, bv).p0 > 0
        tq = tachyon_momentum(10 ** rng.uniform(-1, 1), n, 10 ** rng.uniform(0.05, 3))
        for q in (tq, ph):
            bq = boost(q, bv)
            # float64 resolves norm2 only relative to the component scale
            scale = bq.p0 ** 2 + float(bq.p_vec @ bq.p_vec)
            worst_norm = max(worst_norm, abs(bq.norm2 - q.norm2) / scale)
            worst_abs = max(worst_abs, abs(bq.norm2 - q.norm2))
    ok = worst_v <= 1e-10 and back > 0 and photon_ok and worst_norm <= 1e-12
    report(8, ok, f"velocity rel error {worst_v:.1e} ({back} p0<0 cases), photon p0>0 {photon_ok}, "
                  f"norm2 drift {worst_norm:.1e} relative ({worst_abs:.1e} absolute)", limit=5)


def test_criterion_9_determinism(report, tmp_path):
    outputs = []
    for threads in ("1", "3", "8"):
        # same paths every run: they are echoed among the parameters
        stats = tmp_path / "stats.json"
        log = tmp_path / "log.csv"
        proc = subprocess.run(
            [sys.executable, "-m", "tachyon_epr", "simulate", "--pairs", "50001",
             "--occupancy-target", "0.3333", "--jitter", "0.01", "--seed", "9001",
             "--threads", threads, "--stats", str(stats), "--trial-log", str(log), "--json"],
            capture_output=True, check=True)
        outputs.append((proc.stdout, stats.read_bytes(), log.read_bytes()))
    ok = all(o == outputs[0] for o in outputs[1:])
    report(9, ok, f"stdout/stats/trial-log byte-identical across --threads 1,3,8: {ok}")
