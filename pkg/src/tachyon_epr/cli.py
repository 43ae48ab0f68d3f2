"""Command-line front end.

Every subcommand prints ``key=value`` lines (``--json`` for one JSON
object).  Reports echo the resolved parameters under ``param.`` keys.
Exit codes: 0 success, 2 invalid parameters, 3 I/O failure.

A ``--config FILE`` holds flat ``key = value`` lines; keys are the long
option names with or without the leading dashes, ``#`` starts a comment,
boolean flags take ``true``/``false``.  Command-line flags override it.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from pathlib import Path

import numpy as np

from . import aberration, causality, kinematics, momentum, montecarlo, sidereal, timeline, window
from .errors import DomainError, InversionError

EXIT_OK, EXIT_VALIDATION, EXIT_IO = 0, 2, 3
C_SI = 299_792_458.0

_ANGLE_RE = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*(deg|rad)\s*$")


def angle(text: str) -> float:
    """Parse ``37.5deg`` or ``0.01rad`` into radians; bare numbers are refused."""
    m = _ANGLE_RE.match(str(text))
    if not m:
        raise argparse.ArgumentTypeError(
            f"angle {text!r} needs a unit suffix, e.g. 37.5deg or 0.01rad")
    value = float(m.group(1))
    return math.radians(value) if m.group(2) == "deg" else value


def vector3(text: str) -> np.ndarray:
    parts = [p for p in re.split(r"[,\s]+", str(text).strip()) if p]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    return np.array([float(p) for p in parts])


def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, np.ndarray):
        return ",".join(repr(float(x)) for x in v)
    return str(v)


def _jsonable(v):
    if isinstance(v, np.ndarray):
        return [float(x) for x in v]
    if isinstance(v, (np.floating, np.integer, np.bool_)):
        return v.item()
    if isinstance(v, Path):
        return str(v)
    return v


def _emit(report: dict, args) -> None:
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in {"func", "command", "json", "config", "threads"} and v is not None}
    if args.json:
        out = {k: _jsonable(v) for k, v in report.items()}
        out["params"] = {k: _jsonable(v) for k, v in params.items()}
        print(json.dumps(out, indent=2, sort_keys=True))
        return
    for k, v in report.items():
        print(f"{k}={_fmt(v)}")
    for k, v in params.items():
        print(f"param.{k}={_fmt(v)}")


def _write(path, text: str) -> None:
    Path(path).write_text(text)


# -- subcommands ---------------------------------------------------------

def cmd_window(args) -> dict:
    rep = {}
    if args.invert:
        if args.delta_m is None or args.delta_M is None:
            raise DomainError("--invert needs --delta-m and --delta-M")
        w = window.UncorrelationWindow(args.delta_m, args.delta_M)
        rep.update(beta=window.invert_beta(w), beta_t=window.invert_beta_t(w),
                   approx_beta=window.approx_beta(w), approx_beta_t=window.approx_beta_t(w))
        return rep
    w = window.compute_window(args.beta1, args.beta_t, args.beta)
    rep.update(delta_m=w.delta_m, delta_M=w.delta_M, center=w.center, width=w.width)
    if args.theta is not None:
        s = aberration.window_3d(args.theta, args.beta, args.beta_t)
        p = aberration.effective_params(args.theta, args.beta, args.beta_t)
        rep.update(beta_star=p.beta_star, gamma_star=p.gamma_star, beta_t_star=p.beta_t_star,
                   center_3d=s.center, width_3d=s.width)
    return rep


def cmd_timeline(args) -> dict:
    geom = timeline.Geometry1D(args.xbar, args.beta1, args.tbar)
    if args.theta is None:
        res = timeline.run_timeline(geom, args.beta_t, args.beta)
    else:
        res = timeline.run_timeline_3d(geom, args.theta, args.beta_t, args.beta)
    scale_x, scale_t, unit_t = 1.0, 1.0, "d/c"
    if args.units == "si":
        scale_x, scale_t, unit_t = args.d_meters, args.d_meters / C_SI, "s"
    rep = {"regime": res.label.value, "condition_a": res.condition_a,
           "condition_b": res.condition_b, "time_unit": unit_t}
    for e in res.events:
        rep[f"event.{e.kind.value}.x"] = e.x * scale_x
        rep[f"event.{e.kind.value}.t"] = e.t * scale_t
    table = timeline.export_minkowski(res)
    rep["tachyon_endpoint"] = table.tachyon_endpoint
    if args.minkowski:
        _write(args.minkowski, table.to_csv())
        rep["minkowski_file"] = str(args.minkowski)
    return rep


def _sidereal_cfg(args) -> sidereal.SiderealConfig:
    return sidereal.SiderealConfig(args.latitude, args.tilt, args.beta, args.beta_t,
                                   args.phase, args.period, args.azimuth)


def cmd_sidereal(args) -> dict:
    cfg = _sidereal_cfg(args)
    series = sidereal.drift_series(cfg, args.samples)
    rep = {"d_delta_bar": series.d_delta_bar,
           "d_delta_bar_small_tilt": 2.0 * cfg.tilt * cfg.beta * math.sin(cfg.axis_angle),
           "theta_min": float(series.theta.min()), "theta_max": float(series.theta.max()),
           "axis_angle": cfg.axis_angle}
    if args.delta_obs is not None:
        rep["occupancy"] = sidereal.occupancy_fraction(cfg, args.delta_obs,
                                                       args.occupancy_samples, args.threads)
    if args.drift:
        _write(args.drift, series.to_csv())
        rep["drift_file"] = str(args.drift)
    return rep


def cmd_faraci(args) -> dict:
    center, half = sidereal.faraci_beta(args.delta_obs, args.latitude, args.tilt)
    beta = center if args.beta is None else args.beta
    rep = {"beta_center": center, "beta_halfwidth": half,
           "halfwidth_per_tilt": math.tan(args.latitude), "beta_used": beta}
    if args.tilt > 0:
        rep["beta_t"] = sidereal.faraci_beta_t(args.tilt, beta, args.latitude)
    else:
        rep["beta_t"] = "unconstrained"
    return rep


def cmd_simulate(args) -> dict:
    n = args.pairs
    if args.sidereal:
        if args.delta_obs is None:
            raise DomainError("--sidereal needs --delta-obs")
        cfg = sidereal.SiderealConfig(args.latitude, args.tilt, args.beta, args.beta_t,
                                      args.phase, args.period, args.azimuth)
        edges = montecarlo.sidereal_schedule(cfg, n)
        exp = montecarlo.ExperimentConfig(n, args.delta_obs, windows=edges, rng_seed=args.seed,
                                          source_jitter=args.jitter)
    else:
        w = window.compute_window(args.beta1, args.beta_t, args.beta)
        if args.occupancy_target is not None:
            deltas = montecarlo.occupancy_schedule(w, args.occupancy_target, n)
        elif args.xbar is not None:
            deltas = args.xbar
        else:
            raise DomainError("give --xbar, --occupancy-target or --sidereal")
        exp = montecarlo.ExperimentConfig(n, deltas, window=w, rng_seed=args.seed,
                                          source_jitter=args.jitter)
    stats, log = montecarlo.simulate(exp, threads=args.threads, keep_log=bool(args.trial_log))
    if args.trial_log:
        _write(args.trial_log, log.to_csv())
    if args.stats:
        _write(args.stats, stats.to_json() + "\n")
    rep = {k: v for k, v in stats.to_dict().items() if k != "counts"}
    rep["expected_correlation"] = montecarlo.expected_correlation(stats.occupancy)
    return rep


def cmd_paradox(args) -> dict:
    if args.beta_t is not None:
        r = causality.aether_round_trip(args.beta_t, args.beta)
        model = "aether"
    elif args.beta_g is None:
        raise DomainError("give --beta-g or --beta-t")
    elif args.beta_g > 1:
        r = causality.rp_round_trip(args.beta_g, args.beta)
        model = "relativity-principle"
    else:
        r = causality.rp_subluminal_round_trip(args.beta_g, args.beta)
        model = "relativity-principle-subluminal"
    elapsed, unit = r.elapsed, "d/c"
    if args.units == "si":
        elapsed, unit = r.elapsed * args.d_meters / C_SI, "s"
    return {"model": model, "elapsed": elapsed, "elapsed_unit": unit,
            "paradoxical": r.paradoxical, "threshold": r.threshold_beta,
            "return_reaches_origin": r.return_reaches_origin}


def cmd_momentum(args) -> dict:
    b = momentum.BoostVector(args.boost)
    if args.photon:
        p = momentum.photon_momentum(args.k, args.direction)
    else:
        p = momentum.tachyon_momentum(args.k, args.direction, args.beta_t, args.hbar)
    q = momentum.boost(p, b)
    prop = momentum.propagation(q)
    rep = {"p0_prime": p.p0, "p_prime": p.p_vec, "p0": q.p0, "p": q.p_vec,
           "norm2_prime": p.norm2, "norm2": q.norm2, "velocity": prop.velocity,
           "backward_in_time": prop.backward_in_time}
    if not args.photon:
        rep["p0_sign"] = momentum.p0_sign(args.direction, args.beta_t, b)
    return rep


# -- parser --------------------------------------------------------------

def _physics(p, beta=-0.4, beta_t=8.0):
    p.add_argument("--beta", type=float, default=beta,
                   help="aether-frame speed relative to the lab [c] (default %(default)s)")
    p.add_argument("--beta-t", type=float, default=beta_t,
                   help="tachyon speed in the aether frame [c] (default %(default)s)")


def _sky(p):
    p.add_argument("--latitude", type=angle, default=angle("37.5deg"),
                   help="flight-axis angle to the Earth axis (latitude) [deg|rad suffix] (default 37.5deg)")
    p.add_argument("--tilt", type=angle, default=angle("0.01rad"),
                   help="aether velocity angle to the Earth axis [deg|rad suffix] (default 0.01rad)")
    p.add_argument("--phase", type=angle, default=0.0, help="sidereal phase at t=0 [deg|rad suffix]")
    p.add_argument("--period", type=float, default=sidereal.SIDEREAL_DAY,
                   help="rotation period [s] (default %(default)s)")
    p.add_argument("--azimuth", type=angle, default=0.0,
                   help="flight-axis azimuth from North [deg|rad suffix] (default 0rad)")


def _common(p):
    p.add_argument("--config", help="flat key = value file merged under the flags")
    p.add_argument("--json", action="store_true", help="print one JSON object")


def _units(p):
    p.add_argument("--units", choices=("natural", "si"), default="natural",
                   help="natural: lengths in d, times in d/c; si: meters and seconds")
    p.add_argument("--d-meters", type=float, default=1.0,
                   help="detector half-separation d [m], used with --units si")


def _threads(p):
    p.add_argument("--threads", type=int, default=None,
                   help=f"worker threads [count]; results do not depend on it "
                        f"(default from ${montecarlo.THREADS_ENV} or 1)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tachyon-epr", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("window", help="uncorrelation window and its inversion")
    _common(p)
    _physics(p)
    p.add_argument("--beta1", type=float, default=1.0, help="particle speed [c] (default 1)")
    p.add_argument("--theta", type=angle, help="flight axis angle to the aether velocity [deg|rad]")
    p.add_argument("--invert", action="store_true", help="recover (beta, beta_t) from window edges")
    p.add_argument("--delta-m", type=float, help="lower window edge [x_bar/d]")
    p.add_argument("--delta-M", type=float, help="upper window edge [x_bar/d]")
    p.set_defaults(func=cmd_window)

    p = sub.add_parser("timeline", help="one pair on the lab worldlines")
    _common(p)
    _physics(p)
    _units(p)
    p.add_argument("--xbar", type=float, required=True, help="source position [d]")
    p.add_argument("--beta1", type=float, default=1.0, help="particle speed [c] (default 1)")
    p.add_argument("--tbar", type=float, default=0.0, help="creation time [d/c] (default 0)")
    p.add_argument("--theta", type=angle, help="oblique flight axis angle [deg|rad]")
    p.add_argument("--minkowski", help="write the worldline table (CSV) here")
    p.set_defaults(func=cmd_timeline)

    p = sub.add_parser("sidereal", help="daily drift of the window center")
    _common(p)
    _physics(p, beta=0.91, beta_t=432.7)
    _sky(p)
    _threads(p)
    p.add_argument("--samples", type=int, default=1441, help="drift samples per period [count]")
    p.add_argument("--delta-obs", type=float, help="source ratio for the occupancy fraction [x_bar/d]")
    p.add_argument("--occupancy-samples", type=int, default=10 ** 6,
                   help="intervals for the occupancy scan [count]")
    p.add_argument("--drift", help="write the drift series (CSV) here")
    p.set_defaults(func=cmd_sidereal)

    p = sub.add_parser("faraci", help="aether parameters from an uncorrelated source ratio")
    _common(p)
    p.add_argument("--delta-obs", type=float, default=0.72, help="source ratio [x_bar/d] (default 0.72)")
    p.add_argument("--latitude", type=angle, default=angle("37.5deg"),
                   help="lab latitude [deg|rad suffix] (default 37.5deg)")
    p.add_argument("--tilt", type=angle, required=True,
                   help="aether velocity angle to the Earth axis [deg|rad suffix]")
    p.add_argument("--beta", type=float, help="aether speed for beta_t [c] (default: inferred center)")
    p.set_defaults(func=cmd_faraci)

    p = sub.add_parser("simulate", help="Monte Carlo measurement statistics")
    _common(p)
    _physics(p)
    _sky(p)
    _threads(p)
    p.add_argument("--beta1", type=float, default=1.0, help="particle speed [c] (default 1)")
    p.add_argument("--pairs", type=int, default=100_000, help="number of pairs [count]")
    p.add_argument("--seed", type=int, default=0, help="64-bit RNG seed")
    p.add_argument("--xbar", type=float, help="fixed source position [d]")
    p.add_argument("--occupancy-target", type=float,
                   help="place this fraction of pairs inside the window [fraction]")
    p.add_argument("--sidereal", action="store_true",
                   help="fixed source at --delta-obs with the window drifting over one day")
    p.add_argument("--delta-obs", type=float, help="source ratio for --sidereal [x_bar/d]")
    p.add_argument("--jitter", type=float, default=0.0,
                   help="Gaussian spread of the source ratio per pair [x_bar/d]")
    p.add_argument("--trial-log", help="write per-trial CSV here")
    p.add_argument("--stats", help="write stats JSON here")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("paradox", help="round-trip signalling times")
    _common(p)
    _units(p)
    p.add_argument("--beta-g", type=float, help="outbound signal speed, relativity-principle model [c]")
    p.add_argument("--beta", type=float, required=True, help="frame speed [c]")
    p.add_argument("--beta-t", type=float, help="aether tachyon speed; selects the aether model [c]")
    p.set_defaults(func=cmd_paradox)

    p = sub.add_parser("momentum", help="boosted photon or tachyon four-momentum")
    _common(p)
    p.add_argument("--beta-t", type=float, default=8.0, help="tachyon speed in R' [c] (default 8)")
    p.add_argument("--direction", type=vector3, default=np.array([1.0, 0.0, 0.0]),
                   help="unit propagation direction in R' [x,y,z] (default 1,0,0)")
    p.add_argument("--boost", type=vector3, default=np.zeros(3),
                   help="velocity of R' relative to R [c, as x,y,z] (default 0,0,0)")
    p.add_argument("--k", type=float, default=1.0, help="wave number (photon: omega) [1/length]")
    p.add_argument("--hbar", type=float, default=1.0, help="tachyon action constant [arbitrary]")
    p.add_argument("--photon", action="store_true", help="boost a photon instead of a tachyon")
    p.set_defaults(func=cmd_momentum)
    return ap


def read_config(path) -> dict[str, str]:
    """Parse a flat ``key = value`` file."""
    out = {}
    for n, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"{path}:{n}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.lstrip("-").replace("-", "_")] = value
    return out


def _apply_config(parser: argparse.ArgumentParser, sub: argparse.ArgumentParser, values: dict):
    actions = {a.dest: a for a in sub._actions}
    defaults = {}
    for key, value in values.items():
        act = actions.get(key)
        if act is None:
            raise DomainError(f"unknown config key {key!r}")
        if isinstance(act, argparse._StoreTrueAction):
            defaults[key] = value.lower() in {"1", "true", "yes", "on"}
        else:
            # argparse converts string defaults through the option's type
            defaults[key] = value
            act.required = False
    sub.set_defaults(**defaults)


def _peek_config(argv):
    """Find the subcommand and ``--config`` path without enforcing required flags."""
    command = next((a for a in argv if not a.startswith("-")), None)
    config = None
    for i, a in enumerate(argv):
        if a == "--config" and i + 1 < len(argv):
            config = argv[i + 1]
        elif a.startswith("--config="):
            config = a.split("=", 1)[1]
    return command, config


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        command, config = _peek_config(argv)
        if config is not None:
            subparsers = parser._subparsers._group_actions[0].choices
            if command in subparsers:
                _apply_config(parser, subparsers[command], read_config(config))
        args = parser.parse_args(argv)
        if getattr(args, "threads", "absent") is None:
            args.threads = montecarlo.default_threads()
        report = args.func(args)
        _emit(report, args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DomainError, InversionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
