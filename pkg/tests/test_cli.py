import json
import math

import pytest

from tachyon_epr.cli import angle, build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, dict(l.split("=", 1) for l in out.splitlines() if "=" in l), err


def test_angle_parsing():
    assert angle("37.5deg") == pytest.approx(math.radians(37.5))
    assert angle("0.01rad") == 0.01
    with pytest.raises(Exception):
        angle("0.01")


def test_window_reference_case(capsys):
    code, out, _ = run(capsys, "window", "--beta", "-0.4", "--beta-t", "8", "--beta1", "1")
    assert code == 0
    assert float(out["delta_m"]) == pytest.approx(11 / 38, abs=1e-15)
    assert float(out["delta_M"]) == pytest.approx(0.5, abs=1e-15)
    assert out["param.beta_t"] == "8.0"


def test_window_symmetric(capsys):
    _, out, _ = run(capsys, "window", "--beta", "0", "--beta-t", "2")
    assert (float(out["delta_m"]), float(out["delta_M"])) == (-0.5, 0.5)


def test_window_invert(capsys):
    _, out, _ = run(capsys, "window", "--invert", "--delta-m", "0.2894736842", "--delta-M", "0.5")
    assert float(out["beta"]) == pytest.approx(-0.4, abs=1e-9)
    assert float(out["beta_t"]) == pytest.approx(8.0, abs=1e-8)


def test_window_3d(capsys):
    _, out, _ = run(capsys, "window", "--beta", "0.5", "--beta-t", "100", "--theta", "60deg")
    assert float(out["center_3d"]) == pytest.approx(-0.25)


def test_timeline_regime(capsys):
    code, out, _ = run(capsys, "timeline", "--xbar", "0.42")
    assert code == 0 and out["regime"] == "Uncorrelated"


def test_timeline_minkowski(capsys, tmp_path):
    path = tmp_path / "out.csv"
    code, out, _ = run(capsys, "timeline", "--xbar", "0.2", "--minkowski", str(path))
    assert code == 0 and out["tachyon_endpoint"] == "interception"
    last = path.read_text().strip().splitlines()[-1].split(",")
    assert last[0] == "tachyon"
    assert float(last[2]) == pytest.approx(0.86122449, abs=1e-8)
    assert float(last[3]) == pytest.approx(0.66122449, abs=1e-8)


def test_timeline_si_units(capsys):
    _, out, _ = run(capsys, "timeline", "--xbar", "0.0", "--beta", "0", "--units", "si", "--d-meters", "2.5")
    assert out["time_unit"] == "s"
    assert float(out["event.LeftDetection.t"]) == pytest.approx(2.5 / 299_792_458.0)


def test_validation_exit_code(capsys):
    code, _, err = run(capsys, "timeline", "--xbar", "1.5")
    assert code == 2 and "-1 < x_bar/d < 1" in err


def test_bare_angle_rejected():
    with pytest.raises(SystemExit) as e:
        main(["faraci", "--tilt", "0.01"])
    assert e.value.code == 2


def test_faraci(capsys):
    _, out, _ = run(capsys, "faraci", "--delta-obs", "0.72", "--latitude", "37.5deg", "--tilt", "0.01rad")
    assert float(out["beta_center"]) == pytest.approx(0.90754, abs=1e-5)
    assert float(out["beta_halfwidth"]) == pytest.approx(0.00767, abs=1e-5)
    assert float(out["beta_t"]) == pytest.approx(432.7, rel=0.01)
    _, out, _ = run(capsys, "faraci", "--tilt", "0.01rad", "--beta", "0.91")
    assert float(out["beta_t"]) == pytest.approx(432.72, abs=0.01)


def test_paradox(capsys):
    _, out, _ = run(capsys, "paradox", "--beta-g", "8", "--beta", "0.5")
    assert float(out["elapsed"]) == pytest.approx(-0.275)
    assert out["paradoxical"] == "true"
    assert float(out["threshold"]) == pytest.approx(0.24615, abs=1e-5)
    _, out, _ = run(capsys, "paradox", "--beta-t", "8", "--beta", "0.125")
    assert out["model"] == "aether" and float(out["elapsed"]) > 0


def test_momentum(capsys):
    _, out, _ = run(capsys, "momentum", "--boost=-0.4,0,0")
    assert out["backward_in_time"] == "true"
    assert out["p0_sign"] == "-1"
    assert float(out["velocity"].split(",")[0]) == pytest.approx(-7.6 / 2.2)


def test_simulate(capsys, tmp_path):
    stats = tmp_path / "s.json"
    code, out, _ = run(capsys, "simulate", "--pairs", "100000", "--occupancy-target", "0.3333",
                       "--seed", "42", "--stats", str(stats))
    assert code == 0
    corr, se = float(out["correlation"]), float(out["stderr_correlation"])
    assert abs(corr + 0.6667) < 3 * se
    d = json.loads(stats.read_text())
    assert d["seed"] == 42 and "Philox" in d["rng_algorithm"]


def test_simulate_json_output(capsys):
    assert main(["simulate", "--pairs", "100", "--xbar", "0.42", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["occupancy"] == 1.0 and d["params"]["xbar"] == 0.42


def test_sidereal(capsys, tmp_path):
    path = tmp_path / "drift.csv"
    code, out, _ = run(capsys, "sidereal", "--samples", "5", "--drift", str(path),
                       "--delta-obs", "-0.72", "--occupancy-samples", "10000")
    assert code == 0
    assert float(out["d_delta_bar"]) == pytest.approx(2 * 0.91 * math.sin(math.radians(37.5)) * math.sin(0.01))
    assert path.read_text().startswith("t_seconds,theta_rad,delta_bar,d_delta_window\n")


def test_config_file_merged_under_flags(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# reference case\nbeta = 0\nbeta-t = 2\n--xbar = 0.3\n")
    _, out, _ = run(capsys, "timeline", "--config", str(cfg))
    assert out["param.beta"] == "0.0" and out["param.xbar"] == "0.3"
    _, out, _ = run(capsys, "timeline", "--config", str(cfg), "--xbar", "0.9")
    assert out["param.xbar"] == "0.9" and out["regime"] == "CorrelatedViaRightTachyon"


def test_config_angle_and_bool(capsys, tmp_path):
    cfg = tmp_path / "f.cfg"
    cfg.write_text("tilt = 0.01rad\njson = true\n")
    assert main(["faraci", "--config", str(cfg)]) == 0
    assert json.loads(capsys.readouterr().out)["beta_center"] == pytest.approx(0.90754, abs=1e-5)


def test_missing_config_is_io_error(capsys, tmp_path):
    assert main(["window", "--config", str(tmp_path / "nope.cfg")]) == 3


def test_unwritable_output_is_io_error(capsys, tmp_path):
    assert main(["timeline", "--xbar", "0.2", "--minkowski", str(tmp_path / "no" / "x.csv")]) == 3


def test_help_lists_units():
    parser = build_parser()
    sub = parser._subparsers._group_actions[0].choices
    for name, p in sub.items():
        for act in p._actions:
            if act.option_strings and act.dest not in {"help", "config", "json", "invert", "photon",
                                                       "sidereal", "minkowski", "drift",
                                                       "trial_log", "stats", "units", "seed"}:
                assert "[" in (act.help or ""), (name, act.dest)
