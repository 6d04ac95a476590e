import csv
import json
import subprocess
import sys

import numpy as np
import pytest

from finite_phase_space import cli
from finite_phase_space.io import sha256


def run(args, tmp_path):
    code = cli.main([*args, "--out", str(tmp_path)])
    return code


def manifest(path, command):
    return json.loads((path / f"manifest_{command}.json").read_text())


def test_spectrum_reference(tmp_path):
    assert run(["spectrum", "--np", "20", "--chi", "1.5"], tmp_path) == 0
    data = json.loads((tmp_path / "spectrum.json").read_text())
    assert data["gap"] == pytest.approx(0.1788, abs=5e-4)
    assert set(data) == {"np", "chi", "energies", "parities", "gap"}


def test_spectrum_two_particles(tmp_path):
    assert run(["spectrum", "--np", "2", "--chi", "1.0"], tmp_path) == 0
    e = json.loads((tmp_path / "spectrum.json").read_text())["energies"]
    np.testing.assert_allclose(e, [-1.1180339887498949, 0, 1.1180339887498949], atol=1e-9)


def test_odd_particle_number_is_config_error(tmp_path, capsys):
    assert run(["spectrum", "--np", "21", "--chi", "1.0"], tmp_path) == 2
    assert "Np must be even" in capsys.readouterr().err


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"np": 21, "chi": 0.5}))
    assert run(["spectrum", "--config", str(cfg)], tmp_path) == 2
    assert run(["spectrum", "--config", str(cfg), "--np", "4"], tmp_path) == 0
    resolved = manifest(tmp_path, "spectrum")["config"]
    assert resolved["np"] == 4 and resolved["chi"] == 0.5


def test_bad_config_key(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"nparticles": 4}))
    assert run(["spectrum", "--config", str(cfg)], tmp_path) == 2


def test_nonpositive_dt(tmp_path):
    assert run(["series", "--dt", "0"], tmp_path) == 2


def test_evolve_defaults(tmp_path):
    assert run(["evolve"], tmp_path) == 0
    names = ["husimi_tau0.csv", "husimi_tau6.5.csv", "husimi_tau15.9.csv", "husimi_tau25.3.csv"]
    for name in names:
        rows = list(csv.reader((tmp_path / name).open()))
        assert rows[0] == ["mu", "nu", "value"] and len(rows) == 442
    vals = np.array([float(r[2]) for r in list(csv.reader((tmp_path / names[0]).open()))[1:]])
    assert abs(vals.sum() - 1) <= 1e-10
    man = manifest(tmp_path, "evolve")
    assert man["localization"]["6.5"]["negative"] >= 0.8
    assert man["localization"]["6.5"]["localized"]
    for entry in man["files"]:
        assert sha256(tmp_path / entry["path"]) == entry["sha256"]


def test_gap_command(tmp_path):
    assert run(["gap"], tmp_path) == 0
    for label in ("eigen-entropy", "mutual-correlation"):
        gap = json.loads((tmp_path / f"gap_{label}.json").read_text())
        assert gap["percent_error"] <= 1.0
        assert (tmp_path / f"series_{label}.csv").exists()


def test_gap_short_span_exit_code(tmp_path):
    assert run(["gap", "--tmax", "10"], tmp_path) == 4


def test_series_writes_requested_labels(tmp_path):
    assert run(["series", "--tmax", "2", "--which", "joint-entropy"], tmp_path) == 0
    lines = (tmp_path / "series_joint-entropy.csv").read_text().splitlines()
    assert lines[0] == "tau,value" and len(lines) == 42


def test_potential_command(tmp_path):
    assert run(["potential", "--samples", "721"], tmp_path) == 0
    rows = list(csv.reader((tmp_path / "profile.csv").open()))
    assert rows[0] == ["phi", "V", "Minv"] and len(rows) == 722
    assert float(rows[1][0]) == -np.pi and float(rows[-1][0]) == np.pi
    centre = [r for r in rows[1:] if float(r[0]) == 0.0][0]
    assert float(centre[1]) == pytest.approx(-10.5, abs=1e-12)
    rep = json.loads((tmp_path / "barrier.json").read_text())
    assert rep["E0"] < rep["barrier_height"] and rep["E1"] < rep["barrier_height"]
    assert rep["levels_below_barrier"][:2] == [0, 1]


def test_validate_passes(tmp_path, capsys):
    assert run(["validate"], tmp_path) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and out.strip().endswith("checks passed")


def test_validate_flipped_convention_fails(tmp_path, capsys):
    assert run(["validate", "--theta-convention", "2"], tmp_path) == 1
    failing = [line for line in capsys.readouterr().out.splitlines() if "FAIL" in line]
    assert any("T^-1 PSD" in line for line in failing)


def test_validate_is_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert cli.main(["validate", "--seed", "7", "--out", str(a)]) == 0
    assert cli.main(["validate", "--seed", "7", "--out", str(b)]) == 0
    assert (a / "validate_report.txt").read_bytes() == (b / "validate_report.txt").read_bytes()


def test_kernel_dump(tmp_path):
    dump = tmp_path / "kernels.txt"
    assert run(["validate", "--dump-kernels", str(dump)], tmp_path) == 0
    assert len(dump.read_text().splitlines()) == 243


def test_reruns_reproduce_checksums(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        assert cli.main(["evolve", "--snapshots", "0", "3", "--out", str(d)]) == 0
    fa = {f["path"]: f["sha256"] for f in manifest(a, "evolve")["files"]}
    fb = {f["path"]: f["sha256"] for f in manifest(b, "evolve")["files"]}
    assert fa == fb


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "finite_phase_space.cli", "spectrum", "--np", "21"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "Np must be even" in proc.stderr
