import json

import numpy as np
import pytest

from crbox.cli import EXIT_CONFIG, EXIT_OK, main
from crbox.config import ConfigError, RunConfig
from crbox.cr_operator import gaussian_field, random_field
from crbox.io import read_grid_field, write_csv, write_grid_field, write_json


@pytest.fixture
def outdir(tmp_path, monkeypatch):
    monkeypatch.delenv("CRBOX_OUTPUT_DIR", raising=False)
    return tmp_path


def run(outdir, *argv):
    return main(["--output-dir", str(outdir), *argv])


def report(outdir, name):
    return json.loads((outdir / name / "report.json").read_text())


def test_density_at_n_one(outdir):
    assert run(outdir, "lattice", "density", "--n-max", "1") == EXIT_OK
    assert report(outdir, "lattice-density")["density"] == 1.0


def test_unknown_command_and_bad_option_are_config_errors(outdir):
    assert run(outdir, "lattice", "frobnicate") == EXIT_CONFIG
    assert run(outdir, "lattice", "density") == EXIT_CONFIG
    assert run(outdir, "lattice", "resonant-count", "--L", "1,x") == EXIT_CONFIG


def test_help_exits_zero(outdir, capsys):
    assert run(outdir, "--help") == EXIT_OK
    assert "lattice" in capsys.readouterr().out


@pytest.mark.parametrize("doc", [
    {"experiment": "cr-evolve", "params": {"dt": -1}},
    {"experiment": "cr-evolve", "params": {"n": 7}},
    {"experiment": "cr-evolve", "params": {"wobble": 1}},
    {"experiment": "nls-compare", "params": {"gamma": 1.5}},
    {"experiment": "teleport"},
    {"seed": 3},
])
def test_config_schema_errors(outdir, tmp_path, doc):
    with pytest.raises(ConfigError):
        RunConfig.from_dict(doc)
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(doc))
    assert run(outdir, "cr", "evolve", "--config", str(path)) == EXIT_CONFIG


def test_config_defaults_are_filled():
    cfg = RunConfig.from_dict({"experiment": "cr-evolve", "params": {"dt": 0.01}})
    assert cfg.params["dt"] == 0.01 and cfg.params["n"] == 64


def test_wrong_experiment_for_command(outdir, tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"experiment": "nls-compare"}))
    assert run(outdir, "cr", "evolve", "--config", str(path)) == EXIT_CONFIG


def test_grid_field_roundtrip(tmp_path):
    for f in (gaussian_field(n=16), random_field(3, n=16, basis_degree=6)):
        path = write_grid_field(f, tmp_path / "g")
        back = read_grid_field(path)
        assert back.n == f.n and back.box_half == f.box_half
        assert np.array_equal(back.values, f.values)


def test_json_and_csv_writers(tmp_path):
    write_json({"a": np.float64(1.5), "b": np.arange(3), "c": (1 + 2j)}, tmp_path / "r.json")
    doc = json.loads((tmp_path / "r.json").read_text())
    assert doc["a"] == 1.5 and doc["b"] == [0, 1, 2] and doc["c"] == [1.0, 2.0]
    with pytest.raises(ValueError):
        write_csv({"x": [1, 2], "y": [1]}, tmp_path / "bad.csv")


def test_output_dir_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("CRBOX_OUTPUT_DIR", str(tmp_path / "env"))
    assert main(["--output-dir", str(tmp_path / "flag"), "lattice", "density", "--n-max", "3"]) == 0
    assert (tmp_path / "env" / "lattice-density" / "report.json").exists()
    assert not (tmp_path / "flag").exists()


def test_csv_output_is_deterministic(tmp_path, monkeypatch):
    monkeypatch.delenv("CRBOX_OUTPUT_DIR", raising=False)
    blobs = []
    for name in ("a", "b"):
        assert main(["--output-dir", str(tmp_path / name), "lattice", "resonant-count"]) == 0
        blobs.append(sorted((p.name, p.read_bytes())
                            for p in (tmp_path / name / "lattice-resonant-count").glob("*.csv")))
    assert blobs[0] and blobs[0] == blobs[1]
