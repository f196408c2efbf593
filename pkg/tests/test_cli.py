import json
import math
import os

import pytest

from squeezelab import cli, sweep
from squeezelab.sweep import ConfigError, GridAxis, ScenarioConfig


def run(args):
    return cli.main(args)


class TestGridAxis:
    def test_parse(self):
        axis = GridAxis.parse("psi0=0:10:101")
        assert (axis.start, axis.stop, axis.count) == (0.0, 10.0, 101)
        vals = axis.values()
        assert len(vals) == 101
        assert vals[0] == 0.0 and vals[-1] == 10.0

    def test_parse_errors(self):
        for bad in ("psi0=0:10", "psi0:0:10:5", "bogus=0:10:5", "psi0=5:1:10", "psi0=0:10:1"):
            with pytest.raises(ConfigError):
                GridAxis.parse(bad)


class TestScenarioConfig:
    def test_from_json_file(self, tmp_path):
        path = tmp_path / "scenario.json"
        path.write_text(
            json.dumps(
                {
                    "quantity": "mandel_q",
                    "port": "1",
                    "delta_phi": math.pi / 2.0,
                    "grids": [{"name": "psi0", "start": 0.0, "stop": 6.0, "count": 13}],
                }
            )
        )
        config = ScenarioConfig.from_json_file(str(path))
        assert config.quantity == "mandel_q"
        assert config.grids[0].count == 13

    def test_bad_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ConfigError):
            ScenarioConfig.from_json_file(str(path))
        with pytest.raises(ConfigError):
            ScenarioConfig.from_json_file(str(tmp_path / "missing.json"))

    def test_validation(self):
        grid = (GridAxis("psi0", 0.0, 1.0, 5),)
        with pytest.raises(ConfigError):
            ScenarioConfig(quantity="nope", grids=grid)
        with pytest.raises(ConfigError):
            ScenarioConfig(grids=())
        with pytest.raises(ConfigError):
            ScenarioConfig(grids=grid, reflectance=1.5)
        with pytest.raises(ConfigError):
            ScenarioConfig(grids=(grid[0], grid[0]))


class TestSweepValues:
    def test_spectrum_sweep_spot_value(self, tmp_path):
        out = tmp_path / "spec.csv"
        code = run(
            [
                "spectrum",
                "--axis",
                "x",
                "--omega0",
                "0",
                "--grid",
                "psi0=0:2:3",
                "--output",
                str(out),
            ]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "psi0,s_x_input"
        first = lines[1].split(",")
        assert float(first[0]) == 0.0
        assert float(first[1]) == 0.25
        mid = lines[2].split(",")
        assert float(mid[0]) == 1.0
        assert float(mid[1]) == pytest.approx(0.0428932, abs=1e-6)
        assert (tmp_path / "spec.gp").exists()

    def test_figure_fig4_landmarks(self, tmp_path):
        out = tmp_path / "fig4.csv"
        code = run(["figure", "fig4", "--grid", "psi0=0:25.13274123:5", "--output", str(out)])
        assert code == 0
        rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
        assert float(rows[0][1]) == pytest.approx(1.0, abs=1e-9)
        # psi0 = 2 pi at the second node
        assert float(rows[1][1]) == pytest.approx(1.0 - 2.0 / math.pi, abs=1e-8)
        assert float(rows[2][1]) == pytest.approx(1.0, abs=1e-8)

    def test_determinism_byte_identical(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        args = ["mandel", "--delta-phi", str(math.pi / 2.0), "--grid", "psi0=0:6:25"]
        assert run(args + ["--output", str(a)]) == 0
        assert run(args + ["--output", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()
        assert a.read_bytes().endswith(b"\n")
        assert b"\r" not in a.read_bytes()

    def test_threaded_matches_serial(self, tmp_path, monkeypatch):
        serial = tmp_path / "serial.csv"
        threaded = tmp_path / "threaded.csv"
        args = [
            "spectrum",
            "--axis",
            "y",
            "--grid",
            "psi0=0:5:11",
            "--grid",
            "omega=0:2:7",
        ]
        monkeypatch.setenv("SQUEEZELAB_THREADS", "1")
        assert run(args + ["--output", str(serial)]) == 0
        monkeypatch.setenv("SQUEEZELAB_THREADS", "4")
        assert run(args + ["--output", str(threaded)]) == 0
        assert serial.read_bytes() == threaded.read_bytes()

    def test_bad_thread_env(self, monkeypatch):
        monkeypatch.setenv("SQUEEZELAB_THREADS", "many")
        with pytest.raises(ConfigError):
            sweep.thread_cap()
        monkeypatch.setenv("SQUEEZELAB_THREADS", "0")
        assert sweep.thread_cap() >= 1


class TestExitCodes:
    def test_bad_grid_exits_2(self, tmp_path, capsys):
        code = run(["spectrum", "--grid", "psi0=5:1:10", "--output", str(tmp_path / "x.csv")])
        assert code == 2
        assert "configuration error" in capsys.readouterr().err

    def test_unknown_quantity_in_config_exits_2(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"quantity": "nope", "grids": [
            {"name": "psi0", "start": 0.0, "stop": 1.0, "count": 5}]}))
        code = run(["spectrum", "--config", str(path), "--output", str(tmp_path / "x.csv")])
        assert code == 2

    def test_verify_unreachable_ft_tolerance_exits_3(self):
        # below machine epsilon: the closed form and the FT route round
        # differently, so this cannot be met
        assert run(["verify", "--ft-tol", "1e-18"]) == 3

    def test_verify_algebraic_only_exits_0(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = run(["verify", "--skip", "oracle", "--output", str(out)])
        assert code == 0
        report = json.loads(out.read_text())
        assert report["passed"] is True
        assert "all checks passed" in capsys.readouterr().out


def test_figure_presets_are_valid():
    for config in sweep.FIGURES.values():
        assert config.quantity in sweep.QUANTITIES
        for grid in config.grids:
            assert grid.count >= 2
