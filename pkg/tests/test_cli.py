import filecmp

import pytest

from dynmod.cli import main
from dynmod.experiments import known_experiments, resolve_config


def _read_lines(path):
    with open(path, "rb") as f:
        return f.read().split(b"\n")


class TestResolveConfig:
    def test_defaults_fig1(self):
        params = resolve_config("fig1")
        assert params["delta_c"] == 0.0
        assert params["nu"] == 100.0
        assert params["xi_values"] == [0.0, 2.0, 2.404]
        assert (params["lambda_a"], params["lambda_b"]) == (5.0, 0.2)

    def test_defaults_fig6(self):
        params = resolve_config("fig6")
        assert params["omega0"] == 31.0 and params["nu"] == 30.0
        assert params["xi"] == 1.0 and params["temp_values"] == [2.0, 20.0]

    def test_unknown_id(self):
        with pytest.raises(KeyError):
            resolve_config("fig99")

    def test_override_nu_on_fig3(self):
        params = resolve_config("fig3", {"nu": "40"})
        assert params["nu_values"] == [40.0]

    def test_override_omega_c(self):
        params = resolve_config("fig1", {"omega_c": "60"})
        assert params["delta_c"] == pytest.approx(40.0)

    def test_inapplicable_override_rejected(self):
        with pytest.raises(ValueError):
            resolve_config("figB1", {"temp": "2"})


class TestCli:
    def test_unknown_id_exit_2_no_files(self, tmp_path, capsys):
        code = main(["fig99", "--out", str(tmp_path)])
        assert code == 2
        assert list(tmp_path.iterdir()) == []
        assert "fig99" in capsys.readouterr().err

    def test_validate_echoes_parameters(self, capsys):
        code = main(["validate", "fig2"])
        out = capsys.readouterr().out
        assert code == 0
        assert "delta_c = 0.0" in out
        assert "t_max = 100.0" in out
        assert "nu = 100.0" in out
        assert "estimated_runtime" in out

    def test_validate_reports_violated_invariant(self, capsys):
        code = main(["validate", "fig1", "--lambda", "-1"])
        out = capsys.readouterr().out
        assert code == 0
        assert "diagnostic" in out and "lambda" in out

    def test_validate_writes_nothing(self, tmp_path):
        main(["validate", "fig1", "--out", str(tmp_path)])
        assert list(tmp_path.iterdir()) == []

    def test_custom_run_writes_csv_and_summary(self, tmp_path, capsys):
        code = main(["custom", "--out", str(tmp_path), "--t-max", "10"])
        assert code == 0
        assert (tmp_path / "custom.csv").exists()
        assert (tmp_path / "summary.txt").exists()
        lines = _read_lines(tmp_path / "custom.csv")
        assert lines[0].startswith(b"#")
        assert lines[1] == b"omega_t,pe_numeric,pe_analytic"
        # LF endings only
        with open(tmp_path / "custom.csv", "rb") as f:
            assert b"\r" not in f.read()

    def test_summary_is_key_value_text(self, tmp_path):
        main(["custom", "--out", str(tmp_path), "--t-max", "5"])
        with open(tmp_path / "summary.txt") as f:
            for line in f:
                assert " = " in line

    def test_determinism_byte_identical(self, tmp_path):
        a, b = tmp_path / "a", tmp_path / "b"
        for out in (a, b):
            assert main(["custom", "--out", str(out), "--t-max", "10"]) == 0
        assert filecmp.cmp(a / "custom.csv", b / "custom.csv", shallow=False)

    def test_config_file_overrides(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# sample configuration\nxi = 1.0\nt-max = 5\n")
        code = main(["custom", "--out", str(tmp_path), "--config", str(cfg)])
        assert code == 0
        with open(tmp_path / "summary.txt") as f:
            text = f.read()
        assert "param_xi = 1\n" in text
        assert "param_t_max = 5\n" in text

    def test_flag_overrides_config_file(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("xi = 1.0\nt-max = 5\n")
        main(["custom", "--out", str(tmp_path), "--config", str(cfg), "--xi", "2.404"])
        with open(tmp_path / "summary.txt") as f:
            assert "param_xi = 2.404" in f.read()

    def test_malformed_config_file(self, tmp_path, capsys):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("xi 1.0\n")
        code = main(["custom", "--out", str(tmp_path), "--config", str(cfg)])
        assert code == 1
        assert "key = value" in capsys.readouterr().err

    def test_invalid_override_exit_1(self, tmp_path, capsys):
        code = main(["custom", "--out", str(tmp_path), "--lambda", "-2"])
        assert code == 1
        assert "lambda" in capsys.readouterr().err

    def test_thermal_custom_run(self, tmp_path):
        code = main(["custom", "--out", str(tmp_path), "--temp", "2",
                     "--omega0", "31", "--nu", "30", "--xi", "1", "--t-max", "20"])
        assert code == 0
        lines = _read_lines(tmp_path / "custom.csv")
        assert lines[1] == b"omega_t,pe,abs_rho_eg"

    def test_every_experiment_id_resolves(self):
        for fig_id in known_experiments():
            assert resolve_config(fig_id)


class TestCsvFormat:
    def test_twelve_significant_digits(self, tmp_path):
        main(["custom", "--out", str(tmp_path), "--t-max", "5"])
        lines = _read_lines(tmp_path / "custom.csv")
        row = lines[3].decode().split(",")
        for cell in row:
            mantissa = cell.replace("-", "").replace(".", "").split("e")[0].lstrip("0")
            assert len(mantissa) <= 12
