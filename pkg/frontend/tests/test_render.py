"""Renders every figure id from CSVs produced by the dynmod CLI (the only
interface this package consumes) and checks the schema-failure paths."""

import hashlib
import subprocess

import pytest

from figure_plots.cli import main as cli_main
from figure_plots.render import RENDERERS, read_csv, render
from figure_plots.schemas import FIGURE_FILES, SchemaError

# coarse grids for the heavy sweeps so the suite stays fast; the schemas are
# identical to the full-resolution runs
OVERRIDES = {
    "fig2": "xi-step = 1\n",
    "fig4": "nu-step = 100\nxi-step = 4\n",
    "fig5": "nu-step = 140\nxi-step = 4\n",
    "fig6": "t-max = 50\n",
    "fig7": "temp-points = 60\n",
    "fig8": "temp-points = 20\nnu-step = 5\n",
    "figD1": "temp-points = 40\nt-max = 50\n",
}


@pytest.fixture(scope="session")
def csv_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("csvs")
    for fig_id in FIGURE_FILES:
        cmd = ["dynmod", fig_id, "--out", str(out)]
        if fig_id in OVERRIDES:
            cfg = out / f"{fig_id}.cfg"
            cfg.write_text(OVERRIDES[fig_id])
            cmd += ["--config", str(cfg)]
        subprocess.run(cmd, check=True, capture_output=True, text=True)
    return out


# one image per CSV, except fig8 where the ridge file overlays the contour
def _image_count(fig_id):
    return 1 if fig_id == "fig8" else len(FIGURE_FILES[fig_id])


@pytest.mark.parametrize("fig_id", sorted(FIGURE_FILES))
def test_renders_every_figure_id(fig_id, csv_dir, tmp_path):
    paths = render(fig_id, str(csv_dir), str(tmp_path))
    assert len(paths) == _image_count(fig_id)
    for p in paths:
        with open(p, "rb") as f:
            assert f.read(8).startswith(b"\x89PNG")


def test_rendering_is_read_only(csv_dir, tmp_path):
    src = csv_dir / "fig7.csv"
    before = hashlib.sha256(src.read_bytes()).hexdigest()
    render("fig7", str(csv_dir), str(tmp_path))
    assert hashlib.sha256(src.read_bytes()).hexdigest() == before


def test_read_csv_exposes_columns(csv_dir):
    data = read_csv(str(csv_dir / "fig7.csv"))
    assert set(data) == {"T", "pe", "pe_low", "pe_high", "qfi", "qfi_low", "qfi_high"}
    assert data["T"].size > 0


def test_corrupted_header_fails_with_column_diff(csv_dir, tmp_path):
    src = (csv_dir / "fig7.csv").read_text().splitlines()
    src[1] = src[1].replace("qfi_low", "qfi_lo")
    bad_dir = tmp_path / "bad"
    bad_dir.mkdir()
    (bad_dir / "fig7.csv").write_text("\n".join(src) + "\n")
    with pytest.raises(SchemaError) as err:
        render("fig7", str(bad_dir), str(tmp_path))
    msg = str(err.value)
    assert "expected" in msg and "qfi_low" in msg and "qfi_lo" in msg


def test_cli_reports_schema_mismatch(csv_dir, tmp_path, capsys):
    bad_dir = tmp_path / "bad"
    bad_dir.mkdir()
    lines = (csv_dir / "figB1.csv").read_text().splitlines()
    lines[1] = "x,y,z"
    (bad_dir / "figB1.csv").write_text("\n".join(lines) + "\n")
    code = cli_main(["figB1", "--in", str(bad_dir), "--out", str(tmp_path)])
    assert code == 1
    assert "column mismatch" in capsys.readouterr().err


def test_missing_units_comment_rejected(csv_dir, tmp_path):
    bad_dir = tmp_path / "bad"
    bad_dir.mkdir()
    lines = (csv_dir / "figB1.csv").read_text().splitlines()
    (bad_dir / "figB1.csv").write_text("\n".join(lines[1:]) + "\n")
    with pytest.raises(SchemaError, match="units comment"):
        render("figB1", str(bad_dir), str(tmp_path))


def test_cli_unknown_figure_id(tmp_path, capsys):
    code = cli_main(["fig99", "--in", str(tmp_path), "--out", str(tmp_path)])
    assert code == 2
    assert "fig99" in capsys.readouterr().err


def test_cli_all_renders_everything(csv_dir, tmp_path, capsys):
    code = cli_main(["all", "--in", str(csv_dir), "--out", str(tmp_path)])
    out = capsys.readouterr().out
    assert code == 0
    expected = sum(_image_count(fig_id) for fig_id in FIGURE_FILES)
    assert len(out.strip().splitlines()) == expected


def test_every_renderer_has_schema_entries():
    assert set(RENDERERS) == set(FIGURE_FILES)


def test_missing_input_file_is_an_error(tmp_path, capsys):
    code = cli_main(["fig7", "--in", str(tmp_path), "--out", str(tmp_path)])
    assert code == 1
    assert "fig7" in capsys.readouterr().err
