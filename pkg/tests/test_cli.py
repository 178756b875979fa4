import json
import math

import pytest

from qbsim.cli import main, parse_config_text, render_config_toml
from qbsim import SchemaError, figure_preset

MINIMAL_CONFIG = """\
[base]
j = 1.0
gamma = 0.5
temperature = 0.1

[axis1]
name = "omega_t"
min = 0.0
max = 6.283185307179586
steps = 11

[metric]
name = "ergotropy"
"""


def _csv_data_rows(path):
    return [ln for ln in path.read_text().splitlines() if ln and not ln.startswith("#")][1:]


def test_figure_f2a_outputs(tmp_path, capsys):
    assert main(["figure", "--id", "f2a", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    csv_path = tmp_path / "f2a.csv"
    assert csv_path.exists()
    assert (tmp_path / "f2a.svg").exists()
    assert (tmp_path / "f2a.manifest.json").exists()
    assert len(_csv_data_rows(csv_path)) == 101 * 101
    argmax = float(out.split("argmax_axis1: ")[1].splitlines()[0])
    assert abs(argmax - math.pi / 2) < 2 * math.pi / 100 + 1e-9


def test_figure_f9a_reports_threshold(tmp_path, capsys):
    assert main(["figure", "--id", "f9a", "--out", str(tmp_path), "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert "threshold_dz: " in out
    thr = float(out.split("threshold_dz: ")[1].splitlines()[0])
    assert 2.0 <= thr <= 2.5


def test_figure_unknown_id(tmp_path):
    assert main(["figure", "--id", "f0x", "--out", str(tmp_path)]) == 2


def test_metrics_xx_reference_point(capsys):
    rc = main(["metrics", "--model", "xx", "--J", "1", "--T", "0.1",
               "--theta", "0", "--omega-t", "1.5707963267948966", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["model"] == "xx"
    assert doc["ergotropy_trace"] == pytest.approx(2 / math.sqrt(5), abs=2e-5)
    assert doc["ergotropy_agreement"] < 1e-8
    assert doc["efficiency"] == pytest.approx(1.0)
    assert doc["capacity_literal11"] > 0


def test_metrics_rejects_nonpositive_temperature(capsys):
    assert main(["metrics", "--T", "0"]) == 2
    assert "temperature must be > 0" in capsys.readouterr().err


def test_metrics_zero_phase_has_zero_ergotropy(capsys):
    rc = main(["metrics", "--model", "xyz", "--J", "1", "--T", "0.1", "--omega-t", "0", "--json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert abs(doc["ergotropy_trace"]) < 1e-12
    assert doc["efficiency"] is None


def test_metrics_table_lists_all_indicators(capsys):
    assert main(["metrics", "--model", "xy", "--T", "0.5"]) == 0
    out = capsys.readouterr().out
    for key in ("ergotropy_spectral", "ergotropy_trace", "ergotropy_closed_form", "work",
                "average_power", "peak_average_power", "efficiency", "capacity_literal11",
                "capacity_top_eigenstate", "coherence_thermal"):
        assert key in out


def test_sweep_minimal_config(tmp_path, capsys):
    cfg = tmp_path / "mini.toml"
    cfg.write_text(MINIMAL_CONFIG)
    assert main(["sweep", "--config", str(cfg), "--out", str(tmp_path), "--format", "csv"]) == 0
    rows = _csv_data_rows(tmp_path / "mini.csv")
    assert len(rows) == 11


def test_sweep_unknown_key_names_it(tmp_path, capsys):
    cfg = tmp_path / "bad.toml"
    cfg.write_text(MINIMAL_CONFIG + "\n[axis1]\nwidgets = 3\n")
    assert main(["sweep", "--config", str(cfg), "--out", str(tmp_path)]) == 2
    assert "axis1.widgets" in capsys.readouterr().err


def test_sweep_missing_config_file(tmp_path):
    assert main(["sweep", "--config", str(tmp_path / "nope.toml"), "--out", str(tmp_path)]) == 3


def test_config_roundtrip_matches_figure_preset(tmp_path):
    cfg = figure_preset("f10b")
    text = render_config_toml(cfg)
    parsed = parse_config_text(text)
    assert parsed == cfg


def test_sweep_replicating_f10b_is_bit_identical(tmp_path):
    fig_dir = tmp_path / "fig"
    sweep_dir = tmp_path / "sweep"
    assert main(["figure", "--id", "f10b", "--out", str(fig_dir), "--format", "csv"]) == 0
    cfg_path = tmp_path / "replica.toml"
    cfg_path.write_text(render_config_toml(figure_preset("f10b")))
    assert main(["sweep", "--config", str(cfg_path), "--out", str(sweep_dir), "--format", "csv"]) == 0
    fig_csv = (fig_dir / "f10b.csv").read_bytes()
    rep_csv = (sweep_dir / "replica.csv").read_bytes()
    assert fig_csv == rep_csv


def test_parse_config_rejects_bad_section():
    with pytest.raises(SchemaError, match="bogus"):
        parse_config_text("[bogus]\nx = 1\n" + MINIMAL_CONFIG)


def test_presets_listing(capsys):
    assert main(["presets"]) == 0
    out = capsys.readouterr().out
    assert "f2a" in out and "f11c" in out


def test_manifest_contents(tmp_path):
    assert main(["figure", "--id", "f2a", "--out", str(tmp_path), "--format", "csv",
                 "--threads", "2"]) == 0
    doc = json.loads((tmp_path / "f2a.manifest.json").read_text())
    assert doc["tool_version"]
    assert any(p.endswith("f2a.csv") for p in doc["outputs"])
    assert "config_toml" in doc["config"]
    assert doc["config"]["metadata"]["metric"] == "ergotropy"
