import csv
import json

import pytest

from qeccd.cli import main


def read_csv(path):
    with open(path) as fh:
        return list(csv.DictReader(fh))


def test_coeffs_defaults(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"channel": {"r12": 100.0}, "t_grid": [0.0, 40.0]}))
    assert main(["coeffs", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 0
    rows = read_csv(tmp_path / "o" / "coeffs.csv")
    assert float(rows[0]["A"]) == 1 and float(rows[0]["Re J"]) == 1 and float(rows[0]["H"]) == 0
    for k in "FGH":
        assert float(rows[1][k]) == pytest.approx(1, abs=1e-8)


def test_malformed_config(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text("{not json")
    assert main(["coeffs", "--config", str(cfg), "--out", str(tmp_path)]) == 2
    assert "malformed JSON" in capsys.readouterr().err
    cfg.write_text(json.dumps({"channel": {"gamma": -1}}))
    assert main(["coeffs", "--config", str(cfg), "--out", str(tmp_path)]) == 2
    cfg.write_text(json.dumps({"protocol": {"mode": "sampled"}}))
    assert main(["chi", "--config", str(cfg), "--out", str(tmp_path)]) == 2


def test_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["coeffs", "--out", str(blocker / "sub")]) != 0


def test_chi_direct_identity(tmp_path):
    assert main(["chi", "--method", "direct", "--out", str(tmp_path)]) == 0
    rows = read_csv(tmp_path / "chi_direct.csv")
    nonzero = [(r["row_label"], r["col_label"]) for r in rows if abs(complex(float(r["re"]), float(r["im"]))) > 1e-12]
    assert nonzero == [("II", "II")]


def test_chi_qeccd_exact_and_sampled(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"channel": {"t": 2.0, "r12": 0.1}, "output": {"format": "json"}}))
    assert main(["chi", "--config", str(cfg), "--out", str(tmp_path / "e")]) == 0
    report = json.loads((tmp_path / "e" / "report.json").read_text())
    assert report["max_abs_error"] < 1e-9 and report["configurations"] == 17
    assert (tmp_path / "e" / "chi_qeccd.json").exists() and (tmp_path / "e" / "audit.csv").exists()
    args = ["chi", "--config", str(cfg), "--mode", "sampled", "--shots", "1000000"]
    assert main(args + ["--out", str(tmp_path / "s")]) == 0
    report = json.loads((tmp_path / "s" / "report.json").read_text())
    assert report["max_abs_error"] < 5e-3
    echoed = json.loads((tmp_path / "s" / "config.json").read_text())
    assert isinstance(echoed["protocol"]["seed"], int)


def test_determinism_and_echo(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"channel": {"t": 2.0}, "protocol": {"mode": "sampled", "shots": 1000, "seed": 4}}))
    main(["chi", "--config", str(cfg), "--out", str(tmp_path / "a")])
    main(["chi", "--config", str(cfg), "--out", str(tmp_path / "b")])
    main(["chi", "--config", str(tmp_path / "a" / "config.json"), "--out", str(tmp_path / "c")])
    for name in ("chi_qeccd.csv", "schedule_results.csv", "report.json"):
        first = (tmp_path / "a" / name).read_bytes()
        assert first == (tmp_path / "b" / name).read_bytes() == (tmp_path / "c" / name).read_bytes()


def test_figures(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"figures": {"r12_grid": [0.1, 1.0, 1000.0]}, "t_grid": {"start": 0.0, "stop": 40.0, "num": 81}}))
    assert main(["figures", "--config", str(cfg), "--out", str(tmp_path)]) == 0
    fig1 = read_csv(tmp_path / "fig1.csv")
    assert float(fig1[0]["k0r12"]) == 0 and float(fig1[0]["F"]) == pytest.approx(2 / 3)
    assert fig1[0]["G"] == "" and fig1[0]["G_divergent"] == "1"
    fig3a = read_csv(tmp_path / "fig3a.csv")
    assert {r["r12"] for r in fig3a} == {"0.1", "100.0"}
    fig4 = read_csv(tmp_path / "fig4.csv")
    assert float(fig4[-1]["discord"]) < 1e-6 < float(fig4[0]["discord"])


def test_sweep_and_audit(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"figures": {"r12_grid": [0.1, 10.0], "quantities": ["D"]}, "t_grid": [1.0, 2.0]}))
    assert main(["sweep", "--config", str(cfg), "--out", str(tmp_path)]) == 0
    rows = read_csv(tmp_path / "sweep.csv")
    assert len(rows) == 2 and rows[1]["discord"] == ""
    assert main(["audit", "--out", str(tmp_path)]) == 0
    assert len(read_csv(tmp_path / "audit.csv")) == 96
