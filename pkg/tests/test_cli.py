import json

import pytest

from majorana.cli import main
from majorana.experiments import EXPERIMENTS

REQUIRED_SUBCOMMANDS = [
    "check-clifford",
    "theta-isometry",
    "fourier-unitarity",
    "fourier-diagonalization",
    "energy-transform",
    "hankel-specialfns",
    "hankel-roundtrip",
    "angular-momentum",
    "evolve-dirac-residual",
    "boost-unitarity",
    "rotation-2pi-sign",
    "projective-signs",
    "transition-delta",
    "causality-scan",
]


def test_every_required_subcommand_registered():
    for name in REQUIRED_SUBCOMMANDS:
        assert name in EXPERIMENTS


def test_list_prints_catalogue(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for name in REQUIRED_SUBCOMMANDS:
        assert name in out


def test_run_writes_json_report(tmp_path, capsys):
    code = main(["check-clifford", "--out", str(tmp_path)])
    assert code == 0
    payload = json.loads((tmp_path / "check-clifford.json").read_text())
    assert payload["passed"] is True
    assert payload["experiment"] == "check-clifford"
    assert all({"metric", "value", "tolerance", "passed"} <= set(r) for r in payload["records"])
    out = capsys.readouterr().out
    assert "[PASS]" in out


def test_json_flag_prints_summary(tmp_path, capsys):
    code = main(["theta-isometry", "--out", str(tmp_path), "--json"])
    assert code == 0
    line = capsys.readouterr().out.strip().splitlines()[-1]
    summary = json.loads(line)
    assert summary["experiment"] == "theta-isometry"
    assert summary["passed"] is True


def test_config_applies_and_unknown_key_rejected(tmp_path, capsys):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[theta-isometry]\nfields = 3\nn = 4\n")
    assert main(["theta-isometry", "--config", str(cfg), "--out", str(tmp_path)]) == 0
    payload = json.loads((tmp_path / "theta-isometry.json").read_text())
    assert payload["records"][0]["parameters"]["fields"] == 3

    bad = tmp_path / "bad.ini"
    bad.write_text("[theta-isometry]\nbogus_key = 1\n")
    with pytest.raises(SystemExit):
        main(["theta-isometry", "--config", str(bad), "--out", str(tmp_path)])


def test_reports_reproducible_for_fixed_seed(tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    main(["theta-isometry", "--out", str(out1), "--seed", "5"])
    main(["theta-isometry", "--out", str(out2), "--seed", "5"])
    p1 = json.loads((out1 / "theta-isometry.json").read_text())
    p2 = json.loads((out2 / "theta-isometry.json").read_text())

    def strip_time(payload):
        payload.pop("generated_unix", None)
        for r in payload["records"]:
            r.pop("wall_time_s", None)
        return payload

    assert strip_time(p1) == strip_time(p2)


def test_sweep_experiment_writes_table_and_figure(tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[causality-scan]\nns = 4, 8\nx0 = 1.0\n")
    code = main(["causality-scan", "--config", str(cfg), "--out", str(tmp_path)])
    assert code == 0
    assert (tmp_path / "causality-scan__decay.csv").exists()
    assert (tmp_path / "causality-scan__decay.png").exists()
    header = (tmp_path / "causality-scan__decay.csv").read_text().splitlines()[0]
    assert header.split(",")[:3] == ["n", "max_spacelike_norm", "max_spacelike_amplitude"]


def test_no_figures_flag(tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[causality-scan]\nns = 4, 8\n")
    main(["causality-scan", "--config", str(cfg), "--out", str(tmp_path), "--no-figures"])
    assert (tmp_path / "causality-scan__decay.csv").exists()
    assert not (tmp_path / "causality-scan__decay.png").exists()


def test_all_subcommand_runs_everything(tmp_path):
    cfg = tmp_path / "small.ini"
    cfg.write_text(
        "\n".join(
            [
                "[theta-isometry]",
                "fields = 5",
                "[covering-map]",
                "trials = 25",
                "[fourier-unitarity]",
                "n = 8",
                "fields = 2",
                "[fourier-diagonalization]",
                "n = 8",
                "[boost-unitarity]",
                "quad_nodes = 96",
                "rapidities = 0.3",
                "[causality-scan]",
                "ns = 4, 8",
                "[transition-delta]",
                "n = 8",
                "[projective-signs]",
                "composites = 2",
            ]
        )
    )
    code = main(["all", "--config", str(cfg), "--out", str(tmp_path), "--no-figures"])
    assert code == 0
    for name in REQUIRED_SUBCOMMANDS:
        assert (tmp_path / f"{name}.json").exists()
