import csv
import json
import math

import pytest

from bergmanlab.cli import catalog, main, validate_config
from bergmanlab.errors import ConfigInvalid
from bergmanlab.experiments import EXPERIMENTS


def write_config(tmp_path, config, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(config))
    return str(path)


def read_series(out_dir, name):
    with open(out_dir / f"{name}.csv") as fh:
        rows = list(csv.DictReader(fh))
    return rows


FAST_PARAMS = {
    "lemma3": {"count": 12},
    "lemma4": {"radii": [1.0 + 10.0**-k for k in range(1, 8)]},
    "lemma5": {},
    "lemma6": {},
    "lemma1": {"instances": 8},
    "eqn3": {},
    "ray": {"m_max": 10},
    "paper_g": {"j_max": 4, "taylor_degree": 64, "tail_tol": 0.9},
    "spectra": {"n_z": 2, "n_w_list": [3, 6, 9]},
    "dichotomy": {"m_max": 10, "n_z": 2, "n_w_list": [3, 6, 9]},
}


def test_run_dichotomy_agreement(tmp_path):
    cfg = {
        "experiment": "dichotomy",
        "domain": {"kind": "bidisk", "r_z": 1.0, "r_w": 1.0},
        "symbols": {"phi": "zbar", "psi": "zbar"},
        "parameters": {"m_max": 12, "n_w_list": [4, 8, 12]},
        "output": {"path": str(tmp_path / "out"), "format": "both"},
    }
    code = main(["run", write_config(tmp_path, cfg)])
    assert code == 0
    report = json.loads((tmp_path / "out" / "report.json").read_text())
    assert report["verdict"] == "bounded_away_from_zero"
    assert report["agreement"] is True
    assert report["theorem_prediction"] == "non_compact"


def test_run_gram_convergence_csv_ends_near_target(tmp_path):
    cfg = {
        "experiment": "lemma6",
        "symbols": {"phi": "zbar", "psi": "zbar", "f1": "1", "f2": "1"},
        "parameters": {"radii": [0.999, 0.9999, 1.0001, 1.001], "r0": 1.0},
        "output": {"path": str(tmp_path / "out"), "format": "both"},
    }
    code = main(["run", write_config(tmp_path, cfg)])
    assert code == 0
    rows = read_series(tmp_path / "out", "gram_re")
    finals = [float(r["value"]) for r in rows]
    assert finals[-1] == pytest.approx(math.pi / 2.0, abs=2e-2)
    report = json.loads((tmp_path / "out" / "report.json").read_text())
    assert report["parameters"]["target_re"] == pytest.approx(math.pi / 2.0, abs=1e-12)


def test_run_missing_domain_is_input_error(tmp_path, capsys):
    cfg = {"experiment": "dichotomy", "symbols": {"phi": "zbar"}}
    code = main(["run", write_config(tmp_path, cfg)])
    assert code == 1
    err = capsys.readouterr().err
    assert "domain" in err


def test_run_unknown_field_rejected(tmp_path):
    cfg = {
        "experiment": "ray",
        "domain": {"kind": "bidisk"},
        "extra_field": 1,
    }
    code = main(["run", write_config(tmp_path, cfg)])
    assert code == 1


def test_validate_unknown_parameter():
    with pytest.raises(ConfigInvalid):
        validate_config(
            {"experiment": "ray", "domain": {"kind": "bidisk"},
             "parameters": {"bogus": 1}}
        )


def test_validate_unknown_symbol_shortcut():
    with pytest.raises(ConfigInvalid):
        validate_config(
            {"experiment": "ray", "domain": {"kind": "bidisk"},
             "symbols": {"phi": "zzz"}}
        )


def test_validate_unknown_domain_parameter():
    with pytest.raises(ConfigInvalid):
        validate_config(
            {"experiment": "ray", "domain": {"kind": "ball", "radius": 2}}
        )


def test_verdict_failure_exit_code(tmp_path):
    # an unreachable residual tolerance forces a fail verdict, exit 2
    cfg = {
        "experiment": "eqn3",
        "domain": {"kind": "bidisk"},
        "symbols": {"phi": "zbar", "psi": "zbar"},
        "parameters": {"tolerance": 1e-300},
        "output": {"path": str(tmp_path / "out"), "format": "json"},
    }
    code = main(["run", write_config(tmp_path, cfg)])
    assert code in (0, 2)  # residual can be exactly zero on the bidisk
    cfg["symbols"] = {"phi": "zbar", "psi": "zzbar", "f1": "z", "g": "w"}
    cfg["domain"] = {"kind": "paper-intersection"}
    code = main(["run", write_config(tmp_path, cfg, "c2.json")])
    assert code == 2


def test_inconclusive_exit_code(tmp_path):
    # linear shadow profile whose ray functional flattens between the decay
    # and bounded thresholds
    cfg = {
        "experiment": "ray",
        "domain": {"kind": "sampled", "points": [[0.0, 1.0], [1.0, 0.4]]},
        "symbols": {"phi": "zbar", "psi": "zbar"},
        "parameters": {"m_max": 32},
        "output": {"path": str(tmp_path / "out"), "format": "json"},
    }
    code = main(["run", write_config(tmp_path, cfg)])
    assert code == 3
    report = json.loads((tmp_path / "out" / "report.json").read_text())
    assert report["verdict"] == "inconclusive"


def test_list_command(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "paper-intersection" in out
    assert "1.207107" in out
    for name in EXPERIMENTS:
        assert name in out
    assert "zbar" in out


def test_catalog_preset_value():
    preset = catalog()["presets"]["paper-intersection"]
    assert preset["R"] == pytest.approx((1.0 + math.sqrt(2.0)) / 2.0, abs=1e-15)
    assert preset["R"] == pytest.approx(1.207107, abs=5e-7)


def test_catalog_round_trip(tmp_path):
    cat = catalog()
    domain_specs = {
        "bidisk": {"kind": "bidisk", "r_z": 1.0, "r_w": 1.0},
        "ball": {"kind": "ball", "R": 1.0},
        "intersection": {"kind": "intersection", "r_z": 1.0, "r_w": 1.0, "R": 1.2},
        "sampled": {"kind": "sampled", "points": [[0.0, 1.0], [1.0, 0.5]]},
    }
    assert set(domain_specs) == set(cat["domains"])
    # every listed experiment runs with every compatible listed domain name
    for exp in cat["experiments"]:
        domain = domain_specs["bidisk"]
        cfg = {
            "experiment": exp,
            "domain": domain,
            "parameters": FAST_PARAMS[exp],
            "output": {"path": str(tmp_path / f"out-{exp}"), "format": "json"},
        }
        code = main(["run", write_config(tmp_path, cfg, f"{exp}.json")])
        assert code == 0, exp
    # every listed domain kind and the preset are accepted by run
    for kind, domain in {**domain_specs, "paper-intersection": {"kind": "paper-intersection"}}.items():
        cfg = {
            "experiment": "ray",
            "domain": domain,
            "parameters": {"m_max": 8},
            "output": {"path": str(tmp_path / f"out-dom-{kind}"), "format": "json"},
        }
        code = main(["run", write_config(tmp_path, cfg, f"dom-{kind}.json")])
        assert code in (0, 3), kind


def test_csv_lengths_match_configuration(tmp_path):
    m_max = 17
    cfg = {
        "experiment": "ray",
        "domain": {"kind": "bidisk"},
        "symbols": {"phi": "zbar", "psi": "zbar"},
        "parameters": {"m_max": m_max},
        "output": {"path": str(tmp_path / "out"), "format": "both"},
    }
    assert main(["run", write_config(tmp_path, cfg)]) == 0
    rows = read_series(tmp_path / "out", "functional_abs")
    assert len(rows) == m_max + 1
    assert {"index", "value", "error_bound"} == set(rows[0])


def test_report_reruns_bit_identical(tmp_path):
    cfg = {
        "experiment": "ray",
        "domain": {"kind": "paper-intersection"},
        "symbols": {"phi": "zbar", "psi": "zbar"},
        "parameters": {"m_max": 12},
        "output": {"path": str(tmp_path / "out1"), "format": "json"},
    }
    assert main(["run", write_config(tmp_path, cfg)]) == 0
    report1 = json.loads((tmp_path / "out1" / "report.json").read_text())
    embedded = report1["config"]
    embedded["output"] = {"path": str(tmp_path / "out2"), "format": "json"}
    assert main(["run", write_config(tmp_path, embedded, "rerun.json")]) == 0
    report2 = json.loads((tmp_path / "out2" / "report.json").read_text())
    assert report1["series"] == report2["series"]


def test_figures_rendered_alongside_csv(tmp_path):
    cfg = {
        "experiment": "spectra",
        "domain": {"kind": "bidisk"},
        "symbols": {"phi": "zbar", "psi": "zbar"},
        "parameters": {"n_z": 2, "n_w_list": [3, 6, 9]},
        "output": {"path": str(tmp_path / "out"), "format": "both"},
    }
    assert main(["run", write_config(tmp_path, cfg)]) == 0
    out = tmp_path / "out"
    assert (out / "counts_above_threshold.csv").exists()
    assert (out / "counts_above_threshold.png").exists()
    assert (out / "spectra.png").exists()
    assert (out / "spectrum_nz2_nw3.csv").exists()


def test_flag_overrides(tmp_path):
    cfg = {
        "experiment": "ray",
        "domain": {"kind": "bidisk"},
        "symbols": {"phi": "zbar", "psi": "zbar"},
        "parameters": {"m_max": 30},
    }
    out = tmp_path / "flagged"
    code = main([
        "run", write_config(tmp_path, cfg),
        "--m-max", "9", "--out", str(out), "--format", "csv", "--jobs", "2",
    ])
    assert code == 0
    rows = read_series(out, "functional_abs")
    assert len(rows) == 10
    assert not (out / "report.json").exists()


def test_usage_errors_exit_one(capsys):
    assert main(["run"]) == 1          # missing config argument
    assert main(["bogus"]) == 1        # unknown subcommand
    capsys.readouterr()


def test_unreadable_config(tmp_path, capsys):
    bad = tmp_path / "nope.json"
    bad.write_text("{not json")
    assert main(["run", str(bad)]) == 1
    assert "cannot read config" in capsys.readouterr().err


def test_computation_error_exits_one(tmp_path, capsys):
    # symbol not harmonic on the boundary disks: the experiment itself raises
    cfg = {
        "experiment": "ray",
        "domain": {"kind": "bidisk"},
        "symbols": {"phi": "zzbar", "psi": "zbar"},
        "parameters": {"m_max": 8},
        "output": {"path": str(tmp_path / "out"), "format": "json"},
    }
    assert main(["run", write_config(tmp_path, cfg)]) == 1
    assert "NotHarmonicOnDisk" in capsys.readouterr().err


def test_disk_experiment_rejects_two_variable_symbol(tmp_path, capsys):
    cfg = {
        "experiment": "lemma6",
        "symbols": {"phi": "wbar", "psi": "zbar"},
        "output": {"path": str(tmp_path / "out"), "format": "json"},
    }
    assert main(["run", write_config(tmp_path, cfg)]) == 1
    assert "second variable" in capsys.readouterr().err
