import json

import pytest
from typer.testing import CliRunner

from src.harness.reporting import CSV_HEADER
from src.vertex_removal import app

runner = CliRunner()


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def invoke(tmp_path, *args):
    return runner.invoke(app, ["--out", str(tmp_path / "out"), *args])


def read_out(tmp_path, name):
    return json.loads((tmp_path / "out" / name).read_text())


def csv_row(result):
    lines = result.stdout.splitlines()
    header = lines.index(",".join(CSV_HEADER))
    return lines[header + 1].split(",")


def test_theory(tmp_path):
    job = write(tmp_path, "job.json", {"p": {"3": 1.0}, "mode": "uniform", "alpha": 0.1})
    result = invoke(tmp_path, "theory", job)
    assert result.exit_code == 0
    report = read_out(tmp_path, "theory.json")
    assert report["rho"] == pytest.approx(0.898765432, abs=1e-8)
    assert report["eta"] == pytest.approx(1 / 9, abs=1e-10)


def test_invalid_distribution_exits_2(tmp_path):
    job = write(tmp_path, "job.json", {"p": {"1": 0.5, "3": 0.6}, "r": {"1": 0.0, "3": 0.0}})
    assert invoke(tmp_path, "theory", job).exit_code == 2


def test_critical_alpha(tmp_path):
    p = write(tmp_path, "p.json", {"p": {"1": 0.5, "3": 0.5}})
    result = invoke(tmp_path, "critical-alpha", p, "--mode", "top")
    assert result.exit_code == 0
    assert read_out(tmp_path, "critical_alpha.json")["alpha_c"] == pytest.approx(1 / 6, abs=1e-6)


def test_decompose(tmp_path):
    job = write(tmp_path, "job.json", {"p": {"1": 0.5, "3": 0.5}, "r": {"1": 0.0, "3": 0.5},
                                       "r2": {"1": 0.5, "3": 0.0}})
    assert invoke(tmp_path, "decompose", job).exit_code == 0
    payload = read_out(tmp_path, "decompose.json")
    assert len(payload["transforms"]) == 1
    assert payload["replay_error"] <= 1e-12


def test_decompose_with_delta(tmp_path):
    job = write(tmp_path, "job.json", {"p": {"1": 0.5, "3": 0.5}, "r": {"1": 0.2, "3": 0.0},
                                       "r2": {"1": 0.0, "3": 0.4}})
    assert invoke(tmp_path, "decompose", job, "--delta").exit_code == 0
    payload = read_out(tmp_path, "decompose.json")
    assert payload["delta_mass"] == pytest.approx(0.1)


def test_decompose_wrong_direction_exits_2(tmp_path):
    job = write(tmp_path, "job.json", {"p": {"1": 0.5, "3": 0.5}, "r": {"1": 0.5, "3": 0.0},
                                       "r2": {"1": 0.0, "3": 0.5}})
    assert invoke(tmp_path, "decompose", job).exit_code == 2


def test_compare(tmp_path):
    p = write(tmp_path, "p.json", {"p": {"1": 0.5, "3": 0.5}})
    result = invoke(tmp_path, "--seed", "3", "compare", p, "--alpha", "0.1", "--n", "2000")
    assert result.exit_code == 0
    table = read_out(tmp_path, "compare.json")
    assert table["holds"]
    assert [row["label"] for row in table["rows"]] == ["top", "uniform", "bottom"]


def test_local_limit(tmp_path):
    p = write(tmp_path, "p.json", {"1": 1.0})
    assert invoke(tmp_path, "local-limit", p, "--threshold", "5", "--samples", "200").exit_code == 0
    payload = read_out(tmp_path, "local_limit.json")
    assert (payload["zeta"], payload["inv_component_mean"]) == (0.0, 0.5)
    assert payload["samples"] == 200


def test_components_dump(tmp_path):
    p = write(tmp_path, "p.json", {"p": {"1": 0.5, "3": 0.5}})
    dump = tmp_path / "graph.txt"
    result = invoke(tmp_path, "components", p, "--n", "200", "--alpha", "0.25", "--dump", str(dump))
    assert result.exit_code == 0
    row = csv_row(result)
    assert row[0] == "200" and float(row[1]) == 0.25
    lines = dump.read_text().splitlines()
    assert sum(line.startswith("v ") for line in lines) == 150
    assert all(line.endswith("normal") for line in lines if line.startswith("v "))


def test_pagerank_kill(tmp_path):
    p = write(tmp_path, "p.json", {"3": 1.0})
    result = invoke(tmp_path, "pagerank-kill", p, "--n", "300", "--threshold", "0.5")
    assert result.exit_code == 0
    # every vertex of a regular graph scores 1 - c^(N+1) < 0.5, so nothing is killed
    assert csv_row(result)[:2] == ["300", "0.0"]


def test_simulate(tmp_path):
    spec = write(tmp_path, "spec.json", {
        "distribution": {"3": 1.0},
        "removal": {"kind": "uniform", "alpha": 0.1},
        "n_grid": [300, 600],
        "replicas": 2,
        "seed": 9,
    })
    assert invoke(tmp_path, "simulate", spec).exit_code == 0
    out = tmp_path / "out"
    assert (out / "rows.csv").read_text().splitlines()[0] == ",".join(CSV_HEADER)
    assert len((out / "rows.jsonl").read_text().splitlines()) == 4
    assert json.loads((out / "report.json").read_text())["theory"]["eta"] == pytest.approx(1 / 9)


def test_simulate_fails_on_broken_bound(tmp_path, monkeypatch):
    monkeypatch.setattr("src.vertex_removal.bound_violations", lambda *args, **kwargs: ["e_upper"])
    spec = write(tmp_path, "spec.json", {
        "distribution": {"3": 1.0},
        "removal": {"kind": "uniform", "alpha": 0.1},
        "n_grid": [300],
        "seed": 9,
    })
    assert invoke(tmp_path, "simulate", spec).exit_code == 1


def test_compare_with_workers(tmp_path):
    p = write(tmp_path, "p.json", {"p": {"1": 0.5, "3": 0.5}})
    args = ["compare", p, "--alpha", "0.1", "--n", "1000", "--replicas", "2"]
    assert invoke(tmp_path, "--seed", "3", *args).exit_code == 0
    serial = read_out(tmp_path, "compare.json")
    assert invoke(tmp_path, "--seed", "3", "--threads", "2", *args).exit_code == 0
    assert read_out(tmp_path, "compare.json") == serial
