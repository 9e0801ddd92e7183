import json
import os
import subprocess
import sys

import pytest

from ramcorr.cli import RunConfig, main


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_run_config_validation():
    cfg = RunConfig(sieve_limit=100)
    assert cfg.mode == "float" and cfg.threads == 1
    with pytest.raises(ValueError):
        RunConfig(sieve_limit=1)
    with pytest.raises(ValueError):
        RunConfig(sieve_limit=10, float_tolerance=0.0)
    with pytest.raises(ValueError):
        RunConfig(sieve_limit=10, mode="fast")
    with pytest.raises(ValueError):
        RunConfig(sieve_limit=10, output_format="xml")


def test_compute_examples(capsys):
    code, out, _ = run(["compute", "ramsum", "--q", "4", "--n", "2"], capsys)
    assert code == 0 and out.strip() == "-2"

    code, out, _ = run(["compute", "lambda_n", "--N", "10", "--n", "6"],
                       capsys)
    assert code == 0 and out.strip() == "0"

    code, out, _ = run(["compute", "singular", "--h", "2", "--Q", "10000"],
                       capsys)
    assert code == 0
    assert abs(float(out) - 1.3203) < 1e-2


def test_compute_more_objects(capsys):
    code, out, _ = run(["compute", "lambda_n", "--N", "12", "--n", "8",
                        "--mode", "exact"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("form ") and "log(2)" in lines[0]
    assert lines[1].startswith("value ")

    code, out, _ = run(["compute", "cohen", "--q", "10", "--h", "2"], capsys)
    assert code == 0 and out.strip() == "-1/4"

    code, out, _ = run(["compute", "deviation", "--h", "2", "--q", "15",
                        "--k", "1"], capsys)
    assert code == 0
    assert "/" in out or out.strip().lstrip("-").isdigit()

    code, out, _ = run(["compute", "toth", "--q", "15", "--chi", "3",
                        "--n", "2"], capsys)
    assert code == 0 and out.startswith("order ")

    code, out, _ = run(["compute", "s_sum", "--N", "50", "--q", "6",
                        "--k", "1", "--r", "5"], capsys)
    code2, out2, _ = run(["compute", "s_sum_closed", "--N", "50", "--q", "6",
                          "--k", "1", "--r", "5"], capsys)
    assert code == code2 == 0 and out == out2

    code, out, _ = run(["compute", "delta", "--N", "30", "--h", "2"],
                       capsys)
    code2, out2, _ = run(["compute", "delta", "--N", "30", "--h", "2",
                          "--route", "form2"], capsys)
    assert code == code2 == 0
    assert abs(float(out) - float(out2)) < 1e-9 * (1 + abs(float(out)))


def test_compute_usage_errors(capsys):
    code, _, err = run(["compute", "ramsum", "--q", "4"], capsys)
    assert code == 2 and "missing" in err

    code, _, _ = run(["compute", "nosuch", "--q", "1"], capsys)
    assert code == 2

    code, _, err = run(["compute", "brauer", "--q", "12", "--d", "2",
                        "--n", "1"], capsys)
    assert code == 2 and "squarefree" in err


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(["verify", "s_sum", "--pairmax", "6"], capsys)
    assert code == 0
    assert "closed forms" in out and "pass" in out
    assert "checks passed" in out

    # an impossible tolerance must trip the suite and exit 1
    code, out, _ = run(["verify", "ramanujan", "--qmax", "8",
                        "--tolerance", "1e-15"], capsys)
    assert code == 1 and "FAIL" in out


def test_verify_reports_counts(capsys):
    code, out, _ = run(["verify", "ramanujan", "--qmax", "16"], capsys)
    assert code == 0
    assert "oracle equivalence" in out
    # pass lines carry n/n counts
    assert any("/" in line and line.endswith("pass")
               for line in out.splitlines())


def test_experiment_trend(tmp_path, capsys):
    out_file = tmp_path / "trend.csv"
    code, out, _ = run(["experiment", "delta-trend", "--grid", "20,40,60",
                        "--h", "2", "--out", str(out_file)], capsys)
    assert code == 0
    text = out_file.read_text()
    lines = text.strip().split("\n")
    assert lines[0] == "N,h,delta,delta_over_N"
    assert len(lines) == 4  # header + one row per grid point
    assert (tmp_path / "trend.png").exists()


def test_experiment_trend_exact_has_form_column(tmp_path, capsys):
    out_file = tmp_path / "trend.csv"
    code, _, _ = run(["experiment", "delta-trend", "--grid", "10,14",
                      "--h", "1", "--mode", "exact", "--no-plot",
                      "--out", str(out_file)], capsys)
    assert code == 0
    lines = out_file.read_text().strip().split("\n")
    assert lines[0] == "N,h,delta,delta_eval,delta_over_N"
    assert "log(" in lines[1]


def test_experiment_delange_monotone(tmp_path, capsys):
    out_file = tmp_path / "dl.csv"
    code, _, _ = run(["experiment", "delange", "--N", "15", "--M", "40",
                      "--no-plot", "--out", str(out_file)], capsys)
    assert code == 0
    rows = out_file.read_text().strip().split("\n")[1:]
    vals = [float(r.split(",")[1]) for r in rows]
    assert len(vals) == 40
    assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))


def test_experiment_hl_json(tmp_path, capsys):
    out_file = tmp_path / "hl.json"
    code, _, _ = run(["experiment", "hl", "--N", "3000", "--k", "1",
                      "--Q", "400", "--prime-bound", "20000",
                      "--no-plot", "--out", str(out_file)], capsys)
    assert code == 0
    doc = json.loads(out_file.read_text())
    assert doc["kind"] == "hl"
    data = doc["data"]
    assert set(data) >= {"N", "k", "h", "corr_over_N",
                         "singular_truncated", "singular_euler"}
    assert "elapsed" not in data
    assert doc["meta"]["version"]
    assert data["h"] == 2


def test_experiment_reruns_are_byte_identical(tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    for path in (a, b):
        code, _, _ = run(["experiment", "delta-trend", "--grid", "15,30",
                          "--h", "3", "--out", str(path)], capsys)
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    pa = (tmp_path / "a.png").read_bytes()
    pb = (tmp_path / "b.png").read_bytes()
    assert pa == pb

    ja = tmp_path / "a.json"
    jb = tmp_path / "b.json"
    for path in (ja, jb):
        code, _, _ = run(["experiment", "hl", "--N", "1500", "--k", "2",
                          "--Q", "200", "--prime-bound", "5000",
                          "--no-plot", "--out", str(path)], capsys)
        assert code == 0
    assert ja.read_bytes() == jb.read_bytes()


def test_experiment_io_error(tmp_path, capsys):
    bad = tmp_path / "missing" / "deep" / "x.csv"
    code, _, err = run(["experiment", "delange", "--N", "10", "--M", "10",
                        "--no-plot", "--out", str(bad)], capsys)
    assert code == 3 and "error" in err


def test_config_file_with_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"q": 5, "n": 10}))
    code, out, _ = run(["compute", "ramsum", "--config", str(cfg)], capsys)
    assert code == 0 and out.strip() == "4"  # c_5(10) = phi(5)

    code, out, _ = run(["compute", "ramsum", "--config", str(cfg),
                        "--n", "3"], capsys)
    assert code == 0 and out.strip() == "-1"  # flag overrides file


def test_env_sieve_limit(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("NT_SIEVE_LIMIT", "20")
    code, _, err = run(["compute", "ramsum", "--q", "30", "--n", "6"],
                       capsys)
    assert code == 2 and "sieve range" in err
    # explicit flag wins over the environment
    code, out, _ = run(["compute", "ramsum", "--q", "30", "--n", "6",
                        "--sieve-limit", "64"], capsys)
    assert code == 0 and out.strip() == "-2"


def test_bad_subcommand_exits_2(capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2


def test_entry_point_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "ramcorr.cli", "compute", "ramsum",
         "--q", "9", "--n", "3"],
        capture_output=True, text=True,
        env={**os.environ, "NT_SIEVE_LIMIT": ""})
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-3"
