import csv
import json

from jacobi_local.cli import main


def _run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_verify_group_a(tmp_path, capsys):
    out = tmp_path / "a.json"
    code, cap = _run(["verify", "--ids", "A.*", "--seed", "42", "--out", str(out)], capsys)
    assert code == 0
    data = json.loads(out.read_text())
    assert data["summary"] == {"total": 6, "passed": 6, "failed": 0}
    assert data["config"]["seed"] == 42
    assert "6 identities" in cap.out


def test_verify_byte_identical(tmp_path, capsys):
    paths = [tmp_path / "r1.json", tmp_path / "r2.json"]
    for p in paths:
        assert main(["verify", "--ids", "B.*", "--seed", "42", "--samples", "50",
                     "--out", str(p)]) == 0
    capsys.readouterr()
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_usage_errors(capsys):
    assert main(["verify", "--ids", "NOPE"]) == 2
    assert main(["cyclic", "--identity", "F.e5", "--p", "7", "--r", "2"]) == 2
    assert main(["cyclic", "--identity", "A.dd"]) == 2
    assert main(["integrate", "--id", "Z.z1"]) == 2
    assert main(["bogus"]) == 2
    assert main(["master", "--f", "dn^^"]) == 2
    capsys.readouterr()


def test_cyclic(capsys):
    code, cap = _run(["cyclic", "--identity", "A.dd", "--p", "12", "--r", "5", "--s", "3"],
                     capsys)
    assert code == 0 and "PASS" in cap.out
    code, _ = _run(["cyclic", "--identity", "F.e5", "--p", "7", "--r", "2", "--r2", "3",
                    "--period", "2K"], capsys)
    assert code == 0


def test_master_preset(tmp_path, capsys):
    out = tmp_path / "m.json"
    code, cap = _run(["master", "--preset", "eq3.1", "--a", "0.8", "--m", "0.5",
                      "--out", str(out)], capsys)
    assert code == 0 and "class I" in cap.out
    rec = json.loads(out.read_text())["records"][0]
    assert rec["identity_3.1_deviation"] <= 1e-8


def test_integrate(capsys):
    code, cap = _run(["integrate", "--id", "G.g5", "--m", "0.5", "--a", "0.8", "--check"],
                     capsys)
    assert code == 0
    assert json.loads(cap.out.splitlines()[0])["abs_diff"] <= 1e-9
    code, _ = _run(["integrate", "--id", "H.h1", "--n", "3", "--m", "0.4", "--a", "0.7",
                    "--x", "1.2"], capsys)
    assert code == 0


def test_simulate_csv(tmp_path, capsys):
    path = tmp_path / "s.csv"
    code, _ = _run(["simulate", "--m", "0.8", "--delta", "0.1", "--steps", "200",
                    "--csv", str(path)], capsys)
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["n", "y", "reference", "abs_error"] and len(rows) == 202
    assert max(float(r[3]) for r in rows[1:]) <= 1e-10


def test_report_aggregates(tmp_path, capsys):
    good, bad = tmp_path / "good.json", tmp_path / "bad.json"
    assert main(["verify", "--ids", "A.dd", "--samples", "20", "--out", str(good)]) == 0
    assert main(["master", "--f", "dn", "--tol", "0", "--out", str(bad)]) in (0, 1)
    data = json.loads(bad.read_text())
    data["summary"] = {"total": 1, "passed": 0, "failed": 1}
    bad.write_text(json.dumps(data))
    capsys.readouterr()
    code, cap = _run(["report", "--in", str(good)], capsys)
    assert code == 0 and "TOTAL" in cap.out
    agg = tmp_path / "agg.json"
    assert main(["report", "--in", str(good), str(bad), "--out", str(agg)]) == 1
    assert json.loads(agg.read_text())["aggregate"] == {"total": 2, "passed": 1, "failed": 1}
    capsys.readouterr()


def test_config_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 5, "verify": {"samples": 30, "seed": 9}}))
    out = tmp_path / "o.json"
    assert main(["verify", "--ids", "A.dd", "--config", str(cfg), "--seed", "3",
                 "--out", str(out)]) == 0
    conf = json.loads(out.read_text())["config"]
    assert conf["seed"] == 3 and conf["samples"] == 30 and conf["tol"] == 1e-8
    assert main(["verify", "--ids", "A.dd", "--config", str(cfg), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["config"]["seed"] == 9
    assert main(["verify", "--config", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()


def test_json_stdout(capsys):
    code, cap = _run(["simulate", "--steps", "10", "--json"], capsys)
    assert code == 0
    payload = json.loads(cap.out[cap.out.index("{"):])
    assert payload["command"] == "simulate" and payload["schema_version"] == 1
