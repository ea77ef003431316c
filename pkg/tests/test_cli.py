import json

from crossdimer.cli import main


def test_count_command(capsys):
    assert main(["count", "TR:1,2", "--method", "fkt"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["count"] == "100"
    assert out["factors"]["2"] == 2 and out["factors"]["5"] == 2


def test_count_weighted(capsys):
    assert main(["count", "A1:2,2,0", "--weights", "1,1,1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["count"] == "5"


def test_formula_command(capsys):
    assert main(["formula", "A1:9,8,2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["value"] == "302500000000"
    assert main(["formula", "TR:2,4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["value"] == "12100000000"


def test_gen_command(capsys, tmp_path):
    svg = str(tmp_path / "out.svg")
    assert main(["gen", "AR:2,2@full", "--svg", svg]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["vertices"]) == 12
    assert open(svg).read().startswith("<?xml")


def test_probe_command(capsys):
    rc = main(["probe", "A1:2,2,0", "--points", "3,5,7;5,7,3;7,3,5"])
    out = json.loads(capsys.readouterr().out)
    assert rc == 0 and out["consistent"]


def test_usage_error_exit_code(capsys):
    assert main(["count", "XX:1,1"]) == 2
    assert main(["gen", "A1:1,1,0"]) == 2


def test_verify_exit_code(capsys):
    assert main(["verify", "theorem11"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l.strip()]
    recs = [json.loads(l) for l in lines]
    assert all(r["pass"] for r in recs)
