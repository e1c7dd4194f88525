import csv
import io
import json

import pytest

from genus3euler.cli import OutputRecord, main
from genus3euler.fixtures import TABLE4, TABLE5, TABLE7


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_nonhyp(capsys):
    assert run(capsys, "eval", "m3-nonhyp", "8,2,0")[:2] == (0, "37\n")


def test_eval_breakdown(capsys):
    code, out, _ = run(capsys, "eval", "a3", "0,0,0", "--breakdown")
    assert code == 0
    assert out.splitlines()[0] == "5"
    assert "m30_term: 2" in out and "a111_term: 1" in out


def test_eval_coverage_exit(capsys):
    code, _, err = run(capsys, "eval", "a3", "40,0,0")
    assert code == 2
    assert "M2 x A1" in err and "--m2-table" in err


def test_eval_small_spaces(capsys):
    assert run(capsys, "eval", "a1", "10")[:2] == (0, "-3\n")
    assert run(capsys, "eval", "m2", "0,0")[:2] == (0, "1\n")
    assert run(capsys, "eval", "h3", "40")[:2] == (0, "-3825\n")


@pytest.mark.parametrize("argv", [
    ["eval", "m3", "1,2,0"],
    ["eval", "m3", "x"],
    ["eval", "nowhere", "0,0,0"],
    ["eval", "m3", "0,0,0", "--breakdown"],
    ["table", "m3", "--max-weight", "-1"],
    ["table", "m3"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_table_m3_csv(capsys):
    code, out, _ = run(capsys, "table", "m3", "--max-weight", "10", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["lambda1", "lambda2", "lambda3", "space", "value"]
    assert len(rows) == 67
    got = {(int(r["lambda1"]), int(r["lambda2"]), int(r["lambda3"])): int(r["value"]) for r in rows}
    for lam, row in TABLE4.items():
        assert got[lam] == row[2]
    for lam, v in TABLE5.items():
        if sum(lam) <= 10:
            assert got[lam] == v


def test_table_a3_json(capsys):
    code, out, _ = run(capsys, "table", "a3", "--max-weight", "10", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 38
    for d in data:
        assert d["value"] == TABLE7[tuple(d["lambda"])]
        assert d["breakdown"]["total"] == d["value"]


def test_table_a1(capsys):
    code, out, _ = run(capsys, "table", "a1", "--max-weight", "0")
    assert out == "lambda1,lambda2,lambda3,space,value\n0,0,0,a1,1\n"


def test_table_deterministic(capsys):
    first = run(capsys, "table", "a3", "--max-weight", "8", "--format", "json")[1]
    second = run(capsys, "table", "a3", "--max-weight", "8", "--format", "json")[1]
    assert first == second


def test_table_annotates_or_aborts(capsys):
    code, out, err = run(capsys, "table", "h3", "--max-weight", "12", "--format", "json")
    assert code == 0
    missing = [d for d in json.loads(out) if d["value"] is None]
    assert len(missing) == 19 and all("error" in d for d in missing)
    assert run(capsys, "table", "h3", "--max-weight", "12", "--strict")[0] == 2


def test_extension_table(capsys, tmp_path):
    f = tmp_path / "h3.csv"
    f.write_text("12,0,0,-9\n", encoding="utf-8")
    assert run(capsys, "eval", "h3", "12,0,0", "--h3-table", str(f))[:2] == (0, "-9\n")
    assert run(capsys, "eval", "h3", "12,0,0", "--h3-table", str(tmp_path / "none"))[0] == 1


def test_record_round_trip():
    rec = OutputRecord.from_dict({"lambda": [3, 1, 0], "space": "m3", "value": 0})
    assert OutputRecord.from_dict(rec.as_dict()) == rec
    rec = OutputRecord.from_dict({"lambda": [4, 0, 0], "space": "a1", "value": -1})
    assert OutputRecord.from_dict(json.loads(json.dumps(rec.as_dict()))) == rec


def test_bootstrap_out(capsys, tmp_path):
    f = tmp_path / "m2.csv"
    assert run(capsys, "bootstrap-m2", "--out", str(f))[0] == 0
    lines = [l for l in f.read_text().splitlines() if not l.startswith("#")]
    assert len(lines) == 21 and lines[0] == "0,0,1"


def test_verify_skip(capsys):
    code, out, _ = run(capsys, "verify", "--skip", "bootstrap")
    assert code == 0
    assert out.count("[SKIP]") == 2
