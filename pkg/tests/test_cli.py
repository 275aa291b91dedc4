import csv
import io
import json

from dimlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_counts_csv_row(capsys):
    code, out, _ = run(capsys, "counts", "6", "--format", "csv")
    assert code == 0
    assert out == "6,8,8,2,0,8,10,formula\n"


def test_counts_csv_header(capsys):
    code, out, _ = run(capsys, "counts", "6", "--format", "csv", "--header")
    assert code == 0
    assert out.splitlines() == [
        "n,a,a1,a2,a3,delta,m4,source",
        "6,8,8,2,0,8,10,formula",
    ]


def test_counts_text(capsys):
    code, out, _ = run(capsys, "counts", "6")
    assert code == 0
    lines = out.splitlines()
    assert "n = 6" in lines
    assert "a1 = 8" in lines
    assert "source = formula" in lines


def test_counts_json_mixed_source(capsys):
    code, out, _ = run(capsys, "counts", "13", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["a"] == 32
    assert data["delta"] == 0
    assert data["source"] == "mixed"


def test_counts_rejects_bad_n(capsys):
    assert run(capsys, "counts", "0")[0] == 2
    assert run(capsys, "counts", "six")[0] == 2


def test_counts_past_oracle_bound(capsys):
    # 55 needs the oracle for delta but lies beyond the default bound
    code, out, err = run(capsys, "counts", "55")
    assert code == 2
    assert "error:" in err


def test_verify_clean(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "10")
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for line in lines if line.startswith("ok ")) == 8
    assert not any(line.startswith("FAIL") for line in lines)
    assert lines[-1] == "verify: ok up to n=10 (0 mismatches)"


def test_verify_needs_bound(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "50")
    assert code == 2
    assert "oracle bound" in err
    assert run(capsys, "verify", "--max-n", "10", "--oracle-bound", "9")[0] == 2


def test_tower_text(capsys):
    code, out, _ = run(capsys, "tower", "6,5,4,2,1,1")
    assert code == 0
    assert out.splitlines() == [
        "2,1",
        "- | -",
        "1 | - | 1 | -",
        "- | - | - | - | - | - | 1 | -",
        "w = 3,0,2,1",
    ]


def test_tower_csv_quotes_commas(capsys):
    code, out, _ = run(capsys, "tower", "6,5,4,2,1,1", "--format", "csv", "--header")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [
        ["partition", "weights", "depth"],
        ["6,5,4,2,1,1", "3,0,2,1", "4"],
    ]


def test_parents_text(capsys):
    code, out, _ = run(capsys, "parents", "1", "--r", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert all("eta 0" in line for line in lines)
    assert all("predicted +1  actual +1" in line for line in lines)
    tails = [line.split("parent ")[1] for line in lines]
    assert tails == ["5", "3,2", "2,2,1", "1,1,1,1,1"]


def test_parents_core_too_large(capsys):
    code, _, err = run(capsys, "parents", "2,2", "--r", "2")
    assert code == 2
    assert "core size" in err


def test_parents_csv_blank_prediction_for_tiny_parents(capsys):
    code, out, _ = run(capsys, "parents", "-", "--r", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [
        ["2", "II", "1", "2", "0", "", "1"],
        ["1,1", "II", "2", "2", "0", "", "1"],
    ]


def test_alt_csv_row(capsys):
    code, out, _ = run(capsys, "alt", "9", "--format", "csv")
    assert code == 0
    assert out == "9,8,5,3,2,2,formula\n"


def test_bench_small(capsys):
    code, out, _ = run(capsys, "bench", "--max-n", "8", "--format", "csv", "--header")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["method", "items", "seconds", "rate"]
    assert rows[1][0] == "odd-stream" and rows[1][1] == "37"
    assert rows[2][0] == "full-sweep" and rows[2][1] == "66"


def test_bench_rejects_huge_n(capsys):
    assert run(capsys, "bench", "--max-n", "500")[0] == 2


def test_env_var_sets_bound(capsys, monkeypatch):
    monkeypatch.setenv("DIMLAB_ORACLE_BOUND", "9")
    assert run(capsys, "verify", "--max-n", "10")[0] == 2
    # the command-line flag wins over the environment
    assert run(capsys, "verify", "--max-n", "10", "--oracle-bound", "12")[0] == 0


def test_env_var_junk(capsys, monkeypatch):
    monkeypatch.setenv("DIMLAB_ORACLE_BOUND", "soon")
    code, _, err = run(capsys, "counts", "6")
    assert code == 2
    assert "DIMLAB_ORACLE_BOUND" in err


def test_repeat_runs_are_identical(capsys):
    first = run(capsys, "counts", "12", "--format", "json")
    second = run(capsys, "counts", "12", "--format", "json")
    assert first == second
