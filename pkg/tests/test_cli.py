import csv
import io
import json
import subprocess
import sys

import pytest

from sptcrank.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_table_spt(capsys):
    code, out, _ = run(capsys, "table", "spt", "--max-n", "5")
    assert code == 0
    assert out.splitlines()[0] == "n,spt"
    pairs = [(int(r["n"]), int(r["spt"])) for r in rows_of(out)]
    assert {(3, 5), (4, 10), (5, 14)} <= set(pairs)


def test_table_rankset_q(capsys):
    code, out, _ = run(capsys, "table", "rankset-q", "--n", "4", "--m", "1")
    assert code == 0
    assert rows_of(out) == [{"n": "4", "m": "1", "q": "3"}]


def test_table_ns_mod(capsys):
    code, out, _ = run(capsys, "table", "ns", "--n", "9", "--mod", "5")
    assert code == 0
    values = [int(r["N_S"]) for r in rows_of(out)]
    assert values == [16] * 5


def test_table_json_shape(capsys):
    code, out, _ = run(capsys, "table", "rank", "--n", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"command", "parameters", "generated_rows"}
    assert doc["command"] == "table"
    assert sum(r["N"] for r in doc["generated_rows"]) == 5


def test_table_crank_uses_convention_at_one(capsys):
    _, out, _ = run(capsys, "table", "crank", "--n", "1")
    assert {(int(r["m"]), int(r["M"])) for r in rows_of(out)} == {(-1, 1), (0, -1), (1, 1)}


def test_table_moments(capsys):
    _, out, _ = run(capsys, "table", "moments", "--n", "4", "--max-k", "2")
    rows = rows_of(out)
    assert rows[1]["N_k"] == "20"


@pytest.mark.parametrize(
    "argv",
    [
        ("table", "bogus"),
        ("table", "rank", "--max-n", "-1"),
        ("table", "spt", "--mod", "5"),
        ("table", "ns", "--n", "5", "--mod", "0"),
        ("table", "p-rank", "--m", "-2"),
        ("table", "spt", "--n", "0"),
    ],
)
def test_table_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_table_overflow_is_a_usage_error(capsys):
    code, _, err = run(capsys, "table", "spt", "--n", "500")
    assert code == 2
    assert "64-bit" in err


def test_inspect_phi4_example(capsys):
    code, out, _ = run(capsys, "inspect", "7,6,5,5,4,3,3,2,2,2,2", "--m", "2")
    assert code == 0
    doc = json.loads(out)["report"]
    assert doc["n"] == 41
    assert doc["symbol"] == "(5,4,2,1 / 3,3,2,2,2,2)_{5x3}"
    assert doc["Q_class"] == "Q4"
    assert doc["image"] == "(4,4,1,1,1,1 / 3,3,3,2,2,1)_{5x3}"
    assert doc["trace"]["indices"] == {"k": 2}
    assert doc["inverse_trace"]["indices"]["k'"] == 2


def test_inspect_auto_sorts_with_warning(capsys, caplog):
    code, out, _ = run(capsys, "inspect", "1,5,5", "--m", "3")
    assert code == 0
    assert "reordered" in caplog.text
    assert json.loads(out)["report"]["symbol"] == "(3,2,2,2,2 / )_{3x0}"


def test_inspect_empty(capsys):
    code, out, _ = run(capsys, "inspect", "", "--m", "0")
    assert code == 0
    doc = json.loads(out)["report"]
    assert doc["Q_class"] == "Q1"
    assert doc["image"] == doc["symbol"] == "( / )_{0x0}"


def test_inspect_outside_q(capsys, caplog):
    code, out, _ = run(capsys, "inspect", "3,2,1", "--m", "0")
    assert code == 1
    assert json.loads(out)["report"]["in_Q"] is False
    assert "not in Q" in caplog.text


@pytest.mark.parametrize("bad", ["3,x", "3,0", "2,-1"])
def test_inspect_bad_parts(capsys, bad):
    code, _, _ = run(capsys, "inspect", bad)
    assert code == 2


def test_inspect_csv(capsys):
    code, out, _ = run(capsys, "inspect", "4", "--m", "1", "--format", "csv")
    assert code == 0
    fields = {r["field"]: r["value"] for r in rows_of(out)}
    assert fields["in_Q"] == "True"


def test_verify_conjecture_n0(capsys):
    code, out, _ = run(capsys, "verify", "conjecture", "--max-n", "0")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"command", "parameters", "report"}
    assert doc["report"]["status"] == "pass"


def test_verify_injection_detail(capsys):
    code, out, _ = run(capsys, "verify", "injection", "--m", "2", "--n", "41", "--detail", "--workers", "1")
    assert code == 0
    traces = json.loads(out)["report"]["traces"]
    assert any(t["map"] == "phi4" and t["indices"] == {"k": 2} for t in traces)


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--max-n", "10", "--format", "csv")
    assert code == 0
    rows = rows_of(out)
    assert rows and all(r["status"] == "pass" for r in rows)


def test_verify_byte_stable(capsys):
    _, first, _ = run(capsys, "verify", "moments", "--max-n", "12", "--max-k", "3", "--workers", "1")
    _, second, _ = run(capsys, "verify", "moments", "--max-n", "12", "--max-k", "3", "--workers", "2")
    assert first == second


def test_verify_failure_exit_code(capsys, caplog, monkeypatch):
    from sptcrank import stats

    monkeypatch.setattr(stats, "M_leq", lambda m, n: 10**9)
    code, out, _ = run(capsys, "verify", "conjecture", "--max-n", "3", "--max-m", "1", "--workers", "1")
    assert code == 1
    assert json.loads(out)["report"]["status"] == "fail"
    assert "counterexample" in caplog.text


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "nothing"),
        ("verify", "spt", "--n", "4"),
        ("verify", "conjecture", "--workers", "0"),
        ("verify", "moments", "--max-k", "x"),
    ],
)
def test_verify_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "8", "--max-m", "2", "--max-k", "2", "--workers", "1")
    assert code == 0
    assert json.loads(out)["report"]["check"] == "all"


def test_warning_goes_to_stderr():
    proc = subprocess.run(
        [sys.executable, "-m", "sptcrank", "inspect", "1,2,3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 1
    assert "parts reordered to (3,2,1)" in proc.stderr
    assert json.loads(proc.stdout)["report"]["partition"] == "(3,2,1)"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sptcrank", "table", "rankset-q", "--n", "4", "--m", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["n,m,q", "4,1,3"]
