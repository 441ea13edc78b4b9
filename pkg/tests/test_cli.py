import csv
import io
import os
import subprocess
import sys

import pytest

from gemmlab import __version__, tables
from gemmlab.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main
from gemmlab.pack import FAULT_ENV


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def _rows(text):
    comments = [l for l in text.splitlines() if l.startswith("#")]
    body = "\n".join(l for l in text.splitlines() if not l.startswith("#"))
    return comments, list(csv.DictReader(io.StringIO(body)))


def test_model_refined_row(capsys):
    code, out, _ = _run(capsys, "model", "--mk", "6x8", "-m", "2000", "-n", "2000", "-k", "224")
    assert code == EXIT_OK
    comments, rows = _rows(out)
    assert len(rows) == 1
    assert (rows[0]["mc"], rows[0]["kc"], rows[0]["ac_pct"]) == ("1024", "224", "87.5")
    assert any("carmel" in c and "refined" in c and __version__ in c for c in comments)
    assert any("OMP_PROC_BIND" in c for c in comments)


def test_model_static_row(capsys):
    code, out, _ = _run(capsys, "model", "--mk", "6x8", "--policy", "static",
                        "-m", "2000", "-n", "2000", "-k", "64")
    row = _rows(out)[1][0]
    assert (row["mc"], row["ac_kib"], row["ac_pct"], row["ac_max_pct"]) == ("120", "60.0", "2.9", "--")


def test_model_epyc_row(capsys):
    code, out, _ = _run(capsys, "model", "--machine", "epyc7282", "--mk", "8x6",
                        "-m", "2000", "-n", "2000", "-k", "64")
    row = _rows(out)[1][0]
    assert (row["mc"], row["nc"], row["kc"]) == ("768", "2000", "64")


def test_model_auto_kernel_and_machine_path(capsys, tmp_path):
    from gemmlab.hwdesc import load_machine, serialize_machine_desc

    p = tmp_path / "mine.json"
    p.write_text(serialize_machine_desc(load_machine("carmel")))
    code, out, _ = _run(capsys, "model", "--machine", str(p), "-m", "500", "-n", "500", "-k", "96")
    row = _rows(out)[1][0]
    assert code == EXIT_OK and (row["mr"], row["nr"]) == ("12", "4")


@pytest.mark.parametrize("table, count", [("t2", 16), ("t3", 16), ("fig4", 8)])
def test_table_rows(capsys, table, count):
    code, out, _ = _run(capsys, "table", "--table", table)
    comments, rows = _rows(out)
    assert code == EXIT_OK and len(rows) == count
    assert any("model-default" in c for c in comments)
    if table == "t2":
        assert [r["policy"] for r in rows[:4]] == ["static", "refined", "static", "refined"]


@pytest.mark.parametrize("table", tables.TABLE_IDS)
def test_table_matches_golden_bytes_except_nc(capsys, table):
    from importlib import resources

    _, out, _ = _run(capsys, "table", "--table", table)
    _, rows = _rows(out)
    golden = resources.files("gemmlab.golden").joinpath(f"{table}.csv").read_text()
    gold_rows = list(csv.DictReader(io.StringIO(golden)))
    diffs = [(i, col) for i, (g, a) in enumerate(zip(gold_rows, rows)) for col in tables.HEADER
             if col != "nc" and g[col] != a[col]]
    if table == "fig4":
        assert diffs == [(4, "br_pct")]  # the known erratum
    else:
        assert diffs == []


def test_table_to_file(capsys, tmp_path):
    dest = tmp_path / "t3.csv"
    assert main(["table", "--table", "t3", "--csv", str(dest)]) == EXIT_OK
    assert len(_rows(dest.read_text())[1]) == 16


def test_bench_gemm_records(capsys):
    code, out, _ = _run(capsys, "bench", "gemm", "-m", "120", "-n", "100",
                        "--k-list", "64:256:32", "--mk", "6x8")
    comments, rows = _rows(out)
    assert code == EXIT_OK and len(rows) == 7
    assert any("median-of-3" in c for c in comments)
    for r in rows:
        assert int(r["repetitions"]) >= 3
        flops = float(r["flop_count"])
        assert flops == 2 * 120 * 100 * int(r["k"])
        assert float(r["gflops"]) * float(r["median_seconds"]) * 1e9 == pytest.approx(flops, rel=1e-5)


def test_bench_gemm_verify_passes(capsys):
    code, out, _ = _run(capsys, "bench", "gemm", "-m", "257", "-n", "257", "--k-list", "257",
                        "--verify", "--threads", "2", "--parallel-loop", "g4")
    rows = _rows(out)[1]
    assert code == EXIT_OK and rows[0]["check"] == "pass" and rows[0]["parallel_loop"] == "g4"


def test_bench_lu_records(capsys):
    code, out, _ = _run(capsys, "bench", "lu", "-s", "512", "--b-list", "64,128", "--verify")
    rows = _rows(out)[1]
    assert code == EXIT_OK and len(rows) == 2
    for r in rows:
        assert float(r["check"]) <= 50
        assert float(r["flop_count"]) == pytest.approx(2 / 3 * 512 ** 3)


def test_bench_lu_b_larger_than_s(capsys):
    code, _, err = _run(capsys, "bench", "lu", "-s", "64", "--b-list", "128")
    assert code == EXIT_USAGE and "1 <= b <= s" in err


def test_usage_errors(capsys):
    assert _run(capsys, "bench", "gemm", "--threads", "4", "--k-list", "8", "-m", "8", "-n", "8")[0] == EXIT_USAGE
    assert _run(capsys, "bench", "gemm", "--reps", "2", "--k-list", "8", "-m", "8", "-n", "8")[0] == EXIT_USAGE
    assert _run(capsys, "model", "--mk", "6by8", "-m", "1", "-n", "1", "-k", "1")[0] == EXIT_USAGE
    assert _run(capsys, "model", "--machine", "nowhere.json", "-m", "1", "-n", "1", "-k", "1")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["table", "--table", "t9"])
    assert exc.value.code == EXIT_USAGE


def test_model_error_exit(capsys, tmp_path):
    p = tmp_path / "tiny.json"
    p.write_text('{"name": "tiny", "registers": {"simd_bits": 128, "count": 32, "element_bits": 64},'
                 ' "caches": [{"level": 1, "size_kib": 64, "assoc": 2, "line_bytes": 64}]}')
    code, _, err = _run(capsys, "model", "--machine", str(p), "--mk", "6x8", "-m", "9", "-n", "9", "-k", "9")
    assert code == EXIT_USAGE and "associativity" in err


@pytest.mark.parametrize("suite", ["ccp", "pack", "gemm", "lu"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = _run(capsys, "verify", "--suite", suite, "--seed", "1")
    assert code == EXIT_OK and out.startswith(f"{suite}: PASS")


def test_verify_ccp_reports_erratum(capsys):
    _, out, _ = _run(capsys, "verify", "--suite", "ccp")
    assert "known erratum" in out


def test_verify_is_deterministic(capsys):
    first = _run(capsys, "verify", "--suite", "gemm", "--seed", "1")
    assert first == _run(capsys, "verify", "--suite", "gemm", "--seed", "1")


def test_injected_fault_fails_pack_suite(capsys, monkeypatch):
    monkeypatch.delenv(FAULT_ENV, raising=False)
    code, out, _ = _run(capsys, "verify", "--suite", "pack", "--inject-fault", "pack-padding")
    assert code == EXIT_VERIFY and "pack: FAIL" in out
    assert FAULT_ENV not in os.environ
    assert _run(capsys, "verify", "--suite", "pack")[0] == EXIT_OK


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gemmlab.cli", "table", "--table", "fig4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.count("\n") >= 9
