import csv
import subprocess
import sys

import pytest

from sincconv.cli import main, parse_int_list


def run(argv, capsys):
    rc = main(argv)
    out, err = capsys.readouterr()
    return rc, out, err


def test_parse_int_list():
    assert parse_int_list("5:80:5") == list(range(5, 81, 5))
    assert len(parse_int_list("5:80:5")) == 16
    assert parse_int_list("1,3,9") == [1, 3, 9]
    assert parse_int_list("5:7") == [5, 6, 7]
    assert parse_int_list("5:12:5") == [5, 10]
    assert parse_int_list("4,10:12") == [4, 10, 11, 12]


def test_bench_writes_csv(tmp_path, capsys):
    out = tmp_path / "ex1.csv"
    rc, _, _ = run(["bench", "--example", "1", "--method", "de", "--n", "5:80:5", "--out", str(out)], capsys)
    assert rc == 0
    rows = list(csv.reader(out.open()))
    assert len(rows) == 17 and rows[0][0] == "example"
    assert all(r[1] == "de" and r[8] == "ok" for r in rows[1:])


def test_bench_to_stdout_both_methods(capsys):
    rc, out, _ = run(["bench", "--example", "1,2", "--n", "3", "--no-timings"], capsys)
    assert rc == 0
    rows = list(csv.reader(out.splitlines()))
    assert [(r[0], r[1]) for r in rows[1:]] == [("1", "de"), ("1", "se"), ("2", "de"), ("2", "se")]


def test_bench_byte_identical_across_runs_and_workers(tmp_path, capsys):
    paths = []
    for k, workers in enumerate(["1", "4", "1"]):
        p = tmp_path / f"run{k}.csv"
        argv = ["bench", "--example", "1,4,9", "--n", "4:12:4", "--no-timings", "--workers", workers, "--out", str(p)]
        assert run(argv, capsys)[0] == 0
        paths.append(p.read_bytes())
    assert paths[0] == paths[1] == paths[2]


def test_workers_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("SINCCONV_WORKERS", "3")
    assert run(["bench", "--example", "1", "--n", "2,3"], capsys)[0] == 0
    monkeypatch.setenv("SINCCONV_WORKERS", "many")
    rc, _, err = run(["bench", "--example", "1", "--n", "2"], capsys)
    assert rc == 1 and "SINCCONV_WORKERS" in err


def test_spectrum_im1(capsys):
    rc, out, err = run(["spectrum", "--kind", "im1", "--m", "257"], capsys)
    assert rc == 0
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ["kind", "m", "n", "re", "im"] and len(rows) == 258
    assert "min_real_part=" in err and "positive=True" in err


def test_spectrum_grid_with_summary(tmp_path, capsys):
    eig_csv, summ = tmp_path / "e.csv", tmp_path / "s.csv"
    argv = ["spectrum", "--kind", "de", "--n", "4,16,64", "--out", str(eig_csv), "--summary", str(summ)]
    rc, out, _ = run(argv, capsys)
    assert rc == 0 and out.count("summary") == 3
    rows = list(csv.reader(summ.open()))
    radii = [float(r[3]) for r in rows[1:]]
    assert radii[0] > radii[1] > radii[2]


def test_eval_prints_17_digits(capsys):
    rc, out, _ = run(["eval", "--example", "3", "--method", "de", "--n", "48", "--x", "1.0"], capsys)
    assert rc == 0
    fields = dict(line.split(" ", 1) for line in out.strip().splitlines())
    assert abs(float(fields["approx"]) - float(fields["reference"])) <= 1e-9
    assert float(fields["abs_error"]) <= 1e-9
    mantissa = fields["reference"].split("e")[0].replace("-", "").replace(".", "").lstrip("0")
    assert len(mantissa) == 17


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bench"],
        ["bench", "--n", "4", "--bogus"],
        ["bench", "--n", "x"],
        ["bench", "--n", "9:1"],
        ["bench", "--example", "10", "--n", "4"],
        ["bench", "--example", "1", "--method", "de", "--n", "4", "--d-de", "2.0"],
        ["bench", "--example", "1", "--n", "0"],
        ["bench", "--n", "4", "--workers", "0"],
        ["bench", "--n", "4", "--matfun", "qr"],
        ["eval", "--example", "3", "--method", "de", "--n", "8", "--x", "2.5"],
        ["eval", "--example", "0", "--method", "de", "--n", "8", "--x", "1"],
        ["eval", "--example", "3", "--method", "both", "--n", "8", "--x", "1"],
        ["eval", "--example", "3", "--method", "de", "--n", "8", "--x", "nan"],
        ["spectrum", "--kind", "im1", "--n", "4"],
        ["spectrum", "--kind", "se", "--m", "4"],
        ["spectrum", "--kind", "xx", "--m", "4"],
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    rc, out, err = run(argv, capsys)
    assert rc == 1
    assert err.strip()


def test_computational_failure_exits_2(capsys):
    # no circle separates the spectrum from the branch point at the origin
    rc, _, err = run(["eval", "--example", "7", "--method", "se", "--n", "4", "--x", "1", "--matfun", "contour"], capsys)
    assert rc == 2 and "contour" in err


def test_selftest_reports_failures(tmp_path, capsys):
    good = tmp_path / "good"
    bad = tmp_path / "bad"
    good.mkdir()
    bad.mkdir()
    (good / "test_ok.py").write_text("def test_ok():\n    assert True\n")
    (bad / "test_no.py").write_text("def test_no():\n    assert False\n")
    assert main(["selftest", "--tests-dir", str(good)]) == 0
    assert main(["selftest", "--tests-dir", str(bad)]) == 2
    assert main(["selftest", "--tests-dir", str(tmp_path / "missing")]) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sincconv", "eval", "--example", "1", "--method", "se", "--n", "4", "--x", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("approx ")
