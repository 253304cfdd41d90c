import csv
import io
import json
import math

import pytest

from siegel_lab.cli import format_scalar, main, parse_grid
from siegel_lab.report import GL3_EXTRA_COLUMNS, SWEEP_COLUMNS, fmt


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["specfun", "--fn", "zeta", "--arg", "2"], "1.644934066848226"),
        (["specfun", "--fn", "zeta_star", "--arg", "2"], "0.523598775598299"),
        # closed form sqrt(pi/2)/e = 0.46106850444789452...
        (["specfun", "--fn", "bessel_k", "--nu", "0.5", "--arg", "1"], "0.461068504447895"),
    ],
)
def test_specfun_output(argv, expected, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out.strip() == expected


def test_specfun_log_gamma(capsys):
    code, out, _ = run(["specfun", "--fn", "log_gamma", "--arg", "5"], capsys)
    assert code == 0 and float(out) == pytest.approx(math.log(24), abs=2e-15)


def test_specfun_domain_error(capsys):
    code, _, err = run(["specfun", "--fn", "zeta", "--arg", "1"], capsys)
    assert code == 2 and "pole" in err
    code, _, err = run(["specfun", "--fn", "bessel_k", "--arg", "1"], capsys)
    assert code == 2 and "--nu" in err


def test_format_scalar():
    assert format_scalar(0.5) == "0.500000000000000"
    assert format_scalar(1e-5) == "1.000000000000000e-05"


def test_parse_grid():
    assert parse_grid("50,100,200") == [50.0, 100.0, 200.0]
    assert parse_grid("1e2:1e5:4") == pytest.approx([1e2, 1e3, 1e4, 1e5])
    assert parse_grid("1e2:1e5:4")[-1] == 1e5
    assert parse_grid("") == []


@pytest.mark.parametrize("grid", ["100,50", "1:2", "0:10:3"])
def test_bad_grid_exit_2(grid, capsys):
    code, _, _ = run(["mold-demo", "--preset", "trivial", "--y-grid", grid], capsys)
    assert code == 2


def test_gl2_csv_schema_and_window(capsys):
    code, out, _ = run(["gl2-siegel", "--x", "0.3", "--y-grid", "50,100,200"], capsys)
    assert code == 0
    header = out.splitlines()[0]
    assert header == ",".join(SWEEP_COLUMNS)
    for row in rows_of(out):
        y, beta = float(row["y"]), float(row["beta"])
        assert -2 / math.log(y) < beta < 0


def test_gl2_rejects_low_height(capsys):
    code, _, _ = run(["gl2-siegel", "--Y", "0.01", "--y-grid", "50,100"], capsys)
    assert code == 2


def test_byte_identical_csv(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        assert main(["gl2-siegel", "--y-grid", "50,100", "--out", str(p)]) == 0
    first, second = (p.read_bytes() for p in paths)
    assert first == second
    assert b"\r" not in first and first.endswith(b"\n")


def test_json_mirror(capsys):
    code, out, _ = run(["mold-demo", "--preset", "remark2", "--y-grid", "1e4,1e6", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == "1"
    assert doc["columns"] == list(SWEEP_COLUMNS)
    assert all(r["ratio"] is None for r in doc["rows"])


def test_mold_demo_presets(capsys):
    code, out, _ = run(["mold-demo", "--preset", "trivial", "--y-grid", "10,100"], capsys)
    assert code == 0
    assert [float(r["ratio"]) for r in rows_of(out)] == pytest.approx([1.0, 1.0], rel=1e-9)

    code, out, _ = run(["mold-demo", "--preset", "remark1", "--y-grid", "1e4,1e6"], capsys)
    assert code == 0
    rows = rows_of(out)
    assert all(r["beta"] == "N/A" and "no_bracket" in r["flags"] for r in rows)

    code, out, _ = run(["mold-demo", "--preset", "remark2", "--y-grid", "1e4,1e6"], capsys)
    rows = rows_of(out)
    assert all(r["ratio"] == "N/A" and "remark2" in r["flags"] for r in rows)
    assert all(r["beta"] != "N/A" for r in rows)


def test_strict_exit_3(capsys):
    code, _, _ = run(["mold-demo", "--preset", "remark1", "--y-grid", "1e4", "--strict"], capsys)
    assert code == 3


def test_unknown_preset_exit_2(capsys):
    code, _, err = run(["mold-demo", "--preset", "nope"], capsys)
    assert code == 2 and "unknown preset" in err


def test_gl3_columns_and_boundary(capsys):
    code, out, _ = run(["gl3-siegel", "--regime", "omega2", "--y-grid", "1e4,1e5"], capsys)
    assert code == 0
    assert out.splitlines()[0] == ",".join(SWEEP_COLUMNS + GL3_EXTRA_COLUMNS)
    rows = rows_of(out)
    assert {r["w_max"] for r in rows} == {"S_ALPHA"} and {r["w_ms"] for r in rows} == {"LONG"}

    # lam1 = 0.5 on the hyperplane lies in neither region
    code, _, err = run(["gl3-siegel", "--regime", "omega1", "--lam0", "0.5,0.25,-0.75"], capsys)
    assert code == 4 and "precondition" in err
    # lam0 in Omega2 but omega1 requested
    code, _, _ = run(["gl3-siegel", "--regime", "omega1", "--lam0=-0.8,0.9,-0.1"], capsys)
    assert code == 4


def test_wmax_scan_summary(tmp_path, capsys):
    out_path = tmp_path / "scan.csv"
    code, out, _ = run(["wmax-scan", "--resolution", "400", "--out", str(out_path)], capsys)
    assert code == 0
    assert "mismatches=0" in out
    rows = rows_of(out_path.read_text())
    assert len(rows) == 400
    assert any(r["argmax"] == "IDENTITY" for r in rows)


def test_wmax_scan_small_resolution(capsys):
    with pytest.raises(SystemExit) as info:
        main(["wmax-scan", "--resolution", "5"])
    assert info.value.code == 2


def test_fmt():
    assert fmt(math.nan) == "N/A"
    assert fmt(True) == "true"
    assert fmt(0.1) == "0.10000000000000001"
    assert fmt(7) == "7"
