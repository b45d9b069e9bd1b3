import io
import json
import math
from contextlib import redirect_stderr, redirect_stdout

import numpy as np
import pytest

from planetomo.cli import main


def run_cli(*argv):
    out = io.StringIO()
    err = io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_symbols_csv_contains_cross_coefficient():
    code, out, _ = run_cli("symbols", "--degree", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k,i,j,value"
    assert "1,1,1,1.2732395447351628" in lines  # 4/pi


def test_symbols_degree_zero():
    code, out, _ = run_cli("symbols", "--degree", "0", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1] == f"0,0,0,{1 / (2 * math.pi)!r}"


def test_symbols_json_schema():
    code, out, _ = run_cli("symbols", "--degree", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 3
    assert [entry["k"] for entry in payload["symbols"]] == [0, 1, 2, 3]
    assert abs(payload["symbols"][1]["coeffs"]["x^2 y^1"] - 10 / math.pi) < 1e-12


def test_symbols_json_round_trip_byte_identical():
    code, out, _ = run_cli("symbols", "--degree", "4")
    assert code == 0
    reparsed = json.loads(out)
    assert json.dumps(reparsed, allow_nan=False) + "\n" == out


def test_symbols_degree_cap_exit_code():
    code, _, err = run_cli("symbols", "--degree", "41")
    assert code == 2
    assert "41" in err


def test_cli_determinism_across_subcommands():
    invocations = [
        ("symbols", "--degree", "3", "--format", "csv"),
        ("grid", "planar", "--state", "fock:1", "--range", "-2:2:0.5"),
        ("expect", "--state", "fock:1", "--observable", "N", "--method", "trace"),
        ("verify", "--suite", "oracle", "--json"),
    ]
    for argv in invocations:
        first = run_cli(*argv)
        second = run_cli(*argv)
        assert first == second
        assert first[0] == 0


def test_grid_planar_vacuum_value():
    code, out, _ = run_cli("grid", "planar", "--state", "fock:0", "--range", "-5:5:0.1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "axis1,axis2,value"
    rows = [tuple(float(cell) for cell in line.split(",")) for line in lines[1:]]
    assert len(rows) == 101 * 101
    target = min(rows, key=lambda row: (row[0] - 1.0) ** 2 + row[1] ** 2)
    assert abs(target[2] - math.exp(-1) / math.sqrt(math.pi)) < 1e-12
    # origin row exported half a cell away
    offsets = [row for row in rows if row[:2] == (0.05, 0.05)]
    assert len(offsets) == 1
    assert not any(row[0] == 0.0 and row[1] == 0.0 for row in rows)


def test_grid_tomogram_peak_position():
    code, out, _ = run_cli("grid", "tomogram", "--state", "coherent:1+0i",
                           "--x", "-6:6:0.05", "--phi", "64")
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    at_zero_angle = [(float(x), float(v)) for x, phi, v in rows if float(phi) == 0.0]
    best_x = max(at_zero_angle, key=lambda item: item[1])[0]
    assert abs(best_x - math.sqrt(2)) <= 0.05 + 1e-12


def test_grid_wigner_negative_region():
    code, out, _ = run_cli("grid", "wigner", "--state", "fock:1", "--range", "-1:1:0.5")
    assert code == 0
    values = [float(line.split(",")[2]) for line in out.splitlines()[1:]]
    assert min(values) < 0


def test_grid_state_validation_exit_code():
    code, _, err = run_cli("grid", "planar", "--state", "fock:9999", "--range", "-1:1:0.5")
    assert code == 2
    assert err


def test_grid_unwritable_path_exit_code(tmp_path):
    code, _, err = run_cli("grid", "planar", "--state", "fock:0", "--range", "-1:1:0.5",
                           "--out", str(tmp_path / "missing_dir" / "out.csv"))
    assert code == 3
    assert err


def test_grid_out_file_written(tmp_path):
    path = tmp_path / "grid.csv"
    code, out, _ = run_cli("grid", "planar", "--state", "fock:0", "--range", "-1:1:0.5",
                           "--out", str(path))
    assert code == 0
    assert out == ""
    content = path.read_text(encoding="utf-8")
    assert content.startswith("axis1,axis2,value\n")
    assert "\r" not in content


def test_grid_missing_axis_flag():
    code, _, err = run_cli("grid", "planar", "--state", "fock:0")
    assert code == 2
    assert "--range" in err


def test_expect_number_all_methods():
    code, out, _ = run_cli("expect", "--state", "fock:3", "--observable", "N", "--method", "all")
    assert code == 0
    payload = json.loads(out)
    for key in ("planar", "optical", "trace"):
        assert abs(payload[key] - 3.0) < 1e-6
    assert payload["deviations"]["planar_abs"] < 1e-6


def test_expect_planar_vacuum_odd_word():
    code, out, _ = run_cli("expect", "--state", "coherent:0+0i",
                           "--observable", "S(1,0)", "--method", "planar")
    assert code == 0
    assert abs(json.loads(out)["planar"]) < 1e-8


def test_expect_kappa_one_documents_half_convention():
    code, out, _ = run_cli("expect", "--state", "coherent:1+1i", "--observable", "S(1,1)",
                           "--method", "all", "--kappa", "1")
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["planar"] - 2.0) < 1e-6
    assert abs(payload["trace"] - 4.0) < 1e-10


def test_expect_parse_error_exit_code():
    code, _, err = run_cli("expect", "--state", "fock:1", "--observable", "Q(1,2)")
    assert code == 2
    assert err


def test_verify_suites_pass():
    for suite in ("oracle", "symbols"):
        code, out, _ = run_cli("verify", "--suite", suite)
        assert code == 0
        assert "checks passed" in out
        assert "FAIL" not in out


def test_verify_pairing_reports_kappa():
    code, out, _ = run_cli("verify", "--suite", "pairing")
    assert code == 0
    assert "kappa=2.0" in out or "kappa=1.9999999999" in out


def test_verify_json_output():
    code, out, _ = run_cli("verify", "--suite", "symbols", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert all(check["passed"] for check in payload["checks"])


def test_verify_loose_tolerance():
    code, _, _ = run_cli("verify", "--suite", "oracle", "--tol", "1e-2")
    assert code == 0
