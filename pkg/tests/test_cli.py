import json
import subprocess
import sys
from pathlib import Path

import pytest

from ent23.cli import main

STATES_DIR = Path(__file__).resolve().parent.parent / "states"

C_TRIPLE = 0.9428090415820634
E_TRIPLE = 0.9182958340544896


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_text_report(out):
    report = {}
    for line in out.strip().splitlines():
        name, value = line.split()
        report[name] = float(value)
    return report


def test_compute_product_file(capsys):
    code, out, err = run(["compute", str(STATES_DIR / "product_00.json")], capsys)
    assert code == 0 and err == ""
    report = parse_text_report(out)
    assert report["c_amplitude"] == 0.0
    assert report["eof"] == 0.0
    assert report["k1"] == 1.0


def test_compute_bell_file(capsys):
    code, out, _ = run(["compute", str(STATES_DIR / "bell_pair.json")], capsys)
    assert code == 0
    report = parse_text_report(out)
    for name in ("c_amplitude", "c_bloch", "c_schmidt", "eof", "vn_entropy_a"):
        assert abs(report[name] - 1.0) < 1e-10
    assert abs(report["v_norm"] - 0.5) < 1e-10


def test_compute_triple_file_text_and_json(capsys):
    path = str(STATES_DIR / "equal_triple.json")
    code, out, _ = run(["compute", path], capsys)
    assert code == 0
    report = parse_text_report(out)
    assert abs(report["c_amplitude"] - C_TRIPLE) < 1e-10
    assert abs(report["eof"] - E_TRIPLE) < 1e-10

    code, out, _ = run(["compute", path, "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["c_schmidt"] - C_TRIPLE) < 1e-10
    assert abs(payload["vn_entropy_a"] - E_TRIPLE) < 1e-10


def test_compute_prints_12_significant_digits(capsys):
    _, out, _ = run(["compute", str(STATES_DIR / "equal_triple.json")], capsys)
    report = parse_text_report(out)
    assert abs(report["c_amplitude"] - C_TRIPLE) < 1e-14


def test_compute_missing_file_exits_2(capsys):
    code, _, err = run(["compute", "no_such_file.json"], capsys)
    assert code == 2
    assert "error:" in err


def test_compute_bad_dims_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dims": [3, 3], "amplitudes": []}')
    code, _, err = run(["compute", str(bad)], capsys)
    assert code == 2
    assert "unsupported" in err


def test_compute_unnormalized_needs_flag(tmp_path, capsys):
    state = tmp_path / "loose.json"
    state.write_text(json.dumps({
        "dims": [2, 3],
        "amplitudes": [[0.57735, 0.0], [0.0, 0.0], [0.0, 0.0],
                       [0.0, 0.0], [0.57735, 0.0], [0.57735, 0.0]],
    }))
    code, _, err = run(["compute", str(state)], capsys)
    assert code == 2 and "normalized" in err
    code, out, _ = run(["compute", str(state), "--renormalize"], capsys)
    assert code == 0
    assert abs(parse_text_report(out)["c_amplitude"] - C_TRIPLE) < 1e-5


def test_verify_passes_and_exits_0(capsys):
    code, out, _ = run(["verify", "--n", "200", "--seed", "42"], capsys)
    assert code == 0
    assert "overall: pass" in out


def test_verify_single_state_runs(capsys):
    code, out, _ = run(["verify", "--n", "1", "--seed", "1"], capsys)
    assert code == 0
    assert "overall: pass" in out


def test_verify_zero_tolerance_fails(capsys):
    code, out, _ = run(["verify", "--n", "50", "--seed", "42", "--tol", "0"],
                       capsys)
    assert code == 1
    assert "overall: FAIL" in out


def test_verify_json_format(capsys):
    code, out, _ = run(["verify", "--n", "50", "--seed", "3",
                        "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["overall"] is True
    names = {check["name"] for check in payload["checks"]}
    assert "concurrence-amplitude-vs-schmidt" in names
    assert "max-u-v-norm-gap" in payload["observations"]


def test_verify_rejects_bad_arguments():
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "--n", "0"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "--tol", "-1"])
    assert excinfo.value.code == 2


def test_sample_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert main(["sample", "--n", "20", "--seed", "7", "--out", str(out1)]) == 0
    assert main(["sample", "--n", "20", "--seed", "7", "--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_sample_csv_shape_and_ranges(tmp_path, capsys):
    path = tmp_path / "ensemble.csv"
    assert main(["sample", "--n", "50", "--seed", "9", "--out", str(path)]) == 0
    capsys.readouterr()
    lines = path.read_text().splitlines()
    assert lines[0] == "index,c,eof,u_norm,v_norm,k1,k2"
    assert len(lines) == 51
    for index, line in enumerate(lines[1:]):
        fields = line.split(",")
        assert int(fields[0]) == index
        c, eof, u_norm, v_norm, k1, k2 = map(float, fields[1:])
        assert 0.0 <= c <= 1.0
        assert 0.0 <= eof <= 1.0
        assert k1 >= k2 >= 0.0
        assert abs(k1 ** 2 + k2 ** 2 - 1.0) < 1e-10


def test_sample_to_stdout(capsys):
    code, out, _ = run(["sample", "--n", "3", "--seed", "1"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "index,c,eof,u_norm,v_norm,k1,k2"
    assert len(lines) == 4


def test_sample_unwritable_path_exits_2(capsys):
    code, _, err = run(["sample", "--n", "1", "--out", "/no/such/dir/out.csv"],
                       capsys)
    assert code == 2
    assert "error:" in err


def test_module_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "ent23", "sample", "--n", "2", "--seed", "5"],
        capture_output=True, text=True, check=False,
    )
    assert result.returncode == 0
    assert result.stdout.startswith("index,c,eof")
