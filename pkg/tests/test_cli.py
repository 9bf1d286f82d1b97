"""Exit codes, output documents, and the printable polynomial catalog."""

import json
import subprocess
import sys

import pytest

from modinvar.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_relations_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "relations", "--q", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["overall"] == "pass"
    assert doc["suite"] == "relations"


def test_unsupported_q_exits_two(capsys):
    code, _, err = run_cli(capsys, "relations", "--q", "6")
    assert code == 2
    assert "NotPrime" in err


def test_text_format(capsys):
    code, out, _ = run_cli(capsys, "relations", "--q", "2",
                           "--format", "text")
    assert code == 0
    assert out.strip().endswith("overall: pass")
    assert "[pass] T0" in out


def test_out_file(tmp_path, capsys):
    path = tmp_path / "rep.json"
    code, out, _ = run_cli(capsys, "hilbert", "--q", "2",
                           "--max-degree", "8", "--out", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["suite"] == "hilbert"
    assert doc["params"]["max_degree"] == 8


def test_kernel_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "kernel", "--q", "2",
                           "--max-degree", "10")
    assert code == 0
    assert json.loads(out)["overall"] == "pass"


def test_products_sampled(capsys):
    code, out, _ = run_cli(capsys, "products", "--q", "3",
                           "--sample", "3", "--seed", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["params"]["seed"] == 7
    assert doc["params"]["sample"] == "3"


def test_products_bad_sample(capsys):
    code, _, err = run_cli(capsys, "products", "--q", "2", "--sample", "xx")
    assert code == 2


def test_show_u0(capsys):
    code, out, _ = run_cli(capsys, "show", "u0", "--q", "5")
    assert code == 0
    assert out.strip() == "x1*y1 + x2*y2"


def test_show_h_matches_c1s(capsys):
    _, h_out, _ = run_cli(capsys, "show", "h", "--s", "0", "--q", "3")
    _, c_out, _ = run_cli(capsys, "show", "c1s", "--q", "3")
    assert h_out == c_out


def test_show_c1(capsys):
    code, out, _ = run_cli(capsys, "show", "c1", "--q", "2")
    assert code == 0
    assert out.strip() == "x1^2 + x1*x2 + x2^2"


def test_show_identity_difference_is_zero(capsys):
    code, out, _ = run_cli(capsys, "show", "Ks", "--s", "1", "--q", "3")
    assert code == 0
    assert out.strip() == "0"


def test_show_unknown_name(capsys):
    code, _, err = run_cli(capsys, "show", "nope", "--q", "2")
    assert code == 2
    assert "unknown name" in err


def test_show_s7_relation(capsys):
    code, out, _ = run_cli(capsys, "show", "W", "--q", "2")
    assert code == 0
    assert out.strip() == "U0^3 + Um1*U1"


def test_reduce_document(capsys):
    code, out, _ = run_cli(capsys, "reduce", "A:1,1,0", "A:1,1,0",
                           "--q", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["reverified"] == "pass"
    assert doc["q"] == 2
    assert doc["field"] == {"p": 2, "s": 1, "modulus": None}
    assert set(doc["cofactors"]) == {"T1", "T1s", "T00", "T01", "T10"}
    assert doc["ell"]["A:1,1,0"] == "C0*C0s"


def test_reduce_trivial(capsys):
    code, out, _ = run_cli(capsys, "reduce", "A:0,0,0", "A:0,0,0",
                           "--q", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["ell"] == {"A:0,0,0": "1"}


def test_reduce_bad_spec(capsys):
    code, _, err = run_cli(capsys, "reduce", "A:9,9,9", "A:0,0,0",
                           "--q", "2")
    assert code == 2


def test_invariance_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "invariance", "--q", "2")
    assert code == 0


def test_timeout_exit_three(capsys):
    code, out, _ = run_cli(capsys, "kernel", "--q", "3",
                           "--max-degree", "16", "--timeout-secs", "0")
    assert code == 3
    doc = json.loads(out)
    assert doc["overall"] == "fail"
    assert any(it["status"] == "timeout" for it in doc["items"])


def test_console_script_installed():
    out = subprocess.run([sys.executable, "-m", "modinvar.cli",
                          "show", "d2", "--q", "2"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "x1^2*x2 + x1*x2^2"


def test_extension_field_with_modulus(capsys):
    code, out, _ = run_cli(capsys, "relations", "--q", "4",
                           "--modulus", "t^2+t+1")
    assert code == 0
    assert json.loads(out)["overall"] == "pass"
