"""End-to-end checks of the command-line interface via subprocess."""

import json
import subprocess
import sys
from pathlib import Path

PKG_ROOT = Path(__file__).resolve().parents[1]


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "hopfmzv", *args],
        capture_output=True,
        text=True,
    )


def test_zeta_plus_value():
    r = run_cli("zeta-plus", "--", "-1", "-1")
    assert r.returncode == 0
    assert r.stdout.strip() == "1/144"


def test_zeta_plus_rejects_positive_arguments():
    r = run_cli("zeta-plus", "1")
    assert r.returncode == 2


def test_bad_word_is_a_usage_error():
    r = run_cli("phi", "dxy")
    assert r.returncode == 2


def test_inadmissible_vector_is_a_domain_error():
    r = run_cli("qz", "--k", "-1", "--trunc", "4")
    assert r.returncode == 1


def test_table_check_against_packaged_reference():
    r = run_cli("table", "--check")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert sum(1 for ln in lines if ln.startswith("PASS")) == 16
    assert "PASS k=(3, 3)  107/100800" in lines
    assert lines[-1] == "checked 16 entries: 16 pass, 0 fail"


def test_table_check_flags_a_corrupt_reference(tmp_path):
    ref = json.loads((PKG_ROOT / "fixtures" / "table1.json").read_text())
    ref[0]["value"] = "3/8"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(ref))
    r = run_cli("table", "--check", str(bad))
    assert r.returncode == 1
    assert "1 fail" in r.stdout


def test_table_json_shape():
    r = run_cli("table", "--json", "--max-k", "1")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["depth"] == 2 and doc["max_k"] == 1
    entries = {tuple(e["k"]): e["value"] for e in doc["entries"]}
    assert entries[(0, 0)] == "1/4"
    assert entries[(1, 1)] == "1/144"
    assert len(entries) == 4


def test_shuffle_output():
    r = run_cli("shuffle", "dy", "dy", "--lambda", "-1")
    assert r.returncode == 0
    assert r.stdout.strip() == "-dyy + 2*ydy"


def test_shuffle_at_lambda_zero():
    r = run_cli("shuffle", "dy", "ddy", "--lambda", "0")
    assert r.returncode == 0
    assert r.stdout.strip() == "dyddy - ydddy"


def test_reduced_coproduct_listing():
    r = run_cli("coproduct", "dydy", "--lambda", "-1", "--reduced")
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "1  y (x) ddy",
        "2  dy (x) dy",
        "-1  dy (x) ddy",
        "1  ddy (x) y",
        "-1  ddy (x) dy",
    ]


def test_coproduct_methods_agree_as_json():
    a = run_cli("coproduct", "ddydy", "--lambda", "3", "--json", "--method", "recursive")
    b = run_cli(
        "coproduct", "ddydy", "--lambda", "3", "--json", "--method", "combinatorial"
    )
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_phi_series_line():
    r = run_cli("phi", "dydy", "--prec", "3")
    assert r.returncode == 0
    assert (
        r.stdout.strip()
        == "3*z^-4 + z^-3 + 1/240 - 1/240*z - 1/1008*z^2 + 1/3024*z^3 + O(z^4)"
    )


def test_psi_series_json():
    r = run_cli("psi", "dy", "--prec", "6", "--json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["ord"] == -1
    assert doc["valid_through"] == 6
    assert doc["coeffs"] == ["-1/2", "0", "1/12", "0", "-7/720", "0", "31/30240", "0"]


def test_li_line():
    r = run_cli("li", "--k", "-1", "--trunc", "6")
    assert r.returncode == 0
    assert r.stdout.strip() == "t + 2*t^2 + 3*t^3 + 4*t^4 + 5*t^5 + 6*t^6 + O(t^7)"


def test_qz_line():
    r = run_cli("qz", "--k", "1,1", "--trunc", "8")
    assert r.returncode == 0
    assert r.stdout.strip() == "q^2 + q^3 + q^4 + 3*q^5 + q^6 + 4*q^7 + 2*q^8 + O(q^9)"


def test_birkhoff_block():
    r = run_cli("birkhoff", "dydy", "--kind", "phi", "--prec", "1")
    assert r.returncode == 0
    assert r.stdout.splitlines() == [
        "chi       = 3*z^-4 + z^-3 + 1/240 - 1/240*z + O(z^2)",
        "chi_bar   = -3*z^-4 + 1/144 - 1/240*z + O(z^2)",
        "chi_minus = 3*z^-4 + O(z^2)",
        "chi_plus  = 1/144 - 1/240*z + O(z^2)",
    ]


def test_verify_suite_runs_clean():
    r = run_cli("verify", "--suite", "rota-baxter")
    assert r.returncode == 0
    assert "FAIL" not in r.stdout
    assert r.stdout.splitlines()[-1].endswith("checks passed")


def test_output_is_deterministic():
    a = run_cli("table", "--json")
    b = run_cli("table", "--json")
    assert a.stdout == b.stdout


def test_packaged_fixtures_match_repo_copies():
    for name in ("table1.json", "example_series.json"):
        repo = (PKG_ROOT / "fixtures" / name).read_bytes()
        packaged = (PKG_ROOT / "src" / "hopfmzv" / "fixtures" / name).read_bytes()
        assert repo == packaged, name
