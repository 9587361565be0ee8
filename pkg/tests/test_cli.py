import json
import subprocess
import sys
from pathlib import Path

import pytest

from deephole import classify, numbertheory
from deephole.cli import (
    ExperimentConfig,
    render_csv,
    render_json,
    report_diff,
    run,
    run_command,
)
from deephole.codes import prs, rs
from deephole.gf import make_field

FIXTURES = Path(__file__).parent / "fixtures"


def _run(argv):
    report, code = run_command(argv)
    return report, code


def test_enum_matches_library():
    report, code = _run(["enum-deep-cosets", "--q", "5", "--k", "3"])
    assert code == 0
    assert report["result"]["total"] == classify.count_deep_cosets(
        prs(make_field(5), 3)
    )
    assert report["result"]["total"] == 100


def test_covering_radius_matches_library():
    report, code = _run(["covering-radius", "--code", "prs", "--q", "5", "--k", "4"])
    assert code == 0
    assert report["result"]["rho"] == 1 == prs(make_field(5), 4).covering_radius()
    report, code = _run(["covering-radius", "--q", "5", "--k", "2"])
    assert code == 0
    assert report["result"]["rho"] == 3 == rs(make_field(5), 2).covering_radius()
    assert report["assertions"]["rho_equals_n_minus_k"]
    report, code = _run(
        ["covering-radius", "--q", "5", "--k", "2", "--set", "1,2,3,4"]
    )
    assert code == 0 and report["result"]["rho"] == 2


def test_ssp_matches_library():
    report, code = _run(["ssp", "--q", "5", "--k", "2"])
    assert code == 0
    g5 = make_field(5)
    assert report["result"]["counts_by_encoding"] == numbertheory.subset_sum_row(
        g5, g5.element_reprs(), 2
    )
    assert report["assertions"]["full_field_counts_positive"]


def test_n3_report():
    report, code = _run(["n3", "--q", "2"])
    assert code == 0
    assert report["result"]["all_match"]
    assert report["result"]["num_rows"] == 3
    assert report["result"]["zero_classes"] == 1
    csv_text = render_csv(report)
    assert csv_text.splitlines()[0] == "q,qpoly,alpha,n3_bruteforce,n3_formula,r3"


def test_family_command():
    report, code = _run(["family", "quadratic", "--q", "5", "--k", "3"])
    assert code == 0
    fams = report["result"]["families"]
    assert len(fams) == 10
    assert all(f["coset_count"] == 24 for f in fams)
    report, code = _run(["family", "degree_k", "--q", "5", "--k", "3"])
    assert code == 0
    assert report["result"]["families"][0]["coset_count"] == 20
    report, code = _run(
        ["family", "zero_sum_free", "--q", "13", "--set", "0,1,2,3,4", "--r", "2"]
    )
    assert code == 0
    assert report["result"]["families"][0]["coset_count"] == 1
    report, code = _run(
        ["family", "inverse_monomial", "--q", "5", "--set", "1,2,3,4", "--k", "2"]
    )
    assert code == 0
    assert report["result"]["num_families"] == 1  # only delta = 0 is outside D


def test_completeness_and_hypergraph():
    report, code = _run(["completeness", "--q", "5"])
    assert code == 0 and report["assertions"]["union_equals_deep_set"]
    report, code = _run(["hypergraph", "--q", "5"])
    assert code == 0
    assert report["result"]["num_vertices"] == 25
    assert all(report["assertions"].values())


def test_cubic_coverage_command():
    report, code = _run(["cubic-coverage", "--q", "5"])
    assert code == 0
    assert report["result"]["total"] == 360


def test_zero_sum_free_command():
    report, code = _run(["zero-sum-free", "--p", "7", "--r", "2"])
    assert code == 0
    assert report["result"]["set"] == [0, 1, 2, 3, 4]
    assert report["result"]["zero_sum_free"] is False
    assert report["result"]["violations"] == [[3, 4]]
    report, code = _run(["zero-sum-free", "--q", "13", "--set", "0,1,2,3,4", "--r", "2"])
    assert code == 0
    assert report["result"]["zero_sum_free"] is True


def test_exit_codes():
    _, code = _run(["enum-deep-cosets", "--k", "3"])  # no field given
    assert code == 1
    _, code = _run(["enum-deep-cosets", "--q", "6", "--k", "3"])  # not a prime power
    assert code == 1
    _, code = _run(["enum-deep-cosets", "--q", "17", "--k", "15"])  # over the guard
    assert code == 1
    _, code = _run(["covering-radius", "--q", "5"])  # missing --k
    assert code == 1
    _, code = _run(["enum-deep-cosets", "--q", "4", "--k", "2"])  # rho hypothesis fails
    assert code == 2
    _, code = _run(["nonsense", "--q", "5"])
    assert code == 1


def test_size_guard_env(monkeypatch):
    monkeypatch.setenv("DEEPHOLE_MAX_Q", "17")
    report, code = _run(["enum-deep-cosets", "--q", "17", "--k", "15"])
    assert code == 0
    assert report["result"]["total"] == 16 * 17 * 17
    monkeypatch.setenv("DEEPHOLE_MAX_Q", "5")
    _, code = _run(["enum-deep-cosets", "--q", "7", "--k", "5"])
    assert code == 1


def test_unsafe_bounds_flag():
    report, code = _run(["enum-deep-cosets", "--q", "17", "--k", "15", "--unsafe-bounds"])
    assert code == 0 and report["result"]["total"] == 16 * 17 * 17


def test_reports_are_deterministic():
    a, _ = _run(["completeness", "--q", "5", "--threads", "1"])
    b, _ = _run(["completeness", "--q", "5", "--threads", "4"])
    a = dict(a)
    b = dict(b)
    a["config"] = dict(a["config"], threads=None)
    b["config"] = dict(b["config"], threads=None)
    assert render_json(a) == render_json(b)
    x, _ = _run(["n3", "--q", "3"])
    y, _ = _run(["n3", "--q", "3"])
    assert render_json(x) == render_json(y)


def test_report_diff():
    a, _ = _run(["enum-deep-cosets", "--q", "5", "--k", "3"])
    b, _ = _run(["enum-deep-cosets", "--q", "5", "--k", "3"])
    assert report_diff(a, b) == []
    b["result"]["total"] = 99
    diff = report_diff(a, b)
    assert len(diff) == 1
    assert diff[0]["path"] == "result.total"
    assert (diff[0]["a"], diff[0]["b"]) == (100, 99)
    c, _ = _run(["n3", "--q", "2"])
    with pytest.raises(ValueError):
        report_diff(a, c)


def test_golden_fixtures():
    cases = {
        "enum-deep-cosets_q5_k3.json": ["enum-deep-cosets", "--q", "5", "--k", "3"],
        "covering-radius_prs_q5_k4.json": [
            "covering-radius", "--code", "prs", "--q", "5", "--k", "4",
        ],
        "n3_q2.json": ["n3", "--q", "2"],
    }
    for name, argv in cases.items():
        golden = json.loads((FIXTURES / name).read_text())
        fresh, code = _run(argv)
        assert code == 0
        assert report_diff(golden, fresh) == []


def test_out_file(tmp_path):
    out = tmp_path / "report.json"
    cfg = ExperimentConfig(command="enum-deep-cosets", q=5, k=3, out=str(out))
    report, code = run(cfg)
    assert code == 0
    # main() writes the file; emulate it through the console path
    rc = subprocess.run(
        [
            sys.executable, "-m", "deephole.cli",
            "enum-deep-cosets", "--q", "5", "--k", "3", "--out", str(out),
        ],
        capture_output=True,
        text=True,
    )
    assert rc.returncode == 0 and rc.stdout == ""
    assert json.loads(out.read_text())["result"]["total"] == 100


def test_console_entry_point_json():
    rc = subprocess.run(
        [sys.executable, "-m", "deephole.cli", "enum-deep-cosets", "--q", "5", "--k", "3"],
        capture_output=True,
        text=True,
    )
    assert rc.returncode == 0
    assert json.loads(rc.stdout)["result"]["total"] == 100
    rc2 = subprocess.run(
        [sys.executable, "-m", "deephole.cli", "enum-deep-cosets", "--q", "5", "--k", "3"],
        capture_output=True,
        text=True,
    )
    assert rc2.stdout == rc.stdout  # byte-identical reruns


def test_rejected_config_produces_no_output():
    rc = subprocess.run(
        [sys.executable, "-m", "deephole.cli", "enum-deep-cosets", "--q", "99", "--k", "3"],
        capture_output=True,
        text=True,
    )
    assert rc.returncode == 1
    assert rc.stdout == ""
    assert rc.stderr
