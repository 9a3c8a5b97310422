import json

import pytest

from fanosieve.cli import main
from fanosieve.report import golden_dir


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tables_markdown(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0
    assert "## candidates_low" in out
    assert "| {2} | 2 | 45 | 133 | 55/16 | =3.4375 |" in out
    assert "| {4} | 4 | 81 | None |  |  |" in out


def test_tables_csv_to_directory(capsys, tmp_path):
    code, _, _ = run(capsys, "tables", "--format", "csv", "--out", str(tmp_path))
    assert code == 0
    text = (tmp_path / "candidates_high.csv").read_text(encoding="utf-8")
    assert '"673,677,693,697"' in text


def test_tables_narrow_window(capsys):
    code, out, _ = run(capsys, "tables", "--format", "csv", "--window", "66", "70")
    assert code == 0
    assert ",141," not in out.split("## candidates_q6")[0]


def test_classify_json(capsys, tmp_path):
    code, _, err = run(capsys, "classify", "--format", "json", "--emit-excluded",
                       "--out", str(tmp_path))
    assert code == 0
    payload = json.loads((tmp_path / "survivors.json").read_text(encoding="utf-8"))
    assert len(payload["rows"]) == 11
    summary = json.loads((tmp_path / "bound_summary.json").read_text(encoding="utf-8"))
    assert summary["rows"][0]["max_degree"] == "200/3"
    assert summary["rows"][0]["q_values"] == "2,4,5,10,20,40"
    assert "maximum surviving degree: 200/3" in err


def test_wps_consistent_basket(capsys):
    code, out, _ = run(capsys, "wps", "1", "1", "3", "5", "--basket", "(3,1)")
    assert code == 0
    assert "degree (-K)^3: 200/3" in out
    assert "weil index: 10" in out
    assert "point (1/3)(1,1,2): terminal" in out
    assert "point (1/5)(1,1,3): canonical-not-terminal" in out
    assert "h0(-K): 36" in out
    assert "basket {(3,1)}: consistent" in out


def test_wps_inconsistent_basket_exits_1(capsys):
    code, out, _ = run(capsys, "wps", "1", "1", "3", "5", "--basket", "(2,1)")
    assert code == 1
    assert "inconsistent" in out


def test_wps_smooth(capsys):
    code, out, _ = run(capsys, "wps", "1", "1", "1", "1")
    assert code == 0
    assert "strata: none (smooth)" in out


def test_wps_non_isolated_strata_labelled(capsys):
    code, out, _ = run(capsys, "wps", "2", "2", "3", "5")
    assert code == 0
    assert "NOT-SUPPORTED" in out


def test_wps_ill_formed_exits_2(capsys):
    code, _, err = run(capsys, "wps", "2", "2", "4", "5")
    assert code == 2
    assert "not well-formed" in err


def test_reid_tai_command(capsys):
    code, out, _ = run(capsys, "reid-tai", "3", "1", "1", "2")
    assert code == 0
    assert "terminal" in out


def test_reid_tai_non_coprime_exits_2(capsys):
    code, _, err = run(capsys, "reid-tai", "4", "2", "1", "1")
    assert code == 2
    assert "not coprime" in err


def test_curve_search_command(capsys):
    code, out, _ = run(capsys, "curve-search", "211/21", "--lcm-divisor", "21",
                       "--nonempty")
    assert code == 0
    assert "{(A2,1),(A6,1)}" in out
    assert "1 configuration(s)" in out


def test_curve_search_bad_bound_exits_2(capsys):
    code, _, err = run(capsys, "curve-search", "n/a")
    assert code == 2
    assert "error" in err


def test_diff_against_shipped_goldens(capsys):
    code, out, _ = run(capsys, "diff")
    assert code == 0
    assert out.count("PASS") == 10


def test_diff_against_empty_dir_exits_1(capsys, tmp_path):
    code, out, _ = run(capsys, "diff", "--golden", str(tmp_path))
    assert code == 1
    assert "FAIL" in out and "missing golden file" in out


def test_diff_explicit_golden_path(capsys):
    code, _, _ = run(capsys, "diff", "--golden", str(golden_dir()))
    assert code == 0
