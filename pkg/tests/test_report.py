import json
from fractions import Fraction
from pathlib import Path

import pytest

from fanosieve.filters import FilterConstants
from fanosieve.report import (
    ARTIFACT_NAMES,
    RunConfig,
    all_artifacts,
    classify_artifacts,
    diff_against_golden,
    golden_dir,
    tables_artifacts,
)


@pytest.fixture(scope="module")
def artifacts():
    return {a.name: a for a in all_artifacts(RunConfig(emit_excluded=True))}


def test_artifact_set_is_complete(artifacts):
    assert tuple(artifacts) == ARTIFACT_NAMES


def test_runs_are_deterministic():
    config = RunConfig(emit_excluded=True)
    first = {a.name: a.to_csv() for a in all_artifacts(config)}
    second = {a.name: a.to_csv() for a in all_artifacts(config)}
    assert first == second


def test_csv_has_lf_endings_and_header(artifacts):
    for artifact in artifacts.values():
        text = artifact.to_csv()
        assert "\r" not in text
        assert text.splitlines()[0] == ",".join(artifact.columns)


def test_rationals_serialize_as_num_den(artifacts):
    rows = artifacts["survivors"].rows
    assert rows[0][0] == "336/5"
    assert rows[0][3] == "96/5"
    low = artifacts["candidates_low"].rows
    assert low[0][4] == "55/16"


def test_json_round_trip(artifacts):
    for artifact in artifacts.values():
        payload = artifact.to_json_dict()
        assert json.loads(json.dumps(payload)) == payload
        for row in payload["rows"]:
            assert set(row) == set(artifact.columns)


def test_markdown_strikes_crossed_entries(artifacts):
    md = artifacts["cases_high_ja_ne_q"].to_markdown()
    assert "~~25~~" in md and "~~50~~" in md and "~~84~~" in md
    md_a2 = artifacts["cases_low_q_eq_qhat"].to_markdown()
    assert "~~3~~" in md_a2  # the q = 3 entry at scaled degree 141
    md_a3 = artifacts["cases_q6_qhat_ne_q"].to_markdown()
    assert "~~1~~" in md_a3  # every q_hat = 1 line dies by the torsion cover


def test_emit_excluded_false_keeps_survivors_only():
    config = RunConfig(emit_excluded=False)
    arts = {a.name: a for a in all_artifacts(config)}
    a5 = arts["cases_high_ja_ne_q"]
    assert all(row[-2] == "survivor" for row in a5.rows)
    assert len(a5.rows) == 8
    assert len(arts["survivors"].rows) == 7
    # the q = 6 torsion table has no survivors at all
    assert arts["cases_q6_qhat_ne_q"].rows == ()


def test_shipped_goldens_all_pass():
    results = diff_against_golden(golden_dir())
    assert [r.name for r in results] == list(ARTIFACT_NAMES)
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_diff_reports_perturbed_constant(tmp_path):
    config = RunConfig(constants=FilterConstants(weak_fano_bound=Fraction(130)))
    results = diff_against_golden(golden_dir(), config)
    outcome = {r.name: r.passed for r in results}
    assert outcome["cases_low_qhat_ne_q"] is False  # torsion rows flip reason
    assert outcome["candidates_low"] is True        # sieve tables unaffected
    failed = next(r for r in results if r.name == "cases_low_qhat_ne_q")
    assert "row" in failed.detail and "col" in failed.detail


def test_diff_missing_golden_dir(tmp_path):
    results = diff_against_golden(tmp_path)
    assert all(not r.passed for r in results)
    assert all("missing golden file" in r.detail for r in results)


def test_diff_detects_cell_mismatch(tmp_path):
    for artifact in all_artifacts(RunConfig(emit_excluded=True)):
        (tmp_path / f"{artifact.name}.csv").write_text(artifact.to_csv(), encoding="utf-8")
    target = tmp_path / "survivors.csv"
    target.write_text(target.read_text().replace("200/3", "201/3", 1), encoding="utf-8")
    results = {r.name: r for r in diff_against_golden(tmp_path)}
    assert not results["survivors"].passed
    assert "got '200/3', want '201/3'" in results["survivors"].detail


def test_window_config_validation():
    with pytest.raises(ValueError):
        RunConfig(window_lower=Fraction(72), window_upper=Fraction(66))
    with pytest.raises(ValueError):
        RunConfig(output_format="yaml")


def test_classify_artifact_row_counts():
    artifacts, report = classify_artifacts(RunConfig(emit_excluded=True))
    counts = {a.name: len(a.rows) for a in artifacts}
    assert counts["cases_low_qhat_ne_q"] == 39
    assert counts["cases_low_q_eq_qhat"] == 10
    assert counts["cases_q6_qhat_ne_q"] == 22
    assert counts["cases_high_ja_eq_q"] == 19
    assert counts["cases_high_ja_ne_q"] == 56
    assert counts["survivors"] == 11
    assert counts["bound_summary"] == 1
    assert len(report.final_survivors) == 7
