"""Table artifacts: deterministic rows, rendered to Markdown, CSV or JSON.

Artifact names and shapes:

  candidates_low / candidates_q6   one row per candidate degree in the
                                   q <= 5 / q = 6 regime, with the exact
                                   slack of the degree bound;
  candidates_high                  one row per index multiset in the q >= 7
                                   regime, degrees merged, slack maximum;
  cases_low_qhat_ne_q, cases_low_q_eq_qhat, cases_q6_qhat_ne_q,
  cases_high_ja_eq_q, cases_high_ja_ne_q
                                   one row per (degree, q_hat, q, J_A)
                                   candidate with status and reason;
  survivors                        the merged survivor table with the final
                                   exclusion stage applied;
  bound_summary                    the resulting degree bound and index set.

CSV is the canonical byte format (UTF-8, LF, header row, rationals as
"num/den"); golden copies of all ten artifacts ship with the package and
``diff_against_golden`` compares a fresh run against them cell by cell.
Candidate rows whose exclusion reason is the one a report marks by
crossing out are struck through in Markdown; CSV and JSON carry the same
information in the status/reason columns.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .arith import (
    Rational,
    decimal_display,
    decimal_string,
    factorization_str,
    format_rational,
)
from .classify import ClassificationReport, run_case_analysis
from .filters import FilterConstants, IndexedCase, Reason
from .sieve import Regime, SieveGroup, build_case_table, rx_set_str

Cell = str | int

ARTIFACT_NAMES = (
    "candidates_low",
    "candidates_q6",
    "candidates_high",
    "cases_low_qhat_ne_q",
    "cases_low_q_eq_qhat",
    "cases_q6_qhat_ne_q",
    "cases_high_ja_eq_q",
    "cases_high_ja_ne_q",
    "survivors",
    "bound_summary",
)


@dataclass(frozen=True)
class RunConfig:
    """Configuration of one reporting run."""

    window_lower: Rational = Fraction(66)
    window_upper: Rational = Fraction(72)
    constants: FilterConstants = FilterConstants()
    output_format: str = "md"
    emit_excluded: bool = False

    def __post_init__(self) -> None:
        if self.window_lower >= self.window_upper:
            raise ValueError(
                f"empty degree window ({self.window_lower}, {self.window_upper})")
        if self.output_format not in ("md", "csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    @property
    def window(self) -> tuple[Rational, Rational]:
        return (Fraction(self.window_lower), Fraction(self.window_upper))


@dataclass(frozen=True)
class TableArtifact:
    """One named table with deterministic rows.

    ``struck`` lists (row, column) cells to strike through in Markdown,
    mirroring the crossing-out convention of the printed case reports.
    """

    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple[Cell, ...], ...]
    struck: tuple[tuple[int, int], ...] = field(default=())

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows(self.rows)
        return buffer.getvalue()

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "columns": list(self.columns),
            "rows": [dict(zip(self.columns, row)) for row in self.rows],
        }

    def to_markdown(self) -> str:
        struck = set(self.struck)
        lines = [
            "| " + " | ".join(self.columns) + " |",
            "| " + " | ".join("---" for _ in self.columns) + " |",
        ]
        for i, row in enumerate(self.rows):
            cells = [
                f"~~{cell}~~" if (i, k) in struck else str(cell)
                for k, cell in enumerate(row)
            ]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"

    def render(self, output_format: str) -> str:
        if output_format == "csv":
            return self.to_csv()
        if output_format == "json":
            import json

            return json.dumps(self.to_json_dict(), indent=2, ensure_ascii=False) + "\n"
        return self.to_markdown()


def _frac(x: Rational) -> str:
    return format_rational(x)


def _candidate_table_per_degree(name: str, groups: list[SieveGroup]) -> TableArtifact:
    columns = ("rx_set", "r_x", "rx_c2c1", "rx_deg", "slack", "slack_display")
    rows: list[tuple[Cell, ...]] = []
    for group in groups:
        if not group.rows:
            rows.append((rx_set_str(group.rx_set), group.r_x, group.rx_c2c1,
                         "None", "", ""))
            continue
        for row in group.rows:
            rows.append((rx_set_str(group.rx_set), group.r_x, group.rx_c2c1,
                         row.rx_deg, _frac(row.slack), decimal_display(row.slack)))
    return TableArtifact(name, columns, tuple(rows))


def _candidate_table_grouped(name: str, groups: list[SieveGroup]) -> TableArtifact:
    columns = ("rx_set", "r_x", "rx_c2c1", "rx_degs", "slack_max", "slack_display")
    rows: list[tuple[Cell, ...]] = []
    for group in groups:
        if not group.rows:
            rows.append((rx_set_str(group.rx_set), group.r_x, group.rx_c2c1,
                         "None", "", ""))
            continue
        degs = sorted(row.rx_deg for row in group.rows)
        slack_max = max(row.slack for row in group.rows)
        if len(degs) > 1:
            display = "≤" + decimal_string(slack_max)[0]
        else:
            display = decimal_display(slack_max)
        rows.append((rx_set_str(group.rx_set), group.r_x, group.rx_c2c1,
                     ",".join(str(d) for d in degs), _frac(slack_max), display))
    return TableArtifact(name, columns, tuple(rows))


def tables_artifacts(config: RunConfig) -> list[TableArtifact]:
    """The three regime candidate tables."""
    low = build_case_table(Regime.LOW, config.window)
    six = build_case_table(Regime.SIX, config.window)
    high = build_case_table(Regime.HIGH, config.window)
    return [
        _candidate_table_per_degree("candidates_low", low),
        _candidate_table_per_degree("candidates_q6", six),
        _candidate_table_grouped("candidates_high", high),
    ]


def _status_cells(case: IndexedCase) -> tuple[str, str]:
    return case.status, case.reason.value if case.reason else ""


def _cases_artifact_torsion(name: str, cases: list[IndexedCase],
                            emit_excluded: bool, crossing: Reason | None,
                            crossing_column: int) -> TableArtifact:
    columns = ("rx_set", "r_x", "rx_c2c1", "rx_deg", "q_hat", "q", "ja",
               "status", "reason")
    rows: list[tuple[Cell, ...]] = []
    struck: list[tuple[int, int]] = []
    for case in cases:
        if case.reason is not None and not emit_excluded:
            continue
        row = case.row
        rows.append((rx_set_str(row.rx_set), row.r_x, row.rx_c2c1, row.rx_deg,
                     case.q_hat, case.q, case.ja, *_status_cells(case)))
        if crossing is not None and case.reason is crossing:
            struck.append((len(rows) - 1, crossing_column))
    return TableArtifact(name, columns, tuple(rows), tuple(struck))


def _cases_artifact_equal_index(name: str, cases: list[IndexedCase],
                                emit_excluded: bool) -> TableArtifact:
    columns = ("rx_set", "r_x", "rx_c2c1", "rx_deg", "q", "slack",
               "slack_display", "status", "reason")
    rows: list[tuple[Cell, ...]] = []
    struck: list[tuple[int, int]] = []
    for case in cases:
        if case.reason is not None and not emit_excluded:
            continue
        row = case.row
        rows.append((rx_set_str(row.rx_set), row.r_x, row.rx_c2c1, row.rx_deg,
                     case.q, _frac(row.slack), decimal_display(row.slack),
                     *_status_cells(case)))
        if case.reason is Reason.PRIME_POWER_BOUND:
            struck.append((len(rows) - 1, columns.index("q")))
    return TableArtifact(name, columns, tuple(rows), tuple(struck))


def _cases_artifact_high(name: str, cases: list[IndexedCase], emit_excluded: bool,
                         with_ratio: bool) -> TableArtifact:
    base = ["rx_set", "r_x", "rx_c2c1", "rx_deg", "rx_deg_factored"]
    if with_ratio:
        base += ["q_over_ja", "ja"]
    base += ["q", "slack", "slack_display", "status", "reason"]
    columns = tuple(base)
    rows: list[tuple[Cell, ...]] = []
    struck: list[tuple[int, int]] = []
    for case in cases:
        if case.reason is not None and not emit_excluded:
            continue
        row = case.row
        cells: list[Cell] = [rx_set_str(row.rx_set), row.r_x, row.rx_c2c1,
                             row.rx_deg, factorization_str(row.rx_deg)]
        if with_ratio:
            cells += [case.q // case.ja, case.ja]
        cells += [case.q, _frac(row.slack), decimal_display(row.slack),
                  *_status_cells(case)]
        rows.append(tuple(cells))
        if with_ratio and case.reason is Reason.PRIME_POWER_STRICT:
            struck.append((len(rows) - 1, columns.index("ja")))
    return TableArtifact(name, columns, tuple(rows), tuple(struck))


def _survivors_artifact(report: ClassificationReport, emit_excluded: bool) -> TableArtifact:
    columns = ("c1_cubed", "basket", "r_x", "c2c1", "q", "q_hat", "ja_list",
               "status", "reason")
    rows: list[tuple[Cell, ...]] = []
    for row in report.survivors:
        if row.reason is not None and not emit_excluded:
            continue
        rows.append((_frac(row.degree), str(row.basket), row.r_x,
                     _frac(row.c2c1), row.q, row.q_hat, row.ja_list(),
                     row.status, row.reason.value if row.reason else ""))
    return TableArtifact("survivors", columns, tuple(rows))


def _summary_artifact(report: ClassificationReport) -> TableArtifact:
    columns = ("max_degree", "q_values", "surviving_rows")
    top = report.max_degree
    rows = ((_frac(top) if top is not None else "None",
             ",".join(str(q) for q in report.max_degree_q_values),
             len(report.final_survivors)),)
    return TableArtifact("bound_summary", columns, rows)


def classify_artifacts(config: RunConfig) -> tuple[list[TableArtifact], ClassificationReport]:
    """Run the classification and shape its artifacts."""
    report = run_case_analysis(config.window, config.constants)
    emit = config.emit_excluded
    artifacts = [
        _cases_artifact_torsion("cases_low_qhat_ne_q",
                                report.cases["low-qhat-ne-q"], emit, None, 0),
        _cases_artifact_equal_index("cases_low_q_eq_qhat",
                                    report.cases["low-q-eq-qhat"], emit),
        _cases_artifact_torsion("cases_q6_qhat_ne_q",
                                report.cases["six-qhat-ne-q"], emit,
                                Reason.TORSION_COVER, 4),
        _cases_artifact_high("cases_high_ja_eq_q",
                             report.cases["high-ja-eq-q"], emit, with_ratio=False),
        _cases_artifact_high("cases_high_ja_ne_q",
                             report.cases["high-ja-ne-q"], emit, with_ratio=True),
        _survivors_artifact(report, emit),
        _summary_artifact(report),
    ]
    return artifacts, report


def all_artifacts(config: RunConfig) -> list[TableArtifact]:
    """Candidate tables plus classification artifacts, in golden order."""
    artifacts, _ = classify_artifacts(config)
    return tables_artifacts(config) + artifacts


def golden_dir() -> Path:
    """Directory of the golden CSVs shipped with the package."""
    return Path(resources.files("fanosieve") / "goldens")


@dataclass(frozen=True)
class DiffResult:
    name: str
    passed: bool
    detail: str


def _first_mismatch(got: str, want: str) -> str:
    got_rows = list(csv.reader(io.StringIO(got)))
    want_rows = list(csv.reader(io.StringIO(want)))
    for i, (g_row, w_row) in enumerate(zip(got_rows, want_rows)):
        for k, (g, w) in enumerate(zip(g_row, w_row)):
            if g != w:
                return f"row {i} col {k}: got {g!r}, want {w!r}"
        if len(g_row) != len(w_row):
            return f"row {i}: got {len(g_row)} cells, want {len(w_row)}"
    if len(got_rows) != len(want_rows):
        return f"got {len(got_rows)} rows, want {len(want_rows)}"
    return "byte-level difference (line endings or quoting)"


def diff_against_golden(golden: Path, config: RunConfig | None = None) -> list[DiffResult]:
    """Byte-compare every artifact's canonical CSV against its golden copy.

    Goldens record the full case reports, so the comparison run always emits
    excluded candidates regardless of the config's display flag.
    """
    if config is None:
        config = RunConfig()
    config = RunConfig(config.window_lower, config.window_upper, config.constants,
                       config.output_format, emit_excluded=True)
    results = []
    for artifact in all_artifacts(config):
        path = Path(golden) / f"{artifact.name}.csv"
        if not path.exists():
            results.append(DiffResult(artifact.name, False, f"missing golden file {path}"))
            continue
        want = path.read_text(encoding="utf-8")
        got = artifact.to_csv()
        if got == want:
            results.append(DiffResult(artifact.name, True, ""))
        else:
            results.append(DiffResult(artifact.name, False, _first_mismatch(got, want)))
    return results
