"""End-to-end classification: sieve, index filters, curve exclusions, bound.

The pipeline enumerates every candidate (basket, degree, q_hat, q, J_A) in
the three index regimes, merges the survivors into a single table keyed by
(degree, basket, q, q_hat) with the admissible J_A values attached, and then
applies the two final arguments: the curve-configuration descent that kills
the unique top-degree candidate, and the torsion-divisor irrationality that
kills every q != q_hat row.  What remains determines the optimal degree
bound and the index set attaining it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .arith import Rational
from .baskets import Basket
from .curves import (
    ExtremalAuditRecord,
    TorsionSquareRecord,
    extremal_case_audit,
    torsion_square_exclusion,
)
from .filters import (
    FilterConstants,
    IndexedCase,
    Reason,
    analyze_high_ja_eq_q,
    analyze_high_ja_ne_q,
    analyze_low_q_eq_qhat,
    analyze_low_qhat_ne_q,
    analyze_low_square,
    analyze_six_q_eq_qhat,
    analyze_six_qhat_ne_q,
)
from .sieve import Regime, SieveGroup, build_case_table, table_rows

#: sub-case analyses in pipeline order: (name, regime, analysis function)
SUBCASES = (
    ("low-qhat-ne-q", Regime.LOW, analyze_low_qhat_ne_q),
    ("low-q-eq-qhat", Regime.LOW, analyze_low_q_eq_qhat),
    ("low-square-factors", Regime.LOW, analyze_low_square),
    ("six-qhat-ne-q", Regime.SIX, analyze_six_qhat_ne_q),
    ("six-q-eq-qhat", Regime.SIX, analyze_six_q_eq_qhat),
    ("high-ja-eq-q", Regime.HIGH, analyze_high_ja_eq_q),
    ("high-ja-ne-q", Regime.HIGH, analyze_high_ja_ne_q),
)


@dataclass(frozen=True)
class SurvivorRow:
    """One line of the merged survivor table."""

    degree: Rational
    basket: Basket
    r_x: int
    c2c1: Rational
    rx_c2c1: int
    rx_deg: int
    q: int
    q_hat: int
    ja_values: tuple[int, ...]           # descending
    ja_sources: tuple[tuple[int, str], ...]  # (ja, sub-case that produced it)
    reason: Reason | None = None         # set by the final exclusion stage

    @property
    def status(self) -> str:
        return "survivor" if self.reason is None else "excluded"

    def ja_list(self) -> str:
        return ",".join(str(j) for j in self.ja_values)


@dataclass(frozen=True)
class ClassificationReport:
    """Everything one classification run produced, in deterministic order."""

    window: tuple[Rational, Rational]
    constants: FilterConstants
    tables: dict[Regime, list[SieveGroup]]
    cases: dict[str, list[IndexedCase]]
    survivors: tuple[SurvivorRow, ...]
    curve_audit: ExtremalAuditRecord | None
    torsion_records: tuple[TorsionSquareRecord, ...]

    @property
    def final_survivors(self) -> tuple[SurvivorRow, ...]:
        return tuple(row for row in self.survivors if row.reason is None)

    @property
    def max_degree(self) -> Rational | None:
        finals = self.final_survivors
        return max(row.degree for row in finals) if finals else None

    @property
    def max_degree_q_values(self) -> tuple[int, ...]:
        top = self.max_degree
        if top is None:
            return ()
        return tuple(sorted({row.q for row in self.final_survivors if row.degree == top}))


def _merge_survivors(cases: dict[str, list[IndexedCase]]) -> list[SurvivorRow]:
    merged: dict[tuple, dict] = {}
    for name, case_list in cases.items():
        for case in case_list:
            if case.reason is not None:
                continue
            row = case.row
            key = (row.degree, row.basket, case.q, case.q_hat)
            slot = merged.setdefault(key, {"row": row, "ja": {}})
            slot["ja"].setdefault(case.ja, name)
    out = []
    for (degree, basket, q, q_hat), slot in merged.items():
        row = slot["row"]
        ja_values = tuple(sorted(slot["ja"], reverse=True))
        out.append(SurvivorRow(
            degree=degree,
            basket=basket,
            r_x=row.r_x,
            c2c1=Fraction(row.rx_c2c1, row.r_x),
            rx_c2c1=row.rx_c2c1,
            rx_deg=row.rx_deg,
            q=q,
            q_hat=q_hat,
            ja_values=ja_values,
            ja_sources=tuple((ja, slot["ja"][ja]) for ja in ja_values),
        ))
    out.sort(key=lambda r: (-r.degree, -r.q, -r.q_hat))
    return out


def _apply_final_exclusions(
    survivors: list[SurvivorRow], consts: FilterConstants
) -> tuple[list[SurvivorRow], ExtremalAuditRecord | None, list[TorsionSquareRecord]]:
    audit: ExtremalAuditRecord | None = None
    torsion_records: list[TorsionSquareRecord] = []
    finalized: list[SurvivorRow] = []
    for row in survivors:
        reason: Reason | None = None
        if (row.basket == Basket.of((5, 2)) and row.rx_deg == 336
                and row.q == row.q_hat == 84):
            audit = extremal_case_audit(consts)
            if audit.passed:
                reason = Reason.CURVE_DESCENT
        elif row.q != row.q_hat:
            record = torsion_square_exclusion(
                row.basket, row.rx_c2c1, row.rx_deg, row.q, row.q_hat)
            torsion_records.append(record)
            if record.excluded:
                reason = Reason.TORSION_SQUARE
        finalized.append(SurvivorRow(
            degree=row.degree, basket=row.basket, r_x=row.r_x, c2c1=row.c2c1,
            rx_c2c1=row.rx_c2c1, rx_deg=row.rx_deg, q=row.q, q_hat=row.q_hat,
            ja_values=row.ja_values, ja_sources=row.ja_sources, reason=reason))
    return finalized, audit, torsion_records


def run_case_analysis(
    window: tuple[Rational, Rational] = (Fraction(66), Fraction(72)),
    consts: FilterConstants = FilterConstants(),
    priority: Sequence[Reason] | None = None,
) -> ClassificationReport:
    """Run the whole pipeline over a strict degree window.

    ``priority`` overrides the order in which failing filters are reported;
    the surviving set is independent of it.
    """
    window = (Fraction(window[0]), Fraction(window[1]))
    tables = {regime: build_case_table(regime, window) for regime in Regime}
    cases: dict[str, list[IndexedCase]] = {}
    for name, regime, analyze in SUBCASES:
        cases[name] = analyze(table_rows(tables[regime]), consts, priority)
    survivors = _merge_survivors(cases)
    survivors, audit, torsion_records = _apply_final_exclusions(survivors, consts)
    return ClassificationReport(
        window=window,
        constants=consts,
        tables=tables,
        cases=cases,
        survivors=tuple(survivors),
        curve_audit=audit,
        torsion_records=tuple(torsion_records),
    )
