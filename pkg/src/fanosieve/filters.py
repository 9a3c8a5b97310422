"""Fano-index case analysis over the sieve tables.

Each candidate degree is paired with every admissible index triple
(q_hat, q, J_A), where q_hat is the Weil index (dividing both q and the
scaled degree), q the rational index, and J_A the least multiple of the
ample generator that is Cartier in codimension 2.  Four facts drive the
filtering:

  * q^2 divides J_A * rx_deg  (integrality of J_A * rx * c1^3 / q^2);
  * q_hat divides rx_deg, and J_A divides q when q = q_hat;
  * the prime-power components p^a of J_A satisfy
    sum(p^a - 1/p^a) <= slack(q), with slack(q) < c2c1-scaled quarter bound
    for every q >= 7;
  * torsion in the class group (q != q_hat) lifts to an index-one cover
    multiplying the degree by q/q_hat, which collides with the global
    degree bound for canonical weak Fano threefolds.

Every candidate is kept with an explicit status: survivor, or excluded with
the first failing filter under a fixed order.  The surviving set does not
depend on that order; only the recorded reasons do.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .arith import Rational, divisors, factorize, square_divisors
from .baskets import Basket
from .sieve import Regime, SieveGroup, SieveRow, build_case_table, index_slack, table_rows


class Reason(Enum):
    """Why a candidate was excluded (first failing filter)."""

    RR_INTEGRALITY = "rr-integrality"
    KM_BOUND = "km-bound"
    INDEX_INTEGRALITY = "index-integrality"
    WEIL_INDEX_DIV = "weil-index-div"
    PRIME_POWER_BOUND = "prime-power-bound"
    PRIME_POWER_STRICT = "prime-power-strict"
    STABILITY_BOUND = "stability-bound"
    TORSION_COVER = "torsion-cover"
    TORSION_HIGH_INDEX = "torsion-high-index"
    CURVE_DESCENT = "curve-descent"
    TORSION_SQUARE = "torsion-square"


@dataclass(frozen=True)
class FilterConstants:
    """External bounds entering the filters; configured, never recomputed.

    weak_fano_bound: degree bound for canonical weak Fano threefolds.
    picard_one_bound: degree bound for Q-factorial canonical Fano threefolds
        of Picard number one (attained only by Gorenstein examples).
    suzuki_bound: largest Weil Fano index of a non-Gorenstein Q-factorial
        terminal Fano threefold of Picard number one.
    """

    weak_fano_bound: Rational = Fraction(324)
    picard_one_bound: Rational = Fraction(72)
    suzuki_bound: int = 19


@dataclass(frozen=True)
class IndexedCase:
    """One (candidate degree, q_hat, q, J_A) combination with its verdict."""

    row: SieveRow
    q_hat: int
    q: int
    ja: int
    reason: Reason | None

    @property
    def status(self) -> str:
        return "survivor" if self.reason is None else "excluded"


def prime_power_sum(j: int) -> Rational:
    """Sum of (p^a - 1/p^a) over the prime-power components of j; 0 for j = 1."""
    if j < 1:
        raise ValueError(f"prime_power_sum requires j >= 1, got {j}")
    return sum((Fraction(p**a) - Fraction(1, p**a) for p, a in factorize(j)), Fraction(0))


def prime_powers_within(budget: Rational) -> list[int]:
    """All j >= 1 with prime_power_sum(j) <= budget, ascending.

    Finite: each prime-power component contributes at least 3/2.
    """
    budget = Fraction(budget)
    if budget < 0:
        return []
    limit = int(budget) + 1
    primes = [p for p in range(2, limit + 1) if factorize(p) == [(p, 1)]]
    components: list[list[tuple[int, Fraction]]] = []
    for p in primes:
        powers = []
        m = p
        while Fraction(m) - Fraction(1, m) <= budget:
            powers.append((m, Fraction(m) - Fraction(1, m)))
            m *= p
        if powers:
            components.append(powers)

    values = [1]

    def extend(i: int, value: int, remaining: Fraction) -> None:
        for k in range(i, len(components)):
            for m, w in components[k]:
                if w <= remaining:
                    values.append(value * m)
                    extend(k + 1, value * m, remaining - w)

    extend(0, 1, budget)
    return sorted(values)


def index_integrality(ja: int, rx_deg: int, q: int) -> bool:
    """True iff q^2 divides ja * rx_deg."""
    if ja < 1 or rx_deg < 1 or q < 1:
        raise ValueError("index_integrality requires positive arguments")
    return (ja * rx_deg) % (q * q) == 0


def torsion_cover_excluded(q: int, q_hat: int, degree: Rational, consts: FilterConstants) -> bool:
    """True iff the index-one cover of the q/q_hat-torsion divisor breaks the
    weak Fano degree bound: (q/q_hat) * degree > bound."""
    if q == q_hat:
        raise ValueError("torsion cover filter needs q != q_hat")
    if q % q_hat != 0:
        raise ValueError(f"q_hat must divide q, got q={q}, q_hat={q_hat}")
    return Fraction(q, q_hat) * Fraction(degree) > consts.weak_fano_bound


def torsion_high_excluded(q: int, q_hat: int, deg_lower: Rational, consts: FilterConstants) -> bool:
    """For q >= 7: any torsion (q != q_hat) doubles the degree past the
    Picard-number-one bound, so only q = q_hat survives."""
    if q < 7:
        raise ValueError(f"high-index torsion filter needs q >= 7, got {q}")
    if 2 * Fraction(deg_lower) <= consts.picard_one_bound:
        raise ValueError("high-index torsion filter needs 2 * deg_lower > picard_one_bound")
    return q != q_hat


def stability_excluded(rx_c2c1: int, rx_deg: int) -> bool:
    """For q = 1 the tangent sheaf is stable and c1^3 <= 3 c2.c1 must hold;
    True means the candidate violates it."""
    return rx_deg > 3 * rx_c2c1


def square_factor_pairs(rx_deg: int, q_min: int, q_max: int | None) -> list[tuple[int, int]]:
    """All (q, ja) with q/ja > 1 a square divisor of rx_deg, ja dividing
    rx_deg/(q/ja)^2, and q in [q_min, q_max]; ordered by (q/ja, ja)."""
    if q_max is not None and q_min > q_max:
        raise ValueError(f"empty index range [{q_min}, {q_max}]")
    pairs = []
    for d in square_divisors(rx_deg):
        if d == 1:
            continue
        for ja in divisors(rx_deg // (d * d)):
            q = d * ja
            if q < q_min or (q_max is not None and q > q_max):
                continue
            pairs.append((q, ja))
    pairs.sort(key=lambda pair: (pair[0] // pair[1], pair[1]))
    return pairs


def _pick_reason(failures: list[Reason], priority: Sequence[Reason] | None) -> Reason | None:
    """First failing filter, in the given priority order (or the order the
    checks were evaluated in, when no override is supplied)."""
    if not failures:
        return None
    if priority is None:
        return failures[0]
    for reason in priority:
        if reason in failures:
            return reason
    return failures[0]


def _case(row: SieveRow, q_hat: int, q: int, ja: int,
          checks: list[tuple[Reason, bool]], priority: Sequence[Reason] | None) -> IndexedCase:
    failures = [reason for reason, failed in checks if failed]
    return IndexedCase(row, q_hat, q, ja, _pick_reason(failures, priority))


def analyze_low_qhat_ne_q(rows: list[SieveRow], consts: FilterConstants,
                          priority: Sequence[Reason] | None = None) -> list[IndexedCase]:
    """q <= 5 with torsion: q_hat | rx_deg, q_hat | q, q_hat < q, J_A within
    the prime-power budget.  Filters: index integrality, then torsion cover."""
    cases = []
    for row in rows:
        ja_values = prime_powers_within(row.slack)
        for q_hat in range(1, 6):
            if row.rx_deg % q_hat != 0:
                continue
            for q in range(2, 6):
                if q % q_hat != 0 or q == q_hat:
                    continue
                for ja in ja_values:
                    checks = [
                        (Reason.INDEX_INTEGRALITY, not index_integrality(ja, row.rx_deg, q)),
                        (Reason.TORSION_COVER,
                         torsion_cover_excluded(q, q_hat, row.degree, consts)),
                    ]
                    cases.append(_case(row, q_hat, q, ja, checks, priority))
    return cases


def analyze_low_q_eq_qhat(rows: list[SieveRow], consts: FilterConstants,
                          priority: Sequence[Reason] | None = None) -> list[IndexedCase]:
    """q = q_hat = J_A <= 5 with q | rx_deg.  Filters: prime-power budget,
    then the q = 1 stability bound."""
    cases = []
    for row in rows:
        for q in range(1, 6):
            if row.rx_deg % q != 0:
                continue
            checks = [
                (Reason.PRIME_POWER_BOUND, prime_power_sum(q) > row.slack),
                (Reason.STABILITY_BOUND,
                 q == 1 and stability_excluded(row.rx_c2c1, row.rx_deg)),
            ]
            cases.append(_case(row, q, q, q, checks, priority))
    return cases


def analyze_low_square(rows: list[SieveRow], consts: FilterConstants,
                       priority: Sequence[Reason] | None = None) -> list[IndexedCase]:
    """q = q_hat <= 5 with J_A a proper divisor of q: q/J_A must be a square
    divisor of rx_deg with J_A dividing the cofactor."""
    cases = []
    for row in rows:
        for q, ja in square_factor_pairs(row.rx_deg, 1, 5):
            checks = [
                (Reason.WEIL_INDEX_DIV, row.rx_deg % q != 0),
                (Reason.PRIME_POWER_BOUND, prime_power_sum(ja) > row.slack),
            ]
            cases.append(_case(row, q, q, ja, checks, priority))
    return cases


def analyze_six_qhat_ne_q(rows: list[SieveRow], consts: FilterConstants,
                          priority: Sequence[Reason] | None = None) -> list[IndexedCase]:
    """q = 6 with torsion.  The torsion cover is checked first here: it kills
    every q_hat = 1 case outright, and index integrality covers the rest."""
    cases = []
    for row in rows:
        ja_values = prime_powers_within(row.slack)
        q = 6
        for q_hat in (1, 2, 3):
            if q % q_hat != 0 or row.rx_deg % q_hat != 0:
                continue
            for ja in ja_values:
                checks = [
                    (Reason.TORSION_COVER,
                     torsion_cover_excluded(q, q_hat, row.degree, consts)),
                    (Reason.INDEX_INTEGRALITY, not index_integrality(ja, row.rx_deg, q)),
                ]
                cases.append(_case(row, q_hat, q, ja, checks, priority))
    return cases


def analyze_six_q_eq_qhat(rows: list[SieveRow], consts: FilterConstants,
                          priority: Sequence[Reason] | None = None) -> list[IndexedCase]:
    """q = q_hat = 6 requires 6 | rx_deg; the check is recorded for every
    candidate degree (none passes on the standard window)."""
    cases = []
    for row in rows:
        checks = [
            (Reason.WEIL_INDEX_DIV, row.rx_deg % 6 != 0),
            (Reason.PRIME_POWER_BOUND, prime_power_sum(6) > row.slack),
        ]
        cases.append(_case(row, 6, 6, 6, checks, priority))
        for q, ja in square_factor_pairs(row.rx_deg, 6, 6):
            checks = [
                (Reason.WEIL_INDEX_DIV, row.rx_deg % q != 0),
                (Reason.PRIME_POWER_BOUND, prime_power_sum(ja) > row.slack),
            ]
            cases.append(_case(row, q, q, ja, checks, priority))
    return cases


def analyze_high_ja_eq_q(rows: list[SieveRow], consts: FilterConstants,
                         priority: Sequence[Reason] | None = None) -> list[IndexedCase]:
    """q = q_hat = J_A >= 7 with q | rx_deg.  Membership in the table already
    requires the strict quarter bound on the prime-power sum; the per-q bound
    is then the deciding filter."""
    cases = []
    for row in rows:
        for q in divisors(row.rx_deg):
            if q < 7 or prime_power_sum(q) >= row.slack:
                continue
            checks = [
                (Reason.PRIME_POWER_BOUND,
                 prime_power_sum(q) > index_slack(row.rx_c2c1, row.rx_deg, q)),
            ]
            cases.append(_case(row, q, q, q, checks, priority))
    return cases


def analyze_high_ja_ne_q(rows: list[SieveRow], consts: FilterConstants,
                         priority: Sequence[Reason] | None = None) -> list[IndexedCase]:
    """q = q_hat >= 7 with J_A a proper divisor of q.  The strict quarter
    bound is applied first (the crossed-out entries), then the per-q bound."""
    cases = []
    for row in rows:
        for q, ja in square_factor_pairs(row.rx_deg, 7, None):
            checks = [
                (Reason.PRIME_POWER_STRICT, prime_power_sum(ja) >= row.slack),
                (Reason.PRIME_POWER_BOUND,
                 prime_power_sum(ja) > index_slack(row.rx_c2c1, row.rx_deg, q)),
            ]
            cases.append(_case(row, q, q, ja, checks, priority))
    return cases
