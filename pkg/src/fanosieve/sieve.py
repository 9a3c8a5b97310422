"""Candidate enumeration under the Kawamata-Miyaoka-type degree bounds.

For Picard number one the bound c1^3 <= coeff(q) * c2.c1 holds with

    coeff(q) = 16/5            for q <= 5,
    coeff(q) = 4q^2/(q^2+2q-4) for q >= 6,

where q is the rational Fano index.  Combined with the identity
c2.c1 = 24 - sum(r - 1/r) and a degree window, the bound caps sum(r - 1/r)
and leaves finitely many index multisets, finitely many baskets and finitely
many degrees.  This module enumerates exactly those, one regime at a time:
q <= 5, q = 6, and the q >= 7 limit where the coefficient approaches 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import gcd

from .arith import Rational, lcm_list
from .baskets import Basket, BasketPoint, degree_candidates


class Regime(Enum):
    """Coarse regime of the rational Fano index q."""

    LOW = "low"    # q <= 5
    SIX = "six"    # q = 6
    HIGH = "high"  # q >= 7


def km_coefficient(q: int) -> Rational:
    """Degree-bound coefficient at index q: c1^3 <= km_coefficient(q) * c2.c1."""
    if q < 1:
        raise ValueError(f"index q must be positive, got {q}")
    if q <= 5:
        return Fraction(16, 5)
    return Fraction(4 * q * q, q * q + 2 * q - 4)


def km_reciprocal(q: int) -> Rational:
    """Reciprocal coefficient, the multiplier in slack = c2c1 - rec * deg."""
    return 1 / km_coefficient(q)


#: reciprocal used to carve each regime's candidate table; for q >= 7 the
#: per-q reciprocal exceeds 1/4, so 1/4 is the membership cut there and the
#: sharper per-q bound is applied later, case by case.
REGIME_RECIPROCAL: dict[Regime, Rational] = {
    Regime.LOW: Fraction(5, 16),
    Regime.SIX: Fraction(11, 36),
    Regime.HIGH: Fraction(1, 4),
}


def rsum_bound(regime: Regime, deg_lower: Rational) -> Rational:
    """Strict upper bound on sum(r - 1/r) once c1^3 > deg_lower in a regime."""
    return 24 - REGIME_RECIPROCAL[regime] * Fraction(deg_lower)


def index_slack(rx_c2c1: Rational, rx_deg: int, q: int) -> Rational:
    """rx*c2c1 - km_reciprocal(q) * rx*c1^3, the exact slack of the degree
    bound at index q; non-negative whenever the bound holds."""
    return Fraction(rx_c2c1) - km_reciprocal(q) * rx_deg


def enumerate_rx_multisets(bound: Rational) -> list[tuple[int, ...]]:
    """All multisets of integers >= 2 with sum(r - 1/r) < bound, as sorted
    tuples, ordered by size then lexicographically."""
    bound = Fraction(bound)
    out: list[tuple[int, ...]] = []

    def weight(r: int) -> Fraction:
        return r - Fraction(1, r)

    def extend(prefix: tuple[int, ...], start: int, used: Fraction) -> None:
        r = start
        while used + weight(r) < bound:
            chosen = prefix + (r,)
            out.append(chosen)
            extend(chosen, r, used + weight(r))
            r += 1

    if bound > 0:
        extend((), 2, Fraction(0))
    out.sort(key=lambda ms: (len(ms), ms))
    return out


def admissible_b(r: int) -> list[int]:
    """The b-values allowed at local index r: 1 <= b <= r/2, gcd(b, r) = 1."""
    return [b for b in range(1, r // 2 + 1) if gcd(b, r) == 1]


def enumerate_baskets(rx: tuple[int, ...]) -> list[Basket]:
    """All baskets over a fixed index multiset, deduplicated up to reordering
    of equal-r points."""
    if any(r < 2 for r in rx):
        raise ValueError(f"index multiset needs entries >= 2, got {rx}")
    groups: dict[int, int] = {}
    for r in sorted(rx):
        groups[r] = groups.get(r, 0) + 1
    per_group = [
        [tuple(BasketPoint(r, b) for b in combo)
         for combo in combinations_with_replacement(admissible_b(r), count)]
        for r, count in groups.items()
    ]
    baskets = [Basket(sum(parts, ())) for parts in product(*per_group)]
    baskets.sort(key=lambda bk: tuple((p.r, p.b) for p in bk))
    return baskets


def rx_set_str(rx: tuple[int, ...]) -> str:
    return "{" + ",".join(str(r) for r in rx) + "}"


@dataclass(frozen=True)
class SieveRow:
    """One candidate degree surviving a regime's bound."""

    rx_set: tuple[int, ...]
    basket: Basket
    r_x: int
    rx_c2c1: int
    rx_deg: int
    slack: Rational

    @property
    def key(self) -> str:
        return f"RX={rx_set_str(self.rx_set)};deg={self.rx_deg}"

    @property
    def degree(self) -> Rational:
        return Fraction(self.rx_deg, self.r_x)


@dataclass(frozen=True)
class SieveGroup:
    """All candidate rows sharing one index multiset; empty means the group
    is admitted by the r-sum bound but carries no admissible degree (shown
    as 'None' in reports)."""

    rx_set: tuple[int, ...]
    r_x: int
    rx_c2c1: int
    rows: tuple[SieveRow, ...]


def build_case_table(regime: Regime, window: tuple[Rational, Rational]) -> list[SieveGroup]:
    """The regime's candidate table over a strict degree window.

    Keeps every (basket, degree) with slack >= 0; in the q >= 7 regime the
    bound is strict (slack > 0, equivalently deg < 4 * c2c1).
    """
    lower, upper = Fraction(window[0]), Fraction(window[1])
    reciprocal = REGIME_RECIPROCAL[regime]
    groups: list[SieveGroup] = []
    for rx in enumerate_rx_multisets(rsum_bound(regime, lower)):
        r_x = lcm_list(list(rx))
        rsum = sum((r - Fraction(1, r) for r in rx), Fraction(0))
        rx_c2c1 = r_x * (24 - rsum)
        assert rx_c2c1.denominator == 1
        rx_c2c1 = int(rx_c2c1)
        rows = []
        for basket in enumerate_baskets(rx):
            for cand in degree_candidates(basket, lower, upper):
                slack = rx_c2c1 - reciprocal * cand.rx_deg
                if slack > 0 or (slack == 0 and regime is not Regime.HIGH):
                    rows.append(SieveRow(rx, basket, r_x, rx_c2c1, cand.rx_deg, slack))
        rows.sort(key=lambda row: (row.rx_deg, tuple((p.r, p.b) for p in row.basket)))
        groups.append(SieveGroup(rx, r_x, rx_c2c1, tuple(rows)))
    return groups


def table_rows(groups: list[SieveGroup]) -> list[SieveRow]:
    """Flatten a case table into its rows, preserving group order."""
    return [row for group in groups for row in group.rows]
