from fractions import Fraction

import pytest

from fanosieve.baskets import Basket, h0_from_degree
from fanosieve.sieve import (
    Regime,
    admissible_b,
    build_case_table,
    enumerate_baskets,
    enumerate_rx_multisets,
    index_slack,
    km_coefficient,
    rsum_bound,
    table_rows,
)

WINDOW = (Fraction(66), Fraction(72))

HIGH_MULTISETS = [
    (2,), (3,), (4,), (5,), (6,), (7,),
    (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 3), (3, 4), (3, 5),
    (2, 2, 2), (2, 2, 3), (2, 2, 4), (2, 3, 3),
    (2, 2, 2, 2), (2, 2, 2, 3),
]


@pytest.mark.parametrize("q,expected", [
    (1, Fraction(16, 5)),
    (5, Fraction(16, 5)),
    (6, Fraction(36, 11)),
    (84, Fraction(7056, 1805)),
])
def test_km_coefficient(q, expected):
    assert km_coefficient(q) == expected


@pytest.mark.parametrize("regime,expected", [
    (Regime.LOW, Fraction(27, 8)),
    (Regime.SIX, Fraction(23, 6)),
    (Regime.HIGH, Fraction(15, 2)),
])
def test_rsum_bound(regime, expected):
    assert rsum_bound(regime, 66) == expected


def test_enumerate_rx_multisets_low():
    assert enumerate_rx_multisets(Fraction(27, 8)) == [(2,), (3,), (2, 2)]


def test_enumerate_rx_multisets_six():
    assert enumerate_rx_multisets(Fraction(23, 6)) == [(2,), (3,), (4,), (2, 2)]


def test_enumerate_rx_multisets_high():
    assert enumerate_rx_multisets(Fraction(15, 2)) == HIGH_MULTISETS


def test_enumerate_rx_multisets_is_closed_under_extension():
    bound = Fraction(15, 2)
    found = set(enumerate_rx_multisets(bound))

    def weight(r):
        return r - Fraction(1, r)

    for ms in found:
        total = sum(weight(r) for r in ms)
        for r in range(2, 12):
            if total + weight(r) < bound:
                assert tuple(sorted(ms + (r,))) in found


@pytest.mark.parametrize("r,expected", [(2, [1]), (3, [1]), (4, [1]), (5, [1, 2]), (7, [1, 2, 3])])
def test_admissible_b(r, expected):
    assert admissible_b(r) == expected


def test_enumerate_baskets():
    assert enumerate_baskets((5,)) == [Basket.of((5, 1)), Basket.of((5, 2))]
    assert enumerate_baskets((2,)) == [Basket.of((2, 1))]
    assert enumerate_baskets((7,)) == [Basket.of((7, 1)), Basket.of((7, 2)), Basket.of((7, 3))]
    # repeated indices deduplicate symmetric assignments
    assert enumerate_baskets((5, 5)) == [
        Basket.of((5, 1), (5, 1)), Basket.of((5, 1), (5, 2)), Basket.of((5, 2), (5, 2))]


def test_low_table_matches_expected_rows():
    rows = table_rows(build_case_table(Regime.LOW, WINDOW))
    summary = [((r.rx_set), r.r_x, r.rx_c2c1, r.rx_deg, r.slack) for r in rows]
    assert summary == [
        ((2,), 2, 45, 133, Fraction(55, 16)),
        ((2,), 2, 45, 137, Fraction(35, 16)),
        ((2,), 2, 45, 141, Fraction(15, 16)),
        ((3,), 3, 64, 200, Fraction(3, 2)),
        ((2, 2), 2, 42, 134, Fraction(1, 8)),
    ]


def test_six_table_has_empty_group_for_four():
    groups = {g.rx_set: g for g in build_case_table(Regime.SIX, WINDOW)}
    assert groups[(4,)].rows == ()
    assert [r.rx_deg for r in groups[(3,)].rows] == [200, 206]
    assert [r.rx_deg for r in groups[(2,)].rows] == [133, 137, 141]


def test_high_table_degree_lists():
    groups = {g.rx_set: g for g in build_case_table(Regime.HIGH, WINDOW)}
    degs = {rx: [r.rx_deg for r in g.rows] for rx, g in groups.items()}
    assert degs[(2, 5)] == [673, 677, 693, 697]  # 713 and 717 fail deg < 4*c2c1
    assert degs[(5,)] == [334, 336, 344, 346, 354, 356]
    assert degs[(7,)] == [468, 472, 474]
    assert degs[(2, 6)] == []
    assert degs[(3, 5)] == []
    assert degs[(2, 2, 4)] == [271]
    assert degs[(2, 2, 2, 3)] == [397]
    assert degs[(3, 4)] == [809, 833]


def test_high_rows_satisfy_strict_quarter_cut():
    for row in table_rows(build_case_table(Regime.HIGH, WINDOW)):
        assert row.rx_deg < 4 * row.rx_c2c1
        assert row.slack > 0


@pytest.mark.parametrize("regime", list(Regime))
def test_emitted_rows_satisfy_both_identities(regime):
    for row in table_rows(build_case_table(regime, WINDOW)):
        # Chern-number identity, scaled by the Gorenstein index
        assert row.rx_c2c1 == row.r_x * (24 - row.basket.r_sum())
        # section-count identity holds with an integer h0
        h0 = h0_from_degree(Fraction(row.rx_deg, row.r_x), row.basket)
        assert h0 is not None and h0 >= 0
        # the regime inequality itself
        assert row.slack >= 0


def test_index_slack_values():
    assert index_slack(96, 336, 84) == Fraction(211, 21)
    assert index_slack(45, 133, 2) == Fraction(55, 16)
    assert index_slack(64, 200, 40) == Fraction(93, 8)
    assert index_slack(64, 200, 4) == Fraction(3, 2)


def test_row_keys_are_stable():
    rows = table_rows(build_case_table(Regime.LOW, WINDOW))
    assert rows[0].key == "RX={2};deg=133"
    assert rows[-1].key == "RX={2,2};deg=134"
