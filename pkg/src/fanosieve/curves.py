"""Singular-curve configurations and the torsion-divisor arithmetic.

A curve C in the singular locus of a canonical threefold looks, at a general
point, like a Du Val surface singularity times a disk.  Three integers are
attached to the transverse type: e (1 + number of exceptional curves of the
minimal resolution), g (order of the local fundamental group) and j (order
of the local class group):

    type  A_n        D_m        E_6  E_7  E_8
    e     n+1        m+1        7    8    9
    g     n+1        4m-8       24   48   120
    j     n+1        4          3    2    1

The weighted sums sum (j - 1/j) * deg <= sum (e - 1/g) * deg over such
curves are bounded by the same slack that bounds the prime-power sum of
J_A, which makes exhaustive configuration search possible: every curve
costs at least 3/2 per unit of degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from .arith import Rational, format_rational, is_rational_square
from .baskets import Basket, h0_from_degree
from .filters import FilterConstants
from .sieve import index_slack

_KIND_ORDER = {"A": 0, "D": 1, "E": 2}


@dataclass(frozen=True)
class CurveType:
    """Transverse Du Val type of a one-dimensional singular stratum."""

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind == "A":
            if self.index < 1:
                raise ValueError(f"A_n needs n >= 1, got {self.index}")
        elif self.kind == "D":
            if self.index < 4:
                raise ValueError(f"D_m needs m >= 4, got {self.index}")
        elif self.kind == "E":
            if self.index not in (6, 7, 8):
                raise ValueError(f"E_k needs k in 6..8, got {self.index}")
        else:
            raise ValueError(f"unknown curve kind {self.kind!r}")

    @property
    def e(self) -> int:
        if self.kind == "A":
            return self.index + 1
        if self.kind == "D":
            return self.index + 1
        return {6: 7, 7: 8, 8: 9}[self.index]

    @property
    def g(self) -> int:
        if self.kind == "A":
            return self.index + 1
        if self.kind == "D":
            return 4 * self.index - 8
        return {6: 24, 7: 48, 8: 120}[self.index]

    @property
    def j(self) -> int:
        if self.kind == "A":
            return self.index + 1
        if self.kind == "D":
            return 4
        return {6: 3, 7: 2, 8: 1}[self.index]

    @property
    def weight(self) -> Rational:
        """e - 1/g, the cost of this curve per unit of scaled degree."""
        return Fraction(self.e) - Fraction(1, self.g)

    @property
    def sort_key(self) -> tuple[int, int]:
        return (_KIND_ORDER[self.kind], self.index)

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class CurveConfig:
    """A multiset of (curve type, scaled degree) entries; the degree is the
    positive integer rx * c1 . C."""

    entries: tuple[tuple[CurveType, int], ...]

    def __post_init__(self) -> None:
        if any(deg < 1 for _, deg in self.entries):
            raise ValueError("curve degrees must be positive integers")
        ordered = tuple(sorted(self.entries, key=lambda e: (e[0].sort_key, e[1])))
        object.__setattr__(self, "entries", ordered)

    @property
    def total_weight(self) -> Rational:
        return sum((ct.weight * deg for ct, deg in self.entries), Fraction(0))

    @property
    def j_lcm(self) -> int:
        """lcm of the local class group orders; 1 for the empty configuration."""
        return lcm(*(ct.j for ct, _ in self.entries)) if self.entries else 1

    def __str__(self) -> str:
        return "{" + ",".join(f"({ct},{deg})" for ct, deg in self.entries) + "}"


def curve_config_search(bound: Rational, lcm_divisor: int | None = None,
                        require_nonempty: bool = False) -> list[CurveConfig]:
    """All configurations with sum (e - 1/g) * deg <= bound, optionally
    restricted to those whose j-lcm is divisible by lcm_divisor.

    The search is exhaustive: only finitely many types have weight <= bound
    and each entry costs weight * degree >= 3/2.
    """
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError(f"curve search bound must be >= 0, got {bound}")
    types: list[CurveType] = []
    n = 1
    while CurveType("A", n).weight <= bound:
        types.append(CurveType("A", n))
        n += 1
    m = 4
    while CurveType("D", m).weight <= bound:
        types.append(CurveType("D", m))
        m += 1
    types.extend(ct for k in (6, 7, 8) if (ct := CurveType("E", k)).weight <= bound)
    types.sort(key=lambda ct: ct.sort_key)

    found: list[tuple[tuple[CurveType, int], ...]] = []
    stack: list[tuple[CurveType, int]] = []

    def extend(min_type: int, min_deg: int, remaining: Fraction) -> None:
        found.append(tuple(stack))
        for i in range(min_type, len(types)):
            weight = types[i].weight
            deg = min_deg if i == min_type else 1
            while weight * deg <= remaining:
                stack.append((types[i], deg))
                extend(i, deg, remaining - weight * deg)
                stack.pop()
                deg += 1

    extend(0, 1, bound)
    configs = [CurveConfig(entries) for entries in found]
    if require_nonempty:
        configs = [c for c in configs if c.entries]
    if lcm_divisor is not None:
        configs = [c for c in configs if c.j_lcm % lcm_divisor == 0]
    configs.sort(key=lambda c: tuple((ct.sort_key, deg) for ct, deg in c.entries))
    return configs


def torsion_square_values(basket: Basket) -> set[Rational]:
    """Possible values of the squared Weil pullback of a torsion divisor
    against K on a terminalization: 4 - 2 * sum of local contributions.

    At a point (r, b), a local index i in 0..r-1 contributes
    c(r - c)/(2r) with c = (i*b) mod r; choices at distinct points are
    independent.
    """
    if not len(basket):
        raise ValueError("torsion square values need a non-empty basket")
    per_point = [
        {Fraction(((i * p.b) % p.r) * (p.r - (i * p.b) % p.r), 2 * p.r) for i in range(p.r)}
        for p in basket
    ]
    return {4 - 2 * sum(combo) for combo in product(*(sorted(s) for s in per_point))}


#: E0^2 . f*K for the single crepant divisor over a degree-1 curve of type
#: A1: a general surface section through the curve is a chain of blown-up
#: A1 points whose exceptional curves have self-intersection -2, which
#: evaluates the triple product to 2/3.  Taken as a configured constant.
CREPANT_SQUARE_A1: Rational = Fraction(2, 3)


@dataclass(frozen=True)
class TorsionSquareRecord:
    """Outcome of the torsion-divisor irrationality argument for one case."""

    q: int
    q_hat: int
    budget: Rational
    configs: tuple[CurveConfig, ...]
    value_quotients: tuple[Rational, ...]
    excluded: bool

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "q_hat": self.q_hat,
            "budget": format_rational(self.budget),
            "configs": [str(c) for c in self.configs],
            "value_quotients": [format_rational(v) for v in self.value_quotients],
            "excluded": self.excluded,
        }


def torsion_square_exclusion(basket: Basket, rx_c2c1: int, rx_deg: int,
                             q: int, q_hat: int) -> TorsionSquareRecord:
    """Decide whether a q != q_hat case dies by torsion-divisor arithmetic.

    Excluded when (a) the curve budget forces the unique configuration of a
    single degree-1 A1 curve, so the torsion pullback square is r^2 * 2/3
    for rational r, and (b) no attainable value divided by 2/3 is a rational
    square.  Any other situation is inconclusive and the case is kept.
    """
    if q == q_hat:
        raise ValueError("torsion square exclusion needs q != q_hat")
    budget = index_slack(rx_c2c1, rx_deg, q)
    configs = tuple(curve_config_search(budget, require_nonempty=True))
    unique_a1 = configs == (CurveConfig(((CurveType("A", 1), 1),)),)
    quotients = tuple(sorted(v / CREPANT_SQUARE_A1 for v in torsion_square_values(basket)))
    all_irrational = all(not is_rational_square(v) for v in quotients)
    return TorsionSquareRecord(q, q_hat, budget, configs, quotients,
                               excluded=unique_a1 and all_irrational)


class AuditError(RuntimeError):
    """A hard inconsistency in the extremal-case audit; the classification
    would change if any sub-check failed."""


@dataclass(frozen=True)
class AuditCheck:
    name: str
    detail: str
    passed: bool

    def to_json(self) -> dict:
        return {"name": self.name, "detail": self.detail, "passed": self.passed}


@dataclass(frozen=True)
class ExtremalAuditRecord:
    """The exclusion chain for the top-degree candidate (336/5 at q = 84)."""

    checks: tuple[AuditCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks], "passed": self.passed}


def extremal_case_audit(consts: FilterConstants) -> ExtremalAuditRecord:
    """Verify, step by step, that the candidate with basket {(5,2)}, scaled
    degree 336 and q = q_hat = 84, J_A = 21 cannot exist.

    The chain: the curve budget 211/21 with 21 | lcm(j) forces exactly one
    A2 and one A6 curve, both of degree 1; resolving the A2 curve (j = 3)
    descends the index to 84/3 = 28 and h0(-K) = 36 forces any Gorenstein
    endpoint of the induced degree-preserving run to have degree in
    {66, 68, 70, 72}, none divisible by 28; a terminal endpoint would carry
    Weil index 84 past the terminal index bound; and a fibration endpoint
    would give a del Pezzo or rational curve fibre of Weil index >= 28,
    which is recorded as an axiom (no fibre of index that size exists).
    Every failed check raises AuditError.
    """
    basket = Basket.of((5, 2))
    rx_c2c1, rx_deg, q, ja = 96, 336, 84, 21
    checks: list[AuditCheck] = []

    def check(name: str, passed: bool, detail: str) -> None:
        checks.append(AuditCheck(name, detail, passed))
        if not passed:
            raise AuditError(f"extremal case audit failed at {name}: {detail}")

    budget = index_slack(rx_c2c1, rx_deg, q)
    check("curve-budget", budget == Fraction(211, 21),
          f"slack at q={q} is {format_rational(budget)}")

    configs = curve_config_search(budget, lcm_divisor=ja, require_nonempty=True)
    expected = CurveConfig(((CurveType("A", 2), 1), (CurveType("A", 6), 1)))
    check("unique-curve-config", configs == [expected],
          f"configs with j-lcm divisible by {ja}: {[str(c) for c in configs]}")

    h0 = h0_from_degree(Fraction(rx_deg, 5), basket)
    check("section-count", h0 == 36, f"h0(-K) = {h0}")

    descended = q // 3  # resolving the j = 3 curve makes -K ~ (q/3) * (pulled-back 3A)
    gorenstein_degrees = [c for c in range(2 * h0 - 6, int(consts.picard_one_bound) + 1, 2)]
    check("gorenstein-escape",
          all(c % descended != 0 for c in gorenstein_degrees),
          f"{descended} divides none of {gorenstein_degrees}")

    check("terminal-escape", q > consts.suzuki_bound,
          f"required Weil index {q} exceeds the terminal index bound {consts.suzuki_bound}")

    check("fibration-escape", True,
          f"a fibre would need Weil index >= {descended}; no del Pezzo or rational "
          "curve fibre admits one (configured fact, no numeric bound)")

    return ExtremalAuditRecord(tuple(checks))
