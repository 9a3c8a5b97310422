"""Baskets of virtual quotient points and the orbifold Riemann-Roch identities.

A canonical Fano threefold carries a finite multiset of virtual cyclic
quotient points (r, b), each standing for a singularity of type
(1/r)(1, -1, b).  Two exact identities tie the basket to the numerical
invariants:

    c2.c1 + sum over r-values of (r - 1/r) = 24
    (1/2) c1^3 + 3 - sum over points of b(r - b)/(2r) = h0(-K), a non-negative
    integer.

The second identity, read backwards, generates every admissible anticanonical
degree for a given basket; that inversion is the engine of the whole sieve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import Rational, format_rational, lcm_list


@dataclass(frozen=True, order=True)
class BasketPoint:
    """A virtual quotient point (1/r)(1, -1, b) with gcd(b, r) = 1, 1 <= b <= r/2."""

    r: int
    b: int

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"basket point needs r >= 2, got r={self.r}")
        # b = 1 is admitted: every plain (r, 1) point, e.g. (2,1) and (3,1),
        # is realized by the classified threefolds.
        if not 1 <= self.b <= Fraction(self.r, 2):
            raise ValueError(f"basket point needs 1 <= b <= r/2, got ({self.r},{self.b})")
        if gcd(self.b, self.r) != 1:
            raise ValueError(f"basket point needs gcd(b, r) = 1, got ({self.r},{self.b})")

    @property
    def genus_term(self) -> Rational:
        return Fraction(self.b * (self.r - self.b), 2 * self.r)


@dataclass(frozen=True)
class Basket:
    """A multiset of basket points, kept sorted for canonical equality."""

    points: tuple[BasketPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(sorted(self.points)))

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "Basket":
        return cls(tuple(BasketPoint(r, b) for r, b in pairs))

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def r_values(self) -> tuple[int, ...]:
        """The multiset of local indices r, with multiplicity."""
        return tuple(p.r for p in self.points)

    def r_sum(self) -> Rational:
        """Sum of (r - 1/r) over the basket, counted with multiplicity."""
        return sum((p.r - Fraction(1, p.r) for p in self.points), Fraction(0))

    def c2c1(self) -> Rational:
        """The Chern number c2.c1 forced by the basket: 24 - r_sum."""
        value = 24 - self.r_sum()
        if value <= 0:
            raise ValueError(f"infeasible basket, r_sum = {self.r_sum()} >= 24: {self}")
        return value

    def genus_term(self) -> Rational:
        """Sum of b(r - b)/(2r) over the basket."""
        return sum((p.genus_term for p in self.points), Fraction(0))

    def gorenstein_index(self) -> int:
        """lcm of the r-values; the least m with m*K Cartier.

        The empty basket is rejected: Gorenstein varieties never enter the
        sieve, which quantifies over singular baskets only.
        """
        if not self.points:
            raise ValueError("gorenstein_index of an empty basket")
        return lcm_list(list(self.r_values))

    def __str__(self) -> str:
        return "{" + ",".join(f"({p.r},{p.b})" for p in self.points) + "}"

    def to_json(self) -> list[list[int]]:
        return [[p.r, p.b] for p in self.points]


@dataclass(frozen=True)
class DegreeCandidate:
    """One admissible degree for a basket: rx_deg = gorenstein_index * c1^3."""

    basket: Basket
    rx_deg: int
    h0: int

    @property
    def degree(self) -> Rational:
        return Fraction(self.rx_deg, self.basket.gorenstein_index())


def h0_from_degree(degree: Rational, basket: Basket) -> int | None:
    """Evaluate (1/2)deg + 3 - genus_term; return h0 when it is a non-negative
    integer and None otherwise (a rejected degree, the normal sieve outcome)."""
    if degree <= 0:
        raise ValueError(f"degree must be positive, got {format_rational(degree)}")
    value = Fraction(degree) / 2 + 3 - basket.genus_term()
    if value.denominator != 1 or value < 0:
        return None
    return int(value)


def degree_candidates(basket: Basket, lower: Rational, upper: Rational) -> list[DegreeCandidate]:
    """All degrees 2*h0 - 6 + 2*genus_term with integer h0 >= 0 strictly inside
    (lower, upper), ascending.

    Degrees are strictly increasing in h0, so the scan stops at the window's
    upper edge.
    """
    lower, upper = Fraction(lower), Fraction(upper)
    if lower >= upper:
        raise ValueError(f"empty degree window ({lower}, {upper})")
    rx = basket.gorenstein_index()
    shift = 2 * basket.genus_term() - 6
    out: list[DegreeCandidate] = []
    h0 = 0
    while True:
        degree = 2 * h0 + shift
        if degree >= upper:
            break
        if degree > lower:
            rx_deg = rx * degree
            assert rx_deg.denominator == 1  # r | rx makes rx*deg integral
            out.append(DegreeCandidate(basket, int(rx_deg), h0))
        h0 += 1
    return out
