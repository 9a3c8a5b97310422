"""Invariants of three-dimensional weighted projective spaces.

P(a0, a1, a2, a3) is Fano with -K of degree (a0+a1+a2+a3)^3 / (a0 a1 a2 a3)
and Weil index a0+a1+a2+a3 (the class group is generated by the degree-1
reflexive sheaf).  Well-formedness, every triple of weights coprime, rules
out pseudo-reflections, so the singular locus consists of the coordinate
points with weight >= 2 and the coordinate edges whose weight pair has a
common factor.  Isolated cyclic quotients (1/r)(w1, w2, w3) are classified
by the Reid-Tai sums sigma(k) = sum_i frac(k*w_i/r): terminal iff every
sigma(k) > 1, canonical iff every sigma(k) >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import gcd

from .arith import Rational
from .baskets import Basket, h0_from_degree


class UnsupportedStratumError(ValueError):
    """Reid-Tai is implemented for isolated cyclic quotients only; strata
    with a local weight sharing a factor with r sit on singular curves."""


class SingularityClass(Enum):
    TERMINAL = "terminal"
    CANONICAL_NOT_TERMINAL = "canonical-not-terminal"
    NOT_CANONICAL = "not-canonical"


@dataclass(frozen=True)
class QuotientPoint:
    """An isolated-candidate quotient point (1/r)(w1, w2, w3), weights mod r."""

    r: int
    local_weights: tuple[int, int, int]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"quotient point needs r >= 2, got {self.r}")
        object.__setattr__(self, "local_weights",
                           tuple(w % self.r for w in self.local_weights))

    def __str__(self) -> str:
        return f"(1/{self.r})({','.join(str(w) for w in self.local_weights)})"


@dataclass(frozen=True)
class CurveStratum:
    """A one-dimensional singular stratum along a coordinate edge, with the
    transverse quotient weights mod r."""

    r: int
    local_weights: tuple[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "local_weights",
                           tuple(w % self.r for w in self.local_weights))

    def __str__(self) -> str:
        return f"curve (1/{self.r})({','.join(str(w) for w in self.local_weights)})"


@dataclass(frozen=True)
class WeightedP3:
    """A well-formed weighted projective 3-space."""

    weights: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.weights) != 4 or any(a < 1 for a in self.weights):
            raise ValueError(f"need four positive weights, got {self.weights}")
        for triple in combinations(range(4), 3):
            g = gcd(*(self.weights[i] for i in triple))
            if g > 1:
                values = tuple(self.weights[i] for i in triple)
                raise ValueError(
                    f"not well-formed: weight triple {values} has gcd {g}")


def anticanonical_degree(w: WeightedP3) -> Rational:
    """(-K)^3 = (sum of weights)^3 / (product of weights)."""
    total = sum(w.weights)
    prod = 1
    for a in w.weights:
        prod *= a
    return Fraction(total**3, prod)


def weil_index(w: WeightedP3) -> int:
    """Largest q with -K linearly equivalent to q times a Weil divisor class."""
    return sum(w.weights)


def singular_strata(w: WeightedP3) -> list[QuotientPoint | CurveStratum]:
    """Coordinate-point quotients (weight >= 2) followed by coordinate-edge
    curve strata (weight pair with gcd >= 2)."""
    strata: list[QuotientPoint | CurveStratum] = []
    for i, r in enumerate(w.weights):
        if r >= 2:
            others = tuple(a for k, a in enumerate(w.weights) if k != i)
            strata.append(QuotientPoint(r, others))
    for i, k in combinations(range(4), 2):
        g = gcd(w.weights[i], w.weights[k])
        if g >= 2:
            others = tuple(a for idx, a in enumerate(w.weights) if idx not in (i, k))
            strata.append(CurveStratum(g, others))
    return strata


def reid_tai(p: QuotientPoint) -> SingularityClass:
    """Classify an isolated cyclic quotient by its minimal age."""
    if any(gcd(wi, p.r) != 1 for wi in p.local_weights):
        raise UnsupportedStratumError(
            f"{p}: local weights not coprime to {p.r}; the stratum is not an "
            "isolated point")
    ages = [
        sum(Fraction((k * wi) % p.r, p.r) for wi in p.local_weights)
        for k in range(1, p.r)
    ]
    least = min(ages)
    if least > 1:
        return SingularityClass.TERMINAL
    if least == 1:
        return SingularityClass.CANONICAL_NOT_TERMINAL
    return SingularityClass.NOT_CANONICAL


def h0_monomials(w: WeightedP3, d: int) -> int:
    """Number of monomials of weighted degree d, i.e. dim H^0 of the degree-d
    reflexive sheaf."""
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    counts = [0] * (d + 1)
    counts[0] = 1
    for a in w.weights:
        for degree in range(a, d + 1):
            counts[degree] += counts[degree - a]
    return counts[d]


def basket_consistency(w: WeightedP3, candidate: Basket) -> bool:
    """Check the candidate basket against the section count: the monomial
    count at the Weil index must equal the h0 the basket predicts for the
    anticanonical degree."""
    predicted = h0_from_degree(anticanonical_degree(w), candidate)
    return predicted is not None and predicted == h0_monomials(w, weil_index(w))
