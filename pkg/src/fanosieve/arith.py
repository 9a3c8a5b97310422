"""Exact rational arithmetic and the number-theoretic predicates used by the sieve.

Every quantity in the engine is an integer or a ``fractions.Fraction``; no
floats occur anywhere, including in decimal display strings (those are
rendered with integer arithmetic).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm

# All fractional quantities (degrees, Chern numbers, slacks) use Fraction:
# normalized on construction, positive denominator, exact arithmetic,
# arbitrary-precision integers underneath.
Rational = Fraction


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as [(p, a), ...] with primes ascending.

    factorize(1) is the empty list.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    factors: list[tuple[int, int]] = []
    for p in range(2, isqrt(n) + 1):
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            factors.append((p, a))
    if n > 1:
        factors.append((n, 1))
    return factors


def factorization_str(n: int) -> str:
    """Render n in prime-power form, e.g. 200 -> '2^3*5^2', 7 -> '7', 1 -> '1'."""
    factors = factorize(n)
    if not factors:
        return "1"
    return "*".join(f"{p}^{a}" if a > 1 else str(p) for p, a in factors)


def lcm_list(xs: list[int]) -> int:
    """Least common multiple of a non-empty list of positive integers."""
    if not xs:
        raise ValueError("lcm_list requires a non-empty list")
    if any(x < 1 for x in xs):
        raise ValueError(f"lcm_list requires positive integers, got {xs}")
    return lcm(*xs)


def square_divisors(n: int) -> list[int]:
    """All d >= 1 with d*d dividing n, ascending."""
    if n < 1:
        raise ValueError(f"square_divisors requires n >= 1, got {n}")
    return [d for d in range(1, isqrt(n) + 1) if n % (d * d) == 0]


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def is_rational_square(x: Rational) -> bool:
    """True iff x >= 0 is the square of a rational number.

    In lowest terms both numerator and denominator must be perfect squares.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"is_rational_square requires x >= 0, got {x}")
    num, den = x.numerator, x.denominator
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def parse_rational(text: str) -> Rational:
    """Parse 'num/den' or a plain integer string into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(x: Rational) -> str:
    """Canonical string form: 'num/den', or just 'num' when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _terminating_decimal(x: Fraction) -> str | None:
    """Exact decimal expansion of x when its denominator is 2^a * 5^b, else None."""
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    digits = max(twos, fives)
    scaled = x * 10**digits
    sign = "-" if scaled < 0 else ""
    body = str(abs(scaled.numerator))
    if digits == 0:
        return sign + body
    body = body.rjust(digits + 1, "0")
    whole, frac = body[:-digits], body[-digits:]
    frac = frac.rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else sign + whole


def decimal_string(x: Rational, digits: int = 4) -> tuple[str, bool]:
    """Decimal rendering of a rational, as (text, is_exact).

    Terminating expansions are printed in full; otherwise the value is
    rounded half-up at the requested digit, in exact integer arithmetic.
    """
    x = Fraction(x)
    exact = _terminating_decimal(x)
    if exact is not None:
        return exact, True
    scale = 10**digits
    scaled = x * scale
    rounded = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    text = _terminating_decimal(Fraction(rounded, scale))
    assert text is not None
    return text, False


def decimal_display(x: Rational, digits: int = 4) -> str:
    """Display string '=1.5' when the expansion terminates, else '≈4.3611'."""
    text, exact = decimal_string(x, digits)
    return ("=" if exact else "≈") + text
