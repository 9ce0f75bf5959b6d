"""Limit constants and convergence diagnostics for the row censuses.

All printed digits come from exact integer arithmetic: ratios are rendered
from exact rationals and the quadratic-surd constants from integer square
roots of scaled powers of ten, both rounded half-up at the last digit.
Hardware floats appear only inside ``asymptotic_estimate``, whose job is a
leading-order plausibility check (constant * 2^(3n-2) / sqrt(pi n^3)), never
a source of printed digits.

The four limits of false/true-row densities:

    y:  (10 - 2*sqrt(10)) / 10 = 0.367544467966...
    d:  sqrt(2/5)              = 0.632455532033...   (complements y to 1)
    f:  (3 - sqrt(3)) / 6      = 0.211324865405...
    g:  1                       (the row totals themselves)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .sequences import SequenceTable, f_sequence, y_sequence

MAX_DIGITS = 50

SINGULARITY_RADIUS = Fraction(1, 8)


def format_fraction(value: Fraction, digits: int) -> str:
    """Decimal string of an exact rational with `digits` decimals, round-half-up."""
    if digits < 0:
        raise ValueError(f"digits must be non-negative, got {digits}")
    sign = "-" if value < 0 else ""
    num, den = abs(value.numerator), value.denominator
    scaled, remainder = divmod(num * 10**digits, den)
    if 2 * remainder >= den:
        scaled += 1
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _surd_decimal(a: int, c: int, k: int, b: int, digits: int) -> str:
    """Correctly rounded decimals of (a + c*sqrt(k)) / b, 0 <= value, b > 0.

    Scaling by 10^digits turns the surd into sqrt of an integer, so the
    floor of the numerator is exact via math.isqrt; half-up rounding uses
    floor((2A + b +- sqrt(4M)) / 2b) with the irrational floor adjusted by 1.
    """
    if not 1 <= digits <= MAX_DIGITS:
        raise ValueError(f"digits must be in 1..{MAX_DIGITS}, got {digits}")
    scale = 10**digits
    big_a = a * scale
    if c == 0:
        return format_fraction(Fraction(big_a, b * scale), digits)
    m4 = 4 * c * c * k * scale * scale
    root = math.isqrt(m4)
    exact = root * root == m4
    if c > 0:
        numerator = 2 * big_a + b + root
    else:
        numerator = 2 * big_a + b - root - (0 if exact else 1)
    scaled = numerator // (2 * b)
    if scaled < 0:
        raise ValueError("surd rendering expects a non-negative value")
    whole, frac = divmod(scaled, scale)
    return f"{whole}.{frac:0{digits}d}"


def constant_y(digits: int) -> str:
    """Limit of y_n / g_n: (10 - 2*sqrt(10)) / 10, correctly rounded."""
    return _surd_decimal(10, -2, 10, 10, digits)


def constant_d(digits: int) -> str:
    """Limit of d_n / g_n: sqrt(2/5) = 2*sqrt(10)/10, correctly rounded."""
    return _surd_decimal(0, 2, 10, 10, digits)


def constant_f(digits: int) -> str:
    """Limit of f_n / g_n: (3 - sqrt(3)) / 6, correctly rounded."""
    return _surd_decimal(3, -1, 3, 6, digits)


def constant_g(digits: int) -> str:
    """Leading coefficient of the row totals themselves: exactly 1."""
    return _surd_decimal(1, 0, 1, 1, digits)


def constant_y_fraction(digits: int = 40) -> Fraction:
    """Rational approximation of the y limit, exact to the rendered digits."""
    text = constant_y(digits)
    whole, frac = text.split(".")
    return Fraction(int(whole) * 10 ** len(frac) + int(frac), 10 ** len(frac))


@dataclass(frozen=True)
class AsymptoticProfile:
    """Singularity radius and the four density limits at one precision."""

    digits: int
    radius: Fraction
    constant_y: str
    constant_d: str
    constant_f: str
    constant_g: str


def asymptotic_profile(digits: int = 30) -> AsymptoticProfile:
    return AsymptoticProfile(
        digits=digits,
        radius=SINGULARITY_RADIUS,
        constant_y=constant_y(digits),
        constant_d=constant_d(digits),
        constant_f=constant_f(digits),
        constant_g=constant_g(digits),
    )


def asymptotic_estimate(n: int, constant) -> Fraction:
    """Leading-order size estimate constant * 2^(3n-2) / sqrt(pi * n^3).

    The power of two is exact; the square root is evaluated in hardware
    floating point (its argument stays tiny), which is plenty for the
    estimate/exact convergence diagnostics this feeds.
    """
    if n < 1:
        raise ValueError(f"estimate needs n >= 1, got {n}")
    factor = Fraction(constant) if not isinstance(constant, Fraction) else constant
    return factor * (1 << (3 * n - 2)) / Fraction(math.sqrt(math.pi * n**3))


@dataclass(frozen=True)
class RatioRow:
    n: int
    y: int
    g: int
    ratio: str


def ratio_table(
    ns: list[int], digits: int = 11, table: SequenceTable | None = None
) -> list[RatioRow]:
    """Exact false-row densities y_n / g_n rendered to `digits` decimals."""
    if not ns:
        return []
    if min(ns) < 1:
        raise ValueError("ratio rows need n >= 1")
    if table is None:
        table = SequenceTable(max(ns))
    ys = table.column("y")
    gs = table.column("g")
    return [
        RatioRow(n=n, y=ys[n], g=gs[n], ratio=format_fraction(Fraction(ys[n], gs[n]), digits))
        for n in ns
    ]


def check_probability_dominance(max_n: int) -> bool:
    """True iff y_n >= f_n for every 1 <= n <= max_n (densities share g_n > 0)."""
    if max_n < 1:
        raise ValueError(f"dominance check needs max_n >= 1, got {max_n}")
    ys = y_sequence(max_n)
    fs = f_sequence(max_n)
    return all(ys[n] >= fs[n] for n in range(1, max_n + 1))
