"""Truncated formal power series over exact rationals.

Dense representation: a series of order N stores the coefficients of
x^0..x^N as Fractions and every operation is exact modulo x^(N+1).  Just
enough machinery for the two radicals

    sqrt(1 - 8x)   and   sqrt(3 - 4x - 2*sqrt(1 - 8x))

that build the closed forms of the row-total series G and the false-row
series Y, plus residual checks of the identities they satisfy:

    Y = x + (G - Y)^2
    2Y^2 + 2Y(sqrt(1-8x) - 2) + (1 - sqrt(1-8x) - 2x) = 0
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .sequences import y_sequence


@dataclass(frozen=True)
class Series:
    """Coefficients c_0..c_N of a series truncated at order N."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        if not all(isinstance(c, Fraction) for c in self.coeffs):
            object.__setattr__(
                self, "coeffs", tuple(Fraction(c) for c in self.coeffs)
            )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, values, order: int | None = None) -> "Series":
        coeffs = [Fraction(v) for v in values]
        if order is not None:
            if order + 1 < len(coeffs):
                coeffs = coeffs[: order + 1]
            else:
                coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, value, order: int) -> "Series":
        return cls.from_coeffs([value], order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls.from_coeffs([0, 1], order)

    def _require_same_order(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "Series") -> "Series":
        self._require_same_order(other)
        return Series(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Series") -> "Series":
        self._require_same_order(other)
        return Series(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "Series") -> "Series":
        self._require_same_order(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return Series(tuple(out))

    def scale(self, factor) -> "Series":
        factor = Fraction(factor)
        return Series(tuple(factor * c for c in self.coeffs))

    def sqrt(self) -> "Series":
        """Square root with positive constant term.

        Requires c_0 to be the square of a rational.  Coefficients follow
        s_n = (c_n - sum_{k=1}^{n-1} s_k s_{n-k}) / (2 s_0).
        """
        root0 = _rational_sqrt(self.coeffs[0])
        if root0 == 0:
            raise ValueError("square root needs a nonzero constant coefficient")
        out = [root0]
        for n in range(1, self.order + 1):
            acc = self.coeffs[n]
            for k in range(1, n):
                acc -= out[k] * out[n - k]
            out.append(acc / (2 * root0))
        return Series(tuple(out))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_json_dict(self) -> dict:
        """Exact JSON form: coefficients as strings, never floats."""
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}


def _rational_sqrt(value: Fraction) -> Fraction:
    if value < 0:
        raise ValueError(f"constant coefficient {value} has no rational square root")
    num, den = value.numerator, value.denominator
    rnum, rden = isqrt(num), isqrt(den)
    if rnum * rnum != num or rden * rden != den:
        raise ValueError(f"constant coefficient {value} is not a perfect rational square")
    return Fraction(rnum, rden)


def _radical(order: int) -> Series:
    # sqrt(1 - 8x)
    return Series.from_coeffs([1, -8], order).sqrt()


def expand_g(order: int) -> Series:
    """Row-total series: (1 - sqrt(1 - 8x)) / 2; coefficient n equals g(n)."""
    one = Series.constant(1, order)
    return (one - _radical(order)).scale(Fraction(1, 2))


def expand_y(order: int) -> Series:
    """False-row series: (2 - sqrt(1-8x) - sqrt(3 - 4x - 2*sqrt(1-8x))) / 2.

    The two minus signs pick the branch with constant term 0; every
    coefficient reduces to an integer equal to the recurrence value y_n.
    """
    radical = _radical(order)
    radicand = (
        Series.constant(3, order)
        - Series.from_coeffs([0, 4], order)
        - radical.scale(2)
    )
    inner = radicand.sqrt()
    return (Series.constant(2, order) - radical - inner).scale(Fraction(1, 2))


def check_functional_equation(order: int) -> Series:
    """Residual of Y - x - (G - Y)^2; the zero series when the identity holds."""
    y = expand_y(order)
    diff = expand_g(order) - y
    return y - Series.x(order) - diff * diff


def check_quadratic_equation(order: int) -> Series:
    """Residual of 2Y^2 + 2Y(sqrt(1-8x) - 2) + (1 - sqrt(1-8x) - 2x)."""
    y = expand_y(order)
    radical = _radical(order)
    term1 = (y * y).scale(2)
    term2 = (y * (radical - Series.constant(2, order))).scale(2)
    term3 = Series.constant(1, order) - radical - Series.from_coeffs([0, 2], order)
    return term1 + term2 + term3


def y_coefficients_match_recurrence(order: int) -> bool:
    """Elementwise comparison of the series coefficients with the recurrence."""
    series = expand_y(order)
    expected = y_sequence(order)
    return series.is_integral() and [int(c) for c in series.coeffs] == expected
