"""Exact integer sequences for the bracketed-chain truth-table census.

Every value is an exact Python integer; nothing here touches floating
point.  The central objects are the bracketing counts (a shifted Catalan
sequence with C_1 = C_2 = 1, C_3 = 2, ...), the total row counts
g_n = 2^n * C_n, and the false-row counts of the four binary connectives:

    y_n  -- connective false exactly when both operands are true,
    f_n  -- ordinary implication (false exactly on true -> false),
    s_n  -- connective false exactly when left is false and right true,
    h_n  -- connective false exactly when both operands are false.

Each false-row sequence satisfies a quadratic convolution recurrence in
which the factor (g_i - column_i) counts true rows of the i-variable side;
those deficits are asserted non-negative before every multiplication.
"""

from __future__ import annotations

import math

COLUMN_NAMES = ("catalan", "f", "s", "h", "y", "d", "g", "a_y", "a_d")

# Component count of the n=1 decorated tree: one root plus one fruit.  The
# closed form fruits + sub-branches + n only applies from n = 2 upward.
SINGLETON_COMPONENTS = 2


def catalan(n: int) -> int:
    """Number of bracketings of a chain of n terms.

    Uses the shifted indexing in which catalan(1) = catalan(2) = 1,
    catalan(3) = 2, catalan(4) = 5, and catalan(0) = 0.
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    if n == 0:
        return 0
    return math.comb(2 * n - 2, n - 1) // n


def catalan_standard(k: int) -> int:
    """Catalan number in the common indexing (1, 1, 2, 5, 14, ...).

    catalan_standard(k) == catalan(k + 1); exposed for cross-checks against
    external references that start the sequence at index 0.
    """
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")
    return catalan(k + 1)


def g(n: int) -> int:
    """Total number of truth-table rows over all bracketings: 2^n * catalan(n)."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    return catalan(n) << n


def y_sequence(max_n: int) -> list[int]:
    """False-row totals y_0..y_max_n for the both-true-falsifying connective.

    y_n = sum_{i=1}^{n-1} (g_i - y_i)(g_{n-i} - y_{n-i}) with y_0 = 0, y_1 = 1:
    a false row needs both sides true, so each summand pairs the true-row
    deficits of the two sides of the top split.
    """
    values = [0, 1][: max_n + 1]
    deficits = [0, 1]  # g_i - y_i, the true-row counts
    for n in range(2, max_n + 1):
        total = sum(deficits[i] * deficits[n - i] for i in range(1, n))
        values.append(total)
        deficit = g(n) - total
        assert deficit >= 0, f"true-row deficit negative at n={n}"
        deficits.append(deficit)
    return values


def f_sequence(max_n: int) -> list[int]:
    """False-row totals f_0..f_max_n for ordinary implication.

    f_n = sum_{i=1}^{n-1} (g_i - f_i) f_{n-i} with f_0 = 0, f_1 = 1: the left
    side must be true and the right side false.
    """
    values = [0, 1][: max_n + 1]
    deficits = [0, 1]  # g_i - f_i
    for n in range(2, max_n + 1):
        total = sum(deficits[i] * values[n - i] for i in range(1, n))
        values.append(total)
        deficit = g(n) - total
        assert deficit >= 0, f"true-row deficit negative at n={n}"
        deficits.append(deficit)
    return values


def s_sequence(max_n: int) -> list[int]:
    """False-row totals s_0..s_max_n for the false-left/true-right connective.

    s_n = sum_{i=1}^{n-1} s_i (g_{n-i} - s_{n-i}) with s_0 = 0, s_1 = 1.
    Elementwise equal to f_sequence (the two recurrences are mirror images).
    """
    values = [0, 1][: max_n + 1]
    deficits = [0, 1]  # g_i - s_i
    for n in range(2, max_n + 1):
        total = sum(values[i] * deficits[n - i] for i in range(1, n))
        values.append(total)
        deficit = g(n) - total
        assert deficit >= 0, f"true-row deficit negative at n={n}"
        deficits.append(deficit)
    return values


def h_sequence(max_n: int) -> list[int]:
    """False-row totals h_0..h_max_n for the both-false-falsifying connective.

    h_n = sum_{i=1}^{n-1} h_i h_{n-i} with h_0 = 0, h_1 = 1, which is the
    bracketing-count recurrence itself, so h_n = catalan(n).
    """
    values = [0, 1][: max_n + 1]
    for n in range(2, max_n + 1):
        values.append(sum(values[i] * values[n - i] for i in range(1, n)))
    return values


def d_sequence(max_n: int) -> list[int]:
    """True-row totals d_0..d_max_n for the both-true-falsifying connective: g_n - y_n."""
    ys = y_sequence(max_n)
    values = []
    for n, yn in enumerate(ys):
        dn = g(n) - yn
        assert dn >= 0, f"true-row count negative at n={n}"
        values.append(dn)
    return values


def partition_row(n: int) -> list[int]:
    """Summands of the y recurrence at index n, one per top-level split.

    Entry i-1 (for i = 1..n-1) is (g_i - y_i)(g_{n-i} - y_{n-i}); the list is
    palindromic and sums to y_n.
    """
    if n < 2:
        raise ValueError(f"partition rows start at n=2, got {n}")
    ys = y_sequence(n - 1)
    deficits = [g(i) - ys[i] for i in range(n)]
    return [deficits[i] * deficits[n - i] for i in range(1, n)]


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def catalan_is_odd(n: int) -> bool:
    """catalan(n) is odd exactly when n is a power of two (n >= 1)."""
    if n < 1:
        raise ValueError(f"parity predicate needs n >= 1, got {n}")
    return is_power_of_two(n)


def y_is_odd(n: int) -> bool:
    """y_n is odd exactly when n is a power of two (n >= 1); d_n has the same parity."""
    if n < 1:
        raise ValueError(f"parity predicate needs n >= 1, got {n}")
    return is_power_of_two(n)


class SequenceTable:
    """Memoized columns of all census sequences up to a fixed index.

    Columns are built bottom-up on first access and cached as immutable
    tuples, so a table can be shared read-only between consumers.  Column
    names: catalan, f, s, h, y, d, g, a_y, a_d (a_* are the decorated-tree
    component counts; a_0 = 0 and a_1 = SINGLETON_COMPONENTS by convention,
    the closed form mu_n + catalan(n) + n applies from n = 2).
    """

    def __init__(self, max_n: int):
        if max_n < 0:
            raise ValueError(f"max_n must be non-negative, got {max_n}")
        self.max_n = max_n
        self._columns: dict[str, tuple[int, ...]] = {}

    def column(self, name: str) -> tuple[int, ...]:
        if name not in COLUMN_NAMES:
            raise KeyError(f"unknown column {name!r}; expected one of {COLUMN_NAMES}")
        cached = self._columns.get(name)
        if cached is None:
            cached = tuple(self._build(name))
            self._columns[name] = cached
        return cached

    def value(self, name: str, n: int) -> int:
        if not 0 <= n <= self.max_n:
            raise IndexError(f"n={n} outside table range 0..{self.max_n}")
        return self.column(name)[n]

    def _build(self, name: str) -> list[int]:
        top = self.max_n
        if name == "catalan":
            return [catalan(n) for n in range(top + 1)]
        if name == "g":
            return [g(n) for n in range(top + 1)]
        if name == "y":
            return y_sequence(top)
        if name == "f":
            return f_sequence(top)
        if name == "s":
            return s_sequence(top)
        if name == "h":
            return h_sequence(top)
        if name == "d":
            ys = self.column("y")
            return [g(n) - ys[n] for n in range(top + 1)]
        # a_y / a_d: component counts mu_n + catalan(n) + n for n >= 2
        mu = self.column("y" if name == "a_y" else "d")
        cats = self.column("catalan")
        head = [0, SINGLETON_COMPONENTS][: top + 1]
        return head + [mu[n] + cats[n] + n for n in range(2, top + 1)]
