"""Acceptance gate: one test per release criterion.

Each test prints a single PASS line (visible with ``pytest -s`` or in the
captured output section) after all of its assertions hold, and enforces the
stated runtime budget where a criterion has one.  All expected values are
exact; no tolerances apply except where a bound is itself the criterion.
"""

import time
from fractions import Fraction

from truthcensus import (
    Connective,
    SequenceTable,
    census,
    check_case_ii_uniformity,
    check_functional_equation,
    check_probability_dominance,
    check_quadratic_equation,
    constant_y,
    expand_y,
    f_sequence,
    is_power_of_two,
    partition_row,
    ratio_table,
    truth_table,
    y_sequence,
)
from truthcensus.asymptotics import constant_y_fraction

from reference_data import (
    A_D_TABLE,
    A_Y_TABLE,
    CASE_I_TABLE_LEFT,
    CASE_I_TABLE_RIGHT,
    CASE_II_TABLE,
    D_TABLE,
    PARTITION_ROWS,
    RATIO_STRINGS_11,
    Y_KNOWN,
)


def report(number: int, label: str) -> None:
    print(f"ACCEPTANCE {number:2d} PASS  {label}")


def test_criterion_01_sequence_fidelity():
    start = time.monotonic()
    values = y_sequence(22)
    elapsed = time.monotonic() - start
    for n in range(1, 23):
        assert values[n] == Y_KNOWN[n - 1]
    assert elapsed < 1.0, f"y_1..y_22 took {elapsed:.3f}s"
    report(1, "y_1..y_22 match the known list exactly (22 equalities, <1s)")


def test_criterion_02_oracle_equivalence():
    start = time.monotonic()
    table = SequenceTable(500)
    expected = {
        Connective.CASE_I: table.column("y"),
        Connective.IMPLIES: table.column("f"),
        Connective.CASE_III: table.column("s"),
        Connective.CASE_II: table.column("h"),
    }
    for n in range(1, 11):
        for connective, column in expected.items():
            assert census(n, connective).false_total == column[n], (n, connective)
    assert table.column("s") == table.column("f")
    assert table.column("h") == table.column("catalan")
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"oracle equivalence took {elapsed:.3f}s"
    report(2, "brute-force census equals recurrences (n=1..10, 4 connectives; s=f, h=catalan to 500, <60s)")


def test_criterion_03_example_reproduction():
    assert truth_table((1, (2, 3)), Connective.CASE_I).rows == CASE_I_TABLE_LEFT
    assert truth_table(((1, 2), 3), Connective.CASE_I).rows == CASE_I_TABLE_RIGHT
    assert truth_table((1, (2, 3)), Connective.CASE_II).rows == CASE_II_TABLE
    assert truth_table(((1, 2), 3), Connective.CASE_II).rows == CASE_II_TABLE
    report(3, "n=3 truth tables reproduced bit-for-bit in canonical row order")


def test_criterion_04_generating_function():
    start = time.monotonic()
    series = expand_y(200)
    assert series.is_integral()
    assert [int(c) for c in series.coeffs] == y_sequence(200)
    assert check_functional_equation(200).is_zero()
    assert check_quadratic_equation(200).is_zero()
    elapsed = time.monotonic() - start
    assert elapsed < 30.0, f"order-200 series work took {elapsed:.3f}s"
    report(4, "order-200 series integral, equal to recurrence, both residuals exactly zero (<30s)")


def test_criterion_05_tables():
    table = SequenceTable(10)
    assert list(table.column("d")) == D_TABLE
    assert list(table.column("a_y")) == A_Y_TABLE
    assert list(table.column("a_d")) == A_D_TABLE
    for n, row in PARTITION_ROWS.items():
        assert partition_row(n) == row
    report(5, "d_0..d_10, component-count tables, and partition rows n=2..6 all exact")


def test_criterion_06_convergence_table():
    rows = ratio_table(sorted(RATIO_STRINGS_11), digits=11)
    for row in rows:
        assert row.ratio == RATIO_STRINGS_11[row.n], row.n
    assert next(r for r in rows if r.n == 100).ratio == "0.36735248210"
    assert constant_y(9) == "0.367544468"
    report(6, "11-digit density strings reproduced (n=1..10, 100) and constant_y(9) exact")


def test_criterion_07_asymptotic_sanity():
    table = SequenceTable(200)
    limit = constant_y_fraction()
    density = lambda n: Fraction(table.value("y", n), table.value("g", n))
    assert abs(density(100) - limit) < Fraction(1, 1000)
    assert abs(density(200) - limit) < abs(density(50) - limit)
    report(7, "density within 1e-3 of the limit at n=100 and strictly closer at n=200 than n=50")


def test_criterion_08_parity():
    start = time.monotonic()
    table = SequenceTable(2048)
    ys = table.column("y")
    ds = table.column("d")
    cats = table.column("catalan")
    for n in range(1, 2049):
        expected = is_power_of_two(n)
        assert (ys[n] % 2 == 1) == expected, n
        assert (ds[n] % 2 == 1) == expected, n
        assert (cats[n] % 2 == 1) == expected, n
    ays = table.column("a_y")
    ads = table.column("a_d")
    for n in range(2, 513):
        assert (ays[n] % 2 == 1) == (n % 2 == 1), n
        assert (ads[n] % 2 == 1) == (n % 2 == 1), n
    elapsed = time.monotonic() - start
    assert elapsed < 120.0, f"parity sweep took {elapsed:.3f}s"
    report(8, "y,d,catalan odd exactly at powers of two (n<=2048); component counts odd exactly at odd n (n<=512) (<2min)")


def test_criterion_09_case_ii_uniformity():
    for n in range(1, 9):
        assert check_case_ii_uniformity(n)
    report(9, "every bracketing has the identical table, false only on the all-zeros row (n=1..8)")


def test_criterion_10_dominance():
    ys = y_sequence(500)
    fs = f_sequence(500)
    for n in range(1, 501):
        assert ys[n] >= fs[n], n
    assert check_probability_dominance(500)
    report(10, "y_n >= f_n for n=1..500")
