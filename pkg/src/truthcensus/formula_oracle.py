"""Brute-force truth-table oracle over all bracketings of a variable chain.

Bracketings are full binary trees represented as nested tuples: a leaf is
the 1-based variable index (an int), an internal node is a pair
(left, right).  Leaves read left to right are always p_1..p_n in order.

Two independent false-counting engines are kept deliberately:

  * direct evaluation of every one of the 2^n valuations (``truth_table``,
    vectorised internally over a 2^n-bit column), and
  * the per-subtree (true, false) product rule (``false_count``), which
    never touches individual valuations and scales to n = 14.

Canonical row order: row r of a table corresponds to the valuation integer
m = 2^n - 1 - r whose k-th least significant bit is the value of p_k.  Row 0
is therefore the all-true valuation, the last row all-false, and p_1
alternates fastest down the table.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Union

from .sequences import catalan

FormulaTree = Union[int, tuple["FormulaTree", "FormulaTree"]]

MAX_ENUM_N = 14          # full tree catalogs stay desk-scale up to here
MAX_TABLE_N = 20         # 2^n-row guard for single-tree tables
MAX_CENSUS_TABLE_N = 12  # censusing every tree by full table
MAX_UNIFORMITY_N = 10


class Connective(Enum):
    """Binary connective given by the unique operand pair it falsifies."""

    IMPLIES = ("→", (1, 0))
    CASE_I = ("⇀", (1, 1))
    CASE_II = ("↼", (0, 0))
    CASE_III = ("⇌", (0, 1))

    def __init__(self, symbol: str, false_pair: tuple[int, int]):
        self.symbol = symbol
        self.false_pair = false_pair

    def apply(self, left: int, right: int) -> int:
        return 0 if (left, right) == self.false_pair else 1


# Recurrence column verified by each connective's census.
CONNECTIVE_COLUMN = {
    Connective.IMPLIES: "f",
    Connective.CASE_I: "y",
    Connective.CASE_II: "h",
    Connective.CASE_III: "s",
}


def enumerate_trees(n: int) -> Iterator[FormulaTree]:
    """Yield every bracketing of p_1..p_n exactly once.

    Order is deterministic: by leaf count of the left subtree ascending,
    then recursively by the same rule on the left, then the right.
    Subtrees are structurally shared, so the catalog for n = 14 (742900
    trees) fits comfortably in memory.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"tree enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    cache: dict[tuple[int, int], tuple[FormulaTree, ...]] = {}
    return iter(_segment_trees(1, n, cache))


def _segment_trees(
    start: int, count: int, cache: dict[tuple[int, int], tuple[FormulaTree, ...]]
) -> tuple[FormulaTree, ...]:
    key = (start, count)
    got = cache.get(key)
    if got is not None:
        return got
    if count == 1:
        out: tuple[FormulaTree, ...] = (start,)
    else:
        acc: list[FormulaTree] = []
        for i in range(1, count):
            for left in _segment_trees(start, i, cache):
                for right in _segment_trees(start + i, count - i, cache):
                    acc.append((left, right))
        out = tuple(acc)
    cache[key] = out
    return out


def leaf_count(tree: FormulaTree) -> int:
    if isinstance(tree, int):
        return 1
    return leaf_count(tree[0]) + leaf_count(tree[1])


def leaf_positions(tree: FormulaTree) -> list[int]:
    """Leaf variable indices in left-to-right order."""
    if isinstance(tree, int):
        return [tree]
    return leaf_positions(tree[0]) + leaf_positions(tree[1])


def render_tree(tree: FormulaTree, connective: Connective) -> str:
    """Bracketed string form, e.g. ((p1⇀p2)⇀p3)."""
    if isinstance(tree, int):
        return f"p{tree}"
    left = render_tree(tree[0], connective)
    right = render_tree(tree[1], connective)
    return f"({left}{connective.symbol}{right})"


def evaluate(tree: FormulaTree, connective: Connective, valuation: tuple[int, ...]) -> int:
    """Truth value of a tree under one valuation (entry k-1 is the value of p_k)."""
    n = leaf_count(tree)
    if len(valuation) != n:
        raise ValueError(f"valuation has length {len(valuation)}, tree has {n} leaves")
    return _evaluate(tree, connective, valuation)


def _evaluate(tree: FormulaTree, connective: Connective, valuation: tuple[int, ...]) -> int:
    if isinstance(tree, int):
        return 1 if valuation[tree - 1] else 0
    left = _evaluate(tree[0], connective, valuation)
    right = _evaluate(tree[1], connective, valuation)
    return connective.apply(left, right)


def row_valuation(row: int, n: int) -> tuple[int, ...]:
    """Valuation of canonical row `row`: bits of 2^n - 1 - row, p_1 least significant."""
    if not 0 <= row < (1 << n):
        raise ValueError(f"row {row} outside 0..{(1 << n) - 1}")
    m = (1 << n) - 1 - row
    return tuple((m >> k) & 1 for k in range(n))


def valuation_row(valuation: tuple[int, ...]) -> int:
    """Inverse of row_valuation."""
    n = len(valuation)
    m = sum(bit << k for k, bit in enumerate(valuation))
    return (1 << n) - 1 - m


@dataclass(frozen=True)
class TruthTable:
    """All 2^n rows of one bracketing's truth table, in canonical row order."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} rows, got {len(self.rows)}")

    def false_rows(self) -> int:
        return self.rows.count(0)


def _leaf_column(k: int, n: int) -> int:
    # Bit m of the column is the value of p_k at valuation integer m.
    half = 1 << (k - 1)
    mask = ((1 << half) - 1) << half
    width = half << 1
    size = 1 << n
    while width < size:
        mask |= mask << width
        width <<= 1
    return mask


def _tree_column(tree: FormulaTree, connective: Connective, n: int) -> int:
    """Truth column over all valuation integers m as one 2^n-bit integer."""
    full = (1 << (1 << n)) - 1
    kind = connective

    def rec(node: FormulaTree) -> int:
        if isinstance(node, int):
            return _leaf_column(node, n)
        left = rec(node[0])
        right = rec(node[1])
        if kind is Connective.IMPLIES:
            return (full ^ left) | right
        if kind is Connective.CASE_I:
            return full ^ (left & right)
        if kind is Connective.CASE_II:
            return left | right
        return left | (full ^ right)  # CASE_III

    return rec(tree)


def truth_table(tree: FormulaTree, connective: Connective) -> TruthTable:
    """Evaluate a bracketing on every valuation (n <= 20 row-count guard)."""
    n = leaf_count(tree)
    if n > MAX_TABLE_N:
        raise ValueError(f"truth tables limited to n <= {MAX_TABLE_N}, got {n}")
    positions = leaf_positions(tree)
    if positions != list(range(1, n + 1)):
        raise ValueError(f"leaves must be p_1..p_n in order, got {positions}")
    column = _tree_column(tree, connective, n)
    size = 1 << n
    rows = tuple((column >> (size - 1 - r)) & 1 for r in range(size))
    return TruthTable(n=n, rows=rows)


def false_count(tree: FormulaTree, connective: Connective) -> int:
    """False-row count via the per-subtree (true, false) product rule.

    A subtree on k variables has t + f = 2^k; an internal node falsifies
    exactly the operand pair of the connective, so its false count is the
    product of the matching child counts (e.g. t_left * t_right when the
    false pair is (1, 1)) and its true count is the remainder.
    """
    return _true_false(tree, connective)[1]


def _true_false(tree: FormulaTree, connective: Connective) -> tuple[int, int]:
    if isinstance(tree, int):
        return (1, 1)
    lt, lf = _true_false(tree[0], connective)
    rt, rf = _true_false(tree[1], connective)
    wl, wr = connective.false_pair
    false = (lt if wl else lf) * (rt if wr else rf)
    return ((lt + lf) * (rt + rf) - false, false)


@dataclass(frozen=True)
class Census:
    """Aggregate true/false row counts over every bracketing of n variables."""

    n: int
    connective: Connective
    false_total: int
    true_total: int
    rows_total: int


def census(n: int, connective: Connective, method: str = "product", jobs: int = 1) -> Census:
    """Sum false rows over all bracketings of p_1..p_n.

    method="product" uses the (true, false) product rule per tree (n <= 14);
    method="table" counts zeros of every full truth table (n <= 12).  With
    jobs > 1 the product-rule sum is split by the top-level split point and
    reduced by exact addition, so the result is independent of job count.
    """
    if method not in ("product", "table"):
        raise ValueError(f"unknown census method {method!r}")
    bound = MAX_ENUM_N if method == "product" else MAX_CENSUS_TABLE_N
    if not 1 <= n <= bound:
        raise ValueError(f"census method {method!r} supports 1 <= n <= {bound}, got {n}")

    if method == "product" and jobs > 1 and n >= 3:
        false_total = _parallel_false_total(n, connective, jobs)
    elif method == "product":
        false_total = sum(false_count(tree, connective) for tree in enumerate_trees(n))
    else:
        size = 1 << n
        full = (1 << size) - 1
        false_total = sum(
            (full ^ _tree_column(tree, connective, n)).bit_count()
            for tree in enumerate_trees(n)
        )
    rows_total = catalan(n) << n
    return Census(
        n=n,
        connective=connective,
        false_total=false_total,
        true_total=rows_total - false_total,
        rows_total=rows_total,
    )


def _split_false_total(args: tuple[int, str, int]) -> int:
    n, connective_name, split = args
    connective = Connective[connective_name]
    cache: dict[tuple[int, int], tuple[FormulaTree, ...]] = {}
    total = 0
    for left in _segment_trees(1, split, cache):
        for right in _segment_trees(1 + split, n - split, cache):
            total += false_count((left, right), connective)
    return total


def _parallel_false_total(n: int, connective: Connective, jobs: int) -> int:
    from concurrent.futures import ProcessPoolExecutor

    tasks = [(n, connective.name, split) for split in range(1, n)]
    try:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_split_false_total, tasks))
    except (OSError, PermissionError):
        # Environments that forbid subprocesses fall back to the same sum.
        return sum(_split_false_total(task) for task in tasks)


def check_case_ii_uniformity(n: int) -> bool:
    """True iff every bracketing yields the identical table under the
    both-false-falsifying connective, false only on the all-zeros row."""
    if not 1 <= n <= MAX_UNIFORMITY_N:
        raise ValueError(f"uniformity check supports 1 <= n <= {MAX_UNIFORMITY_N}, got {n}")
    full = (1 << (1 << n)) - 1
    expected = full ^ 1  # bit 0 is the all-false valuation
    return all(
        _tree_column(tree, Connective.CASE_II, n) == expected
        for tree in enumerate_trees(n)
    )


def tables_csv(n: int, connective: Connective) -> str:
    """CSV with columns p_1..p_n plus one truth column per bracketing.

    Rows follow the canonical row order; bits render as 0/1 and each tree
    column is headed by its bracketed formula string.
    """
    if not 1 <= n <= MAX_CENSUS_TABLE_N:
        raise ValueError(f"table export supports 1 <= n <= {MAX_CENSUS_TABLE_N}, got {n}")
    trees = list(enumerate_trees(n))
    tables = [truth_table(tree, connective) for tree in trees]
    header = [f"p_{k}" for k in range(1, n + 1)]
    header += [render_tree(tree, connective) for tree in trees]
    lines = [",".join(header)]
    for r in range(1 << n):
        cells = [str(bit) for bit in row_valuation(r, n)]
        cells += [str(table.rows[r]) for table in tables]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
