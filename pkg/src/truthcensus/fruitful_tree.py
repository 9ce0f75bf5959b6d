"""Decorated bracketing-count trees with per-branch fruit totals.

The tree for index n has one root, n-1 main branches (one per top-level
split i = 1..n-1), and catalan(i)*catalan(n-i) sub-branches hanging off
main branch i, for catalan(n) sub-branches in total.  Fruits are distributed
over the branches by the additive partition of the chosen census column:

    kind Y: branch i carries (g_i - y_i)(g_{n-i} - y_{n-i}) fruits,
    kind D: branch i carries 2^n * catalan(i)*catalan(n-i) minus that,

so the fruit totals sum to y_n resp. d_n and the two kinds partition the
g_n rows branch by branch.  Only per-branch aggregates are stored; every
derived quantity (component counts, parity) depends on totals alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .sequences import SINGLETON_COMPONENTS, catalan, g, partition_row, y_sequence

__all__ = [
    "FruitKind",
    "MainBranch",
    "FruitfulTree",
    "build_fruitful_tree",
    "component_count",
    "component_count_is_odd",
    "to_dot",
    "to_json",
    "SINGLETON_COMPONENTS",
]


class FruitKind(Enum):
    Y = "y"
    D = "d"


@dataclass(frozen=True)
class MainBranch:
    split: int              # leaf count of the left side, 1..n-1
    sub_branch_count: int   # catalan(split) * catalan(n - split)
    fruit_total: int


@dataclass(frozen=True)
class FruitfulTree:
    n: int
    kind: FruitKind
    branches: tuple[MainBranch, ...]

    @property
    def fruit_total(self) -> int:
        return sum(branch.fruit_total for branch in self.branches)

    @property
    def sub_branch_total(self) -> int:
        return sum(branch.sub_branch_count for branch in self.branches)

    def component_count(self) -> int:
        """Fruits + sub-branches + main branches + root."""
        return self.fruit_total + self.sub_branch_total + (self.n - 1) + 1


def build_fruitful_tree(n: int, kind: FruitKind) -> FruitfulTree:
    """Assemble the decorated tree for index n >= 2."""
    if n < 2:
        raise ValueError(f"fruitful trees start at n=2, got {n}")
    summands = partition_row(n)
    branches = []
    for i in range(1, n):
        subs = catalan(i) * catalan(n - i)
        if kind is FruitKind.Y:
            fruits = summands[i - 1]
        else:
            fruits = (subs << n) - summands[i - 1]
            assert fruits >= 0, f"true-row branch total negative at split {i}"
        branches.append(MainBranch(split=i, sub_branch_count=subs, fruit_total=fruits))
    return FruitfulTree(n=n, kind=kind, branches=tuple(branches))


def component_count(tree: FruitfulTree) -> int:
    return tree.component_count()


def component_count_is_odd(n: int, kind: FruitKind) -> bool:
    """Component totals are odd exactly for odd n (n >= 2).

    The fruit total and the sub-branch total share their parity (both odd
    exactly when n is a power of two), so their sum is even and the count
    reduces to n mod 2.
    """
    if n < 2:
        raise ValueError(f"component parity applies from n=2, got {n}")
    return n % 2 == 1


def to_json(tree: FruitfulTree) -> str:
    payload = {
        "n": tree.n,
        "kind": tree.kind.value,
        "component_count": str(tree.component_count()),
        "fruit_total": str(tree.fruit_total),
        "sub_branch_total": str(tree.sub_branch_total),
        "branches": [
            {
                "split": branch.split,
                "sub_branch_count": str(branch.sub_branch_count),
                "fruit_total": str(branch.fruit_total),
            }
            for branch in tree.branches
        ],
    }
    return json.dumps(payload, indent=2)


def to_dot(tree: FruitfulTree) -> str:
    """DOT graph: root, one node per main branch, one aggregated sub-branch
    node per main branch; fruit totals appear in the node labels."""
    lines = [
        "digraph fruitful_tree {",
        f'  // n={tree.n} kind={tree.kind.value} components={tree.component_count()}',
        '  root [label="root"];',
    ]
    for branch in tree.branches:
        mb = f"mb{branch.split}"
        sb = f"sb{branch.split}"
        lines.append(f'  {mb} [label="branch {branch.split}"];')
        lines.append(
            f'  {sb} [label="×{branch.sub_branch_count} sub-branches, '
            f'{branch.fruit_total} fruits"];'
        )
        lines.append(f"  root -> {mb};")
        lines.append(f"  {mb} -> {sb};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def expected_component_count(n: int, kind: FruitKind) -> int:
    """Closed form mu_n + catalan(n) + n (n >= 2), mu the chosen census column."""
    if n < 2:
        raise ValueError(f"closed form applies from n=2, got {n}")
    yn = y_sequence(n)[n]
    mu = yn if kind is FruitKind.Y else g(n) - yn
    return mu + catalan(n) + n
