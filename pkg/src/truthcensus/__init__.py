"""Exact census of true/false rows in truth tables of bracketed connective chains.

The library computes every count three independent ways where the design
allows it: quadratic convolution recurrences (`sequences`), brute-force
enumeration of all bracketings with truth-table evaluation
(`formula_oracle`), and exact generating-series expansion (`power_series`),
with `asymptotics` adding limit constants and `fruitful_tree` the decorated
component-count trees.  The `truthcensus` CLI exposes all of it.
"""

from .asymptotics import (
    AsymptoticProfile,
    RatioRow,
    asymptotic_estimate,
    asymptotic_profile,
    check_probability_dominance,
    constant_d,
    constant_f,
    constant_g,
    constant_y,
    format_fraction,
    ratio_table,
)
from .formula_oracle import (
    Census,
    Connective,
    FormulaTree,
    TruthTable,
    census,
    check_case_ii_uniformity,
    enumerate_trees,
    evaluate,
    false_count,
    render_tree,
    row_valuation,
    tables_csv,
    truth_table,
)
from .fruitful_tree import (
    FruitfulTree,
    FruitKind,
    MainBranch,
    build_fruitful_tree,
    component_count,
    component_count_is_odd,
    to_dot,
    to_json,
)
from .power_series import (
    Series,
    check_functional_equation,
    check_quadratic_equation,
    expand_g,
    expand_y,
)
from .sequences import (
    COLUMN_NAMES,
    SINGLETON_COMPONENTS,
    SequenceTable,
    catalan,
    catalan_is_odd,
    catalan_standard,
    d_sequence,
    f_sequence,
    g,
    h_sequence,
    is_power_of_two,
    partition_row,
    s_sequence,
    y_is_odd,
    y_sequence,
)

__version__ = "0.1.0"
