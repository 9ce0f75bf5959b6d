"""Report bundle: delimited tables plus matplotlib figures rendered to files.

Writes into an output directory:

    sequences.csv           all census columns for n = 0..max_n
    convergence.csv/.png    y_n/g_n against the limit constant
    estimate_accuracy.csv/.png  leading-order estimate over exact y_n

Figures use the Agg backend so the report works headless.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .asymptotics import (
    asymptotic_estimate,
    constant_y,
    constant_y_fraction,
    format_fraction,
    ratio_table,
)
from .sequences import COLUMN_NAMES, SequenceTable


def write_sequences_csv(path: Path, table: SequenceTable) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(("n",) + COLUMN_NAMES)
        columns = [table.column(name) for name in COLUMN_NAMES]
        for n in range(table.max_n + 1):
            writer.writerow([n] + [col[n] for col in columns])


def write_convergence(out_dir: Path, table: SequenceTable, digits: int) -> None:
    ns = list(range(1, table.max_n + 1))
    rows = ratio_table(ns, digits=digits, table=table)
    limit = constant_y(digits)

    with (out_dir / "convergence.csv").open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "y_n", "g_n", "ratio", "limit"])
        for row in rows:
            writer.writerow([row.n, row.y, row.g, row.ratio, limit])

    ratios = [float(Fraction(row.y, row.g)) for row in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ns, ratios, marker="o", markersize=3, linewidth=1, label="false-row density y_n / g_n")
    ax.axhline(float(constant_y_fraction()), color="crimson", linewidth=1, linestyle="--",
               label=f"limit {limit}")
    ax.set_xlabel("n")
    ax.set_ylabel("y_n / g_n")
    ax.set_title("Convergence of the false-row density")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_dir / "convergence.png", dpi=150)
    plt.close(fig)


def write_estimate_accuracy(out_dir: Path, table: SequenceTable) -> None:
    constant = constant_y_fraction()
    ys = table.column("y")
    ns = [n for n in range(2, table.max_n + 1)]
    quotients = [asymptotic_estimate(n, constant) / ys[n] for n in ns]

    with (out_dir / "estimate_accuracy.csv").open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "estimate_over_exact"])
        for n, q in zip(ns, quotients):
            writer.writerow([n, format_fraction(q, 12)])

    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ns, [float(q) for q in quotients], marker="o", markersize=3, linewidth=1)
    ax.axhline(1.0, color="crimson", linewidth=1, linestyle="--")
    ax.set_xlabel("n")
    ax.set_ylabel("estimate / exact")
    ax.set_title("Leading-order estimate against exact y_n")
    fig.tight_layout()
    fig.savefig(out_dir / "estimate_accuracy.png", dpi=150)
    plt.close(fig)


def generate_report(out_dir: str | Path, max_n: int = 60, digits: int = 11) -> list[Path]:
    """Write all report artifacts; returns the created paths."""
    if max_n < 2:
        raise ValueError(f"report needs max_n >= 2, got {max_n}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    table = SequenceTable(max_n)

    write_sequences_csv(out / "sequences.csv", table)
    write_convergence(out, table, digits)
    write_estimate_accuracy(out, table)

    return [
        out / "sequences.csv",
        out / "convergence.csv",
        out / "convergence.png",
        out / "estimate_accuracy.csv",
        out / "estimate_accuracy.png",
    ]
