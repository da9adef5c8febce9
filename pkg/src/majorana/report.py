"""Machine-readable experiment reports: JSON records, CSV tables, figures.

Each experiment produces a list of :class:`ReportRecord` plus optional
named tables.  Tables are written as CSV next to the JSON report and,
for sweep-type experiments, rendered to PNG figures as well.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


@dataclass
class ReportRecord:
    """One checked metric: value against tolerance (or predicate)."""

    experiment: str
    metric: str
    value: float
    tolerance: float
    passed: bool
    parameters: dict = field(default_factory=dict)
    wall_time_s: float = 0.0

    @staticmethod
    def from_bound(experiment: str, metric: str, value: float, tolerance: float, parameters=None, wall_time_s=0.0):
        return ReportRecord(
            experiment=experiment,
            metric=metric,
            value=float(value),
            tolerance=float(tolerance),
            passed=bool(abs(value) <= tolerance),
            parameters=parameters or {},
            wall_time_s=wall_time_s,
        )


@dataclass
class Table:
    """A named CSV table with a plotting hint."""

    name: str
    columns: list
    rows: list
    plot: dict | None = None  # {"x": col, "y": [cols], "logy": bool, "title": str}


def write_report(out_dir, name: str, records: list[ReportRecord], tables: list[Table], render: bool = True) -> Path:
    """Write <name>.json (+ CSV tables and PNG figures); returns the JSON path."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    payload = {
        "experiment": name,
        "generated_unix": time.time(),
        "passed": all(r.passed for r in records),
        "records": [asdict(r) for r in records],
        "tables": [t.name for t in tables],
    }
    json_path = out / f"{name}.json"
    json_path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    for t in tables:
        csv_path = out / f"{name}__{t.name}.csv"
        with open(csv_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(t.columns)
            writer.writerows(t.rows)
        if render and t.plot:
            _render_table(out / f"{name}__{t.name}.png", t)
    return json_path


def _render_table(path: Path, t: Table) -> None:
    cols = {c: i for i, c in enumerate(t.columns)}
    x = [row[cols[t.plot["x"]]] for row in t.rows]
    fig, ax = plt.subplots(figsize=(5.2, 3.6))
    for ycol in t.plot["y"]:
        y = [row[cols[ycol]] for row in t.rows]
        ax.plot(x, y, marker="o", label=ycol)
    if t.plot.get("logy"):
        ax.set_yscale("log")
    if t.plot.get("logx"):
        ax.set_xscale("log")
    ax.set_xlabel(t.plot["x"])
    ax.set_title(t.plot.get("title", t.name))
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def print_records(records: list[ReportRecord]) -> None:
    for r in records:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.experiment}: {r.metric} = {r.value:.3e} (tolerance {r.tolerance:.1e})")
