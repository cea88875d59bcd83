"""
Comparison tables (searched value, closed formula, construction bound) and
markdown persistence for them.
"""

from __future__ import annotations

import logging
from datetime import datetime
from math import comb
from pathlib import Path
from typing import Callable, Optional, Sequence

from pydantic import BaseModel, Field

from constructions.families import ConstructionParams, lifted_family
from constructions.twin_free import NonexistentError, exception_case, twin_free_saturated
from constructions.witnesses import WITNESS_EXPONENT, InfeasibleError, tsat_upper_witness, witness_excess
from graphs.graph import is_twin_free
from search.models import ExtremalRecord, RecordKind, RecordStatus
from systems.operations import cone_system

logger = logging.getLogger(__name__)

Lookup = Callable[[RecordKind, dict[str, int]], ExtremalRecord]

TABLES = ("existence", "s_rt", "e_rt", "stability33", "conical", "witness")


class ReportTable(BaseModel):
    """A rendered comparison table."""

    title: str
    headers: list[str]
    rows: list[list[str]] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    def to_markdown(self) -> str:
        lines = [f"## {self.title}", ""]
        lines.append("| " + " | ".join(self.headers) + " |")
        lines.append("|" + "---|" * len(self.headers))
        lines += ["| " + " | ".join(row) + " |" for row in self.rows]
        if self.notes:
            lines.append("")
            lines += [f"- {note}" for note in self.notes]
        return "\n".join(lines) + "\n"


def _cell(record: ExtremalRecord) -> str:
    if record.status == RecordStatus.FOUND:
        return str(record.value)
    if record.status == RecordStatus.NONEXISTENT:
        return "none"
    return "budget"


def _window_start(pairs: list[tuple[int, Optional[int], Optional[int]]]) -> Optional[int]:
    """Least x from which every computed value equals the formula to the end of the grid."""
    start = None
    for x, value, formula in reversed(pairs):
        if value is None or formula is None or value != formula:
            break
        start = x
    return start


# ---------------------------------------------------------------------------
# Existence of twin-free saturated graphs
# ---------------------------------------------------------------------------

def existence_table(r: int, max_n: int, lookup: Lookup) -> ReportTable:
    table = ReportTable(
        title=f"Twin-free K_{r}-saturated graphs, n <= {max_n}",
        headers=["n", "search tsat", "theorem", "construction e(G)", "flag"],
    )
    for n in range(max_n + 1):
        record = lookup(RecordKind.TSAT, {"n": n, "r": r})
        case = exception_case(n, r)
        expected = "none" if case else "exists"
        try:
            built = str(twin_free_saturated(n, r).edge_count)
        except NonexistentError:
            built = "-"
        if record.status == RecordStatus.BUDGET_EXCEEDED:
            flag = "?"
        elif (record.status == RecordStatus.FOUND) == (case is None):
            flag = ""
        else:
            flag = "MISMATCH"
        table.rows.append([str(n), _cell(record), expected + (f" ({case})" if case else ""), built, flag])
    return table


# ---------------------------------------------------------------------------
# s_{r,t}(m) and e_{r,t}(s) grids
# ---------------------------------------------------------------------------

def s_formula(m: int, r: int, t: int) -> Optional[int]:
    """Large-m value of s_{r,t}(m) where one is known."""
    if t == r - 2:
        return 1
    if t == r - 1:
        return 2
    if t == r:
        return (m - r + 2) // 2
    return None


def e_formula(s: int, r: int, t: int) -> Optional[int]:
    """Large-s value of e_{r,r}(s)."""
    if t == r:
        return s * s + (2 * r - 7) * s + comb(r - 2, 2)
    return None


def _matching_lift(l: int, r: int):
    return cone_system(lifted_family(ConstructionParams(t=2, l=l)), r - 3)


def s_grid(r: int, t: int, ms: range, lookup: Lookup) -> ReportTable:
    table = ReportTable(
        title=f"s_{{{r},{t}}}(m), m in {ms.start}..{ms.stop - 1}",
        headers=["m", "search", "formula", "construction", "flag"],
    )
    pairs = []
    for m in ms:
        record = lookup(RecordKind.S_RT, {"m": m, "r": r, "t": t})
        formula = s_formula(m, r, t)
        built = "-"
        if t == r and m - r + 2 >= 2:
            built = str(_matching_lift(m - r + 2, r).size)
        pairs.append((m, record.value, formula))
        table.rows.append([str(m), _cell(record), "-" if formula is None else str(formula), built, ""])
    _flag_window(table, pairs, "m")
    return table


def e_grid(r: int, t: int, ss: range, lookup: Lookup) -> ReportTable:
    table = ReportTable(
        title=f"e_{{{r},{t}}}(s), s in {ss.start}..{ss.stop - 1}",
        headers=["s", "search", "formula", "construction", "flag"],
    )
    pairs = []
    for s in ss:
        record = lookup(RecordKind.E_RT, {"s": s, "r": r, "t": t})
        formula = e_formula(s, r, t)
        built = "-"
        if t == r and s >= 1:
            built = str(_matching_lift(2 * s, r).host.edge_count)
        pairs.append((s, record.value, formula))
        table.rows.append([str(s), _cell(record), "-" if formula is None else str(formula), built, ""])
    _flag_window(table, pairs, "s")
    return table


def _flag_window(table: ReportTable, pairs: list[tuple[int, Optional[int], Optional[int]]], var: str) -> None:
    if all(formula is None for _, _, formula in pairs):
        return
    start = _window_start(pairs)
    for row, (x, value, formula) in zip(table.rows, pairs):
        if value is None:
            row[-1] = "?"
        elif formula is not None and value != formula:
            row[-1] = "pre-window" if start is None or x < start else "MISMATCH"
    if start is None:
        table.notes.append("formula not reached inside the grid")
    else:
        table.notes.append(f"search matches the formula for {var} >= {start} in this grid")


# ---------------------------------------------------------------------------
# Large witnesses
# ---------------------------------------------------------------------------

def witness_table(ns: Sequence[int]) -> ReportTable:
    """Edge excess of the twin-free K_3-saturated degree-6 witnesses over 6n."""
    table = ReportTable(
        title="Twin-free K_3-saturated witnesses, minimum degree 6",
        headers=["n", "e(G)", "min degree", "twin-free", "e(G) - 6n", f"C = (e(G) - 6n) / n^{WITNESS_EXPONENT}"],
    )
    for n in ns:
        try:
            g = tsat_upper_witness(n)
        except InfeasibleError as e:
            table.rows.append([str(n), "-", "-", "-", "-", "-"])
            table.notes.append(f"n={n}: {e}")
            continue
        excess, constant = witness_excess(g, 6)
        table.rows.append([
            str(n),
            str(g.edge_count),
            str(g.min_degree()),
            "yes" if is_twin_free(g) else "no",
            str(excess),
            f"{constant:.4f}",
        ])
    return table


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------

class ReportManager:
    """Reads and writes rendered tables under reports/<table>/."""

    def __init__(self, reports_dir: str = "reports") -> None:
        self.reports_dir = Path(reports_dir)

    def write_report(self, table_name: str, content: str) -> str:
        """
        Write a timestamped markdown report, return its path.

        Args:
            table_name: Table the report belongs to; names the subdirectory
            content: Rendered markdown
        """
        now = datetime.now()
        filepath = self.reports_dir / table_name / f"{now.strftime('%Y-%m-%d_%H-%M-%S')}.md"
        filepath.parent.mkdir(parents=True, exist_ok=True)
        header = f"# {table_name} report - {now.strftime('%Y-%m-%d %H:%M:%S')}\n\n"
        filepath.write_text(header + content, encoding="utf-8")
        logger.info("report written to %s", filepath)
        return str(filepath)

    def read_reports(self, table_name: str, n: int = 3) -> list[str]:
        """Contents of the last n reports for a table, newest first."""
        table_dir = self.reports_dir / table_name
        if not table_dir.exists():
            return []
        files = sorted(table_dir.glob("*.md"), reverse=True)[:n]
        return [f.read_text(encoding="utf-8") for f in files]

    def list_reports(self, table_name: str) -> list[str]:
        table_dir = self.reports_dir / table_name
        if not table_dir.exists():
            return []
        return sorted((f.name for f in table_dir.glob("*.md")), reverse=True)
