"""Full 23x9 verdict tables and the reference tick patterns they reproduce.

``generate_table`` populates every (property row, relation class) cell by
bounded-exhaustive search. A tick in the reference grid is reproduced as
a ``verified``-up-to-bound verdict, a cross as a ``refuted`` verdict with
a stored, replayable minimal counterexample.

The reference grids below are the published tick patterns for the dual
and the non-dual pairing, transcribed column order
R, Rr, Rs, Rt, Rrs, Rrt, Rst, Rrst, Rser. Exhaustive search disagrees
with a handful of reference crosses (all in rows 14-21, columns Rt/Rst)
that are in fact theorems for those classes; ``compare_with_reference``
reports every such cell rather than silently assuming either side is
right.

Cells are independent, so table generation can fan out across worker
processes; verdict minimality is defined by the canonical scan order, so
reports are byte-identical for every worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import InputError
from .operators import Pairing
from .properties import (
    PROPERTY_ROWS,
    PropertyVerdict,
    _verdict_from_failure,
    scan_class_failures,
)
from .relations import RelationClass, check_capacity

TABLE_CLASSES: tuple[RelationClass, ...] = tuple(RelationClass)

# "+" tick / "-" cross, one char per class column.
REFERENCE_DUAL: dict[int, str] = {
    1: "+++++++++",
    2: "-+--++-++",
    3: "+++++++++",
    4: "+++++++++",
    5: "-+--++-++",
    6: "-+--++-+-",
    7: "-+--++-+-",
    8: "+++++++++",
    9: "+++++++++",
    10: "+++++++++",
    11: "+++++++++",
    12: "+++++++++",
    13: "+++++++++",
    14: "-+--++-+-",
    15: "-----+-+-",
    16: "-------+-",
    17: "-+--++-+-",
    18: "---+-+++-",
    19: "-+--++-+-",
    20: "-+--++-+-",
    21: "-------+-",
    22: "--+-+-++-",
    23: "--+-+-++-",
}

REFERENCE_NONDUAL: dict[int, str] = {
    1: "--+-+-++-",
    2: "-+--++-++",
    3: "+++++++++",
    4: "+++++++++",
    5: "-+--++-+-",
    6: "-+--++-+-",
    7: "-+--++-+-",
    8: "+++++++++",
    9: "+++++++++",
    10: "+++++++++",
    11: "+++++++++",
    12: "+++++++++",
    13: "+++++++++",
    14: "-+--++-+-",
    15: "-----+-+-",
    16: "---+-+-+-",
    17: "-+--++-+-",
    18: "---+-+++-",
    19: "-+--++-+-",
    20: "-+--++-+-",
    21: "---+-+++-",
    22: "+++++++++",
    23: "+++++++++",
}


def reference_grid(pairing: Pairing) -> dict[tuple[int, RelationClass], bool]:
    """Reference ticks as ``(row, class) -> bool``."""
    if pairing is Pairing.DUAL_SUCC:
        raw = REFERENCE_DUAL
    elif pairing is Pairing.NONDUAL:
        raw = REFERENCE_NONDUAL
    else:
        raise InputError("reference grids exist for the dual and nondual pairings")
    return {
        (row, cls): raw[row][i] == "+"
        for row in range(1, 24)
        for i, cls in enumerate(TABLE_CLASSES)
    }


@dataclass(frozen=True)
class TableReport:
    """All 207 cell verdicts for one pairing, searched up to one bound."""

    pairing: Pairing
    bound: int
    cells: tuple[PropertyVerdict, ...]

    def cell(self, row: int, relation_class: RelationClass) -> PropertyVerdict:
        column = TABLE_CLASSES.index(relation_class)
        return self.cells[(row - 1) * len(TABLE_CLASSES) + column]


def _column_verdicts(
    pairing_name: str, class_tag: str, max_n: int
) -> list[PropertyVerdict]:
    # worker entry point: primitives in, verdicts out, order fixed by row index
    pairing = Pairing(pairing_name)
    relation_class = RelationClass(class_tag)
    failures = scan_class_failures(pairing, relation_class, max_n, range(1, 24))
    return [
        _verdict_from_failure(row.index, pairing, relation_class, max_n,
                              failures.get(row.index))
        for row in PROPERTY_ROWS
    ]


def generate_table(
    pairing: Pairing,
    max_n: int,
    *,
    workers: int = 1,
    bound: int | None = None,
) -> TableReport:
    """Populate the full 23x9 table for the dual or non-dual pairing."""
    if pairing not in (Pairing.DUAL_SUCC, Pairing.NONDUAL):
        raise InputError("tables are generated for the dual and nondual pairings")
    if max_n < 0:
        raise InputError(f"max_n must be nonnegative, got {max_n}")
    check_capacity(max_n, bound)
    jobs = [(pairing.value, cls.value, max_n) for cls in TABLE_CLASSES]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            columns = list(pool.map(_column_job, jobs))
    else:
        columns = [_column_job(job) for job in jobs]
    cells = []
    for row_index in range(23):
        for column in columns:
            cells.append(column[row_index])
    return TableReport(pairing, max_n, tuple(cells))


def _column_job(job: tuple[str, str, int]) -> list[PropertyVerdict]:
    return _column_verdicts(*job)


def compare_with_reference(
    report: TableReport,
) -> list[tuple[int, RelationClass, bool, str]]:
    """Cells where the computed verdict contradicts the reference grid.

    Each entry is ``(row, class, reference_tick, computed_status)``. An
    empty list means the report reproduces the reference pattern exactly.
    """
    grid = reference_grid(report.pairing)
    mismatches = []
    for verdict in report.cells:
        tick = grid[(verdict.row, verdict.relation_class)]
        if tick == verdict.refuted:
            mismatches.append(
                (verdict.row, verdict.relation_class, tick, verdict.status)
            )
    return mismatches


def _verdict_to_obj(verdict: PropertyVerdict) -> dict:
    obj: dict = {
        "row": verdict.row,
        "class": verdict.relation_class.value,
        "status": verdict.status,
        "bound": verdict.bound,
    }
    cex = verdict.counterexample
    if cex is not None:
        relation = {
            "size": cex.relation.universe.size,
            "pairs": [list(pair) for pair in cex.relation.pairs()],
        }
        obj["counterexample"] = {"relation": relation, "x": list(cex.x.members())}
        if cex.y is not None:
            obj["counterexample"]["y"] = list(cex.y.members())
    return obj


def report_to_json(report: TableReport) -> str:
    obj = {
        "pairing": report.pairing.value,
        "bound": report.bound,
        "cells": [_verdict_to_obj(v) for v in report.cells],
    }
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def report_to_markdown(report: TableReport) -> str:
    """Tick/cross grid laid out like the reference tables."""
    header = "| # | Property | " + " | ".join(c.value for c in TABLE_CLASSES) + " |"
    rule = "|---|---|" + "---|" * len(TABLE_CLASSES)
    lines = [
        f"Verdicts for the {report.pairing.value} pairing,"
        f" all relations up to n={report.bound}.",
        "",
        header,
        rule,
    ]
    for row in PROPERTY_ROWS:
        marks = []
        for cls in TABLE_CLASSES:
            verdict = report.cell(row.index, cls)
            marks.append("✗" if verdict.refuted else "✓")
        lines.append(f"| {row.index} | {row.label} | " + " | ".join(marks) + " |")
    return "\n".join(lines) + "\n"
