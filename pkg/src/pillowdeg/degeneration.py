"""Degeneration of the branch curve to the doubled lines of the pillow.

Under a general projection, every plane of the pillow maps isomorphically
to the target plane, so the branch curve degenerates to the 3g - 3 planar
line images, each with multiplicity two.  The nodes, cusps, and branch
points of the general branch curve collect at the special points of that
line arrangement: 2-points (images of disjoint line pairs), the four
3-points, and the g - 3 6-points.  A point where n concurrent planes meet
smooths locally to a degree-n Del Pezzo surface, whose branch curve has
degree 2n with 2(n-2)(n-3) nodes, 6n-12 cusps, and 12 simple branch
points; all nodes and cusps and all but n of the branch points collapse
to the concurrent point.  A 2-point absorbs the four nodes where two
doubled lines cross, and nothing else.

The table assembled here reads every object count off the actual complex;
the closed forms serve only as cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass

from .checks import Report
from .errors import InvalidParameter, MalformedComplex
from .pillow import PillowConfig, count_disjoint_line_pairs
from .surfaces import BranchCharacters, branch_characters, k3

ROW_ORDER = ("lines", "three_points", "six_points", "two_points")

_ROW_LABELS = {
    "lines": "Lines",
    "three_points": "3-points",
    "six_points": "6-points",
    "two_points": "2-points",
}


@dataclass(frozen=True)
class NPointBudget:
    """How many branch points, nodes, and cusps collapse to one point
    where n of the doubled lines meet."""

    n: int
    branch_points: int
    nodes: int
    cusps: int


def npoint_budget(n: int) -> NPointBudget:
    """Per-point budget for an n-point of the limit branch curve."""
    if n == 2:
        return NPointBudget(2, 0, 4, 0)
    if 3 <= n <= 6:
        return NPointBudget(n, 12 - n, 2 * (n - 2) * (n - 3), 6 * n - 12)
    raise InvalidParameter(f"n-point multiplicity must be in {{2, 3, 4, 5, 6}}, got {n}")


def local_del_pezzo_characters(n: int) -> BranchCharacters:
    """Branch-curve characters of the degree-n Del Pezzo surface that
    smooths n concurrent planes (3 <= n <= 6)."""
    if not 3 <= n <= 6:
        raise InvalidParameter(f"local model needs 3 <= n <= 6, got {n}")
    return BranchCharacters(2 * n, 2 * (n - 2) * (n - 3), 6 * n - 12, 12)


@dataclass(frozen=True)
class TableRow:
    """One row: how many objects of this type exist and what each absorbs."""

    object_type: str
    count: int
    branch_points: int
    nodes: int
    cusps: int

    def weighted(self) -> tuple[int, int, int]:
        return (
            self.count * self.branch_points,
            self.count * self.nodes,
            self.count * self.cusps,
        )


@dataclass(frozen=True)
class TableTotals:
    branch_points: int
    nodes: int
    cusps: int


@dataclass(frozen=True)
class DegenerationTable:
    g: int
    rows: tuple[TableRow, ...]
    totals: TableTotals

    def row(self, object_type: str) -> TableRow:
        for r in self.rows:
            if r.object_type == object_type:
                return r
        raise KeyError(object_type)


def _totals(rows: tuple[TableRow, ...]) -> TableTotals:
    branch = nodes = cusps = 0
    for r in rows:
        wb, wn, wk = r.weighted()
        branch += wb
        nodes += wn
        cusps += wk
    return TableTotals(branch, nodes, cusps)


def build_table(c: PillowConfig) -> DegenerationTable:
    """Assemble the singularity-distribution table from the built complex.

    Object counts come from the configuration itself: the line count, the
    census of vertices on three and on six lines, and the exhaustive
    disjoint-pair count.
    """
    degrees = c.line_degrees()
    bad = {v: d for v, d in degrees.items() if d not in (3, 6)}
    if bad:
        raise MalformedComplex(
            f"vertices with line-degree outside {{3, 6}}: {sorted(bad.items())[:5]}"
        )
    three_points = sum(1 for d in degrees.values() if d == 3)
    six_points = sum(1 for d in degrees.values() if d == 6)
    two_points = count_disjoint_line_pairs(c)

    b3 = npoint_budget(3)
    b6 = npoint_budget(6)
    b2 = npoint_budget(2)
    rows = (
        TableRow("lines", len(c.lines), 0, 0, 0),
        TableRow("three_points", three_points, b3.branch_points, b3.nodes, b3.cusps),
        TableRow("six_points", six_points, b6.branch_points, b6.nodes, b6.cusps),
        TableRow("two_points", two_points, b2.branch_points, b2.nodes, b2.cusps),
    )
    return DegenerationTable(c.g, rows, _totals(rows))


def verify_conservation(c: PillowConfig, table: DegenerationTable | None = None) -> Report:
    """Compare the table totals with the branch characters of the smooth
    K3 surface of the same g: every branch point, node, and cusp must be
    accounted for, and none may land on a smooth point of a line."""
    if table is None:
        table = build_table(c)
    smooth = branch_characters(k3(c.g))
    report = Report(f"singularity conservation, g = {c.g}")
    report.add("branch_point_total", table.totals.branch_points, smooth.turning_points)
    report.add("node_total", table.totals.nodes, smooth.nodes)
    report.add("cusp_total", table.totals.cusps, smooth.cusps)
    lines_row = table.row("lines")
    report.add(
        "lines_row_contributes_nothing",
        (lines_row.branch_points, lines_row.nodes, lines_row.cusps),
        (0, 0, 0),
    )
    report.add("doubled_lines_give_branch_degree", 2 * lines_row.count, smooth.degree)
    return report


# ---------------------------------------------------------------------------
# Serialization.


def table_to_dict(table: DegenerationTable) -> dict:
    return {
        "g": table.g,
        "rows": [
            {
                "type": r.object_type,
                "count": r.count,
                "branch": r.branch_points,
                "nodes": r.nodes,
                "cusps": r.cusps,
            }
            for r in table.rows
        ],
        "totals": {
            "branch": table.totals.branch_points,
            "nodes": table.totals.nodes,
            "cusps": table.totals.cusps,
        },
    }


def render_table(table: DegenerationTable) -> str:
    """Aligned text table in the row order Lines, 3-points, 6-points,
    2-points, Totals."""
    header = ("Object", "Number", "Branch", "Nodes", "Cusps")
    body = [
        (
            _ROW_LABELS[r.object_type],
            str(r.count),
            str(r.branch_points),
            str(r.nodes),
            str(r.cusps),
        )
        for r in table.rows
    ]
    totals_row = (
        "Totals:",
        "",
        str(table.totals.branch_points),
        str(table.totals.nodes),
        str(table.totals.cusps),
    )
    all_rows = [header] + body + [totals_row]
    widths = [max(len(row[i]) for row in all_rows) for i in range(len(header))]
    out = []
    for row in all_rows:
        cells = [row[0].ljust(widths[0])] + [
            row[i].rjust(widths[i]) for i in range(1, len(header))
        ]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out) + "\n"
