"""Degree-sequence classes and the combinatorial families derived from them.

A graph on n vertices with e edges whose degrees all lie in {6,7,8,9} is
summarised by the class (a, b, c, d): counts of vertices with degree 9, 8,
7 and 6.  With d fixed, the two defining equations

    a + b + c = n - d
    9a + 8b + 7c = 2e - 6d

have rank 3, so each value of a admits at most one solution.  This module
regenerates every table of such classes, audits a bundled transcription of
the historically printed tables against the equations, and enumerates the
neighbourhood-partition triples and contribution tuples used to pin down
the degree sequences that survive at diameter 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

TABLE_E_RANGE = (172, 184)
TABLE_D6_RANGE = (0, 6)

DATA_FORMAT_VERSION = 1


@dataclass(frozen=True, order=True)
class DegreeSequenceClass:
    """Counts (a, b, c, d) of degree-9/8/7/6 vertices in an (n, e) graph."""

    a: int
    b: int
    c: int
    d: int
    n: int
    e: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("degree counts must be non-negative")
        if self.a + self.b + self.c + self.d != self.n:
            raise ValueError("degree counts do not sum to the graph order")
        if 9 * self.a + 8 * self.b + 7 * self.c + 6 * self.d != 2 * self.e:
            raise ValueError("weighted degree sum does not match the edge count")

    @property
    def tuple4(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class PartitionTriple:
    """Multiplicities (h21, h22, h23) of 1-, 2- and 3-fold common neighbours."""

    h21: int
    h22: int
    h23: int
    boundary_edges: int

    def __post_init__(self) -> None:
        if self.h21 + self.h22 + self.h23 != 34:
            raise ValueError("partition counts must cover all 34 residual vertices")
        if self.boundary_edges != self.h21 + 2 * self.h22 + 3 * self.h23:
            raise ValueError("boundary edge count does not match the multiplicities")
        if not 44 <= self.boundary_edges <= 48:
            raise ValueError("boundary edges outside [44, 48]")


@dataclass(frozen=True)
class ContributionTuple:
    """Degree counts (a, b, c, d) restricted to one side of a vertex split.

    ``scope`` is "closed-neighborhood" (the 7 vertices of N[v], driven by the
    count of edges leaving N(v)) or "residual" (the 34 vertices outside N[v],
    driven by their degree sum).
    """

    a: int
    b: int
    c: int
    d: int
    scope: str
    driver: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("degree counts must be non-negative")
        total = self.a + self.b + self.c + self.d
        weighted = 9 * self.a + 8 * self.b + 7 * self.c + 6 * self.d
        if self.scope == "closed-neighborhood":
            if total != 7:
                raise ValueError("closed neighbourhood of a degree-6 vertex has 7 vertices")
            if weighted != self.driver + 12:
                raise ValueError("weighted sum must equal the boundary edge count plus 12")
            if not 1 <= self.d <= 2:
                raise ValueError("a degree-6 closed neighbourhood carries 1 or 2 degree-6 vertices")
        elif self.scope == "residual":
            if total != 34:
                raise ValueError("residual of a degree-6 vertex has 34 vertices")
            if weighted != self.driver:
                raise ValueError("weighted sum must equal the driving degree sum")
        else:
            raise ValueError(f"unknown scope {self.scope!r}")

    @property
    def tuple4(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class TableRow:
    """One transcribed row: table_id k holds classes with d = k - 1."""

    table_id: int
    e: int
    a: int
    b: int
    c: int
    d: int

    @property
    def d6(self) -> int:
        return self.table_id - 1

    @property
    def tuple4(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class TableRowDiagnostic:
    """Checksum verdicts for a printed row plus the unique correction, if any."""

    row: TableRow
    checksum_order: bool
    checksum_edges: bool
    correction: tuple[int, int, int, int] | None

    @property
    def ok(self) -> bool:
        return self.checksum_order and self.checksum_edges


# -- degree-sequence solutions -------------------------------------------


def degseq_solutions(n: int, e: int, d6: int) -> list[DegreeSequenceClass]:
    """All classes (a, b, c, d6) satisfying the defining equations.

    Solved in closed form: for each a the remaining system is linear with a
    unique candidate, kept when b and c are non-negative.  Rows are returned
    in ascending a, the layout of the printed tables.
    """
    if n < 0 or e < 0 or d6 < 0:
        raise ValueError("n, e and d6 must be non-negative")
    if d6 > n:
        return []
    out = []
    for a in range(n - d6 + 1):
        b = 2 * e + d6 - 7 * n - 2 * a
        c = (n - d6) - a - b
        if b >= 0 and c >= 0:
            out.append(DegreeSequenceClass(a, b, c, d6, n, e))
    return out


def degseq_oracle(n: int, e: int, d6: int) -> list[tuple[int, int, int, int]]:
    """Exhaustive scan over all (a, b, c) triples; independent of the solver.

    Test oracle only; quadratic blowup keeps it to n <= 64.
    """
    if n > 64:
        raise ValueError("oracle scan is limited to n <= 64")
    out = []
    for a in range(n + 1):
        for b in range(n + 1):
            for c in range(n + 1):
                if a + b + c + d6 == n and 9 * a + 8 * b + 7 * c + 6 * d6 == 2 * e:
                    out.append((a, b, c, d6))
    return sorted(out)


def regenerate_tables(
    e_range: tuple[int, int] = TABLE_E_RANGE,
    d6_range: tuple[int, int] = TABLE_D6_RANGE,
    n: int = 41,
) -> dict[tuple[int, int], list[DegreeSequenceClass]]:
    """Regenerate every table cell, keyed by (e, d6).  Empty cells stay present."""
    cells = {}
    for e in range(e_range[0], e_range[1] + 1):
        for d6 in range(d6_range[0], d6_range[1] + 1):
            cells[(e, d6)] = degseq_solutions(n, e, d6)
    return cells


# -- printed-table transcription and audit -------------------------------


def printed_rows() -> list[TableRow]:
    """The bundled transcription of the printed tables, typos included."""
    text = resources.files("ramseycheck").joinpath("data/printed_tables.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        table_id, e, a, b, c, d = (int(x) for x in line.split())
        rows.append(TableRow(table_id, e, a, b, c, d))
    return rows


def audit_printed_rows(rows: list[TableRow] | None = None, n: int = 41) -> list[TableRowDiagnostic]:
    """Checksum every printed row against the defining equations.

    A row passes when its entries sum to n and its weighted degree sum is 2e.
    For a failing row the unique correction is the regenerated class with the
    same a in the same table cell, when one exists.
    """
    if rows is None:
        rows = printed_rows()
    out = []
    for row in rows:
        ok_order = row.a + row.b + row.c + row.d == n
        ok_edges = 9 * row.a + 8 * row.b + 7 * row.c + 6 * row.d == 2 * row.e
        correction = None
        if not (ok_order and ok_edges):
            for sol in degseq_solutions(n, row.e, row.d6):
                if sol.a == row.a:
                    correction = sol.tuple4
                    break
        out.append(TableRowDiagnostic(row, ok_order, ok_edges, correction))
    return out


# -- partition triples ----------------------------------------------------


def partition_triples() -> list[PartitionTriple]:
    """All (h21, h22, h23) splits of the 34 residual vertices of a degree-6
    vertex at diameter 2: h21 in [20, 24], boundary edges 68 - h21 + h23
    capped at 48."""
    out = []
    for h21 in range(20, 25):
        for h23 in range(0, h21 - 20 + 1):
            h22 = 34 - h21 - h23
            out.append(PartitionTriple(h21, h22, h23, 68 - h21 + h23))
    return out


# -- contribution tuples --------------------------------------------------


def nv_contributions(boundary_edges: int) -> list[ContributionTuple]:
    """Degree splits of the 7 vertices in N[v] for a degree-6 vertex v.

    The driver is the number of edges between N(v) and the residual; the
    weighted sum is that count plus 12 (six edges inside N[v] counted twice)
    and the closed neighbourhood carries 1 or 2 degree-6 vertices.
    """
    if not 44 <= boundary_edges <= 48:
        raise ValueError("boundary edge count must lie in [44, 48]")
    out = []
    for d in (2, 1):
        for a in range(7 - d + 1):
            b = (boundary_edges + 12) - 6 * d - 7 * (7 - d) - 2 * a
            c = (7 - d) - a - b
            if b >= 0 and c >= 0:
                out.append(ContributionTuple(a, b, c, d, "closed-neighborhood", boundary_edges))
    return sorted(out, key=lambda t: (-t.a, -t.b))


def gammav_contributions(degree_sum: int, strict: bool = False) -> list[ContributionTuple]:
    """Degree splits of the 34 residual vertices of a degree-6 vertex.

    The driver is their total degree (in the whole graph).  At most one of
    them has degree 6; ``strict`` applies the sharper exclusion that none
    does.
    """
    if not 302 <= degree_sum <= 306:
        raise ValueError("residual degree sum must lie in [302, 306]")
    d_max = 0 if strict else 1
    out = []
    for d in range(d_max, -1, -1):
        for a in range(34 - d + 1):
            b = degree_sum - 6 * d - 7 * (34 - d) - 2 * a
            c = (34 - d) - a - b
            if b >= 0 and c >= 0:
                out.append(ContributionTuple(a, b, c, d, "residual", degree_sum))
    return sorted(out, key=lambda t: (-t.a, -t.b))


def diam2_deg6_sequences(strict: bool = False) -> list[DegreeSequenceClass]:
    """Degree-sequence classes possible at diameter 2 with a degree-6 vertex.

    Componentwise sums of a closed-neighbourhood tuple and a residual tuple,
    coupled through the edge identity: the residual degree sum equals twice
    the residual edge count (129..131) plus the boundary edge count, and the
    total count of degree-6 vertices stays at most 2.  Non-strict mode yields
    the canonical 21 classes.
    """
    combos = set()
    for boundary in range(44, 49):
        inner = nv_contributions(boundary)
        for residual_edges in (129, 130, 131):
            degree_sum = 2 * residual_edges + boundary
            if not 302 <= degree_sum <= 306:
                continue
            for t2 in gammav_contributions(degree_sum, strict=strict):
                for t1 in inner:
                    if t1.d + t2.d <= 2:
                        combos.add((t1.a + t2.a, t1.b + t2.b, t1.c + t2.c, t1.d + t2.d))
    out = []
    for a, b, c, d in sorted(combos, key=lambda t: (-t[0], -t[1])):
        weighted = 9 * a + 8 * b + 7 * c + 6 * d
        out.append(DegreeSequenceClass(a, b, c, d, 41, weighted // 2))
    return out
