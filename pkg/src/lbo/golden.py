"""Bundled reference tables and their regeneration from scratch.

Tables 5 and 6 carry a marker column ('*') recording family overlap: a
Table-5 row that is also an idempotent semigroup, a Table-6 row that is
also an associative shelf.  Table 5 is a census and is regenerated by
enumeration; Tables 6 and 7 are samples, so their rows are recomputed from
the transcribed tables.  Table 4 is the idempotent census of the Jones
monoid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .chains import Theory
from .errors import ParseError
from .jones import count_idempotents
from .magma import (MulTable, enumerate_tables, is_idempotent,
                    is_right_self_distributive, parse_table)
from .snf import HomologyGroup, homology_range, torsion_findings

TABLE_IDS = (4, 5, 6, 7)
HOMOLOGY_COLUMNS = 4  # H_0 .. H_3


@dataclass(frozen=True)
class GoldenRow:
    table: MulTable
    groups: tuple[HomologyGroup, ...]
    marked: bool | None  # None: this table has no marker column


def _read_text(which: int) -> str:
    return (resources.files("lbo") / "golden" / ("table%d.txt" % which)).read_text()


def load_table4() -> list[tuple[int, int]]:
    rows = []
    for line in _read_text(4).splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, count = (int(c.strip()) for c in line.split("|"))
        rows.append((n, count))
    return rows


def load_rows(which: int) -> list[GoldenRow]:
    if which == 4:
        raise ParseError("table 4 holds counts, not homology rows")
    has_marker = which in (5, 6)
    rows = []
    for line in _read_text(which).splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cols = [c.strip() for c in line.split("|")]
        expected = HOMOLOGY_COLUMNS + 1 + (1 if has_marker else 0)
        if len(cols) != expected:
            raise ParseError("bad golden line %r" % line)
        marked = None
        if has_marker:
            marked = cols[0] == "*"
            cols = cols[1:]
        rows.append(GoldenRow(
            table=parse_table(cols[0]),
            groups=tuple(HomologyGroup.parse(c) for c in cols[1:]),
            marked=marked,
        ))
    return rows


def corpus() -> list[tuple[str, MulTable]]:
    """Every table appearing in the bundled homology tables, labelled."""
    out = []
    for which in (5, 6, 7):
        for i, row in enumerate(load_rows(which)):
            out.append(("table%d[%d] %s" % (which, i, row.table.brace()), row.table))
    return out


# ---------------------------------------------------------------------------
# regeneration

def _marker(which: int, t: MulTable) -> bool:
    if which == 5:
        return is_idempotent(t)  # rows are shelves; idempotent means overlap
    return is_right_self_distributive(t)


def regenerate_rows(which: int, max_dim: int = 3) -> list[GoldenRow]:
    """Recompute a homology table from scratch.

    Table 5 re-enumerates the associative-shelf census (orders 2 and 3, up
    to isomorphism); Tables 6 and 7 recompute homology of the transcribed
    tables.
    """
    if which == 5:
        tables = (enumerate_tables(2, "assoc-shelf", up_to_iso=True)
                  + enumerate_tables(3, "assoc-shelf", up_to_iso=True))
    elif which in (6, 7):
        tables = [row.table for row in load_rows(which)]
    else:
        raise ParseError("no homology rows for table %d" % which)
    out = []
    for t in tables:
        groups = tuple(homology_range(Theory.LBO, t, max_dim))
        marked = _marker(which, t) if which in (5, 6) else None
        out.append(GoldenRow(t, groups, marked))
    return out


def regenerate_table4() -> list[tuple[int, int]]:
    return [(n, count_idempotents(n)) for n, _ in load_table4()]


def render_rows(rows: list[GoldenRow], with_marker: bool) -> str:
    lines = []
    for row in rows:
        cells = [row.table.brace()] + [str(g) for g in row.groups]
        if with_marker:
            cells.insert(0, "*" if row.marked else "-")
        lines.append(" | ".join(cells))
    return "\n".join(lines) + "\n"


def render_table4(rows: list[tuple[int, int]]) -> str:
    return "\n".join("%d | %d" % (n, c) for n, c in rows) + "\n"


# ---------------------------------------------------------------------------
# diffing

@dataclass
class TableDiff:
    which: int
    numeric_mismatches: list[str] = field(default_factory=list)
    marker_notes: list[str] = field(default_factory=list)
    torsion: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        # marker disagreements are transcription notes, not failures
        return not self.numeric_mismatches

    def render(self) -> str:
        lines = []
        if self.numeric_mismatches:
            lines.append("table %d: %d mismatching rows"
                         % (self.which, len(self.numeric_mismatches)))
            lines.extend("  " + m for m in self.numeric_mismatches)
        else:
            lines.append("table %d: all rows match" % self.which)
        for note in self.marker_notes:
            lines.append("  note (marker): " + note)
        for label, tors in self.torsion:
            lines.append("  TORSION detected in %s: %s"
                         % (label, ", ".join("Z/%d" % d for d in tors)))
        if not self.torsion and self.which != 4:
            lines.append("  torsion scan: all regenerated groups are free")
        return "\n".join(lines)


def diff_table(which: int) -> TableDiff:
    """Recompute the table and compare with the bundled transcription."""
    diff = TableDiff(which)
    if which == 4:
        golden = load_table4()
        fresh = regenerate_table4()
        for (n, want), (_, got) in zip(golden, fresh):
            if want != got:
                diff.numeric_mismatches.append(
                    "n=%d: recomputed %d, transcription says %d" % (n, got, want))
        return diff
    golden = load_rows(which)
    fresh = regenerate_rows(which)
    if len(golden) != len(fresh):
        diff.numeric_mismatches.append(
            "row count differs: recomputed %d, transcription has %d"
            % (len(fresh), len(golden)))
    labelled = []
    for i, (g, f) in enumerate(zip(golden, fresh)):
        if g.table.rows != f.table.rows:
            diff.numeric_mismatches.append(
                "row %d: recomputed table %s, transcription has %s"
                % (i, f.table.brace(), g.table.brace()))
            continue
        if g.groups != f.groups:
            diff.numeric_mismatches.append(
                "row %d (%s): recomputed %s, transcription says %s"
                % (i, g.table.brace(),
                   " ".join(map(str, f.groups)), " ".join(map(str, g.groups))))
        if g.marked is not None and g.marked != f.marked:
            diff.marker_notes.append(
                "row %d (%s): recomputed marker %r, transcription has %r"
                % (i, g.table.brace(), f.marked, g.marked))
        for k, grp in enumerate(f.groups):
            labelled.append(("row %d H_%d" % (i, k), grp))
    diff.torsion = torsion_findings(labelled)
    return diff
