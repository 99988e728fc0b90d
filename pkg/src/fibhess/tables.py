"""Recompute the three published tables from the matrices themselves.

Every cell is an oracle determinant; the printed value (a literal cell for
n <= 3, the row's n-th term formula beyond that) is carried alongside and a
cell is flagged when the two differ.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

from fibhess import printed
from fibhess.algebra import Poly, render
from fibhess.claims import family_det, product_det, substituted_det
from fibhess.matrix import SubstitutionMode

PRINTED_COLUMNS = 3


@dataclass(frozen=True)
class Cell:
    n: int
    computed: str
    printed: str | None
    diff: bool


@dataclass(frozen=True)
class Row:
    label: str
    term: str
    cells: tuple


@dataclass(frozen=True)
class Block:
    title: str
    rows: tuple


@dataclass(frozen=True)
class Table:
    which: int
    n_max: int
    blocks: tuple

    def to_dict(self) -> dict:
        return asdict(self)

    def diffs(self):
        for b in self.blocks:
            for r in b.rows:
                for c in r.cells:
                    if c.diff:
                        yield b.title, r.label, c


def _cell(n, computed, expected) -> Cell:
    if expected is None:
        return Cell(n, render(computed), None, False)
    return Cell(n, render(computed), render(expected), computed != expected)


def _numeric_row(label, term_text, value_at, printed_cells, term, n_max) -> Row:
    cells = []
    for n in range(1, n_max + 1):
        expected = printed_cells[n - 1] if n <= len(printed_cells) else term(n)
        cells.append(_cell(n, value_at(n), expected))
    return Row(label, term_text, tuple(cells))


def _table1(n_max):
    blocks = []
    for fam, rows in printed.TABLE1.items():
        general_text, general = printed.GENERAL_TERMS[fam]
        out = []
        for t, row in rows.items():
            if row.lucas_index is None:
                term = row.term
            else:
                # an L label is read through the row's own general term
                term = lambda n, t=t, general=general: general(n).eval(t)
            out.append(
                _numeric_row(
                    f"t={t}", row.term_text,
                    lambda n, fam=fam, t=t: family_det(fam, n).eval(t),
                    row.cells, term, n_max,
                )
            )
        listed = [Poly.parse(x) for x in printed.TABLE1_T_ROW[fam]]
        out.append(
            _numeric_row("t", printed.TABLE1_T_TERM[fam], lambda n, fam=fam: family_det(fam, n),
                         listed, general, n_max)
        )
        blocks.append(Block(f"matrix {fam}", tuple(out)))
    return blocks


def _table2(n_max):
    blocks = []
    for fam, modes in (("C", ("allones",)), ("D", ("allones",)), ("E", ("allones", "basis"))):
        for mode in modes:
            rows = []
            for i, (text, formula) in printed.TABLE2[fam].items():
                cells = tuple(
                    _cell(n, substituted_det(fam, n, i, mode), formula(n)) for n in range(i, n_max + 1)
                )
                rows.append(Row(f"i={i}", text, cells))
            blocks.append(Block(f"matrix {fam}^i [{SubstitutionMode(mode).value}]", tuple(rows)))
    return blocks


def _table3(n_max):
    blocks = []
    for name, rows in printed.TABLE3.items():
        out = [
            _numeric_row(
                f"t={t}", row.term_text,
                lambda n, name=name, t=t: product_det(name, n).eval(t),
                row.cells, row.term, n_max,
            )
            for t, row in rows.items()
        ]
        blocks.append(Block(f"|{name}|", tuple(out)))
    return blocks


def reproduce_table(which: int, n_max: int = 6) -> Table:
    if n_max < PRINTED_COLUMNS:
        raise ValueError(f"n_max must be at least {PRINTED_COLUMNS}")
    builders = {1: _table1, 2: _table2, 3: _table3}
    if which not in builders:
        raise ValueError(f"no table {which!r}; choose 1, 2 or 3")
    return Table(which, n_max, tuple(builders[which](n_max)))


def to_text(table: Table) -> str:
    lines = [f"table {table.which}, n = 1..{table.n_max}  (* = printed value differs)"]
    for block in table.blocks:
        lines.append("")
        lines.append(block.title)
        label_w = max(len(r.label) for r in block.rows)
        width = max(len(c.computed) for r in block.rows for c in r.cells) + 1
        for r in block.rows:
            shown = "".join((c.computed + ("*" if c.diff else "")).rjust(width + 1) for c in r.cells)
            pad = " " * (width + 1) * (r.cells[0].n - 1) if r.cells else ""
            lines.append(f"  {r.label.ljust(label_w)} |{pad}{shown}   | {r.term}")
        flagged = [(r.label, c) for r in block.rows for c in r.cells if c.diff]
        for label, c in flagged:
            lines.append(f"    * {label}, n={c.n}: computed {c.computed}, printed {c.printed}")
    return "\n".join(lines) + "\n"


def to_csv(table: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["table", "block", "row", "n", "computed", "printed", "diff"])
    for b in table.blocks:
        for r in b.rows:
            for c in r.cells:
                w.writerow([table.which, b.title, r.label, c.n, c.computed, c.printed or "", int(c.diff)])
    return buf.getvalue()


def emit_table(table: Table, fmt: str = "text") -> str:
    if fmt == "text" or fmt == "pretty":
        return to_text(table)
    if fmt == "json":
        return json.dumps(table.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        return to_csv(table)
    raise ValueError(f"unknown table format {fmt!r}")
