"""Text, JSON and CSV renderings of operation tables.

Text mirrors the printed layout::

    # unit: E
    ∇ | O A B E
    --+--------
    O | E E E E
    A | B E E E
    ...

JSON is ``{"schema": 1, "n": .., "labels": [..], "unit": "E", "op": [[..], ..]}``
with an optional ``"note"``.  CSV has the labels as first row, one row per
operation row after it, and a ``#unit=`` comment line.  The complement is
never written; it is always derived from the table.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Sequence

from .core import MalformedTableError, ValidationReport, WajsbergTable, check_axioms

SCHEMA_VERSION = 1
FORMATS = ("text", "json", "csv")
_LABEL_RE = re.compile(r"^[^\s|,#\"]+$")


class TableParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where = f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


@dataclass
class TableDocument:
    n: int
    labels: list[str]
    unit: str
    op: list[list[str]]
    note: str | None = None
    name: str = "∘"
    schema: int = SCHEMA_VERSION

    @classmethod
    def from_table(cls, W: WajsbergTable, note: str | None = None, name: str = "∘") -> "TableDocument":
        labels = list(W.labels)
        return cls(
            n=W.n,
            labels=labels,
            unit=labels[W.unit],
            op=[[labels[v] for v in row] for row in W.op.tolist()],
            note=note,
            name=name,
        )

    def check(self) -> None:
        if self.schema != SCHEMA_VERSION:
            raise TableParseError(f"unsupported schema version {self.schema}")
        if self.n != len(self.labels):
            raise TableParseError(f"n = {self.n} but {len(self.labels)} labels given")
        if len(set(self.labels)) != len(self.labels):
            raise TableParseError("labels must be unique")
        for label in self.labels:
            if not _LABEL_RE.match(label):
                raise TableParseError(f"label {label!r} may not contain whitespace, '|', ',', '#' or quotes")
        if self.unit not in self.labels:
            raise TableParseError(f"unit {self.unit!r} is not a label")
        if len(self.op) != self.n or any(len(row) != self.n for row in self.op):
            raise TableParseError(f"operation table must be {self.n} x {self.n}")
        known = set(self.labels)
        for i, row in enumerate(self.op):
            for j, v in enumerate(row):
                if v not in known:
                    raise TableParseError(f"unknown label {v!r} at row {self.labels[i]}, column {self.labels[j]}")

    def raw(self) -> tuple[list[list[int]], int, list[str]]:
        self.check()
        index = {s: i for i, s in enumerate(self.labels)}
        return [[index[v] for v in row] for row in self.op], index[self.unit], list(self.labels)

    def validate(self) -> ValidationReport:
        op, unit, labels = self.raw()
        return check_axioms(op, unit, labels)

    def to_table(self) -> WajsbergTable:
        op, unit, labels = self.raw()
        return WajsbergTable(op, unit, labels)


def render_text(W: WajsbergTable | TableDocument, name: str | None = None, note: str | None = None) -> str:
    doc = W if isinstance(W, TableDocument) else TableDocument.from_table(W, note=note)
    name = name or doc.name
    note = note if note is not None else doc.note
    width = max(len(s) for s in [*doc.labels, *(v for row in doc.op for v in row)])
    corner = max(len(name), max(len(s) for s in doc.labels))
    lines = [f"# unit: {doc.unit}"]
    if note:
        lines.append(f"# note: {note}")
    header = " ".join(s.ljust(width) for s in doc.labels).rstrip()
    lines.append(f"{name.ljust(corner)} | {header}")
    lines.append("-" * (corner + 1) + "+" + "-" * (len(header) + 1))
    for label, row in zip(doc.labels, doc.op):
        cells = " ".join(v.ljust(width) for v in row).rstrip()
        lines.append(f"{label.ljust(corner)} | {cells}")
    return "\n".join(lines) + "\n"


def parse_text(text: str, source: str | None = None) -> TableDocument:
    unit = note = None
    header: list[str] | None = None
    name = "∘"
    rows: list[list[str]] = []
    row_labels: list[str] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            key, _, value = stripped[1:].partition(":")
            key = key.strip().lower()
            if key == "unit":
                unit = value.strip()
            elif key == "note":
                note = value.strip()
            continue
        if re.fullmatch(r"[-+=\s]+", stripped):
            continue
        left, bar, right = line.partition("|")
        if not bar:
            raise TableParseError("expected 'label | entries'", lineno, source)
        cells = right.split()
        if header is None:
            name = left.strip() or "∘"
            header = cells
            continue
        if len(cells) != len(header):
            raise TableParseError(f"row has {len(cells)} entries, header has {len(header)}", lineno, source)
        row_labels.append(left.strip())
        rows.append(cells)
    if header is None:
        raise TableParseError("no header row found", None, source)
    if row_labels != header:
        raise TableParseError("row labels must repeat the header labels in the same order", None, source)
    if unit is None:
        # the paper always names the unit E
        unit = "E" if "E" in header else header[-1]
    doc = TableDocument(n=len(header), labels=header, unit=unit, op=rows, note=note, name=name)
    try:
        doc.check()
    except TableParseError as exc:
        raise TableParseError(str(exc), None, source) from None
    return doc


def render_json(W: WajsbergTable | TableDocument, note: str | None = None) -> str:
    doc = W if isinstance(W, TableDocument) else TableDocument.from_table(W, note=note)
    note = note if note is not None else doc.note
    dump = partial(json.dumps, ensure_ascii=False)
    parts = [
        f'  "schema": {doc.schema}',
        f'  "n": {doc.n}',
        f'  "labels": {dump(doc.labels)}',
        f'  "unit": {dump(doc.unit)}',
        '  "op": [\n' + ",\n".join(f"    {dump(row)}" for row in doc.op) + "\n  ]",
    ]
    if note:
        parts.append(f'  "note": {dump(note)}')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def parse_json(text: str, source: str | None = None) -> TableDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableParseError(exc.msg, exc.lineno, source) from None
    if not isinstance(data, dict):
        raise TableParseError("top level must be an object", 1, source)
    missing = [k for k in ("schema", "n", "labels", "unit", "op") if k not in data]
    if missing:
        raise TableParseError(f"missing field(s) {', '.join(missing)}", None, source)
    try:
        doc = TableDocument(
            n=int(data["n"]),
            labels=[str(s) for s in data["labels"]],
            unit=str(data["unit"]),
            op=[[str(v) for v in row] for row in data["op"]],
            note=data.get("note"),
            schema=int(data["schema"]),
        )
    except (TypeError, ValueError) as exc:
        raise TableParseError(f"bad field type: {exc}", None, source) from None
    try:
        doc.check()
    except TableParseError as exc:
        raise TableParseError(str(exc), None, source) from None
    return doc


def render_csv(W: WajsbergTable | TableDocument) -> str:
    doc = W if isinstance(W, TableDocument) else TableDocument.from_table(W)
    buf = io.StringIO()
    buf.write(f"#unit={doc.unit}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(doc.labels)
    writer.writerows(doc.op)
    return buf.getvalue()


def parse_csv(text: str, source: str | None = None) -> TableDocument:
    unit = None
    rows: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            if key.strip() == "unit":
                unit = value.strip()
            continue
        try:
            parsed = next(csv.reader([line]))
        except csv.Error as exc:
            raise TableParseError(str(exc), lineno, source) from None
        rows.append((lineno, [c.strip() for c in parsed]))
    if not rows:
        raise TableParseError("empty CSV table", None, source)
    labels = rows[0][1]
    for lineno, row in rows[1:]:
        if len(row) != len(labels):
            raise TableParseError(f"row has {len(row)} entries, expected {len(labels)}", lineno, source)
    if unit is None:
        raise TableParseError("missing '#unit=' line", None, source)
    doc = TableDocument(n=len(labels), labels=labels, unit=unit, op=[r for _, r in rows[1:]])
    try:
        doc.check()
    except TableParseError as exc:
        raise TableParseError(str(exc), None, source) from None
    return doc


_RENDER = {"text": render_text, "json": render_json, "csv": render_csv}
_PARSE = {"text": parse_text, "json": parse_json, "csv": parse_csv}


def render(W: WajsbergTable | TableDocument, fmt: str = "text") -> str:
    try:
        return _RENDER[fmt](W)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}") from None


def parse(text: str, fmt: str = "text", source: str | None = None) -> TableDocument:
    try:
        parser = _PARSE[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}") from None
    return parser(text, source)


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    return {".json": "json", ".csv": "csv"}.get(suffix, "text")


def read_document(path: str | Path, fmt: str | None = None) -> TableDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise TableParseError(exc.strerror or str(exc), None, str(path)) from None
    return parse(text, fmt or guess_format(path), str(path))


def load_table(path: str | Path, fmt: str | None = None) -> WajsbergTable:
    return read_document(path, fmt).to_table()


def labels_of(doc: TableDocument, names: Sequence[str]) -> list[int]:
    index = {s: i for i, s in enumerate(doc.labels)}
    try:
        return [index[s] for s in names]
    except KeyError as exc:
        raise MalformedTableError(f"unknown label {exc.args[0]!r}") from None
