"""Triangle/matrix documents and their text formats.

JSON carries every integer as a canonical decimal string so values of any
size survive a round trip.  Matrix Market output is the dense ``array``
layout, column-major, with zeros written out.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Union

from .triangle import LowerTriangularMatrix, Triangle, to_matrix

FORMATS = ("pretty", "json", "csv", "mm")
MM_HEADER = "%%MatrixMarket matrix array integer general"

_CANONICAL = re.compile(r"^(0|-?[1-9][0-9]*)$")


class FormatError(ValueError):
    pass


def to_decimal(x: int) -> str:
    return str(int(x))


def from_decimal(s: Any) -> int:
    if not isinstance(s, str) or not _CANONICAL.match(s):
        raise FormatError(f"not a canonical decimal string: {s!r}")
    return int(s)


@dataclass(frozen=True)
class TriangleDocument:
    """Ragged lower rows plus edges and free-form build metadata.

    ``meta["kind"]`` is ``"matrix"`` for documents that hold a general
    lower-triangular matrix rather than a zero-sum triangle.
    """

    rows: tuple[tuple[int, ...], ...]
    meta: dict = field(default_factory=dict, compare=True)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(r[0] for r in self.rows)

    @property
    def b(self) -> tuple[int, ...]:
        return tuple(r[-1] for r in self.rows)

    @property
    def kind(self) -> str | None:
        return self.meta.get("kind")

    def triangle(self) -> Triangle:
        return Triangle(self.rows)

    def matrix(self) -> LowerTriangularMatrix:
        return LowerTriangularMatrix.from_rows(self.rows)

    @classmethod
    def from_triangle(cls, t: Triangle, meta: dict | None = None) -> "TriangleDocument":
        return cls(t.rows, dict(meta or {}))

    @classmethod
    def from_matrix(cls, M: LowerTriangularMatrix, meta: dict | None = None) -> "TriangleDocument":
        return cls(tuple(M.lower_rows()), {"kind": "matrix", **(meta or {})})


Serializable = Union[TriangleDocument, Triangle, LowerTriangularMatrix]


def _as_document(obj: Serializable) -> TriangleDocument:
    if isinstance(obj, TriangleDocument):
        return obj
    if isinstance(obj, Triangle):
        return TriangleDocument.from_triangle(obj)
    if isinstance(obj, LowerTriangularMatrix):
        return TriangleDocument.from_matrix(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _meta_json(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return to_decimal(value)
    if isinstance(value, (list, tuple)):
        return [_meta_json(v) for v in value]
    if isinstance(value, dict):
        return {k: _meta_json(v) for k, v in value.items()}
    return value


def _dumps(value: Any) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def to_json(doc: TriangleDocument) -> str:
    lines = ["{"]
    lines.append(f'  "n": {doc.n},')
    lines.append(f'  "a": {_dumps([to_decimal(x) for x in doc.a])},')
    lines.append(f'  "b": {_dumps([to_decimal(x) for x in doc.b])},')
    lines.append('  "rows": [')
    for i, r in enumerate(doc.rows):
        comma = "," if i < doc.n - 1 else ""
        lines.append(f"    {_dumps([to_decimal(x) for x in r])}{comma}")
    lines.append("  ],")
    lines.append(f'  "meta": {_dumps(_meta_json(doc.meta))}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_json(text: str) -> TriangleDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict) or "rows" not in obj:
        raise FormatError("JSON document needs a 'rows' array")
    rows = tuple(tuple(from_decimal(x) for x in r) for r in obj["rows"])
    for i, r in enumerate(rows):
        if len(r) != i + 1:
            raise FormatError(f"row {i} has {len(r)} cells, expected {i + 1}")
    doc = TriangleDocument(rows, dict(obj.get("meta") or {}))
    if "n" in obj and obj["n"] != doc.n:
        raise FormatError(f"n={obj['n']} but {doc.n} rows given")
    for key, edge in (("a", doc.a), ("b", doc.b)):
        if key in obj and tuple(from_decimal(x) for x in obj[key]) != edge:
            raise FormatError(f"'{key}' does not match the rows' edge cells")
    return doc


def to_csv(doc: TriangleDocument) -> str:
    if doc.kind == "matrix":
        body = doc.matrix().dense()
    else:
        body = doc.rows
    return "".join(",".join(to_decimal(x) for x in r) + "\n" for r in body)


def to_mm(doc: TriangleDocument) -> str:
    M = doc.matrix()
    n = M.n
    out = [MM_HEADER, f"{n} {n}"]
    out += [to_decimal(M[i, j]) for j in range(n) for i in range(n)]
    return "\n".join(out) + "\n"


def from_mm(text: str) -> TriangleDocument:
    lines = [ln.strip() for ln in text.splitlines()]
    if not lines or lines[0].lower() != MM_HEADER.lower():
        raise FormatError(f"expected header {MM_HEADER!r}")
    body = [ln for ln in lines[1:] if ln and not ln.startswith("%")]
    try:
        rows_n, cols_n = (int(x) for x in body[0].split())
        values = [int(x) for x in body[1:]]
    except (ValueError, IndexError):
        raise FormatError("malformed Matrix Market body") from None
    if rows_n != cols_n:
        raise FormatError(f"matrix is {rows_n}x{cols_n}, not square")
    n = rows_n
    if len(values) != n * n:
        raise FormatError(f"expected {n * n} entries, got {len(values)}")
    dense = [[values[j * n + i] for j in range(n)] for i in range(n)]
    try:
        M = LowerTriangularMatrix.from_rows(dense)
    except ValueError as e:
        raise FormatError(str(e)) from None
    return TriangleDocument.from_matrix(M)


def from_csv(text: str) -> TriangleDocument:
    try:
        rows = [[int(x) for x in ln.split(",")] for ln in text.splitlines() if ln.strip()]
    except ValueError:
        raise FormatError("non-integer CSV cell") from None
    n = len(rows)
    if all(len(r) == i + 1 for i, r in enumerate(rows)):
        return TriangleDocument(tuple(tuple(r) for r in rows), {})
    try:
        return TriangleDocument.from_matrix(LowerTriangularMatrix.from_rows(rows))
    except ValueError as e:
        raise FormatError(f"CSV is neither a ragged triangle nor a lower-triangular {n}x{n} matrix: {e}") from None


def to_pretty(doc: TriangleDocument) -> str:
    if doc.kind == "matrix":
        dense = doc.matrix().dense()
        width = max((len(to_decimal(x)) for r in dense for x in r), default=1)
        return "".join(" ".join(to_decimal(x).rjust(width) for x in r) + "\n" for r in dense)
    n = doc.n
    width = max((len(to_decimal(x)) for r in doc.rows for x in r), default=1)
    out = []
    for i, r in enumerate(doc.rows):
        indent = " " * ((n - 1 - i) * (width + 1) // 2)
        out.append(indent + " ".join(to_decimal(x).rjust(width) for x in r) + "\n")
    return "".join(out)


def serialize(obj: Serializable, fmt: str = "json") -> str:
    doc = _as_document(obj)
    if fmt == "json":
        return to_json(doc)
    if fmt == "csv":
        return to_csv(doc)
    if fmt == "mm":
        return to_mm(doc)
    if fmt == "pretty":
        return to_pretty(doc)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def parse(text: str) -> TriangleDocument:
    """Read any supported format, detected from the first non-blank character."""
    head = text.lstrip()
    if head.startswith("%%MatrixMarket"):
        return from_mm(text)
    if head.startswith("{"):
        return from_json(text)
    return from_csv(text)


def document_matrix(obj: Serializable) -> LowerTriangularMatrix:
    if isinstance(obj, LowerTriangularMatrix):
        return obj
    if isinstance(obj, Triangle):
        return to_matrix(obj)
    return obj.matrix()
