"""Reading and writing structure files.

The format is JSON restricted to a fixed canonical layout so that files are
stable golden artifacts: fixed key order (order, zero, one, add, mul, neg,
inv, labels), each table row on one line, integers only, newline-terminated.
``parse_structure_file(serialize_structure(s))`` reproduces s exactly and
re-serialization is byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from meadows.structures import FiniteStructure, MeadowError, validate_structure

__all__ = [
    "StructureFileError",
    "parse_structure_file",
    "serialize_structure",
    "load_structure",
    "save_structure",
]

_REQUIRED_FIELDS = ("order", "zero", "one", "add", "mul", "neg", "inv")
_ALL_FIELDS = _REQUIRED_FIELDS + ("labels",)


class StructureFileError(MeadowError):
    """A structure document is syntactically or structurally malformed."""


def _expect_int(value, where: str) -> int:
    # bool is an int subclass; reject it explicitly
    if not isinstance(value, int) or isinstance(value, bool):
        raise StructureFileError(f"{where}: expected an integer, got {value!r}")
    return value


def _expect_row(value, where: str, n: int) -> list[int]:
    if not isinstance(value, list):
        raise StructureFileError(f"{where}: expected a list, got {type(value).__name__}")
    if len(value) != n:
        raise StructureFileError(f"{where}: expected {n} entries, got {len(value)}")
    return [_expect_int(v, f"{where}, column {i}") for i, v in enumerate(value)]


def parse_structure_file(text: str) -> FiniteStructure:
    """Parse and validate a structure document.

    Raises StructureFileError naming the offending line or field for syntax
    errors, missing or unknown fields, ragged tables, and any defect found
    by ``validate_structure`` (for example out-of-range entries).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureFileError(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise StructureFileError(f"expected an object, got {type(doc).__name__}")
    for key in doc:
        if key not in _ALL_FIELDS:
            raise StructureFileError(f"unknown field {key!r}")
    for key in _REQUIRED_FIELDS:
        if key not in doc:
            raise StructureFileError(f"missing required field {key!r}")

    n = _expect_int(doc["order"], "order")
    if n < 1:
        raise StructureFileError(f"order: expected a positive integer, got {n}")
    zero = _expect_int(doc["zero"], "zero")
    one = _expect_int(doc["one"], "one")

    tables: dict[str, list] = {}
    for name in ("add", "mul"):
        value = doc[name]
        if not isinstance(value, list):
            raise StructureFileError(f"{name}: expected a list of rows")
        if len(value) != n:
            raise StructureFileError(f"{name}: expected {n} rows, got {len(value)}")
        tables[name] = [
            _expect_row(row, f"{name}: row {i}", n) for i, row in enumerate(value)
        ]
    for name in ("neg", "inv"):
        tables[name] = _expect_row(doc[name], name, n)

    labels = None
    if doc.get("labels") is not None:
        raw = doc["labels"]
        if not isinstance(raw, list):
            raise StructureFileError("labels: expected a list of strings")
        if len(raw) != n:
            raise StructureFileError(f"labels: expected {n} entries, got {len(raw)}")
        for i, lab in enumerate(raw):
            if not isinstance(lab, str):
                raise StructureFileError(f"labels[{i}]: expected a string, got {lab!r}")
        labels = tuple(raw)

    structure = FiniteStructure(
        order=n,
        zero=zero,
        one=one,
        add=tables["add"],
        mul=tables["mul"],
        neg=tables["neg"],
        inv=tables["inv"],
        labels=labels,
    )
    defects = validate_structure(structure)
    if defects:
        raise StructureFileError("; ".join(defects))
    return structure


def serialize_structure(s: FiniteStructure) -> str:
    """Canonical text form of a valid structure; deterministic byte-for-byte."""
    defects = validate_structure(s)
    if defects:
        raise ValueError(f"invalid structure: {'; '.join(defects)}")

    def row(values) -> str:
        return "[" + ", ".join(str(int(v)) for v in values) + "]"

    lines = ["{"]
    lines.append(f'  "order": {s.order},')
    lines.append(f'  "zero": {s.zero},')
    lines.append(f'  "one": {s.one},')
    for name in ("add", "mul"):
        table = getattr(s, name)
        lines.append(f'  "{name}": [')
        for i in range(s.order):
            comma = "," if i < s.order - 1 else ""
            lines.append(f"    {row(table[i])}{comma}")
        lines.append("  ],")
    lines.append(f'  "neg": {row(s.neg)},')
    last = "," if s.labels is not None else ""
    lines.append(f'  "inv": {row(s.inv)}{last}')
    if s.labels is not None:
        lines.append(f'  "labels": {json.dumps(list(s.labels))}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_structure(path: str | Path) -> FiniteStructure:
    return parse_structure_file(Path(path).read_text(encoding="utf-8"))


def save_structure(s: FiniteStructure, path: str | Path) -> None:
    Path(path).write_text(serialize_structure(s), encoding="utf-8")
