"""Dataset ingestion and serialization.

Scalar datasets travel as CSV, one record per row; interval and vector
datasets as JSON, each record a list of elements like
``[[0.2, 0.4], [0.5, 0.7]]``. CSV cannot carry nested structure cleanly,
hence the split. The expected carrier kind comes from context (the order
specification), which also disambiguates two-coordinate vectors from
intervals.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional

from .errors import DatasetFormatError
from .order import SCALAR, Element, dim_of, element_from_json, element_to_json


@dataclass(frozen=True)
class Dataset:
    kind: str
    rows: tuple[tuple[Element, ...], ...]
    ids: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if not self.rows:
            raise DatasetFormatError("dataset has no rows")
        n = len(self.rows[0])
        dim = dim_of(self.rows[0][0])
        for row in self.rows:
            if len(row) != n:
                raise DatasetFormatError("rows have differing arity")
            for el in row:
                if el.kind != self.kind or dim_of(el) != dim:
                    raise DatasetFormatError(
                        "row element does not match the dataset carrier")
        if self.ids is not None and len(self.ids) != len(self.rows):
            raise DatasetFormatError("ids do not match the number of rows")

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def row_ids(self) -> list[str]:
        if self.ids is not None:
            return list(self.ids)
        return [str(i) for i in range(len(self.rows))]


def parse_dataset(text: str, kind: str) -> Dataset:
    if kind == SCALAR and not text.lstrip().startswith(("[", "{")):
        return _parse_csv(text)
    return _parse_json(text, kind)


def _parse_csv(text: str) -> Dataset:
    rows = []
    try:
        for record in csv.reader(io.StringIO(text)):
            if not record or all(not c.strip() for c in record):
                continue
            rows.append(tuple(element_from_json(SCALAR, float(c)) for c in record))
    except ValueError as exc:
        raise DatasetFormatError(f"bad CSV value: {exc}") from exc
    return Dataset(SCALAR, tuple(rows))


def _parse_json(text: str, kind: str) -> Dataset:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetFormatError(f"bad JSON: {exc}") from exc
    ids = None
    if isinstance(obj, dict):
        ids = tuple(str(i) for i in obj["ids"]) if "ids" in obj else None
        kind = obj.get("kind", kind)
        obj = obj.get("rows", [])
    if not isinstance(obj, list):
        raise DatasetFormatError("expected a list of rows")
    try:
        rows = tuple(tuple(element_from_json(kind, cell) for cell in row)
                     for row in obj)
    except (TypeError, ValueError) as exc:
        raise DatasetFormatError(f"bad element: {exc}") from exc
    return Dataset(kind, rows, ids)


def load_dataset(path: str, kind: str) -> Dataset:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DatasetFormatError(f"cannot read {path}: {exc}") from exc
    return parse_dataset(text, kind)


def serialize_dataset(ds: Dataset) -> str:
    """Inverse of ``parse_dataset``: CSV for scalars, JSON otherwise."""
    if ds.kind == SCALAR and ds.ids is None:
        out = io.StringIO()
        writer = csv.writer(out)
        for row in ds.rows:
            writer.writerow([el.value for el in row])
        return out.getvalue()
    payload = {"kind": ds.kind,
               "rows": [[element_to_json(el) for el in row] for row in ds.rows]}
    if ds.ids is not None:
        payload["ids"] = list(ds.ids)
    return json.dumps(payload, indent=2)
