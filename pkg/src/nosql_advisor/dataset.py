"""The curated 80-solution feature/label dataset.

Every solution is described by 9 binary features (four supported data models,
three CAP characteristics, two ownership flags) and 6 binary application-area
labels.  The canonical file ships with the package together with a provenance
ledger explaining each non-obvious encoding decision.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

FEATURE_NAMES = (
    "document_oriented",
    "graph",
    "key_value",
    "wide_column",
    "consistent",
    "available",
    "partition_tolerant",
    "free",
    "proprietary",
)
AREA_NAMES = (
    "smart_cities",
    "social_network_analysis",
    "geospatial",
    "life_sciences",
    "healthcare",
    "business_intelligence",
)

DATA_MODEL_SLICE = slice(0, 4)
CAP_SLICE = slice(4, 7)
OWNERSHIP_SLICE = slice(7, 9)

CANONICAL_RECORD_COUNT = 80
DATASET_VERSION = "table2-2026.08"

_HEADER = ("name",) + FEATURE_NAMES + AREA_NAMES


class DatasetError(ValueError):
    """Malformed dataset file; carries the offending row/column when known."""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None):
        loc = ""
        if row is not None:
            loc += f" (row {row}"
            loc += f", column {column!r})" if column is not None else ")"
        super().__init__(message + loc)
        self.row = row
        self.column = column


@dataclass(frozen=True)
class SolutionRecord:
    """One NoSQL solution: name, 9 feature flags, 6 area labels, notes."""

    name: str
    features: tuple[int, ...]
    areas: tuple[int, ...]
    notes: tuple[str, ...] = ()

    def feature(self, name: str) -> int:
        return self.features[FEATURE_NAMES.index(name)]

    def area(self, name: str) -> int:
        return self.areas[AREA_NAMES.index(name)]


@dataclass(frozen=True)
class FeatureMatrix:
    """Immutable ordered collection of solution records."""

    records: tuple[SolutionRecord, ...]
    feature_names: tuple[str, ...] = FEATURE_NAMES
    area_names: tuple[str, ...] = AREA_NAMES
    version: str = DATASET_VERSION

    def __len__(self) -> int:
        return len(self.records)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(r.name for r in self.records)

    def feature_rows(self) -> np.ndarray:
        """(n, 9) uint8 array of feature flags, row order preserved."""
        return np.array([r.features for r in self.records], dtype=np.uint8)

    def area_rows(self) -> np.ndarray:
        return np.array([r.areas for r in self.records], dtype=np.uint8)

    def feature_column(self, name: str) -> np.ndarray:
        return self.feature_rows()[:, self.feature_names.index(name)]

    def area_column(self, name: str) -> np.ndarray:
        return self.area_rows()[:, self.area_names.index(name)]

    def record(self, name: str) -> SolutionRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)


@dataclass(frozen=True)
class FeatureSubset:
    """Named subset of the 9 feature columns used in the clustering scan."""

    id: str
    column_indices: tuple[int, ...]

    @property
    def column_names(self) -> tuple[str, ...]:
        return tuple(FEATURE_NAMES[i] for i in self.column_indices)


SUBSETS = {
    "All": FeatureSubset("All", tuple(range(9))),
    "DMCAP": FeatureSubset("DMCAP", tuple(range(7))),
    "CAPFP": FeatureSubset("CAPFP", (4, 5, 6, 7, 8)),
    "DMFP": FeatureSubset("DMFP", (0, 1, 2, 3, 7, 8)),
}
SUBSET_ORDER = ("All", "DMCAP", "CAPFP", "DMFP")


@dataclass(frozen=True)
class ProjectedMatrix:
    """View of a FeatureMatrix restricted to a feature subset."""

    subset: FeatureSubset
    names: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class Violation:
    record_name: str
    rule: str
    message: str


def _data_path(filename: str) -> Path:
    return Path(importlib.resources.files("nosql_advisor").joinpath("data", filename))


def canonical_dataset_path() -> Path:
    return _data_path("nosql_solutions.csv")


def provenance_path() -> Path:
    return _data_path("provenance.tsv")


def published_classes_path() -> Path:
    return _data_path("published_classes.csv")


def load_provenance(path: Path | str) -> dict[str, list[tuple[str, str]]]:
    """Read the ``name<TAB>field<TAB>note`` ledger into a per-name mapping."""
    notes: dict[str, list[tuple[str, str]]] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise DatasetError("provenance line must have 3 tab-separated fields", row=lineno)
        name, fieldname, note = parts
        notes.setdefault(name, []).append((fieldname, note))
    return notes


def load_dataset(path: Path | str, provenance: Optional[Path | str] = None) -> FeatureMatrix:
    """Parse the comma-delimited dataset file, preserving row order.

    Raises :class:`DatasetError` naming the offending row and column for any
    malformed cell, duplicate name or wrong column count.
    """
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DatasetError("dataset file is empty (missing header)")
    header = tuple(lines[0].split(","))
    if header != _HEADER:
        raise DatasetError(f"unexpected header {header!r}", row=1)
    note_map = load_provenance(provenance) if provenance else {}

    records: list[SolutionRecord] = []
    seen: set[str] = set()
    for rowno, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != len(_HEADER):
            raise DatasetError(
                f"expected {len(_HEADER)} columns, found {len(cells)}", row=rowno
            )
        name = cells[0].strip()
        if not name:
            raise DatasetError("empty solution name", row=rowno, column="name")
        if name in seen:
            raise DatasetError(f"duplicate solution name {name!r}", row=rowno, column="name")
        seen.add(name)
        values: list[int] = []
        for colname, cell in zip(_HEADER[1:], cells[1:]):
            if cell not in ("0", "1"):
                raise DatasetError(
                    f"cell must be 0 or 1, found {cell!r}", row=rowno, column=colname
                )
            values.append(int(cell))
        notes = tuple(f"{fieldname}: {note}" for fieldname, note in note_map.get(name, []))
        records.append(
            SolutionRecord(
                name=name,
                features=tuple(values[:9]),
                areas=tuple(values[9:]),
                notes=notes,
            )
        )
    return FeatureMatrix(records=tuple(records))


def save_dataset(matrix: FeatureMatrix, path: Path | str) -> None:
    """Write the canonical byte-stable serialization (round-trips with load)."""
    lines = [",".join(_HEADER)]
    for r in matrix.records:
        if "," in r.name:
            raise DatasetError(f"solution name {r.name!r} contains a comma")
        lines.append(",".join([r.name] + [str(v) for v in r.features + r.areas]))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_canonical() -> FeatureMatrix:
    return load_dataset(canonical_dataset_path(), provenance_path())


def validate_dataset(matrix: FeatureMatrix) -> list[Violation]:
    """Check every record invariant; an empty report means the dataset is valid."""
    report: list[Violation] = []
    if len(matrix) != CANONICAL_RECORD_COUNT:
        report.append(
            Violation(
                record_name="(dataset)",
                rule="canonical_record_count",
                message=f"expected {CANONICAL_RECORD_COUNT} records, found {len(matrix)}",
            )
        )
    for r in matrix.records:
        if len(r.features) != 9 or len(r.areas) != 6:
            report.append(Violation(r.name, "column_count", "wrong number of flags"))
            continue
        if sum(r.features[DATA_MODEL_SLICE]) < 1:
            report.append(Violation(r.name, "data_model", "no data-model flag set"))
        cap = sum(r.features[CAP_SLICE])
        if not 1 <= cap <= 3:
            report.append(
                Violation(r.name, "cap", f"{cap} CAP flags set, expected between 1 and 3")
            )
        if sum(r.features[OWNERSHIP_SLICE]) < 1:
            report.append(Violation(r.name, "ownership", "no ownership flag set"))
    return report


def feature_frequencies(matrix: FeatureMatrix) -> dict[str, int]:
    """Count of 1s per feature column and per area column."""
    counts: dict[str, int] = {}
    if len(matrix) == 0:
        return {name: 0 for name in matrix.feature_names + matrix.area_names}
    feats = matrix.feature_rows().sum(axis=0)
    areas = matrix.area_rows().sum(axis=0)
    for name, c in zip(matrix.feature_names, feats):
        counts[name] = int(c)
    for name, c in zip(matrix.area_names, areas):
        counts[name] = int(c)
    return counts


def project(matrix: FeatureMatrix, subset: FeatureSubset | str) -> ProjectedMatrix:
    """Restrict the feature columns to a subset; record order is preserved."""
    if isinstance(subset, str):
        try:
            subset = SUBSETS[subset]
        except KeyError:
            raise KeyError(f"unknown feature subset {subset!r}") from None
    rows = tuple(
        tuple(r.features[i] for i in subset.column_indices) for r in matrix.records
    )
    return ProjectedMatrix(subset=subset, names=matrix.names, rows=rows)


def load_published_partition(matrix: FeatureMatrix, path: Optional[Path | str] = None) -> tuple[int, ...]:
    """Published six-class membership aligned to the matrix row order."""
    path = Path(path) if path else published_classes_path()
    mapping: dict[str, int] = {}
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or lines[0] != "solution_name,class_id":
        raise DatasetError("unexpected published-classes header", row=1)
    for rowno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        name, _, cid = line.rpartition(",")
        if not name:
            raise DatasetError("malformed class row", row=rowno)
        mapping[name] = int(cid)
    missing = [n for n in matrix.names if n not in mapping]
    if missing:
        raise DatasetError(f"published classes missing {missing[:3]}...")
    return tuple(mapping[n] for n in matrix.names)
