"""Feature rows joined to snapshot timings, CSV persistence and fold plans."""
from __future__ import annotations

import csv
import hashlib
import math
import os
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Sequence

import numpy as np

from .errors import EmptySnapshot, MissingTiming, SchemaMismatch, TooFewRows
from .harness import TimingRecord
from .stylometry import FeatureSchema, FeatureVector, make_schema

TARGET = "Test(sec)"
KNOWN_PROFILES = ("paper13", "full")


@dataclass(frozen=True)
class Row:
    file: str
    snapshot: str
    values: tuple[float, ...]


@dataclass
class Dataset:
    schema: FeatureSchema
    rows: list[Row]
    target: list[float]
    provenance: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.target):
            raise ValueError("rows and target differ in length")
        width = len(self.schema.columns)
        keys = set()
        for row, y in zip(self.rows, self.target):
            if len(row.values) != width:
                raise ValueError(f"row {row.file}@{row.snapshot} has {len(row.values)} values, expected {width}")
            if not all(math.isfinite(v) for v in row.values) or not math.isfinite(y):
                raise ValueError(f"non-finite value in row {row.file}@{row.snapshot}")
            key = (row.file, row.snapshot)
            if key in keys:
                raise ValueError(f"duplicate row {row.file}@{row.snapshot}")
            keys.add(key)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def X(self) -> np.ndarray:
        return np.array([r.values for r in self.rows], dtype=float).reshape(len(self.rows), len(self.schema.columns))

    @property
    def y(self) -> np.ndarray:
        return np.asarray(self.target, dtype=float)

    @property
    def snapshots(self) -> list[str]:
        return [r.snapshot for r in self.rows]

    def digest(self) -> str:
        """SHA-256 over the CSV rendering; independent of provenance."""
        return hashlib.sha256(to_csv_text(self).encode("utf-8")).hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.schema == other.schema and self.rows == other.rows and self.target == other.target


def assemble(features_by_snapshot: Mapping[str, Sequence[FeatureVector]],
             timings: Mapping[str, TimingRecord], schema: Optional[FeatureSchema] = None,
             include_failed: bool = False) -> Dataset:
    """One row per (file, snapshot); each row's target is its snapshot's test time.

    Snapshots whose timing failed or that have no files are dropped with a
    warning.  A snapshot with features but no timing at all raises
    :class:`MissingTiming`.
    """
    rows: list[Row] = []
    target: list[float] = []
    for snap, vectors in features_by_snapshot.items():
        if snap not in timings:
            raise MissingTiming(f"no timing record for snapshot {snap!r}")
        record = timings[snap]
        if not record.ok and not include_failed:
            warnings.warn(f"snapshot {snap!r} excluded: exit status {record.exit_status}", stacklevel=2)
            continue
        if not vectors:
            warnings.warn(f"snapshot {snap!r} excluded: no parseable files", EmptySnapshot, stacklevel=2)
            continue
        for fv in vectors:
            if schema is None:
                schema = fv.schema
            elif fv.schema.column_names != schema.column_names:
                raise SchemaMismatch(f"{fv.file_path}: feature schema differs from {schema.name}")
            rows.append(Row(fv.file_path, snap, fv.values))
            target.append(float(record.test_seconds))
    if schema is None:
        schema = make_schema("paper13")
    return Dataset(schema, rows, target)


def group_by_snapshot(dataset: Dataset) -> Dataset:
    """Collapse each snapshot to a single row of mean feature values."""
    order: list[str] = []
    groups: dict[str, list[int]] = {}
    for i, row in enumerate(dataset.rows):
        if row.snapshot not in groups:
            order.append(row.snapshot)
            groups[row.snapshot] = []
        groups[row.snapshot].append(i)
    X, y = dataset.X, dataset.y
    rows = [Row("*", s, tuple(float(v) for v in X[groups[s]].mean(axis=0))) for s in order]
    target = [float(y[groups[s]].mean()) for s in order]
    return Dataset(dataset.schema, rows, target, dict(dataset.provenance, grouped="snapshot"))


# -- CSV ------------------------------------------------------------------------

def header_for(schema: FeatureSchema) -> list[str]:
    return ["file", "snapshot", *schema.column_names, TARGET]


def _fmt(value: float) -> str:
    return repr(float(value))


def to_csv_text(dataset: Dataset) -> str:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header_for(dataset.schema))
    for row, y in zip(dataset.rows, dataset.target):
        writer.writerow([row.file, row.snapshot, *(_fmt(v) for v in row.values), _fmt(y)])
    return buf.getvalue()


def metadata_path(path: str | os.PathLike) -> Path:
    return Path(str(path) + ".meta")


def write_csv(dataset: Dataset, path: str | os.PathLike) -> None:
    """Write the dataset CSV plus a ``<path>.meta`` provenance sidecar."""
    Path(path).write_text(to_csv_text(dataset), encoding="utf-8", newline="")
    meta = dict(dataset.provenance)
    meta.setdefault("schema", dataset.schema.name)
    meta["rows"] = str(len(dataset))
    meta["dataset_digest"] = dataset.digest()
    lines = [f"{k} = {v}" for k, v in sorted(meta.items())]
    metadata_path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="")


def read_metadata(path: str | os.PathLike) -> dict[str, str]:
    meta_file = metadata_path(path)
    if not meta_file.exists():
        return {}
    out = {}
    for line in meta_file.read_text(encoding="utf-8").splitlines():
        if "=" in line and not line.lstrip().startswith("#"):
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def read_csv(path: str | os.PathLike, schema: Optional[FeatureSchema] = None) -> Dataset:
    """Read a dataset CSV; the header must match ``schema`` exactly.

    Without an explicit schema the header is matched against the known
    profiles.  Any mismatch raises :class:`SchemaMismatch`.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise SchemaMismatch(f"{path}: empty file")
        if schema is None:
            schema = _infer_schema(header)
            if schema is None:
                raise SchemaMismatch(f"{path}: header matches no known schema profile")
        elif header != header_for(schema):
            raise SchemaMismatch(f"{path}: header does not match schema {schema.name!r}")
        rows, target = [], []
        width = len(header)
        for lineno, rec in enumerate(reader, 2):
            if len(rec) != width:
                raise SchemaMismatch(f"{path}:{lineno}: expected {width} fields, got {len(rec)}")
            rows.append(Row(rec[0], rec[1], tuple(float(v) for v in rec[2:-1])))
            target.append(float(rec[-1]))
    return Dataset(schema, rows, target, read_metadata(path))


def _infer_schema(header: list[str], tail: Sequence[str] = (TARGET,)) -> Optional[FeatureSchema]:
    for name in KNOWN_PROFILES:
        schema = make_schema(name)
        if header == ["file", "snapshot", *schema.column_names, *tail]:
            return schema
    # "full" with a non-default embedding width
    emb = [h for h in header if h.startswith("emb_")]
    if emb:
        schema = make_schema("full", embedding_dim=len(emb))
        if header == ["file", "snapshot", *schema.column_names, *tail]:
            return schema
    return None


# -- per-file feature CSV (no target column) ---------------------------------------

def features_to_csv_text(features_by_snapshot: Mapping[str, Sequence[FeatureVector]],
                         schema: FeatureSchema) -> str:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["file", "snapshot", *schema.column_names])
    for snap, vectors in features_by_snapshot.items():
        for fv in vectors:
            writer.writerow([fv.file_path, snap, *(_fmt(v) for v in fv.values)])
    return buf.getvalue()


def write_features_csv(features_by_snapshot: Mapping[str, Sequence[FeatureVector]], schema: FeatureSchema,
                       path: str | os.PathLike) -> None:
    Path(path).write_text(features_to_csv_text(features_by_snapshot, schema), encoding="utf-8", newline="")


def read_features_csv(path: str | os.PathLike,
                      schema: Optional[FeatureSchema] = None) -> tuple[FeatureSchema, dict[str, list[FeatureVector]]]:
    """Inverse of :func:`write_features_csv`; raw counts are not round-tripped."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise SchemaMismatch(f"{path}: empty file")
        if schema is None:
            schema = _infer_schema(header, tail=())
            if schema is None:
                raise SchemaMismatch(f"{path}: header matches no known schema profile")
        elif header != ["file", "snapshot", *schema.column_names]:
            raise SchemaMismatch(f"{path}: header does not match schema {schema.name!r}")
        out: dict[str, list[FeatureVector]] = {}
        for lineno, rec in enumerate(reader, 2):
            if len(rec) != len(header):
                raise SchemaMismatch(f"{path}:{lineno}: expected {len(header)} fields, got {len(rec)}")
            fv = FeatureVector(schema, tuple(float(v) for v in rec[2:]), rec[0], {}, 0)
            out.setdefault(rec[1], []).append(fv)
    return schema, out


# -- folds ------------------------------------------------------------------------

@dataclass(frozen=True)
class FoldPlan:
    k: int
    assignments: tuple[int, ...]
    seed: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if any(not 0 <= a < self.k for a in self.assignments):
            raise ValueError("fold index out of range")

    def test_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(np.asarray(self.assignments) == fold)

    def train_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(np.asarray(self.assignments) != fold)

    def sizes(self) -> list[int]:
        return np.bincount(self.assignments, minlength=self.k).tolist()


def _stratified_assign(target: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = len(target)
    n_bins = max(1, min(k, len(np.unique(target))))
    # rank rows by target (random tie-break), cut into equal-count quantile bins
    order = np.lexsort((rng.random(n), target))
    assignments = np.empty(n, dtype=np.int64)
    dealt = 0
    for bin_rows in np.array_split(order, n_bins):
        shuffled = rng.permutation(bin_rows)
        # continuing the round-robin across bins keeps fold sizes within one
        assignments[shuffled] = (dealt + np.arange(len(shuffled))) % k
        dealt += len(shuffled)
    return assignments


def kfold_stratified(dataset: Dataset | Sequence[float], k: int = 10, seed: int = 0) -> FoldPlan:
    """Quantile-stratified k-fold plan over the target.

    Rows are cut into ``min(k, distinct targets)`` equal-count bins by
    target rank; each bin is shuffled and dealt round-robin to the folds.
    """
    target = dataset.y if isinstance(dataset, Dataset) else np.asarray(dataset, dtype=float)
    n = len(target)
    if k < 2:
        raise ValueError("k must be at least 2")
    if k > n:
        raise TooFewRows(f"k={k} exceeds the {n} available rows")
    rng = np.random.default_rng(seed)
    return FoldPlan(k, tuple(int(a) for a in _stratified_assign(target, k, rng)), seed)


def kfold_grouped(dataset: Dataset, k: int = 10, seed: int = 0) -> FoldPlan:
    """Assign whole snapshots to folds, stratified on the snapshot mean target."""
    snaps = dataset.snapshots
    groups = list(dict.fromkeys(snaps))
    if k < 2:
        raise ValueError("k must be at least 2")
    if k > len(groups):
        raise TooFewRows(f"k={k} exceeds the {len(groups)} snapshots available for grouped folds")
    y = dataset.y
    means = np.array([y[[i for i, s in enumerate(snaps) if s == g]].mean() for g in groups])
    rng = np.random.default_rng(seed)
    group_fold = _stratified_assign(means, k, rng)
    fold_of = dict(zip(groups, group_fold))
    return FoldPlan(k, tuple(int(fold_of[s]) for s in snaps), seed)
