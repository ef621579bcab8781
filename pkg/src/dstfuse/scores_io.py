"""Score and label file ingestion.

Score CSV schema: header ``sample_id,c0,...,c{n-1}``, one row per sample,
decimal floats. JSONL alternative: one ``{"sample_id": ..., "scores": [...]}``
object per line. Labels CSV schema: header ``sample_id,label`` with integer
class indices. Column order defines class index order.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    DuplicateSampleId,
    EmptyFile,
    IoError,
    NonFiniteScore,
    SchemaError,
)


@dataclass(frozen=True, eq=False)
class ScoreMatrix:
    """One model's scores for a batch of samples (rows) over the class columns."""

    model_id: str
    sample_ids: tuple[str, ...]
    class_labels: tuple[str, ...]
    scores: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.scores, dtype=np.float64)
        if values.ndim != 2:
            raise ValueError(f"scores must be 2-D, got shape {values.shape}")
        if values.shape != (len(self.sample_ids), len(self.class_labels)):
            raise ValueError(
                f"shape {values.shape} does not match {len(self.sample_ids)} samples "
                f"x {len(self.class_labels)} classes"
            )
        if not np.all(np.isfinite(values)):
            raise NonFiniteScore(f"non-finite score in matrix for model {self.model_id!r}")
        seen = set()
        for sid in self.sample_ids:
            if sid in seen:
                raise DuplicateSampleId(f"duplicate sample id {sid!r} for model {self.model_id!r}")
            seen.add(sid)
        values = values.copy()
        values.flags.writeable = False
        object.__setattr__(self, "scores", values)

    @property
    def n_classes(self) -> int:
        return len(self.class_labels)


def _read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc


def _parse_score(field: str, where: str) -> float:
    try:
        value = float(field)
    except ValueError as exc:
        raise SchemaError(f"{where}: {field!r} is not a number") from exc
    if not math.isfinite(value):
        raise NonFiniteScore(f"{where}: non-finite score {field!r}")
    return value


def load_scores(path: str | Path, format: str = "csv", model_id: str | None = None) -> ScoreMatrix:
    """Read one model's score file; the file stem names the model by default."""
    path = Path(path)
    if model_id is None:
        model_id = path.stem
    if format == "csv":
        return _load_scores_csv(path, model_id)
    if format == "jsonl":
        return _load_scores_jsonl(path, model_id)
    raise SchemaError(f"unknown score format {format!r}, expected 'csv' or 'jsonl'")


def _load_scores_csv(path: Path, model_id: str) -> ScoreMatrix:
    rows = list(csv.reader(_read_text(path).splitlines()))
    if not rows:
        raise EmptyFile(f"{path}: empty file")
    header = rows[0]
    if len(header) < 2 or header[0] != "sample_id":
        raise SchemaError(f"{path}: header must be 'sample_id,<class>,...', got {header!r}")
    class_labels = tuple(header[1:])
    if len(set(class_labels)) != len(class_labels):
        raise SchemaError(f"{path}: duplicate class column in header")
    sample_ids: list[str] = []
    data: list[list[float]] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise SchemaError(
                f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}"
            )
        sample_ids.append(row[0])
        data.append([_parse_score(field, f"{path}:{lineno}") for field in row[1:]])
    if not sample_ids:
        raise EmptyFile(f"{path}: no data rows")
    return ScoreMatrix(model_id, tuple(sample_ids), class_labels, np.array(data))


def _load_scores_jsonl(path: Path, model_id: str) -> ScoreMatrix:
    sample_ids: list[str] = []
    data: list[list[float]] = []
    n: int | None = None
    for lineno, line in enumerate(_read_text(path).splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
        if not isinstance(obj, dict) or "sample_id" not in obj or "scores" not in obj:
            raise SchemaError(f"{path}:{lineno}: expected object with 'sample_id' and 'scores'")
        sid, scores = obj["sample_id"], obj["scores"]
        if not isinstance(sid, str) or not isinstance(scores, list):
            raise SchemaError(f"{path}:{lineno}: 'sample_id' must be a string, 'scores' a list")
        values = []
        for v in scores:
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise SchemaError(f"{path}:{lineno}: score {v!r} is not a number")
            if not math.isfinite(v):
                raise NonFiniteScore(f"{path}:{lineno}: non-finite score")
            values.append(float(v))
        if n is None:
            n = len(values)
            if n < 1:
                raise SchemaError(f"{path}:{lineno}: empty scores list")
        elif len(values) != n:
            raise SchemaError(f"{path}:{lineno}: expected {n} scores, got {len(values)}")
        sample_ids.append(sid)
        data.append(values)
    if not sample_ids or n is None:
        raise EmptyFile(f"{path}: no data rows")
    class_labels = tuple(f"c{i}" for i in range(n))
    return ScoreMatrix(model_id, tuple(sample_ids), class_labels, np.array(data))


def load_labels(path: str | Path) -> dict[str, int]:
    """Read the ground-truth labels CSV into a sample_id -> class index map."""
    path = Path(path)
    rows = list(csv.reader(_read_text(path).splitlines()))
    if not rows:
        raise EmptyFile(f"{path}: empty file")
    if rows[0] != ["sample_id", "label"]:
        raise SchemaError(f"{path}: header must be 'sample_id,label', got {rows[0]!r}")
    labels: dict[str, int] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise SchemaError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
        sid, field = row
        try:
            label = int(field)
        except ValueError as exc:
            raise SchemaError(f"{path}:{lineno}: label {field!r} is not an integer") from exc
        if label < 0:
            raise SchemaError(f"{path}:{lineno}: negative class index {label}")
        if sid in labels:
            raise DuplicateSampleId(f"{path}:{lineno}: duplicate sample id {sid!r}")
        labels[sid] = label
    if not labels:
        raise EmptyFile(f"{path}: no data rows")
    return labels
