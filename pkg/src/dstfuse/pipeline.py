"""Evaluation protocol: per-model baselines vs fused accuracy, plus report emission.

For every sample shared by all inputs, each model's score vector becomes a
compact mass, the masses are folded with Dempster's rule, and the expected
utility argmax gives the fused prediction. Per-model baselines are plain
argmax over raw scores on the same samples, so the comparison mirrors the
accuracy-table protocol. Reports serialize to canonical JSON (sorted keys,
9-significant-digit floats) so identical inputs yield identical bytes.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .compact import compact_combine_all
from .decision import predict
from .errors import (
    ClassCountMismatch,
    EmptyList,
    IoError,
    NoCommonSamples,
    SchemaError,
    TotalConflict,
)
from .evidence import BuildPolicy, ScoreVector, build_evidence
from .frame import make_frame
from .scores_io import ScoreMatrix

THREADS_ENV_VAR = "DST_FUSE_THREADS"
# The report flags knife-edge decisions: rounding (model order, engine) can
# flip the argmax when the top two utilities are this close.
UTILITY_TIE_TOL = 1e-9


@dataclass(frozen=True)
class SampleRecord:
    """Fusion trace for one sample."""

    sample_id: str
    per_model_argmax: dict[str, int]
    fused_prediction: int
    max_utility: float
    conflicts: tuple[float, ...]
    tie: bool


@dataclass(frozen=True)
class FusionReport:
    """Comparison of per-model baselines against the fused ensemble."""

    frame_labels: tuple[str, ...]
    policy: BuildPolicy
    per_model_accuracy: dict[str, float]
    fused_accuracy: float
    mean_conflict: float
    tie_count: int
    sample_count: int
    extra_samples: dict[str, int]
    extra_labels: int
    per_sample: tuple[SampleRecord, ...]


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        raw = os.environ.get(THREADS_ENV_VAR, "0")
        try:
            threads = int(raw)
        except ValueError as exc:
            raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from exc
    if threads < 0:
        raise ValueError(f"thread count must be >= 0, got {threads}")
    if threads == 0:
        return os.cpu_count() or 1
    return threads


def evaluate(
    models: list[ScoreMatrix],
    labels: dict[str, int],
    policy: BuildPolicy,
    threads: int | None = None,
) -> FusionReport:
    """Run build -> fuse -> decide over the sample ids common to every input.

    Samples are processed in ascending sample_id order and all aggregation
    happens after a deterministic merge, so the report does not depend on the
    thread count (DST_FUSE_THREADS, 0 = auto).
    """
    if not models:
        raise EmptyList("evaluate needs at least one score matrix")
    first = models[0]
    for m in models[1:]:
        if m.n_classes != first.n_classes:
            raise ClassCountMismatch(
                f"model {m.model_id!r} has {m.n_classes} classes, "
                f"model {first.model_id!r} has {first.n_classes}"
            )
        if m.class_labels != first.class_labels:
            raise SchemaError(
                f"model {m.model_id!r} class columns {m.class_labels} do not match "
                f"model {first.model_id!r} columns {first.class_labels}"
            )
    seen_ids = set()
    for m in models:
        if m.model_id in seen_ids:
            raise SchemaError(f"duplicate model id {m.model_id!r}")
        seen_ids.add(m.model_id)
    frame = make_frame(first.class_labels)
    n = frame.size
    bad = [sid for sid, label in labels.items() if not 0 <= label < n]
    if bad:
        raise ClassCountMismatch(
            f"label for sample {bad[0]!r} is {labels[bad[0]]}, outside 0..{n - 1}"
        )

    common = set(labels)
    for m in models:
        common &= set(m.sample_ids)
    if not common:
        raise NoCommonSamples("no sample id is present in every score file and the labels")
    sample_order = sorted(common)
    extra_samples = {m.model_id: len(m.sample_ids) - len(common) for m in models}
    extra_labels = len(labels) - len(common)

    # Rows of each model aligned to the common sample order.
    aligned: dict[str, np.ndarray] = {}
    argmaxes: dict[str, np.ndarray] = {}
    for m in models:
        index = {sid: i for i, sid in enumerate(m.sample_ids)}
        rows = m.scores[[index[sid] for sid in sample_order]]
        aligned[m.model_id] = rows
        argmaxes[m.model_id] = rows.argmax(axis=1)

    truth = np.array([labels[sid] for sid in sample_order])
    per_model_accuracy = {
        m.model_id: float((argmaxes[m.model_id] == truth).mean()) for m in models
    }

    model_ids = [m.model_id for m in models]

    def fuse_one(position: int) -> SampleRecord:
        sid = sample_order[position]
        vectors = [ScoreVector(aligned[mid][position], mid) for mid in model_ids]
        masses = build_evidence(vectors, policy)
        try:
            fused, reports = compact_combine_all(masses)
        except TotalConflict as exc:
            raise TotalConflict(exc.k, step=exc.step, sample_id=sid) from exc
        decision = predict(fused)
        best = decision.utilities[decision.predicted_class]
        runner_up = np.partition(decision.utilities, -2)[-2] if len(decision.utilities) > 1 else best
        return SampleRecord(
            sample_id=sid,
            per_model_argmax={mid: int(argmaxes[mid][position]) for mid in model_ids},
            fused_prediction=decision.predicted_class,
            max_utility=float(best),
            conflicts=tuple(r.k for r in reports),
            tie=bool(best - runner_up <= UTILITY_TIE_TOL),
        )

    workers = _resolve_threads(threads)
    positions = range(len(sample_order))
    if workers == 1:
        records = [fuse_one(i) for i in positions]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(fuse_one, positions))

    fused_pred = np.array([r.fused_prediction for r in records])
    all_ks = [k for r in records for k in r.conflicts]
    return FusionReport(
        frame_labels=first.class_labels,
        policy=policy,
        per_model_accuracy=per_model_accuracy,
        fused_accuracy=float((fused_pred == truth).mean()),
        mean_conflict=sum(all_ks) / len(all_ks) if all_ks else 0.0,
        tie_count=sum(1 for r in records if r.tie),
        sample_count=len(sample_order),
        extra_samples=extra_samples,
        extra_labels=extra_labels,
        per_sample=tuple(records),
    )


def _report_dict(report: FusionReport, include_per_sample: bool) -> dict:
    out = {
        "frame_labels": list(report.frame_labels),
        "policy": {"mode": report.policy.mode, "theta_floor": report.policy.theta_floor},
        "per_model_accuracy": dict(report.per_model_accuracy),
        "fused_accuracy": report.fused_accuracy,
        "mean_conflict": report.mean_conflict,
        "tie_count": report.tie_count,
        "sample_count": report.sample_count,
        "extra_samples": dict(report.extra_samples),
        "extra_labels": report.extra_labels,
    }
    if include_per_sample:
        out["per_sample"] = [
            {
                "sample_id": r.sample_id,
                "per_model_argmax": dict(r.per_model_argmax),
                "fused_prediction": r.fused_prediction,
                "max_utility": r.max_utility,
                "conflicts": list(r.conflicts),
                "tie": r.tie,
            }
            for r in report.per_sample
        ]
    return out


def _canonical_json(value) -> str:
    """Serialize with sorted keys and 9-significant-digit floats."""
    if isinstance(value, dict):
        items = ",".join(
            f"{json.dumps(key)}:{_canonical_json(value[key])}" for key in sorted(value)
        )
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_canonical_json(v) for v in value) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".9g")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return json.dumps(value)
    if value is None:
        return "null"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def render_json(report: FusionReport, include_per_sample: bool = False) -> str:
    return _canonical_json(_report_dict(report, include_per_sample)) + "\n"


def render_table(report: FusionReport) -> str:
    """Accuracy-table view of the same report."""
    names = list(report.per_model_accuracy) + ["DST ensemble"]
    width = max(len(name) for name in names)
    lines = [f"{'model'.ljust(width)}  accuracy"]
    for model_id, acc in report.per_model_accuracy.items():
        lines.append(f"{model_id.ljust(width)}  {acc:.6f}")
    lines.append(f"{'DST ensemble'.ljust(width)}  {report.fused_accuracy:.6f}")
    lines.append("")
    lines.append(
        f"samples: {report.sample_count}  mean conflict: {report.mean_conflict:.6f}  "
        f"ties: {report.tie_count}"
    )
    return "\n".join(lines) + "\n"


def emit_report(report: FusionReport, path: str | Path, include_per_sample: bool = False) -> None:
    """Write the canonical JSON report; identical reports produce identical bytes."""
    text = render_json(report, include_per_sample)
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
