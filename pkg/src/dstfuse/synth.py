"""Seeded synthetic fixtures: a desk-scale stand-in for a multi-model benchmark.

Each model j gets a discriminative strength signal_j drawn from [1.5, 3.5];
its raw output for a sample is one-hot(label) * signal_j plus unit Gaussian
noise per entry. Rows are written as softmax(2 * raw), i.e. the sharpened
probability outputs a confident classifier head would produce; this keeps the
winning class above the half-L1 dominance threshold often enough that fusion
has evidence to work with. Same seed, same bytes.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import BadDimension, IoError

SIGNAL_RANGE = (1.5, 3.5)
SHARPNESS = 2.0


def _softmax_rows(x: np.ndarray) -> np.ndarray:
    shifted = x - x.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)


def generate_fixture(
    classes: int,
    models: int,
    samples: int,
    seed: int,
    out_dir: str | Path,
    signal_range: tuple[float, float] = SIGNAL_RANGE,
) -> tuple[list[Path], Path]:
    """Write one score CSV per model plus labels.csv; returns (score paths, labels path)."""
    if classes < 2:
        raise BadDimension(f"classes must be >= 2, got {classes}")
    if models < 1:
        raise BadDimension(f"models must be >= 1, got {models}")
    if samples < 1:
        raise BadDimension(f"samples must be >= 1, got {samples}")

    rng = np.random.default_rng(seed)
    labels = rng.integers(0, classes, size=samples)
    width = len(str(samples - 1))
    sample_ids = [f"s{i:0{width}d}" for i in range(samples)]
    header = "sample_id," + ",".join(f"c{c}" for c in range(classes))

    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoError(f"cannot create {out_dir}: {exc}") from exc

    score_paths: list[Path] = []
    for j in range(models):
        signal = rng.uniform(*signal_range)
        raw = rng.standard_normal((samples, classes))
        raw[np.arange(samples), labels] += signal
        probs = _softmax_rows(SHARPNESS * raw)
        lines = [header]
        for i, sid in enumerate(sample_ids):
            lines.append(sid + "," + ",".join(repr(float(v)) for v in probs[i]))
        path = out_dir / f"scores_m{j}.csv"
        _write(path, lines)
        score_paths.append(path)

    label_lines = ["sample_id,label"]
    label_lines += [f"{sid},{labels[i]}" for i, sid in enumerate(sample_ids)]
    labels_path = out_dir / "labels.csv"
    _write(labels_path, label_lines)
    return score_paths, labels_path


def _write(path: Path, lines: list[str]) -> None:
    try:
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
