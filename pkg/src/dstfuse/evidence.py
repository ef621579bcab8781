"""Turn one model's raw class scores into compact evidence.

A class keeps its score as mass only when it dominates the vector: score >=
half the L1 norm of all scores. At most two classes can pass (and two only on
an exact tie), so the result always fits the singleton+theta family. Scores
are consumed as given, logits or probabilities alike; any transformation is
the data producer's job.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .compact import CompactMass
from .errors import DstFuseError, EmptyList, LengthMismatch, NonFiniteScore

BUILD_MODES = ("literal", "residual_theta")


@dataclass(frozen=True, eq=False)
class ScoreVector:
    """One model's raw per-class outputs for a single sample."""

    scores: np.ndarray
    model_id: str = ""

    def __post_init__(self):
        values = np.asarray(self.scores, dtype=np.float64)
        if values.ndim != 1:
            raise ValueError(f"scores must be a 1-D vector, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise NonFiniteScore(f"non-finite score in vector for model {self.model_id!r}")
        values = values.copy()
        values.flags.writeable = False
        object.__setattr__(self, "scores", values)


@dataclass(frozen=True)
class BuildPolicy:
    """How dominant scores become mass, and what stays on theta.

    literal: dominant scores are renormalized onto the classes, keeping only
    theta_floor on the frame. residual_theta: dominant scores are divided by
    the L1 norm and the sub-threshold remainder becomes ignorance.
    theta_floor > 0 structurally prevents total conflict between confident
    but disagreeing models; 0 restores the bare construction at the caller's
    risk.
    """

    mode: str = "literal"
    theta_floor: float = 1e-3

    def __post_init__(self):
        if self.mode not in BUILD_MODES:
            raise ValueError(f"unknown build mode {self.mode!r}, expected one of {BUILD_MODES}")
        if not 0.0 <= self.theta_floor < 0.5:
            raise ValueError(f"theta_floor must be in [0, 0.5), got {self.theta_floor}")


def build_mass(scores: ScoreVector, policy: BuildPolicy) -> CompactMass:
    """Convert one score vector into a compact mass under the given policy.

    Degenerate inputs (all-zero scores, or no class reaching half the L1 norm)
    yield the vacuous mass: the model abstains, which is the neutral element
    of combination.
    """
    f = scores.scores
    n = f.size
    if n < 2:
        raise LengthMismatch(f"need at least 2 classes, got {n}")
    abs_sum = float(np.abs(f).sum())
    if abs_sum == 0.0:
        return CompactMass.vacuous(n)
    threshold = 0.5 * abs_sum
    kept = np.where(f >= threshold, f, 0.0)
    kept_sum = float(kept.sum())
    if kept_sum == 0.0:
        return CompactMass.vacuous(n)

    floor = policy.theta_floor
    if policy.mode == "literal":
        return CompactMass(kept * ((1.0 - floor) / kept_sum), floor)
    singleton = kept / abs_sum
    theta = 1.0 - float(singleton.sum())
    if theta < floor:
        singleton = singleton * ((1.0 - floor) / float(singleton.sum()))
        theta = floor
    return CompactMass(singleton, theta)


def build_evidence(sample_scores: list[ScoreVector], policy: BuildPolicy) -> list[CompactMass]:
    """Build one compact mass per model, preserving input order."""
    if not sample_scores:
        raise EmptyList("build_evidence needs at least one score vector")
    n = sample_scores[0].scores.size
    masses: list[CompactMass] = []
    for vector in sample_scores:
        if vector.scores.size != n:
            raise LengthMismatch(
                f"model {vector.model_id!r} has {vector.scores.size} classes, expected {n}"
            )
        try:
            masses.append(build_mass(vector, policy))
        except DstFuseError as exc:
            raise type(exc)(f"model {vector.model_id!r}: {exc}") from exc
    return masses
