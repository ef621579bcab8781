"""Fast Dempster combination for masses whose focal sets are singletons plus the full frame.

Score-built evidence only ever assigns mass to single classes and to the whole
frame, and that family is closed under Dempster's rule: intersecting two
singletons gives the same singleton or the empty set, and the full frame is
neutral. Combination therefore reduces to O(n) vector products, which is what
makes 100-class frames tractable. Equivalence with the general engine is
covered by tests, not assumed at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum

import numpy as np

from .errors import (
    EmptyList,
    FrameMismatch,
    FrameTooLarge,
    NegativeMass,
    NotNormalized,
    TotalConflict,
)
from .frame import GENERAL_ENGINE_MAX_CLASSES, Frame, SubsetMask
from .mass import MASS_SUM_TOL, TOTAL_CONFLICT_TOL, ConflictReport, MassFunction


@dataclass(frozen=True, eq=False)
class CompactMass:
    """Mass over {singletons} + {full frame}: one value per class plus theta."""

    singleton: np.ndarray
    theta: float

    def __post_init__(self):
        values = np.asarray(self.singleton, dtype=np.float64)
        if values.ndim != 1 or values.size < 1:
            raise ValueError(f"singleton masses must be a non-empty vector, got shape {values.shape}")
        theta = float(self.theta)
        if not np.all(np.isfinite(values)) or not np.isfinite(theta):
            raise ValueError("masses must be finite")
        if values.min(initial=0.0) < 0.0 or theta < 0.0:
            raise NegativeMass("singleton and theta masses must be non-negative")
        total = fsum(values) + theta
        if abs(total - 1.0) > MASS_SUM_TOL:
            raise NotNormalized(f"masses sum to {total!r}, expected 1")
        values = values.copy()
        values.flags.writeable = False
        object.__setattr__(self, "singleton", values)
        object.__setattr__(self, "theta", theta)

    @property
    def frame_size(self) -> int:
        return int(self.singleton.size)

    @classmethod
    def vacuous(cls, frame_size: int) -> "CompactMass":
        return cls(np.zeros(frame_size), 1.0)

    def is_vacuous(self) -> bool:
        return self.theta >= 1.0 - TOTAL_CONFLICT_TOL


def compact_combine(m1: CompactMass, m2: CompactMass) -> tuple[CompactMass, ConflictReport]:
    """Dempster's rule specialized to the singleton+theta family.

    Per the intersection table, class c keeps s1[c]*s2[c] + s1[c]*t2 + t1*s2[c],
    theta keeps t1*t2, and every cross-class product is conflict:
    K = (sum s1)(sum s2) - dot(s1, s2). Renormalization divides by the
    accumulated non-conflicting total, i.e. 1-K evaluated without cancellation.
    """
    if m1.frame_size != m2.frame_size:
        raise FrameMismatch(f"{m1.frame_size}-class mass combined with {m2.frame_size}-class mass")
    s1, t1 = m1.singleton, m1.theta
    s2, t2 = m2.singleton, m2.theta
    # One-pass K; clamp the cancellation residue when the true conflict is 0.
    k = max(float(s1.sum() * s2.sum() - s1 @ s2), 0.0)
    if k >= 1.0 - TOTAL_CONFLICT_TOL:
        raise TotalConflict(k)
    kept = s1 * s2 + s1 * t2 + t1 * s2
    kept_theta = t1 * t2
    total = float(kept.sum()) + kept_theta
    return CompactMass(kept / total, kept_theta / total), ConflictReport(k)


def compact_combine_all(masses: list[CompactMass]) -> tuple[CompactMass, list[ConflictReport]]:
    """Left fold of compact_combine in input order."""
    if not masses:
        raise EmptyList("compact_combine_all needs at least one mass")
    fused = masses[0]
    reports: list[ConflictReport] = []
    for step, m in enumerate(masses[1:], start=1):
        try:
            fused, report = compact_combine(fused, m)
        except TotalConflict as exc:
            raise TotalConflict(exc.k, step=step) from exc
        reports.append(report)
    return fused, reports


def lift_to_general(m: CompactMass, frame: Frame) -> MassFunction:
    """Re-express a compact mass in the general sparse representation."""
    if frame.size != m.frame_size:
        raise FrameMismatch(f"{m.frame_size}-class mass lifted onto a {frame.size}-class frame")
    if frame.size > GENERAL_ENGINE_MAX_CLASSES:
        raise FrameTooLarge(f"general representation bounded at {GENERAL_ENGINE_MAX_CLASSES} classes")
    focal = {
        SubsetMask.singleton(c, frame.size): float(v)
        for c, v in enumerate(m.singleton)
        if v > 0.0
    }
    if m.theta > 0.0:
        focal[SubsetMask.full(frame.size)] = m.theta
    return MassFunction(frame, focal)
