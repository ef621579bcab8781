"""General basic probability assignments and Dempster's rule over arbitrary focal sets.

This is the reference engine: sparse focal maps over bitmask subsets, the four
classic belief measures, and pairwise combination by explicit enumeration of
focal-element intersections. It is exact but bounded to frames of at most 16
classes; the production fast path lives in dstfuse.compact and is validated
against this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from typing import Iterable

from .errors import (
    AllZeroMass,
    EmptyList,
    EmptySetQuery,
    FrameMismatch,
    FrameTooLarge,
    MassOnEmptySet,
    NegativeMass,
    NotNormalized,
    TotalConflict,
)
from .frame import GENERAL_ENGINE_MAX_CLASSES, Frame, SubsetMask

MASS_SUM_TOL = 1e-9
# K this close to 1 leaves no usable non-conflicting mass.
TOTAL_CONFLICT_TOL = 1e-12
# Combination crumbs below this are dropped to keep the focal map canonical.
FOCAL_DROP_TOL = 1e-15


@dataclass(frozen=True)
class MassFunction:
    """Sparse mass assignment: focal subsets mapped to masses in (0, 1]."""

    frame: Frame
    focal: dict[SubsetMask, float]

    def __post_init__(self):
        for subset, value in self.focal.items():
            if subset.frame_size != self.frame.size:
                raise FrameMismatch(
                    f"focal subset over {subset.frame_size} classes in a "
                    f"{self.frame.size}-class frame"
                )
            if subset.is_empty():
                raise MassOnEmptySet("the empty set cannot be a focal element")
            if value < 0.0:
                raise NegativeMass(f"mass {value} on {subset.indices()}")
            if value == 0.0:
                raise ValueError(f"zero-mass focal entry on {subset.indices()}")
        total = fsum(self.focal.values())
        if abs(total - 1.0) > MASS_SUM_TOL:
            raise NotNormalized(f"focal masses sum to {total!r}, expected 1")
        object.__setattr__(self, "focal", dict(self.focal))

    def mass(self, subset: SubsetMask) -> float:
        return self.focal.get(subset, 0.0)


@dataclass(frozen=True)
class ConflictReport:
    """Dempster conflict K for one pairwise combination."""

    k: float

    @property
    def renormalizer(self) -> float:
        return 1.0 / (1.0 - self.k)


def _merged(assignments: Iterable[tuple[SubsetMask, float]]) -> dict[SubsetMask, float]:
    out: dict[SubsetMask, float] = {}
    for subset, value in assignments:
        if value < 0.0:
            raise NegativeMass(f"mass {value} on {subset.indices()}")
        if subset.is_empty() and value > 0.0:
            raise MassOnEmptySet("the empty set cannot carry mass")
        out[subset] = out.get(subset, 0.0) + value
    return {s: v for s, v in out.items() if v > 0.0}


def new_mass(frame: Frame, assignments: Iterable[tuple[SubsetMask, float]]) -> MassFunction:
    """Validate assignments that already sum to one and build a mass function."""
    return MassFunction(frame, _merged(assignments))


def normalize_mass(frame: Frame, assignments: Iterable[tuple[SubsetMask, float]]) -> MassFunction:
    """Scale non-negative assignments so they sum to one."""
    merged = _merged(assignments)
    total = fsum(merged.values())
    if total <= 0.0:
        raise AllZeroMass("cannot normalize: no positive mass on any non-empty subset")
    return MassFunction(frame, {s: v / total for s, v in merged.items()})


def vacuous_mass(frame: Frame) -> MassFunction:
    """Total ignorance: all mass on the full frame."""
    return MassFunction(frame, {SubsetMask.full(frame.size): 1.0})


def _check_query(m: MassFunction, a: SubsetMask) -> None:
    if a.frame_size != m.frame.size:
        raise FrameMismatch(
            f"query subset over {a.frame_size} classes against a {m.frame.size}-class mass"
        )


def bel(m: MassFunction, a: SubsetMask) -> float:
    """Belief: total mass on non-empty subsets of `a`."""
    _check_query(m, a)
    abits = a.bits
    return fsum(v for s, v in m.focal.items() if s.bits & abits == s.bits)


def pl(m: MassFunction, a: SubsetMask) -> float:
    """Plausibility: total mass on subsets intersecting `a`."""
    _check_query(m, a)
    abits = a.bits
    return fsum(v for s, v in m.focal.items() if s.bits & abits)


def doubt(m: MassFunction, a: SubsetMask) -> float:
    """Belief against `a`: exactly 1 - pl(a)."""
    return 1.0 - pl(m, a)


def commonality(m: MassFunction, a: SubsetMask) -> float:
    """Total mass on supersets of `a` (inclusive). Undefined for the empty set."""
    _check_query(m, a)
    if a.is_empty():
        raise EmptySetQuery("commonality is not defined for the empty set")
    abits = a.bits
    return fsum(v for s, v in m.focal.items() if s.bits & abits == abits)


def combine_pair(m1: MassFunction, m2: MassFunction) -> tuple[MassFunction, ConflictReport]:
    """Dempster's rule for two mass functions on the same frame.

    The conjunctive product mass landing on the empty set is the conflict K;
    the remainder is renormalized. The division uses the accumulated
    non-conflicting total (equal to 1-K in exact arithmetic) so the result is
    exactly normalized in floating point even under heavy conflict.
    """
    if m1.frame != m2.frame:
        raise FrameMismatch("cannot combine masses on different frames")
    n = m1.frame.size
    if n > GENERAL_ENGINE_MAX_CLASSES:
        raise FrameTooLarge(f"general combination bounded at {GENERAL_ENGINE_MAX_CLASSES} classes")

    acc: dict[int, float] = {}
    conflict_terms: list[float] = []
    for b, vb in m1.focal.items():
        bbits = b.bits
        for c, vc in m2.focal.items():
            product = vb * vc
            meet = bbits & c.bits
            if meet == 0:
                conflict_terms.append(product)
            else:
                acc[meet] = acc.get(meet, 0.0) + product
    k = fsum(conflict_terms)
    if k >= 1.0 - TOTAL_CONFLICT_TOL:
        raise TotalConflict(k)
    total = fsum(acc.values())
    focal = {
        SubsetMask(bits, n): v / total for bits, v in acc.items() if v / total >= FOCAL_DROP_TOL
    }
    return MassFunction(m1.frame, focal), ConflictReport(k)


def combine_all(masses: list[MassFunction]) -> tuple[MassFunction, list[ConflictReport]]:
    """Left fold of combine_pair in input order, with per-step conflict reports."""
    if not masses:
        raise EmptyList("combine_all needs at least one mass function")
    for m in masses[1:]:
        if m.frame != masses[0].frame:
            raise FrameMismatch("cannot combine masses on different frames")
    fused = masses[0]
    reports: list[ConflictReport] = []
    for step, m in enumerate(masses[1:], start=1):
        try:
            fused, report = combine_pair(fused, m)
        except TotalConflict as exc:
            raise TotalConflict(exc.k, step=step) from exc
        reports.append(report)
    return fused, reports
