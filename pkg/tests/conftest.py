"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from dstfuse.compact import CompactMass
from dstfuse.frame import Frame, SubsetMask, make_frame
from dstfuse.mass import MassFunction, normalize_mass


def frame_of(n: int) -> Frame:
    return make_frame([f"c{i}" for i in range(n)])


def mask(frame_size: int, *indices: int) -> SubsetMask:
    return SubsetMask.from_indices(indices, frame_size)


@st.composite
def frames(draw, min_size=2, max_size=6):
    return frame_of(draw(st.integers(min_size, max_size)))


@st.composite
def mass_functions(draw, frame=None, min_size=2, max_size=6):
    if frame is None:
        frame = draw(frames(min_size, max_size))
    n = frame.size
    count = draw(st.integers(1, min(6, (1 << n) - 1)))
    bits = draw(
        st.lists(st.integers(1, (1 << n) - 1), min_size=count, max_size=count, unique=True)
    )
    weights = draw(
        st.lists(st.floats(0.01, 1.0), min_size=len(bits), max_size=len(bits))
    )
    return normalize_mass(
        frame, [(SubsetMask(b, n), w) for b, w in zip(bits, weights)]
    )


@st.composite
def compact_masses(draw, n=None, min_n=2, max_n=10, min_theta=1e-6):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    # zero-mass classes are allowed; sub-normal weights are not worth the overflow
    weight = st.one_of(st.just(0.0), st.floats(1e-3, 1.0))
    weights = draw(st.lists(weight, min_size=n, max_size=n))
    theta_share = draw(st.floats(max(min_theta, 1e-6), 0.8))
    total = sum(weights)
    if total == 0.0:
        return CompactMass.vacuous(n)
    singleton = np.array(weights) * ((1.0 - theta_share) / total)
    return CompactMass(singleton, 1.0 - float(singleton.sum()))


def random_mass(rng: np.random.Generator, frame: Frame, max_focal: int = 6) -> MassFunction:
    """Seeded random mass for bulk acceptance loops."""
    n = frame.size
    count = int(rng.integers(1, min(max_focal, (1 << n) - 1) + 1))
    bits = rng.choice(np.arange(1, 1 << n), size=count, replace=False)
    weights = rng.uniform(0.01, 1.0, size=count)
    return normalize_mass(
        frame, [(SubsetMask(int(b), n), float(w)) for b, w in zip(bits, weights)]
    )


def random_compact(rng: np.random.Generator, n: int, min_theta: float = 1e-6) -> CompactMass:
    weights = rng.uniform(0.0, 1.0, size=n)
    theta_share = float(rng.uniform(min_theta, 0.6))
    singleton = weights * ((1.0 - theta_share) / weights.sum())
    return CompactMass(singleton, 1.0 - float(singleton.sum()))


def focal_diff(m1: MassFunction, m2: MassFunction) -> float:
    """Largest per-focal-mass absolute difference."""
    keys = set(m1.focal) | set(m2.focal)
    return max(abs(m1.mass(s) - m2.mass(s)) for s in keys)
