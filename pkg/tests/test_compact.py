import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from math import fsum

from dstfuse.compact import (
    CompactMass,
    compact_combine,
    compact_combine_all,
    lift_to_general,
)
from dstfuse.errors import (
    EmptyList,
    FrameMismatch,
    FrameTooLarge,
    NegativeMass,
    NotNormalized,
    TotalConflict,
)
from dstfuse.frame import SubsetMask
from dstfuse.mass import bel, combine_all, combine_pair, pl

from conftest import compact_masses, frame_of, mask


def compact(*singles, theta):
    return CompactMass(np.array(singles, dtype=float), theta)


class TestCompactMass:
    def test_valid(self):
        m = compact(0.6, 0.3, 0.0, theta=0.1)
        assert m.frame_size == 3
        assert m.theta == 0.1

    def test_negative(self):
        with pytest.raises(NegativeMass):
            compact(0.6, -0.1, 0.4, theta=0.1)

    def test_not_normalized(self):
        with pytest.raises(NotNormalized):
            compact(0.5, 0.1, 0.0, theta=0.1)

    def test_non_finite(self):
        with pytest.raises(ValueError):
            compact(float("nan"), 0.5, 0.5, theta=0.0)

    def test_vacuous(self):
        m = CompactMass.vacuous(5)
        assert m.is_vacuous()
        assert m.singleton.sum() == 0.0

    def test_immutable(self):
        m = compact(0.6, 0.3, 0.0, theta=0.1)
        with pytest.raises(ValueError):
            m.singleton[0] = 0.9


class TestCombine:
    def test_two_partial_certainties(self):
        # n=3: a=0.7/theta=0.3 against b=0.6/theta=0.4
        m1 = compact(0.7, 0.0, 0.0, theta=0.3)
        m2 = compact(0.0, 0.6, 0.0, theta=0.4)
        fused, report = compact_combine(m1, m2)
        assert report.k == pytest.approx(0.42, abs=1e-12)
        assert fused.singleton[0] == pytest.approx(0.28 / 0.58, abs=1e-12)
        assert fused.singleton[1] == pytest.approx(0.18 / 0.58, abs=1e-12)
        assert fused.theta == pytest.approx(0.12 / 0.58, abs=1e-12)

    def test_vacuous_neutral(self):
        m = compact(0.5, 0.2, 0.1, theta=0.2)
        fused, report = compact_combine(m, CompactMass.vacuous(3))
        assert report.k == 0.0
        np.testing.assert_allclose(fused.singleton, m.singleton, atol=1e-12)
        assert fused.theta == pytest.approx(m.theta, abs=1e-12)

    def test_total_conflict(self):
        with pytest.raises(TotalConflict):
            compact_combine(compact(1.0, 0.0, theta=0.0), compact(0.0, 1.0, theta=0.0))

    def test_frame_mismatch(self):
        with pytest.raises(FrameMismatch):
            compact_combine(CompactMass.vacuous(3), CompactMass.vacuous(4))

    def test_combine_all_single(self):
        m = compact(0.5, 0.2, 0.1, theta=0.2)
        fused, reports = compact_combine_all([m])
        assert fused is m
        assert reports == []

    def test_combine_all_empty(self):
        with pytest.raises(EmptyList):
            compact_combine_all([])

    def test_combine_all_vacuous_dropped(self):
        rng = np.random.default_rng(7)
        masses = [random_compact_np(rng, 6) for _ in range(4)]
        with_vac = masses[:2] + [CompactMass.vacuous(6)] + masses[2:]
        fused_a, _ = compact_combine_all(masses)
        fused_b, _ = compact_combine_all(with_vac)
        np.testing.assert_allclose(fused_a.singleton, fused_b.singleton, atol=1e-12)
        assert fused_a.theta == pytest.approx(fused_b.theta, abs=1e-12)

    def test_total_conflict_step(self):
        ok = compact(0.5, 0.0, theta=0.5)
        a = compact(1.0, 0.0, theta=0.0)
        b = compact(0.0, 1.0, theta=0.0)
        with pytest.raises(TotalConflict) as exc:
            compact_combine_all([ok, a, b])
        assert exc.value.step == 2


class TestLift:
    def test_basic(self):
        frame = frame_of(3)
        m = lift_to_general(compact(0.6, 0.3, 0.0, theta=0.1), frame)
        assert m.mass(mask(3, 0)) == 0.6
        assert m.mass(mask(3, 1)) == 0.3
        assert m.mass(SubsetMask.full(3)) == 0.1
        assert len(m.focal) == 3

    def test_vacuous(self):
        m = lift_to_general(CompactMass.vacuous(3), frame_of(3))
        assert m.focal == {SubsetMask.full(3): 1.0}

    def test_certain(self):
        m = lift_to_general(compact(0.0, 1.0, 0.0, theta=0.0), frame_of(3))
        assert m.focal == {mask(3, 1): 1.0}

    def test_frame_mismatch(self):
        with pytest.raises(FrameMismatch):
            lift_to_general(CompactMass.vacuous(3), frame_of(4))

    def test_frame_too_large(self):
        with pytest.raises(FrameTooLarge):
            lift_to_general(CompactMass.vacuous(17), frame_of(17))


def random_compact_np(rng, n, min_theta=1e-3):
    weights = rng.uniform(0.0, 1.0, size=n)
    theta_share = float(rng.uniform(min_theta, 0.6))
    singleton = weights * ((1.0 - theta_share) / weights.sum())
    return CompactMass(singleton, 1.0 - float(singleton.sum()))


@given(compact_masses(n=4), compact_masses(n=4))
def test_closure(m1, m2):
    try:
        fused, report = compact_combine(m1, m2)
    except TotalConflict:
        return
    # construction re-validates the invariants; spot-check them anyway
    assert fused.singleton.min() >= 0.0 and fused.theta >= 0.0
    assert abs(fsum(fused.singleton) + fused.theta - 1.0) <= 1e-9
    assert 0.0 <= report.k < 1.0


@settings(max_examples=80)
@given(st.data())
def test_pair_matches_general_engine(data):
    n = data.draw(st.integers(2, 10))
    m1 = data.draw(compact_masses(n=n))
    m2 = data.draw(compact_masses(n=n))
    frame = frame_of(n)
    try:
        fused, report = compact_combine(m1, m2)
    except TotalConflict:
        return
    general, general_report = combine_pair(
        lift_to_general(m1, frame), lift_to_general(m2, frame)
    )
    assert abs(report.k - general_report.k) <= 1e-9
    for c in range(n):
        assert fused.singleton[c] == pytest.approx(
            general.mass(SubsetMask.singleton(c, n)), abs=1e-9
        )
    assert fused.theta == pytest.approx(general.mass(SubsetMask.full(n)), abs=1e-9)


@settings(max_examples=40)
@given(st.data())
def test_fold_matches_general_engine(data):
    n = data.draw(st.integers(2, 8))
    count = data.draw(st.integers(1, 5))
    masses = [data.draw(compact_masses(n=n)) for _ in range(count)]
    frame = frame_of(n)
    fused, reports = compact_combine_all(masses)
    general, general_reports = combine_all([lift_to_general(m, frame) for m in masses])
    assert len(reports) == len(general_reports)
    for fast, slow in zip(reports, general_reports):
        assert abs(fast.k - slow.k) <= 1e-9
    for c in range(n):
        assert fused.singleton[c] == pytest.approx(
            general.mass(SubsetMask.singleton(c, n)), abs=1e-9
        )
    assert fused.theta == pytest.approx(general.mass(SubsetMask.full(n)), abs=1e-9)


@given(compact_masses(n=5))
def test_bel_pl_closed_forms(m):
    frame = frame_of(5)
    general = lift_to_general(m, frame)
    total_singleton = fsum(m.singleton)
    for c in range(5):
        single = SubsetMask.singleton(c, 5)
        assert bel(general, single) == pytest.approx(m.singleton[c], abs=1e-12)
        assert pl(general, single) == pytest.approx(m.singleton[c] + m.theta, abs=1e-12)
        assert bel(general, single.complement()) == pytest.approx(
            total_singleton - m.singleton[c], abs=1e-9
        )


def test_positive_theta_never_totally_conflicts():
    rng = np.random.default_rng(11)
    for _ in range(200):
        n = int(rng.integers(2, 11))
        masses = [random_compact_np(rng, n, min_theta=1e-6) for _ in range(int(rng.integers(2, 7)))]
        fused, reports = compact_combine_all(masses)  # must not raise
        assert all(r.k < 1.0 for r in reports)
        assert fused.theta > 0.0
