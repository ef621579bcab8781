import numpy as np
import pytest
from hypothesis import given

from dstfuse.compact import CompactMass
from dstfuse.decision import expected_utilities, predict

from conftest import compact_masses


def compact(*singles, theta):
    return CompactMass(np.array(singles, dtype=float), theta)


def test_utilities_example():
    u = expected_utilities(compact(0.6, 0.3, 0.0, theta=0.1))
    np.testing.assert_allclose(u, [0.3, -0.3, -0.9], atol=1e-12)


def test_utilities_vacuous():
    np.testing.assert_array_equal(expected_utilities(CompactMass.vacuous(4)), np.zeros(4))


def test_utilities_certain():
    u = expected_utilities(compact(1.0, 0.0, 0.0, theta=0.0))
    np.testing.assert_allclose(u, [1.0, -1.0, -1.0], atol=1e-12)


def test_predict_example():
    result = predict(compact(0.6, 0.3, 0.0, theta=0.1))
    assert result.predicted_class == 0
    assert not result.tie


def test_predict_vacuous_ties_to_zero():
    result = predict(CompactMass.vacuous(5))
    assert result.predicted_class == 0
    assert result.tie
    np.testing.assert_array_equal(result.utilities, np.zeros(5))


def test_predict_exact_tie_lowest_index():
    result = predict(compact(0.45, 0.45, 0.0, theta=0.1))
    assert result.predicted_class == 0
    assert result.tie
    result = predict(compact(0.0, 0.45, 0.45, theta=0.1))
    assert result.predicted_class == 1
    assert result.tie


@given(compact_masses())
def test_prediction_equals_singleton_argmax(m):
    result = predict(m)
    assert result.predicted_class == int(np.argmax(m.singleton))
    assert result.utilities[result.predicted_class] == result.utilities.max()


@given(compact_masses())
def test_utility_bounds_and_sum_identity(m):
    u = expected_utilities(m)
    assert np.all(u >= -1.0 - 1e-12) and np.all(u <= 1.0 + 1e-12)
    total_singleton = float(m.singleton.sum())
    assert float(u.sum()) == pytest.approx((2 - m.frame_size) * total_singleton, abs=1e-9)
