"""Expected-utility decision rule over a fused compact mass."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .compact import CompactMass


@dataclass(frozen=True, eq=False)
class DecisionResult:
    """Argmax prediction with the full utility vector and an exact-tie flag."""

    predicted_class: int
    utilities: np.ndarray
    tie: bool


def expected_utilities(fused: CompactMass) -> np.ndarray:
    """Per-class utility: belief for the class minus belief for every other class.

    For a compact mass that is singleton[c] - (S - singleton[c]) = 2*singleton[c] - S
    with S the total singleton mass; theta contributes to neither side.
    """
    s = fused.singleton
    return 2.0 * s - float(s.sum())


def predict(fused: CompactMass) -> DecisionResult:
    """Pick the class with the highest utility; ties break to the lowest index."""
    utilities = expected_utilities(fused)
    winner = int(np.argmax(utilities))
    tie = int((utilities == utilities[winner]).sum()) > 1
    return DecisionResult(winner, utilities, tie)
