"""Exception types shared across the package."""

from __future__ import annotations


class DstFuseError(Exception):
    """Base class for every error raised by dstfuse."""


class TooFewClasses(DstFuseError):
    """A frame needs at least two class labels."""


class DuplicateLabel(DstFuseError):
    """Frame labels must be unique."""


class FrameMismatch(DstFuseError):
    """Operands belong to different frames."""


class FrameTooLarge(DstFuseError):
    """The general bitmask engine only supports frames up to 16 classes."""


class MassOnEmptySet(DstFuseError):
    """Positive mass assigned to the empty set."""


class NegativeMass(DstFuseError):
    """Mass values must be non-negative."""


class NotNormalized(DstFuseError):
    """Mass values must sum to one."""


class AllZeroMass(DstFuseError):
    """Normalization is undefined when every mass is zero."""


class EmptySetQuery(DstFuseError):
    """Commonality is not defined for the empty set."""


class EmptyList(DstFuseError):
    """At least one element is required."""


class TotalConflict(DstFuseError):
    """Dempster combination is undefined at K = 1.

    `step` is the index of the incoming mass in a left fold; `sample_id`
    identifies the sample when raised from the evaluation pipeline.
    """

    def __init__(self, k: float, step: int | None = None, sample_id: str | None = None):
        self.k = k
        self.step = step
        self.sample_id = sample_id
        where = ""
        if step is not None:
            where += f" at fold step {step}"
        if sample_id is not None:
            where += f" for sample {sample_id!r}"
        super().__init__(f"total conflict (K={k}){where}: combination undefined")


class NonFiniteScore(DstFuseError):
    """Scores must be finite (no NaN or infinity)."""


class LengthMismatch(DstFuseError):
    """Score vectors must all match the frame size."""


class SchemaError(DstFuseError):
    """A score or label file does not match the expected schema."""


class DuplicateSampleId(DstFuseError):
    """Sample ids within one file must be unique."""


class EmptyFile(DstFuseError):
    """The file contains no data rows."""


class NoCommonSamples(DstFuseError):
    """The inputs share no sample ids."""


class ClassCountMismatch(DstFuseError):
    """Inputs disagree on the number of classes."""


class BadDimension(DstFuseError):
    """Fixture dimensions out of range."""


class IoError(DstFuseError):
    """Reading or writing a file failed."""
