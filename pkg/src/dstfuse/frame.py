"""Frame of discernment and bitmask subset algebra for the general engine."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DuplicateLabel, FrameMismatch, FrameTooLarge, TooFewClasses

# Powerset enumeration caps the general engine; larger frames go through
# the singleton+theta representation in dstfuse.compact.
GENERAL_ENGINE_MAX_CLASSES = 16


@dataclass(frozen=True)
class Frame:
    """Ordered, exhaustive and mutually exclusive set of class labels."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) < 2:
            raise TooFewClasses(f"need at least 2 class labels, got {len(self.labels)}")
        if len(set(self.labels)) != len(self.labels):
            raise DuplicateLabel(f"frame labels are not unique: {self.labels}")

    @property
    def size(self) -> int:
        return len(self.labels)


def make_frame(labels: Sequence[str]) -> Frame:
    """Build a frame whose class indices follow the input order."""
    return Frame(tuple(labels))


@dataclass(frozen=True)
class SubsetMask:
    """Subset of a frame encoded as a bit vector (bit i set <=> class i in the set)."""

    bits: int
    frame_size: int

    def __post_init__(self):
        if self.frame_size < 1:
            raise ValueError(f"frame_size must be >= 1, got {self.frame_size}")
        if self.frame_size > GENERAL_ENGINE_MAX_CLASSES:
            raise FrameTooLarge(
                f"bitmask subsets support at most {GENERAL_ENGINE_MAX_CLASSES} "
                f"classes, got {self.frame_size}"
            )
        if not 0 <= self.bits < (1 << self.frame_size):
            raise ValueError(f"bits {self.bits:#x} out of range for frame size {self.frame_size}")

    @classmethod
    def empty(cls, frame_size: int) -> "SubsetMask":
        return cls(0, frame_size)

    @classmethod
    def full(cls, frame_size: int) -> "SubsetMask":
        return cls((1 << frame_size) - 1, frame_size)

    @classmethod
    def singleton(cls, index: int, frame_size: int) -> "SubsetMask":
        if not 0 <= index < frame_size:
            raise ValueError(f"class index {index} out of range for frame size {frame_size}")
        return cls(1 << index, frame_size)

    @classmethod
    def from_indices(cls, indices: Sequence[int], frame_size: int) -> "SubsetMask":
        bits = 0
        for i in indices:
            if not 0 <= i < frame_size:
                raise ValueError(f"class index {i} out of range for frame size {frame_size}")
            bits |= 1 << i
        return cls(bits, frame_size)

    def _check(self, other: "SubsetMask") -> None:
        if self.frame_size != other.frame_size:
            raise FrameMismatch(
                f"subset over {self.frame_size} classes combined with one over {other.frame_size}"
            )

    def intersection(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.bits & other.bits, self.frame_size)

    def union(self, other: "SubsetMask") -> "SubsetMask":
        self._check(other)
        return SubsetMask(self.bits | other.bits, self.frame_size)

    def complement(self) -> "SubsetMask":
        return SubsetMask(self.bits ^ ((1 << self.frame_size) - 1), self.frame_size)

    def is_subset(self, other: "SubsetMask") -> bool:
        self._check(other)
        return self.bits & other.bits == self.bits

    def is_empty(self) -> bool:
        return self.bits == 0

    def is_full(self) -> bool:
        return self.bits == (1 << self.frame_size) - 1

    def cardinality(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.frame_size) if self.bits >> i & 1)


def powerset_iter(frame: Frame) -> Iterator[SubsetMask]:
    """Yield every subset of the frame once, in ascending bit-pattern order."""
    if frame.size > GENERAL_ENGINE_MAX_CLASSES:
        raise FrameTooLarge(
            f"powerset enumeration supports at most {GENERAL_ENGINE_MAX_CLASSES} "
            f"classes, got {frame.size}"
        )
    for bits in range(1 << frame.size):
        yield SubsetMask(bits, frame.size)
