"""Frames of discernment and exact subset algebra over them.

A frame is an ordered list of labeled, mutually exclusive answers to one
question. Subsets are represented as bitmasks over the frame's canonical
label order, so complement and intersection are single integer operations
and a frame may hold at most 64 elements. All values are immutable and
safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import FrameMismatchError, ValidationError

MAX_FRAME_SIZE = 64


@dataclass(frozen=True)
class Frame:
    """Ordered finite set of distinct labels; position defines the canonical index."""

    labels: tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValidationError("a frame needs at least one label")
        if len(labels) > MAX_FRAME_SIZE:
            raise ValidationError(
                f"frame has {len(labels)} labels; at most {MAX_FRAME_SIZE} are supported"
            )
        for label in labels:
            if not isinstance(label, str) or not label:
                raise ValidationError(f"frame labels must be non-empty strings, got {label!r}")
        if len(set(labels)) != len(labels):
            seen, dupes = set(), []
            for label in labels:
                if label in seen and label not in dupes:
                    dupes.append(label)
                seen.add(label)
            raise ValidationError(f"duplicate frame labels: {', '.join(dupes)}")
        object.__setattr__(self, "_index", {label: i for i, label in enumerate(labels)})

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        """Canonical index of `label`; raises if it is not in the frame."""
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"label {label!r} is not in frame [{', '.join(self.labels)}]") from None

    def subset(self, labels: Iterable[str]) -> Subset:
        """Subset containing exactly the given labels (duplicates collapse)."""
        bits = 0
        for label in labels:
            bits |= 1 << self.index(label)
        return Subset(self, bits)

    def singleton(self, label: str) -> Subset:
        return Subset(self, 1 << self.index(label))

    def empty(self) -> Subset:
        return Subset(self, 0)

    def full(self) -> Subset:
        return Subset(self, (1 << self.size) - 1)

    def __str__(self):
        return "[" + ", ".join(self.labels) + "]"


@dataclass(frozen=True)
class Subset:
    """A subset of one frame's elements, packed into a bitmask.

    Subsets of different frames never compare equal and cannot be combined.
    """

    frame: Frame
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.frame.size):
            raise ValidationError(
                f"bitmask {self.bits:#x} does not fit a frame of size {self.frame.size}"
            )

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.frame.size) if self.bits >> i & 1)

    @property
    def labels(self) -> tuple[str, ...]:
        """Member labels, sorted by canonical frame order."""
        return tuple(self.frame.labels[i] for i in self.indices)

    def complement(self) -> Subset:
        return Subset(self.frame, self.bits ^ (1 << self.frame.size) - 1)

    def intersect(self, other: Subset) -> Subset:
        _require_same_frame(self, other)
        return Subset(self.frame, self.bits & other.bits)

    __and__ = intersect

    def issubset(self, other: Subset) -> bool:
        _require_same_frame(self, other)
        return self.bits & other.bits == self.bits

    def __contains__(self, label: str) -> bool:
        return self.bits >> self.frame.index(label) & 1 == 1

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self):
        return "{" + ", ".join(self.labels) + "}"


def _require_same_frame(a: Subset, b: Subset) -> None:
    if a.frame != b.frame:
        raise FrameMismatchError(f"subsets live on different frames: {a.frame} vs {b.frame}")
