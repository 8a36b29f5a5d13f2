"""Mass functions and the belief/plausibility degrees they induce.

A mass function assigns strictly positive weight to non-empty focal subsets
of one frame, normalized to 1. Belief in B is the total mass of focal sets
contained in B; plausibility is the total mass of focal sets meeting B,
which equals 1 - Bel(complement of B) up to normalization slack. The module
also carries `BeliefTable`, a dense per-subset table used as the round-trip
oracle for Mobius inversion; it is restricted to small frames and exists
for testing and diagnostics, not production flows.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from typing import Iterator, Mapping, Sequence

from .errors import FrameMismatchError, ValidationError
from .frames import Frame, Subset

NORMALIZATION_TOL = 1e-9
MASS_FLOOR = 1e-12
BELIEF_TABLE_MAX_SIZE = 16


class MassFunction:
    """Normalized assignment of mass to focal subsets of one frame.

    Construction validates and then renormalizes exactly (divides by the
    computed sum) so downstream sums stay stable. Instances are immutable.
    """

    __slots__ = ("frame", "_focal")

    def __init__(self, frame: Frame, focal: Mapping[Subset, float]):
        if not focal:
            raise ValidationError("a mass function needs at least one focal subset")
        for subset, value in focal.items():
            if subset.frame != frame:
                raise FrameMismatchError(f"focal subset {subset} is not on frame {frame}")
            if subset.is_empty:
                raise ValidationError("the empty set cannot carry mass")
            if not value > 0.0:
                raise ValidationError(f"mass of {subset} must be strictly positive, got {value!r}")
        total = fsum(focal.values())
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValidationError(f"masses sum to {total!r}, more than {NORMALIZATION_TOL} away from 1")
        self.frame = frame
        self._focal = {s: v / total for s, v in sorted(focal.items(), key=lambda kv: kv[0].bits)}

    @classmethod
    def from_labels(cls, frame: Frame, focal: Mapping, /) -> MassFunction:
        """Build from label collections, e.g. {("yes",): 0.8, ("yes", "no"): 0.2}.

        A bare string key is treated as a single label, not as characters.
        """
        converted: dict[Subset, float] = {}
        for key, value in focal.items():
            labels = (key,) if isinstance(key, str) else key
            subset = frame.subset(labels)
            if subset in converted:
                raise ValidationError(f"duplicate focal subset {subset}")
            converted[subset] = value
        return cls(frame, converted)

    def mass(self, subset: Subset) -> float:
        """Mass of `subset`; 0.0 when it is not focal."""
        if subset.frame != self.frame:
            raise FrameMismatchError(f"subset {subset} is not on frame {self.frame}")
        return self._focal.get(subset, 0.0)

    def items(self) -> Iterator[tuple[Subset, float]]:
        """Focal subsets with their masses, in canonical bitmask order."""
        return iter(self._focal.items())

    def focal_sets(self) -> tuple[Subset, ...]:
        return tuple(self._focal)

    def __len__(self) -> int:
        return len(self._focal)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.frame == other.frame and self._focal == other._focal

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{s}: {v:.6g}" for s, v in self._focal.items())
        return f"MassFunction({body})"

    def belief(self, b: Subset) -> float:
        """Total mass of focal subsets contained in `b`."""
        if b.frame != self.frame:
            raise FrameMismatchError(f"subset {b} is not on frame {self.frame}")
        return min(1.0, fsum(v for s, v in self._focal.items() if s.bits & b.bits == s.bits))

    def plausibility(self, b: Subset) -> float:
        """Total mass of focal subsets that meet `b`; 1 - Bel(complement)."""
        if b.frame != self.frame:
            raise FrameMismatchError(f"subset {b} is not on frame {self.frame}")
        return min(1.0, fsum(v for s, v in self._focal.items() if s.bits & b.bits))

    def is_bayesian(self) -> bool:
        """True iff every focal subset is a singleton (an ordinary probability)."""
        return all(s.size == 1 for s in self._focal)


def vacuous(frame: Frame) -> MassFunction:
    """Total ignorance: all mass on the full frame. Identity for combination."""
    return MassFunction(frame, {frame.full(): 1.0})


@dataclass(frozen=True)
class BeliefTable:
    """Belief degree for every subset of a small frame, indexed by bitmask.

    Only frames of up to 16 elements are accepted (the table is dense).
    """

    frame: Frame
    values: tuple[float, ...]

    def __post_init__(self):
        if self.frame.size > BELIEF_TABLE_MAX_SIZE:
            raise ValidationError(
                f"belief tables are limited to frames of size {BELIEF_TABLE_MAX_SIZE}, "
                f"got {self.frame.size}"
            )
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = self.frame.size
        if len(values) != 1 << n:
            raise ValidationError(f"expected {1 << n} entries, got {len(values)}")
        if abs(values[0]) > NORMALIZATION_TOL:
            raise ValidationError(f"belief in the empty set must be 0, got {values[0]!r}")
        if abs(values[-1] - 1.0) > NORMALIZATION_TOL:
            raise ValidationError(f"belief in the full frame must be 1, got {values[-1]!r}")
        for a in range(1 << n):
            for i in range(n):
                if a >> i & 1 and values[a ^ 1 << i] > values[a] + NORMALIZATION_TOL:
                    raise ValidationError("belief must be monotone under subset inclusion")

    @classmethod
    def from_mass(cls, m: MassFunction) -> BeliefTable:
        """Tabulate Bel over the whole lattice via the subset-sum (zeta) transform."""
        n = m.frame.size
        if n > BELIEF_TABLE_MAX_SIZE:
            raise ValidationError(
                f"belief tables are limited to frames of size {BELIEF_TABLE_MAX_SIZE}, got {n}"
            )
        acc = [0.0] * (1 << n)
        for s, v in m.items():
            acc[s.bits] += v
        for i in range(n):
            bit = 1 << i
            for a in range(1 << n):
                if a & bit:
                    acc[a] += acc[a ^ bit]
        return cls(m.frame, tuple(min(1.0, v) for v in acc))

    def value(self, subset: Subset) -> float:
        if subset.frame != self.frame:
            raise FrameMismatchError(f"subset {subset} is not on frame {self.frame}")
        return self.values[subset.bits]


def mass_from_belief(table: BeliefTable) -> MassFunction:
    """Invert a belief table back to its unique mass function (Mobius inversion).

    Raises ValidationError when the inversion produces a mass below -1e-9,
    i.e. the table was not the belief function of any mass assignment.
    Masses below 1e-12 are dropped as float noise.
    """
    n = table.frame.size
    acc = list(table.values)
    for i in range(n):
        bit = 1 << i
        for a in range(1 << n):
            if a & bit:
                acc[a] -= acc[a ^ bit]
    focal: dict[Subset, float] = {}
    for bits, v in enumerate(acc):
        if v < -NORMALIZATION_TOL:
            raise ValidationError(
                f"table is not a belief function: inverted mass {v!r} at bitmask {bits:#x}"
            )
        if bits and v > MASS_FLOOR:
            focal[Subset(table.frame, bits)] = v
    return MassFunction(table.frame, focal)
