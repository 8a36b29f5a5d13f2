"""Probability sources and their extension to degrees of belief.

A source model pairs a probability assignment over a source frame S with a
compatibility relation to a target frame T: each source state s maps to the
subset of target answers it is compatible with. An empty image encodes
contradiction (the source state is ruled out by what has been observed).

Evaluation is a two-step pipeline, kept separate so conflict stays an
explicit, reportable output:

  1. `condition` removes the probability on contradicted states and
     renormalizes, reporting the removed mass as the conflict.
  2. `extend` pushes the conditioned probabilities through the relation,
     yielding a mass function on T whose belief in B is the probability
     that the source state forces the answer into B.

Dependent evidence needs no extra machinery: a joint probability over
product-labeled source states flows through the same two steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from typing import Iterable, Mapping, Sequence

from .belief import NORMALIZATION_TOL, MassFunction
from .errors import FrameMismatchError, TotalConflictError, ValidationError
from .frames import Frame, Subset

SURVIVING_MASS_FLOOR = 1e-12


@dataclass(frozen=True)
class CompatibilityRelation:
    """For each source state, the subset of target answers compatible with it.

    `images` is aligned with the source frame's canonical label order; an
    empty image is legal and marks the state as contradicted.
    """

    source: Frame
    target: Frame
    images: tuple[Subset, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.source.size:
            raise ValidationError(
                f"expected one image per source state ({self.source.size}), got {len(images)}"
            )
        for label, image in zip(self.source.labels, images):
            if image.frame != self.target:
                raise FrameMismatchError(
                    f"image of {label!r} lives on {image.frame}, not the target frame {self.target}"
                )

    @classmethod
    def from_mapping(
        cls, source: Frame, target: Frame, mapping: Mapping[str, Iterable[str]]
    ) -> CompatibilityRelation:
        """Build from a label mapping; every source label must have an entry."""
        missing = [label for label in source.labels if label not in mapping]
        if missing:
            raise ValidationError(f"no compatibility entry for: {', '.join(missing)}")
        unknown = [label for label in mapping if label not in source.labels]
        if unknown:
            raise ValidationError(
                f"compatibility entries for labels not in the source frame: {', '.join(unknown)}"
            )
        return cls(source, target, tuple(target.subset(mapping[l]) for l in source.labels))

    def image_of(self, label: str) -> Subset:
        return self.images[self.source.index(label)]


@dataclass(frozen=True)
class SourceModel:
    """A compatibility relation plus a probability assignment over its source frame.

    The prior is aligned with the source frame's label order, must sum to 1
    within 1e-9, and is renormalized exactly at construction. Zero entries
    are legal and contribute nothing.
    """

    relation: CompatibilityRelation
    prior: tuple[float, ...]

    def __post_init__(self):
        prior = tuple(self.prior)
        if len(prior) != self.relation.source.size:
            raise ValidationError(
                f"expected {self.relation.source.size} prior entries, got {len(prior)}"
            )
        for label, p in zip(self.relation.source.labels, prior):
            if not isinstance(p, (int, float)) or isinstance(p, bool):
                raise ValidationError(f"prior of {label!r} must be a number, got {p!r}")
            if not 0.0 <= p <= 1.0 + NORMALIZATION_TOL:
                raise ValidationError(f"prior of {label!r} must be in [0, 1], got {p!r}")
        total = fsum(prior)
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValidationError(f"prior does not sum to 1 (sum is {total!r})")
        object.__setattr__(self, "prior", tuple(p / total for p in prior))

    @classmethod
    def from_tables(
        cls,
        source: Frame | Sequence[str],
        target: Frame | Sequence[str],
        prior: Mapping[str, float],
        compatibility: Mapping[str, Iterable[str]],
    ) -> SourceModel:
        """Build from label-keyed tables; frames may be given as label lists."""
        source = source if isinstance(source, Frame) else Frame(tuple(source))
        target = target if isinstance(target, Frame) else Frame(tuple(target))
        missing = [label for label in source.labels if label not in prior]
        if missing:
            raise ValidationError(f"no prior entry for: {', '.join(missing)}")
        unknown = [label for label in prior if label not in source.labels]
        if unknown:
            raise ValidationError(
                f"prior entries for labels not in the source frame: {', '.join(unknown)}"
            )
        relation = CompatibilityRelation.from_mapping(source, target, compatibility)
        return cls(relation, tuple(prior[l] for l in source.labels))

    @property
    def source_frame(self) -> Frame:
        return self.relation.source

    @property
    def target_frame(self) -> Frame:
        return self.relation.target

    def prior_of(self, label: str) -> float:
        return self.prior[self.relation.source.index(label)]

    def conflict(self) -> float:
        """Prior probability sitting on contradicted (empty-image) states."""
        return fsum(p for p, img in zip(self.prior, self.relation.images) if img.is_empty)

    def condition(self) -> tuple[SourceModel, float]:
        """Eliminate contradicted states and renormalize the rest.

        Returns the conditioned model and the conflict (the eliminated
        probability). A model with no conflict is returned as-is, which
        also makes conditioning idempotent. Raises TotalConflictError when
        essentially all prior mass is contradicted.
        """
        conflict = self.conflict()
        if conflict == 0.0:
            return self, 0.0
        surviving = fsum(p for p, img in zip(self.prior, self.relation.images) if not img.is_empty)
        if surviving <= SURVIVING_MASS_FLOOR:
            raise TotalConflictError(
                "every source state with positive probability is contradicted"
            )
        posterior = tuple(
            0.0 if img.is_empty else p / (1.0 - conflict)
            for p, img in zip(self.prior, self.relation.images)
        )
        return SourceModel(self.relation, posterior), conflict

    def extend(self) -> MassFunction:
        """Push the probabilities through the relation onto the target frame.

        The model must already be conditioned: positive probability on an
        empty image is an error, not silently renormalized away.
        """
        focal: dict[Subset, float] = {}
        for label, p, img in zip(self.relation.source.labels, self.prior, self.relation.images):
            if p == 0.0:
                continue
            if img.is_empty:
                raise ValidationError(
                    f"state {label!r} is contradicted but still carries probability {p!r}; "
                    "condition the model first"
                )
            focal[img] = focal.get(img, 0.0) + p
        return MassFunction(self.target_frame, focal)

    def evaluate(self) -> tuple[MassFunction, float]:
        """Condition, then extend; returns the mass function and the conflict."""
        conditioned, conflict = self.condition()
        return conditioned.extend(), conflict
