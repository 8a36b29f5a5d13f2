"""Combination of independent evidence.

Two equivalent routes are offered and their agreement is a tested property
of the package: `dempster_combine` intersects focal sets directly, while
`product_source` forms the product of two source models so that a single
condition-and-extend pass performs the same combination. Conflict (the
probability discarded on the empty set) is always returned, never hidden.

Both routes assume the sources are independent. The engine cannot detect
dependence; correlated witnesses belong in one joint `SourceModel` instead.
"""

from __future__ import annotations

from math import fsum
from typing import Sequence

from .belief import MassFunction, vacuous
from .errors import FrameMismatchError, TotalConflictError, ValidationError
from .frames import MAX_FRAME_SIZE, Frame, Subset
from .sources import CompatibilityRelation, SourceModel

TOTAL_CONFLICT_TOL = 1e-12


def product_source(a: SourceModel, b: SourceModel) -> SourceModel:
    """Independent product of two source models aimed at the same target frame.

    Product states are labeled "(sa, sb)", carry the product of the two
    priors, and are compatible with the intersection of the two images.
    """
    if a.target_frame != b.target_frame:
        raise FrameMismatchError(
            f"cannot combine sources aimed at different targets: "
            f"{a.target_frame} vs {b.target_frame}"
        )
    combined_size = a.source_frame.size * b.source_frame.size
    if combined_size > MAX_FRAME_SIZE:
        raise ValidationError(
            f"product source would have {combined_size} states; at most {MAX_FRAME_SIZE} are supported"
        )
    labels = []
    prior = []
    images = []
    for la, pa, ia in zip(a.source_frame.labels, a.prior, a.relation.images):
        for lb, pb, ib in zip(b.source_frame.labels, b.prior, b.relation.images):
            labels.append(f"({la}, {lb})")
            prior.append(pa * pb)
            images.append(ia & ib)
    source = Frame(tuple(labels))
    relation = CompatibilityRelation(source, a.target_frame, tuple(images))
    return SourceModel(relation, tuple(prior))


def dempster_combine(m1: MassFunction, m2: MassFunction) -> tuple[MassFunction, float]:
    """Dempster's rule on two mass functions over the same frame.

    Every focal pair contributes its product of masses to the intersection;
    the weight landing on the empty set is the conflict, and the rest is
    renormalized by (1 - conflict). Per-subset weights are summed with fsum
    so the result is invariant under argument order. Raises
    TotalConflictError when the conflict reaches 1 within 1e-12.
    """
    if m1.frame != m2.frame:
        raise FrameMismatchError(f"cannot combine masses on different frames: {m1.frame} vs {m2.frame}")
    frame = m1.frame
    terms: dict[int, list[float]] = {}
    conflict_terms: list[float] = []
    for a, va in m1.items():
        for b, vb in m2.items():
            bits = a.bits & b.bits
            if bits == 0:
                conflict_terms.append(va * vb)
            else:
                terms.setdefault(bits, []).append(va * vb)
    conflict = fsum(conflict_terms)
    if conflict >= 1.0 - TOTAL_CONFLICT_TOL:
        raise TotalConflictError(f"total conflict: {conflict!r} of the product weight is contradictory")
    scale = 1.0 - conflict
    focal = {Subset(frame, bits): fsum(ts) / scale for bits, ts in terms.items()}
    return MassFunction(frame, focal), conflict


def combine_all(
    masses: Sequence[MassFunction], frame: Frame
) -> tuple[MassFunction, tuple[float, ...]]:
    """Left fold of `dempster_combine` over `masses`, with the conflict of each step.

    An empty sequence yields the vacuous mass function; a single element is
    returned unchanged. Step i (1-based) combines the running result with
    masses[i]; a totally conflicting step raises TotalConflictError carrying
    that step index.
    """
    for m in masses:
        if m.frame != frame:
            raise FrameMismatchError(f"mass function on {m.frame} does not live on {frame}")
    if not masses:
        return vacuous(frame), ()
    result = masses[0]
    step_conflicts = []
    for step, m in enumerate(masses[1:], start=1):
        try:
            result, conflict = dempster_combine(result, m)
        except TotalConflictError as e:
            raise TotalConflictError(f"step {step}: {e}", step=step) from None
        step_conflicts.append(conflict)
    return result, tuple(step_conflicts)
