"""Bayesian conditioning posterior for an unreliable witness, and a
side-by-side comparison with belief/plausibility intervals.

The scenario: a witness who is reliable with probability r announces that a
proposition holds. The Bayesian route needs two further judgments: a prior
p for the proposition, and the probability q that a careless announcement
is accidentally accurate. q is read as "given a careless utterance, with
probability q the utterance asserts the true state", so the announcement
has probability q when the proposition holds and 1 - q when it does not.
The posterior for the proposition given the announcement is then

    (r p + (1-r) p q) / (r p + (1-r) p q + (1-r) (1-p) (1-q))

The witness's carelessness is assumed independent of the proposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import FrameMismatchError, InconsistentScenarioError, ValidationError
from .frames import Subset
from .sources import SourceModel

DEFAULT_RELIABILITY = 0.8
DENOMINATOR_FLOOR = 1e-12


@dataclass(frozen=True)
class ReliabilityScenario:
    """The (prior p, careless-accuracy q, reliability r) judgment triple."""

    p: float
    q: float
    r: float = DEFAULT_RELIABILITY

    def __post_init__(self):
        for name, value in (("p", self.p), ("q", self.q), ("r", self.r)):
            if not 0.0 <= value <= 1.0:
                raise ValidationError(f"{name} must be in [0, 1], got {value!r}")


def reliability_posterior(scenario: ReliabilityScenario) -> float:
    """Posterior probability of the proposition given the announcement.

    Raises InconsistentScenarioError when the announcement itself has
    probability zero under the scenario (e.g. p=0 with q=1).
    """
    r, p, q = scenario.r, scenario.p, scenario.q
    numerator = r * p + (1.0 - r) * p * q
    denominator = numerator + (1.0 - r) * (1.0 - p) * (1.0 - q)
    if denominator <= DENOMINATOR_FLOOR:
        raise InconsistentScenarioError(
            f"the announcement has probability {denominator!r} under r={r}, p={p}, q={q}"
        )
    return numerator / denominator


class ComparisonRow(NamedTuple):
    r: float
    p: float
    q: float
    bayes: float
    bel: float
    pl: float


def compare_designs(
    grid: Sequence[ReliabilityScenario], model: SourceModel, proposition: Subset
) -> list[ComparisonRow]:
    """One row per scenario: Bayesian posterior next to Bel/Pl of the proposition.

    Bel and Pl come from evaluating the model once and are repeated on every
    row; errors from evaluation or from any scenario propagate.
    """
    if proposition.frame != model.target_frame:
        raise FrameMismatchError(
            f"proposition {proposition} is not on the model's target frame {model.target_frame}"
        )
    mass, _ = model.evaluate()
    bel = mass.belief(proposition)
    pl = mass.plausibility(proposition)
    return [
        ComparisonRow(s.r, s.p, s.q, reliability_posterior(s), bel, pl) for s in grid
    ]
