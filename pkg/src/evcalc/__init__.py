"""Belief functions over finite frames of discernment.

Evidence enters as source models: a probability assignment over the states
of an evidence source plus a compatibility relation saying which answers to
the question of interest each state allows. Conditioning removes
contradicted states (reporting the discarded mass as conflict), extension
turns the result into a mass function, and independent items of evidence
combine by Dempster's rule, either directly or through a product source.
A Bayesian conditioning posterior is available for side-by-side comparison,
and the `evcalc` CLI evaluates declarative JSON model files.
"""

from .bayes import (
    DEFAULT_RELIABILITY,
    ComparisonRow,
    ReliabilityScenario,
    compare_designs,
    reliability_posterior,
)
from .belief import BeliefTable, MassFunction, mass_from_belief, vacuous
from .cli import ModelDocument, evaluate_document, load_model
from .combine import combine_all, dempster_combine, product_source
from .errors import (
    EvidenceError,
    FrameMismatchError,
    InconsistentScenarioError,
    TotalConflictError,
    ValidationError,
)
from .frames import MAX_FRAME_SIZE, Frame, Subset
from .sources import CompatibilityRelation, SourceModel

__version__ = "0.1.0"

__all__ = [
    "BeliefTable",
    "ComparisonRow",
    "CompatibilityRelation",
    "DEFAULT_RELIABILITY",
    "EvidenceError",
    "Frame",
    "FrameMismatchError",
    "InconsistentScenarioError",
    "MAX_FRAME_SIZE",
    "MassFunction",
    "ModelDocument",
    "ReliabilityScenario",
    "SourceModel",
    "Subset",
    "TotalConflictError",
    "ValidationError",
    "combine_all",
    "compare_designs",
    "dempster_combine",
    "evaluate_document",
    "load_model",
    "mass_from_belief",
    "product_source",
    "reliability_posterior",
    "vacuous",
]
