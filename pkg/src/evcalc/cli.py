"""Command-line evaluation of declarative evidence-model files.

A model file is a JSON document with a target frame and either independent
sources (product-combined; the file's author asserts their independence) or
one joint block for dependent evidence:

    {"target_frame": ["yes", "no"],
     "sources": [
       {"name": "fred",
        "frame": ["truthful", "careless"],
        "prior": {"truthful": 0.8, "careless": 0.2},
        "compatibility": {"truthful": ["yes"], "careless": ["yes", "no"]}}]}

An empty compatibility list marks a contradicted state. The joint form
replaces "sources" with "joint": a single block whose frame labels are the
product states and whose prior is the dependent joint distribution.

Commands:
    eval <file> [--prop l1,l2]                    beliefs on the target frame
    bayes --r R (--p P --q Q | --sweep spec)      conditioning posterior
    compare <file> --prop ... (bayes flags)       both designs side by side

All probabilities print in 4-decimal fixed point so outputs are
byte-deterministic. Exit codes: 0 success, 2 validation, 3 total conflict;
anything unexpected propagates and exits 1.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple, Sequence, TextIO

from .bayes import DEFAULT_RELIABILITY, ReliabilityScenario, reliability_posterior
from .belief import MassFunction
from .combine import product_source
from .errors import (
    EvidenceError,
    InconsistentScenarioError,
    TotalConflictError,
    ValidationError,
)
from .frames import Frame
from .sources import SourceModel

EXIT_OK = 0
EXIT_OTHER = 1
EXIT_VALIDATION = 2
EXIT_TOTAL_CONFLICT = 3

SWEEP_EDGE_TOL = 1e-9


class NamedSource(NamedTuple):
    name: str
    model: SourceModel


@dataclass(frozen=True)
class ModelDocument:
    """A validated model file: a target frame plus sources or one joint block."""

    target: Frame
    sources: tuple[NamedSource, ...] = ()
    joint: NamedSource | None = None

    def __post_init__(self):
        if bool(self.sources) == (self.joint is not None):
            raise ValidationError("a document needs either sources or a joint block, not both")


def load_model(text: str) -> ModelDocument:
    """Parse and fully validate a JSON model document."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"invalid JSON: {e}") from None
    if not isinstance(raw, dict):
        raise ValidationError("the model document must be a JSON object")
    unknown = set(raw) - {"target_frame", "sources", "joint"}
    if unknown:
        raise ValidationError(f"unknown document keys: {', '.join(sorted(unknown))}")
    if "target_frame" not in raw:
        raise ValidationError("missing 'target_frame'")
    target = _parse_frame(raw["target_frame"], where="target_frame")
    if "sources" in raw and "joint" in raw:
        raise ValidationError("a document may contain 'sources' or 'joint', not both")
    if "joint" in raw:
        block = raw["joint"]
        if not isinstance(block, dict):
            raise ValidationError("'joint' must be an object")
        return ModelDocument(target, joint=_parse_block(block, target))
    if "sources" not in raw:
        raise ValidationError("a document needs 'sources' or 'joint'")
    blocks = raw["sources"]
    if not isinstance(blocks, list) or not blocks:
        raise ValidationError("'sources' must be a non-empty list")
    sources: list[NamedSource] = []
    for i, block in enumerate(blocks):
        if not isinstance(block, dict):
            raise ValidationError(f"sources[{i}] must be an object")
        parsed = _parse_block(block, target)
        if any(parsed.name == existing.name for existing in sources):
            raise ValidationError(f"duplicate source name {parsed.name!r}")
        sources.append(parsed)
    return ModelDocument(target, sources=tuple(sources))


def _parse_frame(labels, where: str) -> Frame:
    if not isinstance(labels, list) or not all(isinstance(l, str) for l in labels):
        raise ValidationError(f"'{where}' must be a list of strings")
    try:
        return Frame(tuple(labels))
    except ValidationError as e:
        raise ValidationError(f"{where}: {e}") from None


def _parse_block(block: dict, target: Frame) -> NamedSource:
    unknown = set(block) - {"name", "frame", "prior", "compatibility"}
    if unknown:
        raise ValidationError(f"unknown source keys: {', '.join(sorted(unknown))}")
    name = block.get("name")
    if not isinstance(name, str) or not name:
        raise ValidationError("every source block needs a non-empty 'name'")
    for key in ("frame", "prior", "compatibility"):
        if key not in block:
            raise ValidationError(f"source {name!r}: missing '{key}'")
    frame = _parse_frame(block["frame"], where=f"source '{name}' frame")
    prior = block["prior"]
    if not isinstance(prior, dict):
        raise ValidationError(f"source {name!r}: 'prior' must be an object")
    compatibility = block["compatibility"]
    if not isinstance(compatibility, dict):
        raise ValidationError(f"source {name!r}: 'compatibility' must be an object")
    for label, compatible in compatibility.items():
        if not isinstance(compatible, list) or not all(isinstance(l, str) for l in compatible):
            raise ValidationError(
                f"source {name!r}: compatibility of {label!r} must be a list of target labels"
            )
    try:
        model = SourceModel.from_tables(frame, target, prior, compatibility)
    except ValidationError as e:
        raise ValidationError(f"source {name!r}: {e}") from None
    return NamedSource(name, model)


def evaluate_document(doc: ModelDocument) -> tuple[MassFunction, float]:
    """Evaluate a document: the joint model as-is, sources via their product."""
    if doc.joint is not None:
        return doc.joint.model.evaluate()
    model = reduce(product_source, (s.model for s in doc.sources))
    return model.evaluate()


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ValidationError(f"cannot read {path}: {e}") from None


def _fmt(value: float) -> str:
    return f"{value:.4f}"


def _parse_prop(raw: str) -> list[str]:
    labels = [part.strip() for part in raw.split(",")]
    if not all(labels):
        raise ValidationError(f"bad proposition {raw!r}: empty label")
    return labels


def _load_for_command(args, err: TextIO) -> ModelDocument:
    doc = load_model(_read_file(args.path))
    if doc.joint is None and len(doc.sources) > 1:
        print(
            f"warning: combining {len(doc.sources)} sources; "
            "independence is asserted by the model file",
            file=err,
        )
    return doc


def _run_eval(args, out: TextIO, err: TextIO) -> int:
    doc = _load_for_command(args, err)
    mass, conflict = evaluate_document(doc)
    print(f"conflict {_fmt(conflict)}", file=out)
    for label in doc.target.labels:
        singleton = doc.target.singleton(label)
        print(
            f"{label} Bel={_fmt(mass.belief(singleton))} Pl={_fmt(mass.plausibility(singleton))}",
            file=out,
        )
    if args.prop is not None:
        prop = doc.target.subset(_parse_prop(args.prop))
        print(
            f"{','.join(prop.labels)} Bel={_fmt(mass.belief(prop))} Pl={_fmt(mass.plausibility(prop))}",
            file=out,
        )
    return EXIT_OK


def _parse_axis(var: str, raw: str) -> list[float]:
    pieces = raw.split(":")
    if len(pieces) == 1:
        return [_parse_sweep_float(var, pieces[0])]
    if len(pieces) != 3:
        raise ValidationError(f"sweep for {var!r}: ranges use start:stop:step, got {raw!r}")
    start, stop, step = (_parse_sweep_float(var, piece) for piece in pieces)
    if step <= 0:
        raise ValidationError(f"sweep for {var!r}: step must be positive, got {step!r}")
    values: list[float] = []
    i = 0
    while True:
        value = start + i * step
        if value > stop + SWEEP_EDGE_TOL:
            break
        # keep float drift at the edges from escaping [0, 1]
        if 1.0 < value < 1.0 + SWEEP_EDGE_TOL:
            value = 1.0
        values.append(value)
        i += 1
    return values


def _parse_sweep_float(var: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ValidationError(f"sweep for {var!r}: {raw!r} is not a number") from None


def _parse_sweep(spec: str) -> dict[str, list[float]]:
    axes: dict[str, list[float]] = {}
    for part in spec.split(","):
        var, sep, rhs = part.partition("=")
        var = var.strip()
        if not sep or var not in ("r", "p", "q"):
            raise ValidationError(f"bad sweep term {part!r}; expected r=, p= or q=")
        if var in axes:
            raise ValidationError(f"sweep defines {var!r} twice")
        axes[var] = _parse_axis(var, rhs.strip())
    return axes


def _build_grid(args) -> list[ReliabilityScenario]:
    """Scenario grid from the flags; rows in lexicographic (r, p, q) order."""
    if args.sweep is not None:
        if args.p is not None or args.q is not None:
            raise ValidationError("--sweep cannot be combined with --p/--q")
        axes = _parse_sweep(args.sweep)
        if "r" not in axes:
            axes["r"] = [args.r]
        missing = [v for v in ("p", "q") if v not in axes]
        if missing:
            raise ValidationError(f"sweep must define {' and '.join(missing)}")
        return [
            ReliabilityScenario(p=p, q=q, r=r)
            for r in axes["r"]
            for p in axes["p"]
            for q in axes["q"]
        ]
    if args.p is None or args.q is None:
        raise ValidationError("either --p and --q or --sweep is required")
    return [ReliabilityScenario(p=args.p, q=args.q, r=args.r)]


def _posterior_cell(scenario: ReliabilityScenario) -> str:
    try:
        return _fmt(reliability_posterior(scenario))
    except InconsistentScenarioError:
        return "undefined"


def _run_bayes(args, out: TextIO, err: TextIO) -> int:
    grid = _build_grid(args)
    if args.sweep is None:
        print(_posterior_cell(grid[0]), file=out)
        return EXIT_OK
    print("r,p,q,posterior", file=out)
    for s in grid:
        print(f"{_fmt(s.r)},{_fmt(s.p)},{_fmt(s.q)},{_posterior_cell(s)}", file=out)
    return EXIT_OK


def _run_compare(args, out: TextIO, err: TextIO) -> int:
    doc = _load_for_command(args, err)
    prop = doc.target.subset(_parse_prop(args.prop))
    grid = _build_grid(args)
    mass, _ = evaluate_document(doc)
    bel, pl = _fmt(mass.belief(prop)), _fmt(mass.plausibility(prop))
    print("r,p,q,bayes,bel,pl", file=out)
    for s in grid:
        print(f"{_fmt(s.r)},{_fmt(s.p)},{_fmt(s.q)},{_posterior_cell(s)},{bel},{pl}", file=out)
    return EXIT_OK


def _add_bayes_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--r", type=float, default=DEFAULT_RELIABILITY, help="witness reliability (default 0.8)"
    )
    parser.add_argument("--p", type=float, help="prior probability of the proposition")
    parser.add_argument("--q", type=float, help="chance a careless announcement is accurate")
    parser.add_argument(
        "--sweep",
        help="grid spec such as p=0:1:0.1,q=0.5; each of r, p, q may be a value or start:stop:step",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evcalc", description="Evaluate belief-function evidence models."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="beliefs and plausibilities from a model file")
    p_eval.add_argument("path", help="JSON model file")
    p_eval.add_argument("--prop", help="comma-separated target labels queried as one proposition")
    p_eval.set_defaults(handler=_run_eval)

    p_bayes = sub.add_parser("bayes", help="Bayesian conditioning posterior")
    _add_bayes_flags(p_bayes)
    p_bayes.set_defaults(handler=_run_bayes)

    p_compare = sub.add_parser("compare", help="Bayesian posterior vs Bel/Pl, as CSV")
    p_compare.add_argument("path", help="JSON model file")
    p_compare.add_argument("--prop", required=True, help="comma-separated target labels")
    _add_bayes_flags(p_compare)
    p_compare.set_defaults(handler=_run_compare)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:  # argparse exits 2 on usage errors, 0 on --help
        return e.code if isinstance(e.code, int) else EXIT_VALIDATION
    try:
        return args.handler(args, out=sys.stdout, err=sys.stderr)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except TotalConflictError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_TOTAL_CONFLICT
    except EvidenceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_OTHER
