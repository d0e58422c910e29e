"""Hypervolume-based performance assessment for bi-objective optimizers."""

from ._core import (
    Archive,
    DomainError,
    ParseError,
    UsageError,
    VersionError,
    bootstrap_refsets,
    ecdf,
    evaluate_problem,
    postprocess,
    precision_grid,
    recalc,
    run,
)

__all__ = [
    "Archive",
    "DomainError",
    "ParseError",
    "UsageError",
    "VersionError",
    "bootstrap_refsets",
    "ecdf",
    "evaluate_problem",
    "postprocess",
    "precision_grid",
    "recalc",
    "run",
]
