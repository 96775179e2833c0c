"""Exact cohomological rigidity computations for flag supermanifolds."""

from ._flagrig import (
    FlagrigError,
    __version__,
    classify_weight,
    cohomology,
    oracle_cocycle,
    rigidity,
    validate,
)

__all__ = [
    "FlagrigError",
    "__version__",
    "classify_weight",
    "cohomology",
    "oracle_cocycle",
    "rigidity",
    "validate",
]
