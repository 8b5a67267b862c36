"""Exact combinatorics for irreducible representations of GL(m|n)."""

from .errors import (
    DomainError,
    FusionTableRequired,
    InconsistencyError,
    SupercupError,
    ValidationError,
)
from .weights import SuperWeight, WeightDiagram, berezinian, trivial

__all__ = [
    "DomainError",
    "FusionTableRequired",
    "InconsistencyError",
    "SupercupError",
    "SuperWeight",
    "ValidationError",
    "WeightDiagram",
    "berezinian",
    "trivial",
]
