"""Exact equivariant algebraic concordance invariants of directed strongly invertible knots."""

from .errors import ComputationError, EquiknotError
from .exact import MatQ, Subspace
from .seifert import (
    EquivariantSeifertForm,
    EquivariantSeifertSystem,
    MetabolizerCandidate,
    complexity_report,
    inverse,
    orthogonal_sum,
    validate,
    verify_metabolizer,
)
from .signatures import genus_bounds, levine_tristram, profile
from .serialize import load_system
from .structures import equivariant_signature, symmetric_structure_of

__version__ = "0.1.0"

__all__ = [
    "ComputationError",
    "EquiknotError",
    "EquivariantSeifertForm",
    "EquivariantSeifertSystem",
    "MatQ",
    "MetabolizerCandidate",
    "Subspace",
    "complexity_report",
    "equivariant_signature",
    "genus_bounds",
    "inverse",
    "levine_tristram",
    "load_system",
    "orthogonal_sum",
    "profile",
    "symmetric_structure_of",
    "validate",
    "verify_metabolizer",
]
