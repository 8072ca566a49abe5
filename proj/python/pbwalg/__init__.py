"""Exact normal forms in universal enveloping algebras.

Thin python surface over the C++ core: algebras presented by structure
constants, symmetrization, regular and ordered (PBW) normal forms, and the
brute-force independence oracle.
"""

from ._core import (
    Algebra,
    DomainError,
    ParseError,
    Poly,
    ResourceError,
    SemanticError,
    parse,
    symmetrize,
)

__all__ = [
    "Algebra",
    "DomainError",
    "ParseError",
    "Poly",
    "ResourceError",
    "SemanticError",
    "parse",
    "symmetrize",
]
