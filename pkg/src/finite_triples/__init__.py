"""Finite real spectral triples: Dirac operators, induced differential forms,
intersection forms and group-algebra symmetries."""

from .algebra import AlgebraElement, AlgebraSpec, make_algebra
from .catalog import fixture
from .dirac import allowed_blocks, assemble, random_dirac, validate_dirac
from .hilbert import TripleSpace, build_space, validate_axioms

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AlgebraSpec",
    "TripleSpace",
    "allowed_blocks",
    "assemble",
    "build_space",
    "fixture",
    "make_algebra",
    "random_dirac",
    "validate_axioms",
    "validate_dirac",
]
