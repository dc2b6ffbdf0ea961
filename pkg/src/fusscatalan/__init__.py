"""Exact engine for Temperley-Lieb / Fuss-Catalan diagram categories and their
operator realizations on finite-dimensional C*-algebra inclusions."""

from .scalars import Scalar
from .diagrams import FC, TL, Diagram, Signature
from .algebra import Morphism, generators
from .enumeration import dimension, enumerate_diagrams
from .relations import verify_relations
from .trace import gram_matrix, markov_close
from .opmodel import CertifiedModel, canonical_trace, product_inclusion

__all__ = [
    "Scalar", "FC", "TL", "Diagram", "Signature", "Morphism", "generators",
    "dimension", "enumerate_diagrams", "verify_relations", "gram_matrix", "markov_close",
    "CertifiedModel", "canonical_trace", "product_inclusion",
]
