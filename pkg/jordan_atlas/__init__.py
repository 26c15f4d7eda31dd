"""Exact construction and classification of canonical simple subalgebras of
the special Jordan algebras FullPlus(n), SymmetricH(n) and SymplecticH(n)."""
from .catalog import build, canonicalize, catalog_form, validate_spec
from .invariants import are_conjugate, count_classes_formula, enumerate_classes, invariant_vector
from .jordan import Subalgebra, detect_type, jordan_product
from .models import Ambient, CanonicalSpec, Embedding, Family, TypeLabel

__version__ = "0.1.0"

__all__ = [
    "Ambient", "CanonicalSpec", "Embedding", "Family", "Subalgebra", "TypeLabel",
    "are_conjugate", "build", "canonicalize", "catalog_form", "count_classes_formula",
    "detect_type", "enumerate_classes", "invariant_vector", "jordan_product", "validate_spec",
]
