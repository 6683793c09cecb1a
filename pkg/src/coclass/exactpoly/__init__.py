"""Exact rational polynomial arithmetic: discriminants, resultants,
factorization over Q, certified numeric roots, and extension-field tests."""

from .extension import (
    compositum_factors,
    extension_automorphisms,
    fields_isomorphic,
    has_root_in_extension,
    roots_in_extension,
    roots_in_extension_count,
    trager_norm,
)
from .factor import factor_rationals, factor_squarefree, is_irreducible, squarefree_decomposition
from .poly import (
    BigRational,
    ExactPolyError,
    RationalPoly,
    discriminant,
    gcd,
    is_squarefree,
    resultant,
)
from .roots import ComplexBall, PrecisionExceeded, numeric_roots, real_roots

__all__ = [
    "BigRational", "ComplexBall", "ExactPolyError", "PrecisionExceeded",
    "RationalPoly", "compositum_factors", "discriminant", "factor_rationals",
    "extension_automorphisms",
    "factor_squarefree", "fields_isomorphic", "gcd", "has_root_in_extension",
    "is_irreducible", "is_squarefree", "numeric_roots", "real_roots",
    "resultant", "roots_in_extension", "roots_in_extension_count",
    "squarefree_decomposition",
    "trager_norm",
]
