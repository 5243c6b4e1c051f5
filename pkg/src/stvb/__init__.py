"""Singular twisted virtual braid monoids and their kernels.

Relation lists for the braid monoid, its group completion and the kernel
submonoids, Schreier rewriting into kernel generators, the group algebra
representation with symbolic parameters, and bounded congruence checks.
"""
from .congruence import BACKEND, bfs_equal, invariant_vector, random_word
from .groupalgebra import (
    AlgebraElement,
    PolyABC,
    RepSpec,
    make_canonical_rep,
    make_flat_rep,
    make_rep,
    phi_eval,
)
from .permutations import PermHom, Permutation, compose, eval_hom, invert
from .presentations import Family, Presentation, Relation, build_presentation
from .schreier import build_transversal, conjugate_subgenerator, rewrite_f
from .words import Alphabet, Kind, Letter, Word, expand_subgenerator, expand_word, parse_word

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AlgebraElement",
    "Alphabet",
    "Family",
    "Kind",
    "Letter",
    "PermHom",
    "Permutation",
    "PolyABC",
    "Presentation",
    "Relation",
    "RepSpec",
    "Word",
    "bfs_equal",
    "build_presentation",
    "build_transversal",
    "compose",
    "conjugate_subgenerator",
    "eval_hom",
    "expand_subgenerator",
    "expand_word",
    "invariant_vector",
    "invert",
    "make_canonical_rep",
    "make_flat_rep",
    "make_rep",
    "parse_word",
    "phi_eval",
    "random_word",
    "rewrite_f",
]
