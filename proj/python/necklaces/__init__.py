"""Necklaces, bracelets, Lyndon words and de Bruijn sequences."""

from ._core import (
    DeBruijnSequence,
    ResourceLimitError,
    bracelets,
    canonical,
    count_bracelets,
    count_lyndon,
    count_necklaces,
    counting_vectors,
    de_bruijn,
    fixed_content_bracelets,
    fixed_content_necklaces,
    lyndon_words,
    multi_index_compositions,
    multiset_permutations,
    necklaces,
    oracle_fixed_content,
    orbit,
    periodicity,
    reflect,
    rotate,
    verify_de_bruijn,
)

__all__ = [
    "DeBruijnSequence",
    "ResourceLimitError",
    "bracelets",
    "canonical",
    "count_bracelets",
    "count_lyndon",
    "count_necklaces",
    "counting_vectors",
    "de_bruijn",
    "fixed_content_bracelets",
    "fixed_content_necklaces",
    "lyndon_words",
    "multi_index_compositions",
    "multiset_permutations",
    "necklaces",
    "oracle_fixed_content",
    "orbit",
    "periodicity",
    "reflect",
    "rotate",
    "verify_de_bruijn",
]
