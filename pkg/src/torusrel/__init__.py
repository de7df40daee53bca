"""Exact computation with Dehn-twist factorizations on holed tori.

The package verifies, rewrites and invariant-checks factorizations of the
boundary multi-twist of a k-holed torus (1 <= k <= 9) as products of
right-handed Dehn twists, working throughout with exact free-group and
integer arithmetic.
"""

from .freegroup import (
    Word,
    CertifiedAut,
    MarkedClass,
    reduce,
    multiply,
    conjugate_word,
    apply,
    compose,
    compose_marked,
    inverse_marked,
    identity_word,
    identity_aut,
    identity_marked,
)

__all__ = [
    "Word",
    "CertifiedAut",
    "MarkedClass",
    "reduce",
    "multiply",
    "conjugate_word",
    "apply",
    "compose",
    "compose_marked",
    "inverse_marked",
    "identity_word",
    "identity_aut",
    "identity_marked",
]
