"""Exact permutation-group engine."""

from .chain import (
    ChainLevel,
    StabilizerChain,
    bsgs_build,
    bsgs_contains,
    bsgs_order,
    bsgs_random_element,
)
from .closure import (
    brute_force_closure,
    derived_subgroup,
    is_k_transitive,
    is_perfect,
    normal_closure,
    orbit,
)
from .perm import (
    GenSet,
    Perm,
    is_even,
    perm_commutator,
    perm_compose,
    perm_conjugate,
    perm_format,
    perm_inverse,
    perm_order,
    perm_parse,
    perm_power,
)

__all__ = [
    "ChainLevel",
    "GenSet",
    "Perm",
    "StabilizerChain",
    "brute_force_closure",
    "bsgs_build",
    "bsgs_contains",
    "bsgs_order",
    "bsgs_random_element",
    "derived_subgroup",
    "is_even",
    "is_k_transitive",
    "is_perfect",
    "normal_closure",
    "orbit",
    "perm_commutator",
    "perm_compose",
    "perm_conjugate",
    "perm_format",
    "perm_inverse",
    "perm_order",
    "perm_parse",
    "perm_power",
]
