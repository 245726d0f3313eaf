"""Automorphisms of the 5-regular rooted tree and the Alt(5) branch construction."""

from .checks import (
    Alt5Automorphism,
    AutSearchResult,
    alt5_automorphisms,
    alt5_elements,
    alt5_exponent_check,
    aut_alt5_search,
    automorphism_count_check,
    density_check,
    distinguish_pair,
    exponent_check,
    perfect_pair_check,
    phi_surjectivity_check,
    power_closure_check,
    two_transitivity_check,
)
from .portrait import (
    ARITY,
    Portrait,
    level_kernel_contains,
    level_project,
    portrait_compose,
    portrait_from_json,
    portrait_from_perm,
    portrait_inverse,
    portrait_power,
    portrait_to_json,
    random_portrait,
    section,
    to_perm,
)
from .wreath import (
    ALPHA,
    ALT5_SPEC,
    BETA,
    GammaPortraits,
    WreathSpec,
    directed_aut,
    distinguished_vertex,
    gamma_generators,
    gamma_genset,
    gamma_portraits,
    rooted_aut,
    shift,
    wreath_generators,
    wreath_order,
    wreath_portraits,
)

__all__ = [
    "ALPHA",
    "ALT5_SPEC",
    "ARITY",
    "Alt5Automorphism",
    "AutSearchResult",
    "BETA",
    "GammaPortraits",
    "Portrait",
    "WreathSpec",
    "alt5_automorphisms",
    "alt5_elements",
    "alt5_exponent_check",
    "aut_alt5_search",
    "automorphism_count_check",
    "density_check",
    "directed_aut",
    "distinguish_pair",
    "distinguished_vertex",
    "exponent_check",
    "gamma_generators",
    "gamma_genset",
    "gamma_portraits",
    "level_kernel_contains",
    "level_project",
    "perfect_pair_check",
    "phi_surjectivity_check",
    "portrait_compose",
    "portrait_from_json",
    "portrait_from_perm",
    "portrait_inverse",
    "portrait_power",
    "portrait_to_json",
    "power_closure_check",
    "random_portrait",
    "rooted_aut",
    "section",
    "shift",
    "to_perm",
    "two_transitivity_check",
    "wreath_generators",
    "wreath_order",
    "wreath_portraits",
]
