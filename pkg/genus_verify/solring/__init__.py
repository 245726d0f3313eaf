"""The soluble construction: G = V x| <a, t>, its group ring and the ideals J_lambda."""

from .chains import (
    HSub,
    NormalN,
    c_vector,
    conjugator,
    gamma_sequence,
    h_contains,
    h_entry_index,
    h_gens,
    nh_contains,
    nh_equal,
    prime,
    translate_sequence,
)
from .checks import (
    conjugator_check,
    conjugator_sweep_check,
    decode_check,
    decode_sweep_check,
    oracle_soundness_check,
    translate_check,
    union_check,
    verify_annihilator_equality,
)
from .group import (
    BasisVec,
    FinVec,
    GElem,
    QElem,
    a_elem,
    e,
    f,
    g_inv,
    g_mul,
    parse_gelem,
    t_elem,
    vec,
)
from .oracle import (
    Membership,
    Witness,
    coset_eq,
    decode_bit,
    decode_prefix,
    eval_u,
    in_I,
    in_J,
    in_V_ideal,
    residual_witness,
)
from .ring import RingElem, format_ring, parse_ring

__all__ = [
    "BasisVec",
    "FinVec",
    "GElem",
    "HSub",
    "Membership",
    "NormalN",
    "QElem",
    "RingElem",
    "Witness",
    "a_elem",
    "c_vector",
    "conjugator",
    "conjugator_check",
    "conjugator_sweep_check",
    "coset_eq",
    "decode_bit",
    "decode_check",
    "decode_prefix",
    "decode_sweep_check",
    "e",
    "eval_u",
    "f",
    "format_ring",
    "g_inv",
    "g_mul",
    "gamma_sequence",
    "h_contains",
    "h_entry_index",
    "h_gens",
    "in_I",
    "in_J",
    "in_V_ideal",
    "nh_contains",
    "nh_equal",
    "oracle_soundness_check",
    "parse_gelem",
    "parse_ring",
    "prime",
    "residual_witness",
    "t_elem",
    "translate_check",
    "translate_sequence",
    "union_check",
    "vec",
    "verify_annihilator_equality",
]
