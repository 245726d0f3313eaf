"""Rooted and directed automorphisms, the gamma generators and |W_n|."""

from __future__ import annotations

import random

import pytest

from genus_verify.permkernel import perm_order, perm_parse
from genus_verify.sequences import LambdaSeq
from genus_verify.treewreath import (
    ALPHA,
    BETA,
    alt5_elements,
    directed_aut,
    distinguished_vertex,
    gamma_generators,
    gamma_portraits,
    level_kernel_contains,
    level_project,
    rooted_aut,
    section,
    shift,
    to_perm,
    wreath_generators,
    wreath_order,
)


def test_wreath_orders() -> None:
    assert wreath_order(0) == 1
    assert wreath_order(1) == 60
    assert wreath_order(2) == 46_656_000_000
    assert wreath_order(3) == 60**31
    with pytest.raises(ValueError):
        wreath_order(-1)


def test_distinguished_vertices() -> None:
    assert distinguished_vertex(0) == ""
    assert distinguished_vertex(1) == "2"
    assert distinguished_vertex(3) == "112"


def test_directed_aut_fixes_level_one() -> None:
    assert to_perm(directed_aut(lambda k: ALPHA, 1)).is_identity()
    d = directed_aut(lambda k: ALPHA, 3)
    assert level_kernel_contains(d, 1)
    assert d.labels == {"2": ALPHA, "12": ALPHA}


def test_directed_aut_depth_two() -> None:
    leaf = to_perm(directed_aut(lambda k: ALPHA, 2))
    assert leaf == perm_parse("(6 7 8)", degree=25)
    assert perm_order(leaf) == 3


def test_rooted_and_directed_need_depth() -> None:
    with pytest.raises(ValueError):
        rooted_aut(ALPHA, 0)
    with pytest.raises(ValueError):
        directed_aut(lambda k: ALPHA, 0)


def test_gamma_generators_depth_one() -> None:
    xi, eta, a, b = gamma_generators(LambdaSeq.branch("0"), 1)
    assert (xi, eta) == (ALPHA, BETA)
    assert a.is_identity() and b.is_identity()
    xi, eta, _, _ = gamma_generators(LambdaSeq.branch("1"), 1)
    assert (xi, eta) == (BETA, ALPHA)


def test_gamma_labels_follow_lambda() -> None:
    g = gamma_portraits(LambdaSeq.branch("0110"), 4)
    assert g.a.labels == {"2": BETA, "12": BETA, "112": ALPHA}
    assert g.b.labels == {"2": ALPHA, "12": ALPHA, "112": BETA}


@pytest.mark.parametrize("bits", ["0", "1", "0110", "1011"])
def test_truncations_are_compatible(bits: str) -> None:
    lam = LambdaSeq.branch(bits)
    deep, shallow = gamma_portraits(lam, 3), gamma_portraits(lam, 2)
    for name in ("xi", "eta", "a", "b"):
        assert level_project(getattr(deep, name), 2) == getattr(shallow, name)


def test_wreath_generators_shape() -> None:
    gens = wreath_generators(2)
    assert gens.degree == 25
    assert len(gens) == 4


def test_directed_aut_is_self_similar() -> None:
    rng = random.Random(31)
    pool = alt5_elements()
    for _ in range(100):
        seq = tuple(rng.choice(pool) for _ in range(5)).__getitem__
        for n in range(2, 5):
            assert section(directed_aut(seq, n), "1") == directed_aut(shift(seq), n - 1)
