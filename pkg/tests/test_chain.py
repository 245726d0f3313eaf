"""Schreier-Sims chains, cross-checked against sympy on small groups."""

from __future__ import annotations

import random

import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from genus_verify.errors import DegreeMismatchError
from genus_verify.permkernel import (
    GenSet,
    Perm,
    brute_force_closure,
    bsgs_build,
    bsgs_contains,
    bsgs_order,
    bsgs_random_element,
    perm_parse,
)

ALT5 = GenSet.of(perm_parse("(1 2 3)", degree=5), perm_parse("(1 2 3 4 5)"))
SYM5 = GenSet.of(perm_parse("(1 2)", degree=5), perm_parse("(1 2 3 4 5)"))


def _sympy_order(g: GenSet) -> int:
    return int(PermutationGroup([Permutation(list(p.arr)) for p in g.gens]).order())


def test_small_group_orders() -> None:
    assert bsgs_order(bsgs_build(ALT5)) == 60
    assert bsgs_order(bsgs_build(SYM5)) == 120


@pytest.mark.parametrize(
    "cycles",
    [
        ["(1 2 3 4 5 6 7 8)", "(1 2)"],
        ["(1 2 3)(4 5 6)", "(1 4)(2 5)", "(7 8 9)"],
        ["(1 2 3 4)(5 6 7 8)", "(1 5)(2 6)(3 7)(4 8)"],
        ["(1 3 5 7)(2 4 6 8)", "(1 2)(3 4)"],
    ],
)
def test_order_matches_sympy(cycles: list[str]) -> None:
    degree = 9
    g = GenSet.of(*(perm_parse(c, degree=degree) for c in cycles))
    assert bsgs_order(bsgs_build(g)) == _sympy_order(g)


def test_membership() -> None:
    chain = bsgs_build(ALT5)
    assert bsgs_contains(chain, perm_parse("(1 2)(3 4)", degree=5))
    assert bsgs_contains(chain, perm_parse("(1 5 3)", degree=5))
    assert not bsgs_contains(chain, perm_parse("(1 2)", degree=5))
    with pytest.raises(DegreeMismatchError):
        bsgs_contains(chain, perm_parse("(1 2 3)"))


def test_seeded_build_agrees_with_deterministic() -> None:
    det = bsgs_build(SYM5)
    for seed in (0, 1, 99):
        rnd = bsgs_build(SYM5, seed=seed)
        assert bsgs_order(rnd) == bsgs_order(det)
        certified = bsgs_build(SYM5, seed=seed, known_order=120)
        assert bsgs_order(certified) == 120


def test_trivial_group() -> None:
    chain = bsgs_build(GenSet.of(Perm.identity(4)))
    assert bsgs_order(chain) == 1
    assert chain.base == ()
    assert bsgs_contains(chain, Perm.identity(4))


def test_random_elements_are_members() -> None:
    chain = bsgs_build(ALT5)
    rng = random.Random(7)
    for _ in range(50):
        assert bsgs_contains(chain, bsgs_random_element(chain, rng))


def test_chain_shape() -> None:
    chain = bsgs_build(SYM5)
    sizes = chain.orbit_sizes
    product = 1
    for s in sizes:
        product *= s
    assert product == 120
    assert len(chain.base) == len(sizes)
    level = chain.levels[0]
    for point in level.transversal:
        assert level.representative(point + 1).image(chain.base[0]) == point + 1


def _random_subgroup(rng: random.Random) -> GenSet:
    degree = rng.randint(2, 6)
    count = rng.randint(1, 3)
    return GenSet.of(
        *(Perm(tuple(rng.sample(range(degree), degree))) for _ in range(count)),
        degree=degree,
    )


def test_order_and_membership_match_closure_on_seeded_subgroups() -> None:
    rng = random.Random(11)
    for _ in range(200):
        g = _random_subgroup(rng)
        elements = brute_force_closure(g)
        chain = bsgs_build(g)
        assert bsgs_order(chain) == len(elements)
        reordered = GenSet.of(*reversed(g.gens), degree=g.degree)
        assert bsgs_order(bsgs_build(reordered)) == len(elements)
        assert all(bsgs_contains(chain, p) for p in g.gens)
        for _ in range(20):
            p = Perm(tuple(rng.sample(range(g.degree), g.degree)))
            assert bsgs_contains(chain, p) == (p in elements)
