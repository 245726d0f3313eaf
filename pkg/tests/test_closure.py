"""Normal closures, derived subgroups and transitivity."""

from __future__ import annotations

import random

import pytest

from genus_verify.permkernel import (
    GenSet,
    Perm,
    brute_force_closure,
    bsgs_build,
    bsgs_contains,
    bsgs_order,
    derived_subgroup,
    is_k_transitive,
    is_perfect,
    normal_closure,
    orbit,
    perm_conjugate,
    perm_parse,
)

ALT5 = GenSet.of(perm_parse("(1 2 3)", degree=5), perm_parse("(1 2 3 4 5)"))
SYM4 = GenSet.of(perm_parse("(1 2)", degree=4), perm_parse("(1 2 3 4)"))
SYM5 = GenSet.of(perm_parse("(1 2)", degree=5), perm_parse("(1 2 3 4 5)"))


def test_derived_subgroup_of_sym4_is_alt4() -> None:
    assert bsgs_order(bsgs_build(derived_subgroup(SYM4))) == 12


def test_normal_closure_of_double_transposition_in_sym4() -> None:
    klein = normal_closure(SYM4, [perm_parse("(1 2)(3 4)")])
    assert bsgs_order(bsgs_build(klein)) == 4


def test_perfect() -> None:
    assert is_perfect(ALT5)
    assert not is_perfect(SYM4)


def test_k_transitivity() -> None:
    assert is_k_transitive(ALT5, 1)
    assert is_k_transitive(ALT5, 2)
    assert is_k_transitive(ALT5, 3)
    assert not is_k_transitive(ALT5, 4)
    assert is_k_transitive(SYM4, 4)
    for k in (0, 6):
        with pytest.raises(ValueError):
            is_k_transitive(ALT5, k)


def test_brute_force_closure() -> None:
    elements = brute_force_closure(ALT5)
    assert len(elements) == 60
    assert all(bsgs_order(bsgs_build(GenSet.of(e))) in {1, 2, 3, 5} for e in elements)
    with pytest.raises(ValueError):
        brute_force_closure(ALT5, limit=10)


def test_orbit() -> None:
    g = GenSet.of(perm_parse("(1 2)(4 5)", degree=5))
    assert orbit(g, 3) == frozenset({3})
    assert orbit(g, 4) == frozenset({4, 5})
    assert orbit(ALT5, 1) == frozenset(range(1, 6))


def test_normal_closures_in_alt5() -> None:
    trivial = normal_closure(ALT5, [Perm.identity(5)])
    assert bsgs_order(bsgs_build(trivial)) == 1
    whole = normal_closure(ALT5, [perm_parse("(1 2 3)", degree=5)])
    assert bsgs_order(bsgs_build(whole)) == 60


def test_derived_subgroup_of_sym5_is_alt5() -> None:
    assert bsgs_order(bsgs_build(derived_subgroup(SYM5))) == 60


def _random_genset(rng: random.Random, degree: int, count: int) -> GenSet:
    return GenSet.of(
        *(Perm(tuple(rng.sample(range(degree), degree))) for _ in range(count)),
        degree=degree,
    )


def test_normal_closure_is_normalized_by_the_group() -> None:
    rng = random.Random(5)
    for _ in range(40):
        degree = rng.randint(3, 6)
        g = _random_genset(rng, degree, rng.randint(1, 3))
        seeds = list(_random_genset(rng, degree, 1).gens)
        closure = normal_closure(g, seeds)
        chain = bsgs_build(closure)
        assert all(bsgs_contains(chain, s) for s in seeds)
        for h in closure.gens:
            for x in g.gens:
                assert bsgs_contains(chain, perm_conjugate(h, x))


def test_transitivity_is_inherited_by_smaller_k() -> None:
    rng = random.Random(8)
    for _ in range(60):
        degree = rng.randint(2, 6)
        g = _random_genset(rng, degree, rng.randint(1, 3))
        for k in range(2, degree + 1):
            if is_k_transitive(g, k):
                assert is_k_transitive(g, k - 1)
