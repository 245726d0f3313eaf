"""Portrait arithmetic, the leaf embedding and JSON documents."""

from __future__ import annotations

import json
import random

import pytest

from genus_verify.errors import DegreeMismatchError, PortraitError
from genus_verify.permkernel import Perm, perm_compose, perm_inverse, perm_order, perm_parse
from genus_verify.treewreath import (
    Portrait,
    alt5_elements,
    level_kernel_contains,
    level_project,
    portrait_compose,
    portrait_from_json,
    portrait_from_perm,
    portrait_inverse,
    portrait_power,
    portrait_to_json,
    random_portrait,
    rooted_aut,
    section,
    to_perm,
)

A = perm_parse("(1 2 3)", degree=5)
B = perm_parse("(1 2 3 4 5)")


def _random_pair(depth: int, seed: int) -> tuple[Portrait, Portrait]:
    rng = random.Random(seed)
    pool = alt5_elements()
    return random_portrait(depth, rng, pool), random_portrait(depth, rng, pool)


def test_identity_portrait_is_identity_on_leaves() -> None:
    assert to_perm(Portrait.identity(2)).is_identity()
    assert to_perm(Portrait.identity(2)).degree == 25


@pytest.mark.parametrize("depth", [1, 2, 3])
def test_to_perm_is_a_homomorphism(depth: int) -> None:
    rng = random.Random(depth)
    pool = alt5_elements()
    for _ in range(500):
        p, q = random_portrait(depth, rng, pool), random_portrait(depth, rng, pool)
        assert to_perm(portrait_compose(p, q)) == perm_compose(to_perm(p), to_perm(q))
        assert to_perm(portrait_inverse(p)) == perm_inverse(to_perm(p))
        assert portrait_compose(p, portrait_inverse(p)).is_identity()


def test_power_matches_leaf_power() -> None:
    p, _ = _random_pair(2, 3)
    leaf = to_perm(p)
    assert to_perm(portrait_power(p, perm_order(leaf))).is_identity()
    assert portrait_power(p, -1) == portrait_inverse(p)


def test_compose_depth_mismatch() -> None:
    with pytest.raises(DegreeMismatchError):
        portrait_compose(Portrait.identity(1), Portrait.identity(2))


def test_labels_must_be_internal() -> None:
    with pytest.raises(PortraitError):
        Portrait(depth=1, labels={"1": A})
    with pytest.raises(PortraitError):
        Portrait(depth=2, labels={"7": A})


def test_rooted_portrait_on_leaves() -> None:
    assert to_perm(rooted_aut(A, 1)) == A
    leaf = to_perm(rooted_aut(B, 2))
    assert leaf.image(1) == 6
    assert leaf.image(10) == 15
    assert perm_order(leaf) == 5


def test_section_and_vertex_image() -> None:
    p = Portrait(depth=3, labels={"": B, "2": A, "21": B})
    assert p.vertex_image("21") == "32"
    sub = section(p, "2")
    assert sub.depth == 2
    assert sub.labels == {"": A, "1": B}
    assert section(p, "21").is_rooted()
    with pytest.raises(PortraitError):
        section(p, "1111")


@pytest.mark.parametrize("seed", range(5))
def test_portrait_from_perm_recovers_labels(seed: int) -> None:
    p, _ = _random_pair(2, seed)
    assert portrait_from_perm(to_perm(p), 2) == p


def test_portrait_from_perm_rejects_non_tree_permutation() -> None:
    with pytest.raises(PortraitError):
        portrait_from_perm(perm_parse("(1 6)", degree=25), 2)
    with pytest.raises(DegreeMismatchError):
        portrait_from_perm(Perm.identity(24), 2)


def test_level_projection() -> None:
    p = Portrait(depth=3, labels={"": A, "1": B, "11": A})
    assert level_project(p, 1) == rooted_aut(A, 1)
    assert level_project(Portrait.identity(3), 2).is_identity()
    assert not level_kernel_contains(p, 1)
    assert level_kernel_contains(Portrait(depth=3, labels={"2": A}), 1)
    with pytest.raises(PortraitError):
        level_project(p, 4)


def test_json_document_round_trip() -> None:
    p, _ = _random_pair(2, 11)
    text = portrait_to_json(p)
    doc = json.loads(text)
    assert doc["depth"] == 2
    assert doc["convention"] == "spine=1,active=2"
    assert len(doc["tree"]["children"]) == 5
    assert portrait_from_json(text) == p
    assert portrait_from_json(portrait_to_json(Portrait.identity(0))) == Portrait.identity(0)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        json.dumps({"depth": 1, "convention": "other", "tree": {"label": "()"}}),
        json.dumps({"depth": 1, "tree": {"label": "(1 9)"}}),
        json.dumps({"depth": 2, "tree": {"label": "()", "children": []}}),
        json.dumps({"depth": 1}),
        json.dumps({"depth": 0, "tree": {"label": "()"}}),
    ],
)
def test_json_document_rejects(text: str) -> None:
    with pytest.raises(PortraitError):
        portrait_from_json(text)


def test_level_projection_is_a_homomorphism() -> None:
    rng = random.Random(17)
    pool = alt5_elements()
    for _ in range(100):
        p, q = random_portrait(3, rng, pool), random_portrait(3, rng, pool)
        for n in range(4):
            assert level_project(portrait_compose(p, q), n) == portrait_compose(
                level_project(p, n), level_project(q, n)
            )
            assert level_project(portrait_inverse(p), n) == portrait_inverse(level_project(p, n))


def test_level_projections_compose() -> None:
    rng = random.Random(23)
    pool = alt5_elements()
    for _ in range(50):
        p = random_portrait(3, rng, pool)
        assert level_project(p, 3) == p
        for m in range(4):
            for n in range(m + 1):
                assert level_project(level_project(p, m), n) == level_project(p, n)
