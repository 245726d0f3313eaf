"""Portraits: automorphisms of the 5-regular rooted tree truncated at depth n.

Vertices are strings over ``"12345"``; the root is ``""``. A portrait assigns a
permutation of {1..5} to each internal vertex (length < depth); unlisted labels
are the identity. The image of a vertex ``x1 x2 ... xk`` is ``y1 y2 ... yk``
with ``y_j = x_j`` moved by the label at ``x1 ... x_{j-1}``.

Leaves are numbered lexicographically: leaf ``x1 ... xn`` is point
``1 + sum((x_j - 1) * 5**(n - j))`` of the permutation returned by ``to_perm``.
"""

from __future__ import annotations

import json
import random
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cache
from itertools import product
from typing import Final

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..errors import DegreeMismatchError, PermParseError, PortraitError
from ..permkernel import Perm, perm_compose, perm_format, perm_inverse, perm_parse

ARITY: Final[int] = 5
DIGITS: Final[str] = "12345"
SPINE_CONVENTION: Final[str] = "spine=1,active=2"
_ID5: Final[Perm] = Perm.identity(ARITY)


@cache
def vertices(depth: int) -> tuple[str, ...]:
    """Internal vertices (length < depth) in lexicographic order within each level."""
    out: list[str] = []
    for k in range(depth):
        out.extend("".join(t) for t in product(DIGITS, repeat=k))
    return tuple(out)


@cache
def leaves(depth: int) -> tuple[str, ...]:
    return tuple("".join(t) for t in product(DIGITS, repeat=depth))


def leaf_index(leaf: str) -> int:
    """1-based point number of a leaf string."""
    idx = 0
    for ch in leaf:
        idx = idx * ARITY + (int(ch) - 1)
    return idx + 1


@dataclass(frozen=True)
class Portrait:
    depth: int
    labels: Mapping[str, Perm] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise PortraitError(f"Negative depth {self.depth}")
        clean: dict[str, Perm] = {}
        for v, lab in self.labels.items():
            if len(v) >= self.depth or any(ch not in DIGITS for ch in v):
                raise PortraitError(f"Vertex {v!r} is not internal at depth {self.depth}")
            if lab.degree != ARITY:
                raise DegreeMismatchError(f"Label at {v!r} has degree {lab.degree}")
            if not lab.is_identity():
                clean[v] = lab
        object.__setattr__(self, "labels", dict(sorted(clean.items())))

    @classmethod
    def identity(cls, depth: int) -> Portrait:
        return cls(depth=depth)

    def label(self, vertex: str) -> Perm:
        return self.labels.get(vertex, _ID5)

    def vertex_image(self, vertex: str) -> str:
        out: list[str] = []
        for k, ch in enumerate(vertex):
            lab = self.labels.get(vertex[:k])
            out.append(str(lab.image(int(ch))) if lab is not None else ch)
        return "".join(out)

    def is_identity(self) -> bool:
        return not self.labels

    def is_rooted(self) -> bool:
        """Only the root label may be nontrivial."""
        return all(v == "" for v in self.labels)

    def __mul__(self, other: Portrait) -> Portrait:
        return portrait_compose(self, other)


def portrait_compose(p: Portrait, q: Portrait) -> Portrait:
    """Apply ``p`` first, then ``q``: label(v) = p.label(v) * q.label(v^p)."""
    if p.depth != q.depth:
        raise DegreeMismatchError(f"Portrait depths differ: {p.depth} vs {q.depth}")
    labels: dict[str, Perm] = {}
    for v in vertices(p.depth):
        a = p.labels.get(v)
        b = q.labels.get(p.vertex_image(v))
        if a is None and b is None:
            continue
        labels[v] = a if b is None else (b if a is None else perm_compose(a, b))
    return Portrait(depth=p.depth, labels=labels)


def portrait_inverse(p: Portrait) -> Portrait:
    return Portrait(
        depth=p.depth,
        labels={p.vertex_image(v): perm_inverse(lab) for v, lab in p.labels.items()},
    )


def portrait_power(p: Portrait, k: int) -> Portrait:
    if k < 0:
        return portrait_power(portrait_inverse(p), -k)
    result = Portrait.identity(p.depth)
    base = p
    while k:
        if k & 1:
            result = portrait_compose(result, base)
        base = portrait_compose(base, base)
        k >>= 1
    return result


def section(p: Portrait, vertex: str) -> Portrait:
    """The automorphism induced on the subtree below ``vertex``."""
    if len(vertex) > p.depth:
        raise PortraitError(f"Vertex {vertex!r} lies below depth {p.depth}")
    k = len(vertex)
    return Portrait(
        depth=p.depth - k,
        labels={v[k:]: lab for v, lab in p.labels.items() if v.startswith(vertex)},
    )


def to_perm(p: Portrait) -> Perm:
    """Action on the 5**depth leaves as a permutation."""
    if p.depth == 0:
        return Perm.identity(1)
    arr = [leaf_index(p.vertex_image(leaf)) - 1 for leaf in leaves(p.depth)]
    return Perm(tuple(arr))


def portrait_from_perm(perm: Perm, depth: int) -> Portrait:
    """Recover the portrait of a leaf permutation that preserves the tree.

    Raises:
        PortraitError: if ``perm`` is not induced by a tree automorphism.
    """
    if perm.degree != ARITY**depth:
        raise DegreeMismatchError(f"Degree {perm.degree} is not 5**{depth}")
    if depth == 0:
        return Portrait.identity(0)
    all_leaves = leaves(depth)
    labels: dict[str, Perm] = {}
    for v in vertices(depth):
        k = len(v)
        images: list[int] = []
        for x in DIGITS:
            leaf = v + x + "1" * (depth - k - 1)
            image_leaf = all_leaves[perm.arr[leaf_index(leaf) - 1]]
            images.append(int(image_leaf[k]))
        try:
            labels[v] = Perm.from_images(images)
        except PermParseError:
            raise PortraitError(f"Permutation does not preserve the tree at {v!r}") from None
    result = Portrait(depth=depth, labels=labels)
    if to_perm(result) != perm:
        raise PortraitError("Permutation does not preserve the tree")
    return result


def level_project(p: Portrait, n: int) -> Portrait:
    """Truncate to the first ``n`` levels (the action on the tree of depth n)."""
    if n > p.depth or n < 0:
        raise PortraitError(f"Cannot project depth {p.depth} portrait to level {n}")
    return Portrait(depth=n, labels={v: lab for v, lab in p.labels.items() if len(v) < n})


def level_kernel_contains(p: Portrait, n: int) -> bool:
    """True iff ``p`` acts trivially on the first ``n`` levels."""
    return level_project(p, n).is_identity()


def random_portrait(depth: int, rng: random.Random, pool: Sequence[Perm]) -> Portrait:
    """Portrait with every label drawn from ``pool``."""
    return Portrait(depth=depth, labels={v: rng.choice(pool) for v in vertices(depth)})


# -- JSON ------------------------------------------------------------------------------


class PortraitNode(BaseModel):
    model_config = ConfigDict(extra="forbid")

    label: str
    children: list[PortraitNode] = Field(default_factory=list)


class PortraitDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    depth: int = Field(ge=0)
    convention: str = SPINE_CONVENTION
    tree: PortraitNode | None = None


PortraitNode.model_rebuild()


def _node(p: Portrait, v: str) -> PortraitNode:
    children = (
        [_node(p, v + x) for x in DIGITS] if len(v) < p.depth - 1 else []
    )
    return PortraitNode(label=perm_format(p.label(v)), children=children)


def portrait_to_json(p: Portrait) -> str:
    doc = PortraitDocument(depth=p.depth, tree=_node(p, "") if p.depth else None)
    return json.dumps(doc.model_dump(mode="json"), sort_keys=True)


def _walk(node: PortraitNode, v: str, depth: int) -> Iterator[tuple[str, Perm]]:
    expected = ARITY if len(v) < depth - 1 else 0
    if len(node.children) != expected:
        raise PortraitError(f"Vertex {v!r} has {len(node.children)} children, expected {expected}")
    try:
        yield v, perm_parse(node.label, ARITY)
    except PermParseError as exc:
        raise PortraitError(f"Bad label at {v!r}: {exc}") from None
    for x, child in zip(DIGITS, node.children, strict=False):
        yield from _walk(child, v + x, depth)


def portrait_from_json(text: str) -> Portrait:
    try:
        doc = PortraitDocument.model_validate_json(text)
    except ValidationError as exc:
        raise PortraitError(f"Invalid portrait document: {exc}") from None
    if doc.convention != SPINE_CONVENTION:
        raise PortraitError(f"Unsupported convention {doc.convention!r}")
    if doc.depth == 0:
        if doc.tree is not None:
            raise PortraitError("Depth 0 portrait must have an empty tree")
        return Portrait.identity(0)
    if doc.tree is None:
        raise PortraitError("Missing tree")
    return Portrait(depth=doc.depth, labels=dict(_walk(doc.tree, "", doc.depth)))
