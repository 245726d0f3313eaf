"""Group law of G = V x| <a, t> and its text format."""

from __future__ import annotations

import random

import pytest
from hypothesis import example, given, settings
from hypothesis import strategies as st

from genus_verify.errors import RingParseError
from genus_verify.solring import (
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
from genus_verify.solring.group import G_IDENTITY, format_gelem, g_conj
from genus_verify.solring.sampling import random_gelem, random_q, random_vec

basis = st.builds(BasisVec, st.integers(-4, 4), st.sampled_from("ef"))
vectors = st.lists(basis, max_size=4).map(lambda bs: FinVec.of(*bs))
q_elems = st.builds(QElem.of, st.lists(st.integers(-3, 3), max_size=3), st.integers(-3, 3))
g_elems = st.builds(GElem, vectors, q_elems)


@settings(max_examples=300, deadline=None)
@given(x=g_elems, y=g_elems, z=g_elems)
def test_group_axioms(x: GElem, y: GElem, z: GElem) -> None:
    assert g_mul(g_mul(x, y), z) == g_mul(x, g_mul(y, z))
    assert g_mul(x, G_IDENTITY) == x
    assert g_mul(G_IDENTITY, x) == x
    assert g_mul(x, g_inv(x)).is_identity()
    assert g_mul(g_inv(x), x).is_identity()


def test_group_axioms_on_seeded_triples() -> None:
    rng = random.Random(2000)
    for _ in range(2000):
        x, y, z = random_gelem(rng), random_gelem(rng), random_gelem(rng)
        assert g_mul(g_mul(x, y), z) == g_mul(x, g_mul(y, z))
        assert g_mul(x, g_inv(x)).is_identity()
        assert g_mul(g_inv(x), x).is_identity()
        assert g_mul(x, G_IDENTITY) == x


def test_action_compatibility_on_seeded_samples() -> None:
    rng = random.Random(1000)
    for _ in range(1000):
        v, q1, q2 = random_vec(rng), random_q(rng), random_q(rng)
        assert v.act(q1 * q2) == v.act(q1).act(q2)


@settings(max_examples=300, deadline=None)
@given(v=vectors, q1=q_elems, q2=q_elems)
def test_action_is_compatible_with_products(v: FinVec, q1: QElem, q2: QElem) -> None:
    assert v.act(q1 * q2) == v.act(q1).act(q2)
    assert v.act(q1).act(q1.inverse()) == v


@settings(max_examples=200, deadline=None)
@given(v=vectors, q=q_elems)
def test_conjugation_of_vectors_is_the_linear_action(v: FinVec, q: QElem) -> None:
    conj = g_conj(GElem(v=v), GElem(q=q))
    assert conj.in_v()
    assert conj.v == v * q


def test_t_shifts_indices() -> None:
    assert g_conj(vec(e(0)), t_elem()) == vec(e(1))
    assert g_conj(vec(f(3)), t_elem(-2)) == vec(f(1))


def test_a_is_an_involution_swapping_e0_and_f0() -> None:
    assert (a_elem() * a_elem()).is_identity()
    assert g_conj(vec(e(0)), a_elem()) == vec(f(0))
    assert g_conj(vec(e(1)), a_elem()) == vec(e(1))


@pytest.mark.parametrize("i", range(-10, 11))
def test_a_i_is_conjugate_of_a_by_t_power(i: int) -> None:
    assert g_conj(a_elem(), t_elem(i)) == a_elem(i)
    assert g_conj(vec(e(i)), a_elem(i)) == vec(f(i))


def test_finvec_is_an_f2_space() -> None:
    v = FinVec.of(e(0), f(-2))
    assert not (v + v)
    assert FinVec.of(e(1), e(1)) == FinVec()
    assert str(v) == "f-2+e0"
    assert str(FinVec()) == "0"
    assert [str(b) for b in v] == ["f-2", "e0"]


def test_power() -> None:
    x = GElem(FinVec.of(e(0)), QElem.of([], 1))
    assert x**3 == x * x * x
    assert (x**-2) * (x**2) == G_IDENTITY
    assert (a_elem(2) ** 2).is_identity()


def test_format_gelem() -> None:
    x = GElem(FinVec.of(e(0), f(-2)), QElem.of([1, 3], 2))
    assert format_gelem(x) == "v[f-2+e0].a[1,3].t^2"
    assert format_gelem(G_IDENTITY) == "1"
    assert format_gelem(t_elem()) == "t"
    assert format_gelem(t_elem(-1)) == "t^-1"
    assert format_gelem(a_elem(0)) == "a[0]"


@given(x=g_elems)
@example(x=G_IDENTITY)
def test_parse_gelem_inverts_format(x: GElem) -> None:
    assert parse_gelem(format_gelem(x)) == x


def test_parse_gelem_accepts_any_order_inside_brackets() -> None:
    x = parse_gelem("v[e0+f-2].a[3,1].t^2")
    assert x == GElem(FinVec.of(e(0), f(-2)), QElem.of([1, 3], 2))
    assert parse_gelem("a[1,1]") == G_IDENTITY


@pytest.mark.parametrize("text", ["t.v[e0]", "v[]", "v[g1]", "a[x]", "q", "v[e0].v[e1]", "1.t"])
def test_parse_gelem_rejects(text: str) -> None:
    with pytest.raises(RingParseError):
        parse_gelem(text)
