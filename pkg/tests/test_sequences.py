from __future__ import annotations

import pytest

from genus_verify.sequences import LambdaSeq


def test_bits_are_padded_with_zero() -> None:
    lam = LambdaSeq.branch("101")
    assert [lam[n] for n in range(5)] == [1, 0, 1, 0, 0]
    sol = LambdaSeq.soluble("101")
    assert [sol.bit(n) for n in range(0, 5)] == [0, 1, 0, 1, 0]
    assert sol.last_index == 3
    assert sol.prefix(5) == "10100"


def test_with_bit_extends_the_word() -> None:
    sol = LambdaSeq.soluble("1")
    assert sol.with_bit(4, 1).bits == "1001"
    assert sol.with_bit(1, 0).bits == "0"
    with pytest.raises(ValueError):
        sol.with_bit(0, 1)


def test_first_difference() -> None:
    a, b = LambdaSeq.branch("0010"), LambdaSeq.branch("001")
    assert a.first_difference(b, upto=5) is None
    assert a.first_difference(LambdaSeq.branch("0110"), upto=5) == 1
    assert a.first_difference(LambdaSeq.branch("0011"), upto=2) is None


@pytest.mark.parametrize("bits", ["012", "1 0", "abc"])
def test_rejects_non_binary_words(bits: str) -> None:
    with pytest.raises(ValueError):
        LambdaSeq.branch(bits)


def test_str() -> None:
    assert str(LambdaSeq.soluble("")) == "0"
    assert str(LambdaSeq.branch("0110")) == "0110"
