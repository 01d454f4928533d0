import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from perfembed.gf2core import (
    BitWord,
    CoordinateMap,
    LengthMismatch,
    ascending_affine,
    coordinate_map,
    distance,
    hamming_basis,
    is_hamming_member,
    span,
    syndrome,
    unit_word,
    weight,
    word_add,
    zero_extend,
)

from conftest import W, brute_hamming


def test_rendering_roundtrip():
    w = W("1101000")
    assert str(w) == "1101000"
    assert w.length == 7
    assert w[1] == 1 and w[3] == 0 and w[4] == 1
    assert w.support() == [1, 2, 4]
    assert BitWord.from_bits([1, 1, 0]) == W("110")


@pytest.mark.parametrize("bad", ["", "01a", "2"])
def test_from_str_rejects(bad):
    with pytest.raises(ValueError):
        BitWord.from_str(bad)


@pytest.mark.parametrize("a,b,out", [
    ("1110000", "1110000", "0000000"),
    ("1110000", "0000001", "1110001"),
    ("110", "011", "101"),
])
def test_word_add(a, b, out):
    assert word_add(W(a), W(b)) == W(out)
    assert W(a) + W(b) == W(out)


def test_word_add_length_mismatch():
    with pytest.raises(LengthMismatch, match="3 vs 7"):
        word_add(W("110"), W("1100000"))


def test_weight_distance():
    assert weight(W("0000000")) == 0
    assert distance(W("1110000"), W("1110000")) == 0
    assert distance(W("111"), W("000")) == 3
    with pytest.raises(LengthMismatch):
        distance(W("11"), W("111"))


def test_coordinate_map_order(cmap3):
    assert cmap3.n == 7
    assert list(cmap3.pos_to_index[1:]) == [1, 2, 4, 3, 5, 6, 7]
    for pos in range(1, 8):
        assert cmap3.index_to_pos[cmap3.pos_to_index[pos]] == pos


@pytest.mark.parametrize("m", range(2, 9))
def test_coordinate_map_is_bijection(m):
    cm = coordinate_map(m)
    idx = cm.pos_to_index[1:]
    assert sorted(idx) == list(range(1, 1 << m))
    assert list(idx[:m]) == [1 << i for i in range(m)]
    assert all(cm.index_to_pos[cm.pos_to_index[p]] == p for p in range(1, cm.n + 1))


@pytest.mark.parametrize("m", [0, 1, 17])
def test_coordinate_map_range(m):
    with pytest.raises(ValueError):
        CoordinateMap(m)


def test_unit_word(cmap3):
    assert unit_word(W("100"), cmap3) == W("1000000")
    assert unit_word(W("111"), cmap3) == W("0000001")
    assert unit_word(W("110"), cmap3) == W("0001000")
    with pytest.raises(ValueError):
        unit_word(W("000"), cmap3)


def test_zero_extend(cmap3):
    assert zero_extend(W("111"), cmap3) == W("1110000")
    assert zero_extend(W("000"), cmap3) == W("0000000")
    assert zero_extend(W("100"), cmap3) == unit_word(W("100"), cmap3)
    for i in range(3):
        basis = BitWord(3, 1 << i)
        assert zero_extend(basis, cmap3) == unit_word(basis, cmap3)


def test_syndrome(cmap3):
    assert syndrome(W("0000000"), cmap3) == W("000")
    assert syndrome(W("1100000"), cmap3) == W("110")
    assert syndrome(W("0001000"), cmap3) == W("110")
    with pytest.raises(LengthMismatch):
        syndrome(W("110"), cmap3)


def test_hamming_membership(cmap3):
    assert is_hamming_member(W("0000000"), cmap3)
    assert is_hamming_member(W("1101000"), cmap3)
    assert not is_hamming_member(W("1000000"), cmap3)


def test_syndrome_linear_exhaustive_m3(cmap3):
    for x in range(128):
        for y in range(128):
            assert cmap3.syndrome_int(x ^ y) == cmap3.syndrome_int(x) ^ cmap3.syndrome_int(y)


def test_syndrome_linear_sampled_m5(cmap5):
    rng = random.Random(0)
    for _ in range(5000):
        x, y = rng.getrandbits(31), rng.getrandbits(31)
        assert cmap5.syndrome_int(x ^ y) == cmap5.syndrome_int(x) ^ cmap5.syndrome_int(y)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_hamming_size(m):
    cm = coordinate_map(m)
    members = {x for x in range(1 << cm.n) if cm.syndrome_int(x) == 0}
    assert len(members) == 1 << (cm.n - m)
    assert members == brute_hamming(m)
    assert set(span(hamming_basis(cm))) == members


def test_weight3_hamming_words_m3(cmap3):
    triples = {x for x in range(128) if bin(x).count("1") == 3 and cmap3.syndrome_int(x) == 0}
    idx = cmap3.pos_to_index
    expected = {
        (1 << a - 1) | (1 << b - 1) | (1 << c - 1)
        for a in range(1, 8) for b in range(a + 1, 8) for c in range(b + 1, 8)
        if idx[a] ^ idx[b] ^ idx[c] == 0
    }
    assert triples == expected
    assert len(triples) == 7


def test_syndrome_large_m_uses_bit_iteration():
    cm = coordinate_map(9)  # n = 511, above the table limit
    rng = random.Random(1)
    for _ in range(50):
        x = rng.getrandbits(cm.n)
        s = 0
        for pos in range(1, cm.n + 1):
            if x >> (pos - 1) & 1:
                s ^= cm.pos_to_index[pos]
        assert cm.syndrome_int(x) == s


@pytest.mark.parametrize("m", [3, 4])
def test_ascending_affine_matches_sorted_span(m):
    cm = coordinate_map(m)
    basis = hamming_basis(cm)
    off = 0b101
    got = list(ascending_affine(basis, off, cm.n))
    want = sorted(set(span(basis, off)), key=lambda x: str(BitWord(cm.n, x)))
    assert got == want


words7 = st.integers(0, 127).map(lambda v: BitWord(7, v))


@given(words7, words7, words7)
def test_distance_triangle(a, b, c):
    assert distance(a, c) <= distance(a, b) + distance(b, c)


@given(words7, words7)
def test_add_self_inverse_and_distance(a, b):
    assert a + a == BitWord.zero(7)
    assert distance(a, b) == weight(a + b)
