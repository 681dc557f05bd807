from __future__ import annotations

import pytest

from pcodes.gf2 import (
    BitMatrix,
    block_parity_check,
    hamming_code,
    hamming_parity_check,
    kernel,
    rank,
    rank_of_words,
    span,
    syndrome,
    verify_tiling,
)
from pcodes.words import BinaryCode, is_perfect, weight

# published kernel bases of full-rank codes (first and last entries)
FULLRANK_KERNEL_BASIS_32 = [
    "111111110000000", "111111001100000", "111100001111000",
    "110000000000100", "000000001111111",
]


def test_rank(hamming15):
    assert rank(hamming15) == 11
    assert rank(BinaryCode(7, [0])) == 0
    assert rank(BinaryCode(3, [0b000, 0b111])) == 1
    # translation convention: rank of a coset equals rank of the subspace
    assert rank(hamming15.translate(5)) == 11


def test_kernel(hamming15, hamming7):
    k15 = kernel(hamming15)
    assert len(k15) == 2048
    assert set(k15.elements.words) == set(hamming15.words)
    assert len(kernel(BinaryCode(7, [0]))) == 1
    k7 = kernel(hamming7)
    assert len(k7) == 16
    # all-one word in the kernel of every perfect code here
    assert (1 << 15) - 1 in k15.elements
    assert 2 ** len(k15.basis) == 2048


def test_published_fullrank_kernel_basis_is_independent():
    rows = [int(r, 2) for r in FULLRANK_KERNEL_BASIS_32]
    assert rank_of_words(rows, 15) == 5
    assert len(set(span(rows))) == 32


def test_hamming_code_parameters():
    assert hamming_code(2) == BinaryCode(3, [0b000, 0b111])
    h3 = hamming_code(3)
    assert len(h3) == 16 and h3.n == 7 and is_perfect(h3)
    h4 = hamming_code(4)
    assert len(h4) == 2048 and h4.n == 15 and is_perfect(h4)
    with pytest.raises(ValueError):
        hamming_code(5)


def test_hamming_syndromes(hamming15):
    h = hamming_parity_check(4)
    assert all(syndrome(h, w) == 0 for w in hamming15.words[:100])
    assert syndrome(h, 1 << 14) == 1  # coordinate 1 has column 1


def test_block_parity_check_small():
    m = block_parity_check(3)
    assert m.n == 7 and len(m.rows) == 3
    code = m.null_space()
    assert len(code) == 16 and is_perfect(code)


def test_block_parity_check_equivalent_to_hamming():
    from pcodes.equivalence import are_equivalent

    for m in (3, 4):
        code = block_parity_check(m).null_space()
        assert is_perfect(code)
        assert are_equivalent(code, hamming_code(m))


def test_block_top_row_annihilates_complement_words():
    m = block_parity_check(4)
    top = m.rows[0]
    half = 7
    for x in range(1 << half):
        word = ((x ^ 0b1111111) << half + 1) | (x << 1) | (weight(x) & 1)
        assert (top & word).bit_count() % 2 == 0


def test_verify_tiling(hamming15):
    ball = BinaryCode(15, [0] + [1 << p for p in range(15)])
    assert verify_tiling(hamming15, ball)
    assert verify_tiling(BinaryCode(2, [0b00, 0b01]), BinaryCode(2, [0b00, 0b10]))
    assert not verify_tiling(BinaryCode(2, [0b00, 0b01]), BinaryCode(2, [0b00, 0b01]))
    with pytest.raises(ValueError):
        verify_tiling(BinaryCode(2, [0]), BinaryCode(3, [0]))


def test_kernel_divides_code_and_is_subspace(hamming7):
    codes = [hamming7, BinaryCode(4, [0b0000, 0b0111, 0b1011, 0b1100])]
    for c in codes:
        k = kernel(c).elements
        assert len(c) % len(k) == 0
        members = set(k.words)
        assert 0 in members
        assert all(a ^ b in members for a in members for b in members)
        if 0 in c:
            assert members <= set(c.words)


def test_bitmatrix_null_space_roundtrip():
    m = BitMatrix(5, [0b11000, 0b00110])
    ns = m.null_space()
    assert len(ns) == 8
    assert all(syndrome(m, w) == 0 for w in ns.words)
