"""Binary linear algebra kernels against brute-force oracles."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import polycodes as pc

from helpers import (
    all_codewords,
    bitvector_pairs,
    bitvectors,
    brute_min_distance,
    brute_weight_counts,
    linear_codes,
    random_self_dual_code,
)

EXT_HAMMING_ROWS = ["11111111", "00001111", "00110011", "01010101"]


def ext_hamming() -> pc.LinearCode:
    return pc.reduce([pc.BitVector.from01(r) for r in EXT_HAMMING_ROWS])


def test_bitvector_construction_and_accessors():
    v = pc.BitVector.from01("10110")
    assert len(v) == 5
    assert v.to01() == "10110"
    assert v.weight == 3
    assert v.support == (0, 2, 3)
    assert list(v) == [1, 0, 1, 1, 0]
    assert v[0] == 1 and v[1] == 0
    assert str(v) == "10110"


def test_bitvector_rejects_bad_shapes():
    with pytest.raises(pc.InvalidInput):
        pc.BitVector(0, 0)
    with pytest.raises(pc.InvalidInput):
        pc.BitVector(3, -1)
    with pytest.raises(pc.InvalidInput):
        pc.BitVector.from01("10a")
    with pytest.raises(pc.InvalidInput):
        pc.BitVector.from01("101") + pc.BitVector.from01("1011")


def test_bitvector_tail_is_masked():
    assert pc.BitVector(3, 0b11111).bits == 0b111


def test_xor_and_componentwise_product():
    u = pc.BitVector.from01("1100")
    v = pc.BitVector.from01("1010")
    assert (u + v).to01() == "0110"
    assert (u & v).to01() == "1000"
    ones = pc.BitVector.ones(4)
    assert (u & ones) == u
    assert (u & u) == u


def test_inner_product_values():
    assert pc.inner(pc.BitVector.from01("1100"), pc.BitVector.from01("1010")) == 1
    assert pc.inner(pc.BitVector.from01("1111"), pc.BitVector.from01("0110")) == 0


@given(bitvectors())
def test_inner_with_self_is_weight_parity(v):
    assert pc.inner(v, v) == v.weight % 2


@given(bitvector_pairs())
def test_inner_weight_identity_mod_4(pair):
    u, v = pair
    assert 2 * pc.inner(u, v) % 4 == (u.weight + v.weight - (u + v).weight) % 4


def test_reduce_zero_space():
    assert pc.reduce([pc.BitVector.from01("0000")]).dim == 0


def test_reduce_dependent_generators():
    code = pc.reduce([pc.BitVector.from01(r) for r in ("1100", "0110", "1010")])
    assert code.dim == 2


def test_reduce_all_weight_four_words_of_ext_hamming():
    words = [
        pc.BitVector(8, w) for w in all_codewords(ext_hamming()) if bin(w).count("1") == 4
    ]
    assert len(words) == 14
    assert pc.reduce(words).dim == 4


def test_reduce_rejects_mixed_lengths():
    with pytest.raises(pc.InvalidInput):
        pc.reduce([pc.BitVector.from01("101"), pc.BitVector.from01("1011")])


@given(linear_codes())
def test_reduce_basis_is_reduced_echelon(code):
    for i, row in enumerate(code.basis):
        pivot = row.support[0]
        for j, other in enumerate(code.basis):
            if i != j:
                assert other[pivot] == 0
    pivots = [row.support[0] for row in code.basis]
    assert pivots == sorted(pivots)


@given(linear_codes())
def test_membership_matches_span_enumeration(code):
    words = all_codewords(code)
    assert all(code.contains(pc.BitVector(code.length, w)) for w in words)
    outside = next(
        (w for w in range(2**code.length) if w not in words), None
    ) if code.length <= 12 else None
    if outside is not None:
        assert not code.contains(pc.BitVector(code.length, outside))


def test_dual_of_zero_space_is_full_space():
    zero = pc.reduce([pc.BitVector.from01("0000")])
    assert pc.dual_code(zero).dim == 4


def test_dual_of_all_ones_is_even_weight_space():
    for length in (2, 4, 6, 8):
        dual = pc.dual_code(pc.reduce([pc.BitVector.ones(length)]))
        assert dual.dim == length - 1
        assert all(bin(w).count("1") % 2 == 0 for w in all_codewords(dual))


@given(linear_codes())
def test_dual_is_dimension_complementary_involution(code):
    dual = pc.dual_code(code)
    assert code.dim + dual.dim == code.length
    assert pc.dual_code(dual) == code


def test_is_self_dual_examples():
    assert pc.is_self_dual(pc.reduce([pc.BitVector.from01("11")])).self_dual
    assert pc.is_self_dual(
        pc.reduce([pc.BitVector.from01("1100"), pc.BitVector.from01("0011")])
    ).self_dual
    bad = pc.reduce([pc.BitVector.from01("1000"), pc.BitVector.from01("0100")])
    trace = pc.is_self_dual(bad)
    assert not trace.self_dual
    assert not trace.basis_orthogonal


def test_self_duality_trace_on_ext_hamming():
    trace = pc.is_self_dual(ext_hamming())
    assert trace.self_dual
    assert trace.half_dimension
    assert trace.basis_orthogonal
    assert trace.products_even_weight


def test_min_distance_examples():
    assert pc.min_distance(pc.reduce([pc.BitVector.ones(6)])) == 6
    assert pc.min_distance(ext_hamming()) == 4
    assert pc.min_distance(pc.reed_muller(2, 5)) == 8


def test_min_distance_error_paths():
    zero = pc.reduce([pc.BitVector.from01("000")])
    with pytest.raises(pc.Undefined):
        pc.min_distance(zero)
    big = pc.reduce(
        [pc.BitVector.from_support(40, (i,)) for i in range(pc.ENUMERATION_CAP + 1)]
    )
    with pytest.raises(pc.BudgetExceeded):
        pc.min_distance(big)


@settings(deadline=None)
@given(linear_codes(max_length=12))
def test_min_distance_matches_brute_force(code):
    if code.dim == 0:
        return
    assert pc.min_distance(code) == brute_min_distance(code)


def test_weight_enumerator_examples():
    we = pc.weight_enumerator(pc.reduce([pc.BitVector.ones(8)]))
    assert we.counts == {0: 1, 8: 1}
    assert we.doubly_even
    he = pc.weight_enumerator(ext_hamming())
    assert he.counts == {0: 1, 4: 14, 8: 1}
    assert he.doubly_even


@settings(deadline=None)
@given(linear_codes(max_length=12))
def test_weight_enumerator_matches_brute_force(code):
    we = pc.weight_enumerator(code)
    assert we.counts == brute_weight_counts(code)
    assert we.doubly_even == all(w % 4 == 0 for w in we.counts)


def test_self_dual_codes_have_even_weights_and_even_min_distance():
    rng = random.Random(20260816)
    for _ in range(50):
        code = random_self_dual_code(rng, rng.choice((2, 4, 6, 8, 10, 12)))
        trace = pc.is_self_dual(code)
        assert trace.self_dual
        assert all(w % 2 == 0 for w in pc.weight_enumerator(code).counts)
        assert pc.min_distance(code) % 2 == 0
        for x in code.basis:
            for y in code.basis:
                assert (x & y).weight % 2 == 0


def test_reed_muller_shapes_and_values():
    rm03 = pc.reed_muller(0, 3)
    assert rm03.dim == 1 and rm03.contains(pc.BitVector.ones(8))
    rm13 = pc.reed_muller(1, 3)
    assert rm13.dim == 4
    assert pc.min_distance(rm13) == 4
    assert rm13 == ext_hamming()
    rm25 = pc.reed_muller(2, 5)
    assert rm25.dim == 16 and rm25.length == 32


def test_reed_muller_rejects_bad_order():
    with pytest.raises(pc.InvalidInput):
        pc.reed_muller(3, 2)
    with pytest.raises(pc.InvalidInput):
        pc.reed_muller(-1, 2)


def test_matrix_format_roundtrip():
    rows = [pc.BitVector.from01("101"), pc.BitVector.from01("010")]
    text = pc.format_matrix(rows)
    assert text == "101\n010\n"
    assert pc.parse_matrix(text) == rows
    with pytest.raises(pc.InvalidInput):
        pc.parse_matrix("10\n1\n")
    with pytest.raises(pc.InvalidInput):
        pc.parse_matrix("")


@given(st.integers(1, 20), st.data())
def test_format_parse_roundtrip_random(length, data):
    rows = [
        pc.BitVector(length, data.draw(st.integers(0, 2**length - 1)))
        for _ in range(data.draw(st.integers(1, 5)))
    ]
    assert pc.parse_matrix(pc.format_matrix(rows)) == rows
