"""Colored partition tests: Type-1 rules, staircase bijection, double
counting, Gollnitz counts, and the residue transform."""

import pytest

from qgollnitz.qcore import LaurentPoly
from qgollnitz import keyid
from qgollnitz.partcomb import (Color, ColoredPartition, InvalidImage,
                                NotType1, PreconditionViolated,
                                StaircaseImage, check_remark3,
                                check_theorem1, count_G, count_P, gollnitz_B,
                                gollnitz_C, is_c_partition, is_type1,
                                iter_type1, iter_type1_all,
                                iter_type1_transformed, remark3_transform,
                                staircase_forward, staircase_inverse,
                                transformed_weight)

A, B, C, AB, AC, BC = Color.A, Color.B, Color.C, Color.AB, Color.AC, Color.BC


def CP(parts):
    return ColoredPartition(parts)


# -- colors ------------------------------------------------------------------

def test_color_order_and_primaries():
    assert [c.name for c in sorted(Color, key=lambda c: c.rank)] == \
        ["AB", "AC", "A", "BC", "B", "C"]
    assert {c for c in Color if c.is_primary} == {A, B, C}


# -- Type-1 test -------------------------------------------------------------

def test_type1_examples():
    assert is_type1(CP([]))
    assert is_type1(CP([(2, BC), (1, A)]))
    assert not is_type1(CP([(2, AB), (1, C)]))


def test_type1_part_one_must_be_primary():
    assert is_type1(CP([(1, B)]))
    assert not is_type1(CP([(1, BC)]))
    assert not is_type1(CP([(1, AB)]))


def test_type1_no_repeated_values():
    assert not is_type1(CP([(3, A), (3, B)]))
    assert not is_type1(CP([(2, C), (2, C)]))


def test_type1_gap_one_rules():
    assert is_type1(CP([(3, A), (2, A)]))       # same primary color
    assert not is_type1(CP([(3, AB), (2, AB)]))  # same secondary color
    assert is_type1(CP([(3, C), (2, B)]))        # higher rank above
    assert not is_type1(CP([(3, B), (2, C)]))    # lower rank above
    assert is_type1(CP([(4, B), (2, C)]))        # gap 2: no constraint


# -- staircase ---------------------------------------------------------------

def test_staircase_empty():
    img = staircase_forward(CP([]))
    assert img.t == 0 and img.weight == 0
    assert staircase_inverse(img) == CP([])


def test_staircase_single_part():
    img = staircase_forward(CP([(2, A)]))
    assert img.parts_a == (1,) and img.t == 1


def test_staircase_two_parts():
    img = staircase_forward(CP([(3, B), (1, A)]))
    assert img.parts_a == (0,)
    assert img.parts_b == (1,)
    assert img.t == 2


def test_staircase_weight_relation():
    p = CP([(5, BC), (3, AB), (1, A)])
    assert is_type1(p)
    img = staircase_forward(p)
    assert p.weight == img.weight + img.t * (img.t + 1) // 2


def test_staircase_rejects_non_type1():
    with pytest.raises(NotType1):
        staircase_forward(CP([(2, AB), (1, C)]))


def test_staircase_inverse_examples():
    assert staircase_inverse(staircase_forward(CP([(2, A)]))) == CP([(2, A)])
    img = StaircaseImage(parts_a=(0,), parts_b=(1,))
    assert staircase_inverse(img) == CP([(3, B), (1, A)])


def test_staircase_inverse_zero_tie_order():
    # A and BC images both holding 0 rebuild as 1_A, 2_BC
    img = StaircaseImage(parts_a=(0,), parts_bc=(0,))
    assert staircase_inverse(img) == CP([(2, BC), (1, A)])


def test_invalid_images_rejected():
    with pytest.raises(InvalidImage):
        staircase_inverse(StaircaseImage(parts_ab=(0,)))  # AB part below 1
    with pytest.raises(InvalidImage):
        staircase_inverse(StaircaseImage(parts_bc=(0,)))  # BC zero without A zero
    with pytest.raises(InvalidImage):
        staircase_inverse(StaircaseImage(parts_ac=(2, 2)))  # repeated secondary
    with pytest.raises(InvalidImage):
        staircase_inverse(StaircaseImage(parts_a=(-1,)))


def test_staircase_round_trip_small():
    seen = 0
    for p in iter_type1_all(6):
        img = staircase_forward(p)
        assert staircase_inverse(img) == p
        seen += 1
    assert seen > 1000


def test_image_bound_matches_partition_bound():
    L = 6
    for p in iter_type1_all(L):
        assert staircase_forward(p).fits_bound(L)


# -- counting ----------------------------------------------------------------

def test_count_G_examples():
    assert count_G(1, 1, (1, 0, 0, 0, 0, 0)) == 1
    assert count_G(9, 0, (0, 0, 0, 0, 0, 0)) == 1
    assert count_G(3, 3, (0, 0, 0, 0, 0, 1)) == 1


def test_count_P_examples():
    assert count_P(3, 3, 1, 1, 1) == 1
    assert count_P(5, 0, 0, 0, 0) == 1
    assert count_P(4, 6, 2, 0, 0) == 1


def test_theorem1_examples():
    assert check_theorem1(3, 1, 1, 1)
    assert check_theorem1(0, 0, 0, 0)
    assert check_theorem1(5, 2, 1, 1)


def test_theorem1_precondition():
    with pytest.raises(PreconditionViolated):
        check_theorem1(2, 2, 1, 0)


def test_generating_function_bridge_small():
    # sum over weights and frequencies of Type-1 counts = g(L, L)
    for i in range(3):
        for j in range(3):
            for k in range(3):
                L = max(i + j, j + k, k + i) + 1
                hist = {}
                for sx in keyid.enumerate_sextuples(i, j, k):
                    freq = (sx.a, sx.b, sx.c, sx.ab, sx.ac, sx.bc)
                    for p in iter_type1(L, freq):
                        hist[p.weight] = hist.get(p.weight, 0) + 1
                assert LaurentPoly(hist) == keyid.lhs_g(i, j, k, L, L)


def test_split_sums_match_smallest_part_classes():
    # first displayed sum <-> BC image avoiding 0, second <-> BC image holding 0
    for (i, j, k, L) in [(1, 1, 1, 3), (2, 1, 1, 4), (1, 2, 2, 5)]:
        hist1, hist2 = {}, {}
        for sx in keyid.enumerate_sextuples(i, j, k):
            freq = (sx.a, sx.b, sx.c, sx.ab, sx.ac, sx.bc)
            for p in iter_type1(L, freq):
                img = staircase_forward(p)
                target = hist2 if 0 in img.parts_bc else hist1
                target[p.weight] = target.get(p.weight, 0) + 1
        first, second = keyid.lhs_g_parts(i, j, k, L, L)
        assert LaurentPoly(hist1) == first
        assert LaurentPoly(hist2) == second


def test_part_count_never_exceeds_bound():
    # combinatorial face of the support property: parts have distinct values
    for p in iter_type1_all(5):
        assert p.num_parts <= 5


# -- Gollnitz ----------------------------------------------------------------

def test_gollnitz_B_examples():
    assert gollnitz_B(0) == 1
    assert gollnitz_B(6) == 1
    assert gollnitz_B(11) == 2  # {11} and {2, 4, 5}


def test_gollnitz_C_examples():
    assert gollnitz_C(0) == 1
    assert gollnitz_C(6) == 1
    assert gollnitz_C(1) == 0 and gollnitz_C(3) == 0


def test_gollnitz_equal_to_30():
    for n in range(31):
        assert gollnitz_B(n) == gollnitz_C(n), n


def test_is_c_partition():
    assert is_c_partition([])
    assert is_c_partition([6])
    assert is_c_partition([11, 5])
    assert not is_c_partition([3])
    assert not is_c_partition([10, 5])      # gap 5 < 6
    assert not is_c_partition([12, 6])      # 12 = 0 mod 6 needs gap 7
    assert is_c_partition([13, 6])


# -- residue transform -------------------------------------------------------

def test_remark3_examples():
    assert remark3_transform(CP([(1, A)])) == [2]
    assert remark3_transform(CP([])) == []
    with pytest.raises(NotType1):
        remark3_transform(CP([(2, AB), (1, B)]))


def test_remark3_offsets():
    p = CP([(6, C), (5, B), (4, BC), (3, A), (2, AC)])
    assert is_type1(p)
    assert remark3_transform(p) == [35, 28, 21, 14, 7]
    assert transformed_weight(p) == 105


def test_remark3_images_are_c_partitions():
    for p in iter_type1_transformed(40):
        assert is_c_partition(remark3_transform(p))


def test_remark3_bijection_to_30():
    for n in range(31):
        assert check_remark3(n), n
