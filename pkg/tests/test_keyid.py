"""Key identity tests: both sides, boundary, recurrences, specializations."""

import pytest

from qgollnitz.qcore import LaurentPoly, TruncSeries
from qgollnitz.qcomb import qbinom
from qgollnitz.keyid import (Sextuple, boundary_value, check_boundary,
                             check_key, check_key_limit,
                             check_recurrence_andrews, check_recurrence_g,
                             check_recurrence_p, check_schur_case,
                             check_support, closed_form_diag,
                             enumerate_sextuples, key_limit_lhs,
                             key_limit_rhs, lhs_g, lhs_g_parts, rhs_p,
                             schur_sides)


def P(terms):
    return LaurentPoly(terms)


# -- sextuple enumeration ----------------------------------------------------

def test_sextuples_zero():
    assert enumerate_sextuples(0, 0, 0) == [Sextuple(0, 0, 0, 0, 0, 0)]


def test_sextuples_111():
    got = enumerate_sextuples(1, 1, 1)
    assert set(got) == {Sextuple(1, 1, 1, 0, 0, 0), Sextuple(0, 0, 1, 1, 0, 0),
                        Sextuple(0, 1, 0, 0, 1, 0), Sextuple(1, 0, 0, 0, 0, 1)}
    # deterministic order: lexicographic in (ab, ac, bc)
    assert [(s.ab, s.ac, s.bc) for s in got] == sorted((s.ab, s.ac, s.bc) for s in got)


def test_sextuples_negative_parameter():
    assert enumerate_sextuples(-1, 0, 0) == []


def test_sextuple_constraints_hold():
    for s in enumerate_sextuples(3, 2, 4):
        assert s.a + s.ab + s.ac == 3
        assert s.b + s.ab + s.bc == 2
        assert s.c + s.ac + s.bc == 4
        assert s.t == sum(s)


# -- the two sides -----------------------------------------------------------

def test_lhs_g_trivial_cases():
    for L, M in [(0, 0), (3, 5), (7, 2)]:
        assert lhs_g(0, 0, 0, L, M) == P({0: 1})


@pytest.mark.parametrize("L,M", [(1, 1), (4, 4), (5, 2), (2, 9)])
def test_lhs_g_single_part(L, M):
    assert lhs_g(1, 0, 0, L, M) == qbinom(L, 1).shift(1)
    assert rhs_p(1, 0, 0, L, M) == qbinom(L, 1).shift(1)


def test_lhs_g_negative_parameter_vanishes():
    assert lhs_g(-1, 2, 0, 5, 5) == P({})
    assert rhs_p(-1, 2, 0, 5, 5) == P({})


def test_rhs_p_diagonal_frozen():
    assert rhs_p(1, 1, 1, 3, 3) == P({3: 1, 4: 3, 5: 3, 6: 1})


def test_lhs_g_parts_sum_to_whole():
    for args in [(2, 1, 1, 4, 5), (1, 1, 1, 3, 3), (2, 2, 2, 6, 6)]:
        first, second = lhs_g_parts(*args)
        assert first + second == lhs_g(*args)


def test_lhs_g_second_sum_needs_a_and_bc():
    # with i = 0 every solution has a = 0, so the second sum is empty
    _, second = lhs_g_parts(0, 2, 2, 5, 5)
    assert second == P({})


def test_check_key_spot_values():
    assert check_key(2, 1, 1, 4, 5)
    assert check_key(0, 0, 0, 0, 0)
    assert check_key(1, 1, 0, -2, 3)


def test_check_key_small_grid_with_negatives():
    for i in range(-1, 3):
        for j in range(-1, 3):
            for k in range(-1, 3):
                for L in range(-2, 5):
                    for M in range(-2, 5):
                        assert check_key(i, j, k, L, M), (i, j, k, L, M)


def test_key_sides_are_laurent_for_negative_bounds():
    val = lhs_g(1, 1, 0, -2, 3)
    assert val and val.valuation < 0


# -- boundary ----------------------------------------------------------------

def test_boundary_value_examples():
    assert boundary_value(0, 0, 2, 5) == qbinom(5, 2).shift(3)
    assert boundary_value(1, 0, 0, 4) == P({})
    assert boundary_value(0, 0, 0, 9) == P({0: 1})


def test_boundary_cross_check():
    # delta case: lhs at L = i+j-1 = 0 gives q [0; 1] = 0
    assert lhs_g(1, 0, 0, 0, 4) == P({})
    assert check_boundary(1, 0, 0, 4)


def test_boundary_small_grid():
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for M in range(6):
                    assert check_boundary(i, j, k, M)


# -- recurrences -------------------------------------------------------------

def test_recurrence_examples():
    assert check_recurrence_g(2, 2, 1, 5, 5)
    assert check_recurrence_g(0, 0, 0, 1, 1)
    assert check_recurrence_g(1, 2, 2, 4, 6)
    assert check_recurrence_p(2, 2, 1, 5, 5)
    assert check_recurrence_p(0, 0, 0, 1, 1)
    assert check_recurrence_p(1, 2, 2, 4, 6)


def test_andrews_recurrence_examples():
    assert check_recurrence_andrews(2, 2, 2, 6, 6)
    assert check_recurrence_andrews(0, 0, 0, 2, 2)
    assert check_recurrence_andrews(3, 2, 2, 7, 8)


def test_recurrences_small_grid():
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for L in range(5):
                    for M in range(5):
                        assert check_recurrence_g(i, j, k, L, M)
                        assert check_recurrence_p(i, j, k, L, M)
                        assert check_recurrence_andrews(i, j, k, L, M)


# -- diagonal closed form ----------------------------------------------------

def test_closed_form_diag_examples():
    assert closed_form_diag(1, 1, 1, 3) == P({3: 1, 4: 3, 5: 3, 6: 1})
    assert closed_form_diag(0, 0, 0, 7) == P({0: 1})
    expected = (qbinom(4, 2) * qbinom(2, 1) * qbinom(3, 0)).shift(4)
    assert closed_form_diag(2, 1, 0, 4) == expected
    assert closed_form_diag(2, 1, 0, 4) == rhs_p(2, 1, 0, 4, 4)


def test_closed_form_diag_matches_rhs_grid():
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for L in range(7):
                    assert rhs_p(i, j, k, L, L) == closed_form_diag(i, j, k, L)


def test_closed_form_diag_cyclic_symmetry():
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for L in range(8):
                    v = closed_form_diag(i, j, k, L)
                    assert v == closed_form_diag(j, k, i, L)
                    assert v == closed_form_diag(k, i, j, L)


# -- Schur specialization ----------------------------------------------------

def test_schur_examples():
    for L, M in [(2, 2), (5, 6), (3, 7)]:
        assert check_schur_case(1, 0, L, M)
        left, right = schur_sides(1, 0, L, M)
        assert left == right == qbinom(L, 1).shift(1)
        assert check_schur_case(0, 0, L, M)
    assert check_schur_case(2, 2, 5, 6)


def test_schur_small_grid():
    for j in range(4):
        for k in range(4):
            for L in range(6):
                for M in range(6):
                    assert check_schur_case(j, k, L, M)


# -- unbounded limit ---------------------------------------------------------

def test_key_limit_trivial():
    for order in (1, 5, 12):
        assert key_limit_lhs(0, 0, 0, order) == TruncSeries.one(order)
        assert key_limit_rhs(0, 0, 0, order) == TruncSeries.one(order)


def test_key_limit_single_part():
    want = TruncSeries(6, (0, 1, 1, 1, 1, 1))  # q/(1-q) mod q^6
    assert key_limit_lhs(1, 0, 0, 6) == want
    assert key_limit_rhs(1, 0, 0, 6) == want


def test_key_limit_111():
    assert check_key_limit(1, 1, 1, 20)


def test_key_limit_small_grid():
    for i in range(3):
        for j in range(3):
            for k in range(3):
                assert check_key_limit(i, j, k, 15)


def test_key_limit_negative_parameters_vanish():
    assert not key_limit_lhs(-1, 0, 0, 8)
    assert not key_limit_rhs(-1, 0, 0, 8)


def test_key_limit_matches_bounded_truncation():
    # large L, M: the bounded sides converge to the limit below the order
    order = 12
    for i, j, k in [(1, 0, 0), (1, 1, 1), (2, 1, 0)]:
        bounded = TruncSeries.from_poly(lhs_g(i, j, k, 30, 30), order)
        assert bounded == key_limit_lhs(i, j, k, order)


# -- support property --------------------------------------------------------

def test_support_property_grid():
    for i in range(4):
        for j in range(4):
            for k in range(4):
                for L in range(max(i + j, j + k, k + i), 9):
                    assert check_support(i, j, k, L)


def test_support_requires_bound():
    with pytest.raises(ValueError):
        check_support(2, 2, 0, 3)
