"""q-combinatorial primitives: triangular numbers, q-Pochhammer products,
q-binomial and q-multinomial coefficients for arbitrary integer arguments,
and the recurrence/support facts they satisfy.

Gaussian binomials with top >= bottom >= 0 are built by the q-Pascal
recurrence (division free, exact); a negative top is reduced to the
nonnegative case by the closed identity

    [-alpha; k] = (-1)^k [k+alpha-1; k] q^(-alpha*k - T(k-1)),

which is where negative q-exponents enter the engine.

Everything here behaves as a pure function.  The memo tables behind qbinom
and qmultinom hold immutable values and are safe for concurrent readers.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Sequence

from .qcore import ONE, ZERO, LaurentPoly, q_power


class NegativeLength(ValueError):
    """q-Pochhammer products are only defined here for length n >= 0."""


def triangular(n: int) -> int:
    """n-th triangular number n(n+1)/2, valid for every integer n.

    In particular triangular(-1) == 0 and triangular(-2) == 1, which the
    boundary cases of the identity checkers rely on.
    """
    return n * (n + 1) // 2


def poch_qpow(k: int, n: int) -> LaurentPoly:
    """The finite product (q^k; q)_n = prod_{j=0..n-1} (1 - q^(k+j)).

    Empty product for n == 0.  k may be negative (the result is then a
    Laurent polynomial); the factor with exponent 0 collapses everything
    to zero.  Raises NegativeLength for n < 0.
    """
    if n < 0:
        raise NegativeLength(f"Pochhammer length must be >= 0, got {n}")
    result = ONE
    for j in range(n):
        if k + j == 0:
            return ZERO
        result = result * LaurentPoly({0: 1, k + j: -1})
    return result


@lru_cache(maxsize=None)
def _qbinom_nonneg(top: int, bottom: int) -> LaurentPoly:
    # q-Pascal: [top; bottom] = [top-1; bottom] + q^(top-bottom) [top-1; bottom-1]
    if bottom == 0 or bottom == top:
        return ONE
    if bottom > top - bottom:
        return _qbinom_nonneg(top, top - bottom)
    return _qbinom_nonneg(top - 1, bottom) + \
        _qbinom_nonneg(top - 1, bottom - 1).shift(top - bottom)


def qbinom(top: int, bottom: int) -> LaurentPoly:
    """Gaussian binomial coefficient [top; bottom] for any integer pair.

    Zero when bottom < 0 or 0 <= top < bottom.  For top < 0 the value is a
    genuine Laurent polynomial with sign (-1)^bottom.
    """
    if bottom < 0:
        return ZERO
    if top < 0:
        alpha = -top
        base = _qbinom_nonneg(bottom + alpha - 1, bottom)
        shifted = base.shift(-alpha * bottom - triangular(bottom - 1))
        return shifted if bottom % 2 == 0 else -shifted
    if top < bottom:
        return ZERO
    return _qbinom_nonneg(top, bottom)


def qbinom_base(top: int, bottom: int, base_power: int) -> LaurentPoly:
    """qbinom with q replaced by q^base_power (base_power >= 1)."""
    if base_power < 1:
        raise ValueError(f"base power must be >= 1, got {base_power}")
    return qbinom(top, bottom).stretch(base_power)


def qbinom_q1(top: int, bottom: int) -> int:
    """The q = 1 binomial: C(top, bottom) with the same support rules."""
    if bottom < 0:
        return 0
    if top < 0:
        sign = 1 if bottom % 2 == 0 else -1
        return sign * comb(bottom - top - 1, bottom)
    return comb(top, bottom)


def qbinom_is_nonzero(top: int, bottom: int) -> bool:
    """Support predicate: [top; bottom] != 0 iff bottom >= 0 and
    (top < 0 or top >= bottom)."""
    return bottom >= 0 and (top < 0 or top >= bottom)


def qmultinom(total: int, parts: Sequence[int]) -> LaurentPoly:
    """q-multinomial [total; p1, p2, ...] as a product of successive
    q-binomials [total; p1][total-p1; p2]...

    Any negative part makes a zero factor, so the whole product vanishes;
    negative totals follow the Laurent branch of qbinom.
    """
    return _qmultinom(total, tuple(parts))


@lru_cache(maxsize=65536)
def _qmultinom(total: int, parts: tuple[int, ...]) -> LaurentPoly:
    result = ONE
    rem = total
    for p in parts:
        factor = qbinom(rem, p)
        if not factor:
            return ZERO
        result = result * factor
        rem -= p
    return result


def qpascal_sides(top: int, bottom: int) -> tuple[LaurentPoly, LaurentPoly]:
    """[top; bottom] against [top-1; bottom] + q^(top-bottom) [top-1; bottom-1]."""
    lhs = qbinom(top, bottom)
    rhs = qbinom(top - 1, bottom) + qbinom(top - 1, bottom - 1).shift(top - bottom)
    return lhs, rhs


def check_qpascal(top: int, bottom: int) -> bool:
    """Does the q-Pascal recurrence hold exactly at this pair?
    (It should, for all integers.)"""
    lhs, rhs = qpascal_sides(top, bottom)
    return lhs == rhs


def _multinom_three_sides(L, s, i, j):
    # [L; s,i,j] = [L-1; s,i,j] + q^(L-i)[L-1; s,i-1,j] + q^(L-j)[L-1; s,i,j-1]
    #            + q^(L-s-i-j)[L-1; s-1,i,j] + q^(L-i-j)(1-q^(L-1))[L-2; s,i-1,j-1]
    lhs = qmultinom(L, (s, i, j))
    rhs = qmultinom(L - 1, (s, i, j)) \
        + qmultinom(L - 1, (s, i - 1, j)).shift(L - i) \
        + qmultinom(L - 1, (s, i, j - 1)).shift(L - j) \
        + qmultinom(L - 1, (s - 1, i, j)).shift(L - s - i - j) \
        + (ONE - q_power(L - 1)) * qmultinom(L - 2, (s, i - 1, j - 1)).shift(L - i - j)
    return lhs, rhs


def _multinom_shifted_sides(L, s, i, j):
    # Same recurrence after L -> L-s, i -> i-s, j -> j-s, regrouping the last
    # two terms as (q^(L+s-i-j) - q^(2L-1-i-j)) [L-2-s; s,i-1-s,j-1-s].
    lhs = qmultinom(L - s, (s, i - s, j - s))
    tail = (q_power(L + s - i - j) - q_power(2 * L - 1 - i - j)) \
        * qmultinom(L - 2 - s, (s, i - 1 - s, j - 1 - s))
    rhs = qmultinom(L - 1 - s, (s, i - s, j - s)) \
        + qmultinom(L - 1 - s, (s, i - 1 - s, j - s)).shift(L - i) \
        + qmultinom(L - 1 - s, (s, i - s, j - 1 - s)).shift(L - j) \
        + qmultinom(L - 1 - s, (s - 1, i - s, j - s)).shift(L - i - j) \
        + tail
    return lhs, rhs


def _multinom_symmetric_sides(L, i, j):
    # [L; i,j] = [L-1; i,j] + q^(L-i)[L-1; i-1,j] + q^(L-j)[L-1; i,j-1]
    #          + q^(L-i-j)(1-q^(L-1))[L-2; i-1,j-1]
    lhs = qmultinom(L, (i, j))
    rhs = qmultinom(L - 1, (i, j)) \
        + qmultinom(L - 1, (i - 1, j)).shift(L - i) \
        + qmultinom(L - 1, (i, j - 1)).shift(L - j) \
        + (ONE - q_power(L - 1)) * qmultinom(L - 2, (i - 1, j - 1)).shift(L - i - j)
    return lhs, rhs


def multinom_recurrence_relations(L: int, s: int, i: int, j: int):
    """The three multinomial recurrences evaluated at one tuple, as
    (label, lhs, rhs) triples: the four-part form at (L, s, i, j), its
    shifted variant, and the two-part symmetric form at (L, i, j)."""
    return (("four-part",) + _multinom_three_sides(L, s, i, j),
            ("shifted",) + _multinom_shifted_sides(L, s, i, j),
            ("symmetric",) + _multinom_symmetric_sides(L, i, j))


def check_multinom_recurrence(L: int, s: int, i: int, j: int) -> bool:
    """Do all three multinomial recurrences hold exactly at this tuple?"""
    return all(lhs == rhs for _, lhs, rhs in
               multinom_recurrence_relations(L, s, i, j))
