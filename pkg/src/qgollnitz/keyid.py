"""Both sides of the doubly bounded key identity and everything derived
from it: vanishing and boundary cases, the second and fourth order
recurrences in L, the L = M diagonal closed form, the Schur specialization,
and the unbounded limit as a truncated series identity.

Conventions: g(i, j, k, L, M) is the colored-frequency double sum (lhs_g),
p(i, j, k, L, M) is the single s-sum (rhs_p).  Both are total functions on
Z^5; no argument is range-restricted.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .qcore import ONE, ZERO, LaurentPoly, TruncSeries, poly_prod, q_power
from .qcomb import poch_qpow, qbinom, qbinom_is_nonzero, qmultinom, triangular


class Sextuple(NamedTuple):
    """Color frequencies (a, b, c, ab, ac, bc); ab is one variable, not a*b."""
    a: int
    b: int
    c: int
    ab: int
    ac: int
    bc: int

    @property
    def t(self) -> int:
        """Total number of parts."""
        return self.a + self.b + self.c + self.ab + self.ac + self.bc


def enumerate_sextuples(i: int, j: int, k: int) -> list[Sextuple]:
    """All nonnegative (a, b, c, ab, ac, bc) with a+ab+ac = i, b+ab+bc = j,
    c+ac+bc = k, in lexicographic (ab, ac, bc) order.  Empty when any of
    i, j, k is negative."""
    if i < 0 or j < 0 or k < 0:
        return []
    out = []
    for ab in range(min(i, j) + 1):
        for ac in range(min(i - ab, k) + 1):
            for bc in range(min(j - ab, k - ac) + 1):
                out.append(Sextuple(i - ab - ac, j - ab - bc, k - ac - bc,
                                    ab, ac, bc))
    return out


def lhs_g_parts(i: int, j: int, k: int, L: int, M: int) -> tuple[LaurentPoly, LaurentPoly]:
    """The two displayed sums of the identity's left side, separately.

    The first sum carries exponent T(t)+T(ab)+T(ac)+T(bc) and binomial
    factors ending in [M-t; bc]; the second shifts bc down by one and the
    'a' binomial to [L-t+a-1; a-1].  On the diagonal M = L the split
    mirrors the smallest-part dichotomy of the staircase image.
    """
    first = ZERO
    second = ZERO
    for sx in enumerate_sextuples(i, j, k):
        a, b, c, ab, ac, bc = sx
        t = sx.t
        base = triangular(t) + triangular(ab) + triangular(ac)
        common_ok = (qbinom_is_nonzero(L - t + b, b)
                     and qbinom_is_nonzero(M - t + c, c)
                     and qbinom_is_nonzero(L - t, ab)
                     and qbinom_is_nonzero(M - t, ac))
        if not common_ok:
            continue
        common = poly_prod((qbinom(L - t + b, b), qbinom(M - t + c, c),
                            qbinom(L - t, ab), qbinom(M - t, ac)))
        if qbinom_is_nonzero(L - t + a, a) and qbinom_is_nonzero(M - t, bc):
            term = common * qbinom(L - t + a, a) * qbinom(M - t, bc)
            first = first + term.shift(base + triangular(bc))
        if a >= 1 and bc >= 1 and qbinom_is_nonzero(L - t + a - 1, a - 1) \
                and qbinom_is_nonzero(M - t, bc - 1):
            term = common * qbinom(L - t + a - 1, a - 1) * qbinom(M - t, bc - 1)
            second = second + term.shift(base + triangular(bc - 1))
    return first, second


@lru_cache(maxsize=8192)
def lhs_g(i: int, j: int, k: int, L: int, M: int) -> LaurentPoly:
    """Left side of the key identity: the double sum over color frequencies."""
    first, second = lhs_g_parts(i, j, k, L, M)
    return first + second


@lru_cache(maxsize=8192)
def rhs_p(i: int, j: int, k: int, L: int, M: int) -> LaurentPoly:
    """Right side of the key identity: the finite sum over s of
    q^(s(M+2) - T(s) + T(i-s) + T(j-s) + T(k-s)) [L-s; s, i-s, j-s] [M-i-j; k-s].
    """
    if i < 0 or j < 0 or k < 0:
        return ZERO
    total = ZERO
    for s in range(min(i, j, k) + 1):
        mult = qmultinom(L - s, (s, i - s, j - s))
        if not mult:
            continue
        binom = qbinom(M - i - j, k - s)
        if not binom:
            continue
        e = s * (M + 2) - triangular(s) + triangular(i - s) \
            + triangular(j - s) + triangular(k - s)
        total = total + (mult * binom).shift(e)
    return total


def check_key(i: int, j: int, k: int, L: int, M: int) -> bool:
    """Exact equality of the two sides at one integer 5-tuple."""
    return lhs_g(i, j, k, L, M) == rhs_p(i, j, k, L, M)


def boundary_value(i: int, j: int, k: int, M: int) -> LaurentPoly:
    """Collapsed value of either side at L = i+j-1:
    delta(i,0) delta(j,0) q^T(k) [M-i-j; k]."""
    if i != 0 or j != 0:
        return ZERO
    return qbinom(M - i - j, k).shift(triangular(k))


def check_boundary(i: int, j: int, k: int, M: int) -> bool:
    """Does the left side at L = i+j-1 equal the collapsed boundary value?"""
    return lhs_g(i, j, k, i + j - 1, M) == boundary_value(i, j, k, M)


def _recurrence_sides(f, i, j, k, L, M):
    # f(L,M) = f(L-1,M) + q^L f[i-1](L-1,M-1) + q^L f[j-1](L-1,M-1)
    #        + q^L f[i-1,j-1](L-2,M-1) - q^(2L-1) f[i-1,j-1](L-2,M-2)
    rhs = f(i, j, k, L - 1, M) \
        + f(i - 1, j, k, L - 1, M - 1).shift(L) \
        + f(i, j - 1, k, L - 1, M - 1).shift(L) \
        + f(i - 1, j - 1, k, L - 2, M - 1).shift(L) \
        - f(i - 1, j - 1, k, L - 2, M - 2).shift(2 * L - 1)
    return f(i, j, k, L, M), rhs


def recurrence_sides_g(i: int, j: int, k: int, L: int, M: int):
    """g(L, M) against its second order recurrence combination."""
    return _recurrence_sides(lhs_g, i, j, k, L, M)


def recurrence_sides_p(i: int, j: int, k: int, L: int, M: int):
    """p(L, M) against the same recurrence combination."""
    return _recurrence_sides(rhs_p, i, j, k, L, M)


def check_recurrence_g(i: int, j: int, k: int, L: int, M: int) -> bool:
    """Second order recurrence in L for the double-sum side."""
    lhs, rhs = recurrence_sides_g(i, j, k, L, M)
    return lhs == rhs


def check_recurrence_p(i: int, j: int, k: int, L: int, M: int) -> bool:
    """The same recurrence for the s-sum side."""
    lhs, rhs = recurrence_sides_p(i, j, k, L, M)
    return lhs == rhs


def andrews_sides(i: int, j: int, k: int, L: int, M: int):
    """g(L, M) against the twelve-term fourth order recurrence combination
    (the generalized form of Andrews' diagonal recursion)."""
    g = lhs_g
    one_minus = ONE - q_power(L - 1)
    rhs = g(i, j, k, L - 1, M - 1) \
        + g(i - 1, j, k, L - 1, M - 1).shift(L) \
        + g(i, j - 1, k, L - 1, M - 1).shift(L) \
        + g(i, j, k - 1, L - 1, M - 1).shift(M) \
        + one_minus * (g(i - 1, j - 1, k, L - 2, M - 2).shift(L)
                       + g(i - 1, j, k - 1, L - 2, M - 2).shift(M)
                       + g(i, j - 1, k - 1, L - 2, M - 2).shift(M)) \
        + g(i - 1, j - 1, k - 1, L - 3, M - 3).shift(2 * L + M - 3) \
        + g(i - 2, j - 1, k - 1, L - 3, M - 3).shift(L + M - 1) \
        + g(i - 1, j - 2, k - 1, L - 3, M - 3).shift(L + M - 1) \
        + g(i - 1, j - 1, k - 2, L - 3, M - 3).shift(2 * M - 1) \
        + g(i - 2, j - 2, k - 2, L - 4, M - 4).shift(L + 2 * M - 3)
    return g(i, j, k, L, M), rhs


def check_recurrence_andrews(i: int, j: int, k: int, L: int, M: int) -> bool:
    """Does the fourth order recurrence hold exactly for the double sum?"""
    lhs, rhs = andrews_sides(i, j, k, L, M)
    return lhs == rhs


def closed_form_diag(i: int, j: int, k: int, L: int) -> LaurentPoly:
    """Diagonal closed form q^(T(i)+T(j)+T(k)) [L-k; i][L-i; j][L-j; k],
    the value of the s-sum side at M = L."""
    prod = poly_prod((qbinom(L - k, i), qbinom(L - i, j), qbinom(L - j, k)))
    return prod.shift(triangular(i) + triangular(j) + triangular(k))


def schur_sides(j: int, k: int, L: int, M: int):
    """The i = 0 specialization: the single-sum form
    sum_bc q^(T(j+k-bc)+T(bc)) [L-k; j-bc][M-j; k-bc][M-j-k+bc; bc]
    against q^(T(j)+T(k)) [L; j][M-j; k]."""
    left = ZERO
    if j >= 0 and k >= 0:
        for bc in range(min(j, k) + 1):
            term = poly_prod((qbinom(L - k, j - bc), qbinom(M - j, k - bc),
                              qbinom(M - j - k + bc, bc)))
            left = left + term.shift(triangular(j + k - bc) + triangular(bc))
    right = poly_prod((qbinom(L, j), qbinom(M - j, k))) \
        .shift(triangular(j) + triangular(k))
    return left, right


def check_schur_case(j: int, k: int, L: int, M: int) -> bool:
    """Both sides of the i = 0 specialization agree, and both match the
    full two-sided evaluators at i = 0."""
    left, right = schur_sides(j, k, L, M)
    return left == right == lhs_g(0, j, k, L, M) == rhs_p(0, j, k, L, M)


def key_limit_lhs(i: int, j: int, k: int, order: int) -> TruncSeries:
    """Left side of the unbounded limit, modulo q^order:
    sum over frequencies of
    q^(T(t)+T(ab)+T(ac)+T(bc-1)) (1 - q^a + q^(a+bc)) / ((q)_a ... (q)_bc).

    Frequencies whose minimum exponent already reaches the truncation order
    contribute nothing and are skipped.  Negative parameters give the empty
    sum, matching the vanishing of the bounded identity.
    """
    total = TruncSeries(order)
    for sx in enumerate_sextuples(i, j, k):
        e = triangular(sx.t) + triangular(sx.ab) + triangular(sx.ac) \
            + triangular(sx.bc - 1)
        if e >= order:
            continue
        numer = LaurentPoly([(0, 1), (sx.a, -1), (sx.a + sx.bc, 1)]).shift(e)
        denom = poly_prod(poch_qpow(1, n) for n in sx)
        total = total + TruncSeries.from_poly(numer, order) \
            * TruncSeries.from_poly(denom, order).recip()
    return total


def key_limit_rhs(i: int, j: int, k: int, order: int) -> TruncSeries:
    """Right side of the unbounded limit:
    q^(T(i)+T(j)+T(k)) / ((q)_i (q)_j (q)_k) modulo q^order."""
    if i < 0 or j < 0 or k < 0:
        return TruncSeries(order)
    e = triangular(i) + triangular(j) + triangular(k)
    numer = TruncSeries.from_poly(q_power(e), order)
    for n in (i, j, k):
        numer = numer * TruncSeries.from_poly(poch_qpow(1, n), order).recip()
    return numer


def check_key_limit(i: int, j: int, k: int, order: int) -> bool:
    """Do both sides of the unbounded limit agree modulo q^order?"""
    return key_limit_lhs(i, j, k, order) == key_limit_rhs(i, j, k, order)


def check_support(i: int, j: int, k: int, L: int) -> bool:
    """On the diagonal M = L with L >= max(i+j, j+k, k+i): every frequency
    tuple whose summand is nonzero has t <= L.  Nonzero-ness of a summand is
    decided factor by factor through the support predicate (the coefficient
    ring has no zero divisors)."""
    if L < max(i + j, j + k, k + i):
        raise ValueError("support property needs L >= max(i+j, j+k, k+i)")
    M = L
    for sx in enumerate_sextuples(i, j, k):
        a, b, c, ab, ac, bc = sx
        t = sx.t
        common_ok = (qbinom_is_nonzero(L - t + b, b)
                     and qbinom_is_nonzero(M - t + c, c)
                     and qbinom_is_nonzero(L - t, ab)
                     and qbinom_is_nonzero(M - t, ac))
        first_ok = common_ok and qbinom_is_nonzero(L - t + a, a) \
            and qbinom_is_nonzero(M - t, bc)
        second_ok = common_ok and a >= 1 and bc >= 1 \
            and qbinom_is_nonzero(L - t + a - 1, a - 1) \
            and qbinom_is_nonzero(M - t, bc - 1)
        if (first_ok or second_ok) and L - t < 0:
            return False
    return True
