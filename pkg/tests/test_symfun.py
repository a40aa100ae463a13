from fractions import Fraction
from itertools import combinations, product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torbord.symfun import (
    chern_numbers_projective,
    conjugate,
    gale_ryser_feasible,
    is_involution,
    matrix_A,
    matrix_B,
    matrix_f_to_alpha,
    matmul,
    parse_partition,
    partition,
    partitions,
    stirling2,
    todd_coefficients,
    todd_series,
    transition_M,
    transpose,
)


def brute_M(lam, mu):
    """Count 0-1 matrices with row sums lam and column sums mu: every choice of
    lam[r] columns per row, then a column-sum check."""
    cols = len(mu)
    choices = [list(combinations(range(cols), r)) for r in lam]
    count = 0
    for pick in product(*choices):
        sums = [0] * cols
        for row in pick:
            for c in row:
                sums[c] += 1
        count += sums == list(mu)
    return count


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1 :]


def test_partitions():
    assert partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions(0) == [()]
    assert len(partitions(5)) == 7
    assert [len(partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partition_parsing():
    assert parse_partition("1,1,2") == (2, 1, 1)
    assert parse_partition("") == ()
    assert partition([0, 3, 0, 1]) == (3, 1)
    with pytest.raises(ValueError):
        parse_partition("1,x")


def test_transition_examples():
    assert transition_M((1, 1), (2,)) == 1
    assert transition_M((2,), (1, 1)) == 1
    assert transition_M((1,), (2,)) == 0
    assert transition_M((2,), (2,)) == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_transition_matches_brute_force(n):
    for lam in partitions(n):
        for mu in partitions(n):
            assert transition_M(lam, mu) == brute_M(lam, mu)
            assert transition_M(lam, mu) == transition_M(mu, lam)
            assert (transition_M(lam, mu) > 0) == gale_ryser_feasible(lam, mu)


def test_transition_dominance():
    # M is nonzero exactly when mu is dominated by the conjugate of lam
    for lam in partitions(6):
        assert transition_M(lam, conjugate(lam)) == 1


def test_matrix_A_m4():
    assert transpose(matrix_A(4)) == [[-1, 4, -6, 4], [0, 1, -3, 3], [0, 0, -1, 2], [0, 0, 0, 1]]
    assert matrix_A(2) == [[-1, 0], [2, 1]]


@pytest.mark.parametrize("m", range(2, 13))
def test_involutions(m):
    assert is_involution(matrix_A(m))
    assert is_involution(matrix_B(m))


def test_f_to_alpha_e1():
    M = matrix_f_to_alpha(4)
    assert tuple(sum(a * b for a, b in zip(row, (1, 4, 3, 1))) for row in M) == (-1, 1, 0, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_stirling_by_set_partitions(n):
    counts = [0] * (n + 1)
    for p in set_partitions(list(range(n))):
        counts[len(p)] += 1
    assert [stirling2(n, k) for k in range(n + 1)] == counts


def test_stirling_edges():
    assert stirling2(4, 2) == 7
    assert stirling2(0, 0) == 1
    assert all(stirling2(n, 0) == 0 for n in range(1, 8))
    assert all(stirling2(n, n) == 1 for n in range(8))


@given(st.integers(0, 6), st.integers(0, 8))
def test_stirling_falling_factorial(n, x):
    # x^n = sum_k S(n, k) x(x-1)...(x-k+1)
    def falling(x, k):
        out = 1
        for i in range(k):
            out *= x - i
        return out

    assert sum(stirling2(n, k) * falling(x, k) for k in range(n + 1)) == x**n


def test_todd_series():
    assert todd_series(4) == [1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720)]


def test_todd_tables():
    assert todd_coefficients(1) == {(1,): Fraction(1, 2)}
    assert todd_coefficients(2) == {(2,): Fraction(1, 12), (1, 1): Fraction(1, 12)}
    assert todd_coefficients(3) == {(3,): 0, (2, 1): Fraction(1, 24), (1, 1, 1): 0}


@pytest.mark.parametrize("n", range(1, 7))
def test_todd_of_projective_space(n):
    tau = todd_coefficients(n)
    assert sum(t * chern_numbers_projective(n, I) for I, t in tau.items()) == 1


def test_projective_chern():
    assert chern_numbers_projective(2, (1, 1)) == 9
    assert chern_numbers_projective(3, (1, 1, 1)) == 64
    assert chern_numbers_projective(3, (3,)) == comb(4, 3)


def test_matmul_identity():
    assert matmul(matrix_A(3), matrix_A(3)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
