"""Partitions, the elementary-to-monomial transition matrix, the involutions
A and B, Stirling numbers and the Todd polynomial in Chern classes.

Partitions are plain tuples of positive ints in weakly decreasing order.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence


def partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a partition: drop zero parts, sort descending."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def parse_partition(text: str) -> tuple[int, ...]:
    """CLI syntax ``"1,1,2"``; order is normalized."""
    text = text.strip()
    if not text:
        return ()
    return partition(int(t) for t in text.split(","))


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(map(str, lam))


def partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n in reverse-lexicographic order: (n), (n-1, 1), ..., (1^n)."""
    if n < 0:
        return []

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return list(gen(n, n))


def multiplicities(lam: Sequence[int]) -> dict[int, int]:
    return dict(Counter(lam))


def multinomial(n: int, ks: Iterable[int]) -> int:
    ks = list(ks)
    if sum(ks) != n or any(k < 0 for k in ks):
        return 0
    out = factorial(n)
    for k in ks:
        out //= factorial(k)
    return out


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(max(lam)))


def gale_ryser_feasible(rows: Sequence[int], cols: Sequence[int]) -> bool:
    """A 0-1 matrix with these row and column sums exists (zeros allowed)."""
    rows = [r for r in rows if r]
    cols = sorted((c for c in cols if c), reverse=True)
    if sum(rows) != sum(cols):
        return False
    if cols and cols[0] > len(rows):
        return False
    # cols must be dominated by the conjugate of rows
    conj = conjugate(sorted(rows, reverse=True))
    a = b = 0
    for k in range(len(cols)):
        a += cols[k]
        b += conj[k] if k < len(conj) else 0
        if a > b:
            return False
    return True


@lru_cache(maxsize=None)
def _count(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    # rows: remaining row sums, sorted descending; cols: remaining column sums
    if not cols:
        return 1 if not any(rows) else 0
    if not gale_ryser_feasible(rows, cols):
        return 0
    c, rest = cols[0], cols[1:]
    groups = sorted(Counter(r for r in rows if r).items(), reverse=True)
    zeros = sum(1 for r in rows if r == 0)
    total = 0

    def choose(idx, need, ways, new_rows):
        nonlocal total
        if idx == len(groups):
            if need == 0:
                nxt = tuple(sorted(new_rows + [0] * zeros, reverse=True))
                total += ways * _count(nxt, rest)
            return
        val, mult = groups[idx]
        for take in range(min(mult, need) + 1):
            choose(
                idx + 1,
                need - take,
                ways * comb(mult, take),
                new_rows + [val - 1] * take + [val] * (mult - take),
            )

    choose(0, c, 1, [])
    return total


def transition_M(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of 0-1 matrices with row sums lam and column sums mu.

    This is the coefficient of m_mu in e_lam.
    """
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        return 0
    return _count(lam, mu)


# -- involutions -------------------------------------------------------------


def matrix_A(m: int) -> list[list[int]]:
    """Lower triangular a_{k,j} = (-1)^(m-k-1) C(m-j, k-j); sends alpha to mu."""
    return [
        [(-1) ** (m - k - 1) * comb(m - j, k - j) if j <= k else 0 for j in range(m)]
        for k in range(m)
    ]


def matrix_B(m: int) -> list[list[int]]:
    """Involution b_{k,j} = (-1)^j C(j, k) between f and the sign-twisted alpha.

    (B f)_k = (-1)^k alpha_k.  The untwisted map f -> alpha is
    :func:`matrix_f_to_alpha`, which is not an involution.
    """
    return [[(-1) ** j * comb(j, k) for j in range(m)] for k in range(m)]


def sign_diagonal(m: int) -> list[list[int]]:
    return [[(-1) ** k if j == k else 0 for j in range(m)] for k in range(m)]


def matrix_f_to_alpha(m: int) -> list[list[int]]:
    """alpha = D B f with D = diag((-1)^k)."""
    return matmul(sign_diagonal(m), matrix_B(m))


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(X, Y):
    Yt = transpose(Y)
    return [[sum(a * b for a, b in zip(row, col)) for col in Yt] for row in X]


def apply(M, v) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def identity(m: int) -> list[list[int]]:
    return [[int(i == j) for j in range(m)] for i in range(m)]


def is_involution(M) -> bool:
    return matmul(M, M) == identity(len(M))


# -- Stirling numbers ------------------------------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


# -- Todd polynomial ----------------------------------------------------------


def todd_series(n: int) -> list[Fraction]:
    """Coefficients b_0..b_n of x / (1 - e^{-x})."""
    # invert (1 - e^{-x}) / x = sum (-1)^k x^k / (k+1)!
    d = [Fraction((-1) ** k, factorial(k + 1)) for k in range(n + 1)]
    b = [Fraction(0)] * (n + 1)
    b[0] = 1 / d[0]
    for k in range(1, n + 1):
        b[k] = -sum(d[i] * b[k - i] for i in range(1, k + 1)) / d[0]
    return b


def _solve(M: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(M)
    a = [list(row) + [r] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] / a[i][i] for i in range(n)]


@lru_cache(maxsize=None)
def _todd(n: int) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    b = todd_series(n)
    parts = partitions(n)
    # degree-n part of prod_i f(x_i) is sum_mu (prod b_{mu_i}) m_mu
    target = []
    for mu in parts:
        t = Fraction(1)
        for p in mu:
            t *= b[p]
        target.append(t)
    # sum_lam tau_lam e_lam = sum_mu (sum_lam tau_lam M_{lam,mu}) m_mu
    system = [[Fraction(transition_M(lam, mu)) for lam in parts] for mu in parts]
    tau = _solve(system, target)
    return tuple(zip(parts, tau))


def todd_coefficients(n: int) -> dict[tuple[int, ...], Fraction]:
    """tau_I with Td_n = sum_{I |- n} tau_I c_I, exact rationals."""
    return dict(_todd(n))


def chern_numbers_projective(n: int, I: Sequence[int]) -> int:
    """c_I[CP^n] = prod_t C(n+1, i_t)."""
    out = 1
    for i in I:
        out *= comb(n + 1, i)
    return out
