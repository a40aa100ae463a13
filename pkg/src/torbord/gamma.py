"""Universal coefficients gamma_{I,k} with c_I = sum_k gamma_{I,k} sigma_k u^(m-1-k).

Two routes:

* :func:`gamma_vector` expands c_I in the square-free ring, with
  c_k = sum_r sigma_r sigma'_{k-r} and sigma' in the translated variables
  x_i + u, then reads the symmetric coefficients.  This is authoritative.
* :func:`gamma_via_partition_formula` evaluates the closed double sum over
  partitions using the 0-1 transition matrix.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from itertools import product
from math import comb
from typing import Sequence

from .errors import InputError, InternalMismatch
from .ring import SquareFreeExpr, elementary, symmetric_collapse, translated_elementary
from .symfun import multinomial, partition, partitions, transition_M

MAX_M_RING = 10
MAX_M_FORMULA = 8


def _check_partition(m: int, I) -> tuple[int, ...]:
    I = partition(I)
    if sum(I) != m - 1:
        raise InputError("E_PARTITION", f"{I} is not a partition of m-1={m - 1}")
    return I


@lru_cache(maxsize=None)
def chern_class_sym(m: int, k: int) -> SquareFreeExpr:
    """c_k = sum_r sigma_r sigma'_{k-r} with sigma'_s = sigma_s(x + u)."""
    out = SquareFreeExpr(m)
    for r in range(k + 1):
        out = out + elementary(m, r) * translated_elementary(m, k - r)
    return out


@lru_cache(maxsize=None)
def chern_monomial_sym(m: int, I: tuple[int, ...]) -> SquareFreeExpr:
    if not I:
        return SquareFreeExpr.const(m)
    return chern_monomial_sym(m, I[:-1]) * chern_class_sym(m, I[-1])


@lru_cache(maxsize=None)
def _gamma_ring(m: int, I: tuple[int, ...]) -> tuple[int, ...]:
    expr = chern_monomial_sym(m, I)
    g = symmetric_collapse(expr, m - 1)
    if g is None:
        raise InternalMismatch("E_ASYMMETRY", f"c_{I} at m={m} is not symmetric in x")
    return tuple(g)


def gamma_vector(m: int, I: Sequence[int]) -> tuple[int, ...]:
    """(gamma_{I,0}, ..., gamma_{I,m-1}) from the ring expansion."""
    I = _check_partition(m, I)
    if m > MAX_M_RING:
        raise InputError("E_RANGE", f"ring route supports m <= {MAX_M_RING}")
    return _gamma_ring(m, I)


def all_gamma_vectors(m: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    return {I: gamma_vector(m, I) for I in partitions(m - 1)}


@lru_cache(maxsize=None)
def _gamma_formula(m: int, I: tuple[int, ...]) -> tuple[int, ...]:
    # group the (r_t, j_t) splittings by the partition they produce
    weights: dict[tuple[int, ...], int] = defaultdict(int)
    per_part = []
    for i in I:
        opts = []
        for r in range(i + 1):
            s = i - r
            for j in range(s + 1):
                opts.append((r, j, comb(m - j, s - j)))
        per_part.append(opts)
    for choice in product(*per_part):
        w = 1
        parts = []
        for r, j, c in choice:
            w *= c
            parts += [r, j]
        weights[partition(parts)] += w

    gamma = [0] * m
    for lam, w in weights.items():
        n = sum(lam)
        for mu in partitions(n):
            k = len(mu)
            if k > m - 1:
                continue
            M = transition_M(lam, mu)
            if not M:
                continue
            mult = multinomial(k, [mu.count(p) for p in set(mu)])
            gamma[k] += (-1) ** (n - k) * mult * M * w
    return tuple(gamma)


def gamma_via_partition_formula(m: int, I: Sequence[int], check: bool = True) -> tuple[int, ...]:
    I = _check_partition(m, I)
    if m > MAX_M_FORMULA:
        raise InputError("E_RANGE", f"partition formula supports m <= {MAX_M_FORMULA}")
    g = _gamma_formula(m, I)
    if check and m <= MAX_M_RING:
        ring = _gamma_ring(m, I)
        if g != ring:
            raise InternalMismatch("E_INTERNAL_MISMATCH", f"gamma_{I} at m={m}: formula {g} != ring {ring}")
    return g


def product_chern(m: int, j: int, I: Sequence[int]) -> int:
    """c_I of the standard product (CP^1)^j x CP^(m-j-1)."""
    I = _check_partition(m, I)
    if not 0 <= j <= m - 1:
        raise InputError("E_RANGE", f"j={j} outside 0..{m - 1}")
    total = 0
    for comp in product(*(range(min(i, j) + 1) for i in I)):
        if sum(comp) != j:
            continue
        term = multinomial(j, comp)
        for i, jt in zip(I, comp):
            term *= comb(m - j, i - jt)
        total += term
    return 2**j * total
