"""alpha- and mu-vectors, each by two independent routes, plus the
generating-function identities that tie them to the f-vector."""
from __future__ import annotations

from math import comb, factorial

from .errors import InternalMismatch
from .simplicial import SimplicialComplex, euler_characteristic, f_vector, link, popcount
from .symfun import apply, matrix_A, matrix_f_to_alpha, stirling2


def alpha_from_links(K: SimplicialComplex) -> tuple[int, ...]:
    """alpha_k = sum over k-faces S of (1 - chi(link S))."""
    alpha = [0] * K.m
    for S in K.faces:
        alpha[popcount(S)] += 1 - euler_characteristic(link(K, S))
    return tuple(alpha)


def alpha_from_f(K: SimplicialComplex) -> tuple[int, ...]:
    return apply(matrix_f_to_alpha(K.m), f_vector(K))


def alpha(K: SimplicialComplex, fast: bool = False) -> tuple[int, ...]:
    """alpha(K); unless ``fast``, both routes run and must agree."""
    a = alpha_from_f(K)
    if fast:
        return a
    b = alpha_from_links(K)
    if a != b:
        raise InternalMismatch("E_INTERNAL_MISMATCH", f"alpha via f {a} != via links {b} for {K}")
    return a


def mu_vector(K: SimplicialComplex, fast: bool = False) -> tuple[int, ...]:
    """mu = A alpha(K), checked against alpha of the Alexander dual."""
    mu = apply(matrix_A(K.m), alpha(K, fast=fast))
    if fast:
        return mu
    other = alpha(K.dual)
    if mu != other:
        raise InternalMismatch("E_INTERNAL_MISMATCH", f"A alpha {mu} != alpha(dual) {other} for {K}")
    return mu


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _one_plus_z(n):
    return [comb(n, i) for i in range(n + 1)]


def egf_identity_check(K: SimplicialComplex) -> bool:
    """sum_j alpha_j z^(m-j) (1+z)^j + sum_j mu_j (1+z)^j == (1+z)^m, exactly.

    This is the E/M generating-function identity after substituting
    e^t = 1 + z and clearing the factor (1+z)^(-m).
    """
    m = K.m
    a = alpha(K)
    mu = mu_vector(K)
    lhs = [0] * (m + 1)
    for j in range(m):
        term = _poly_mul([0] * (m - j) + [1], _one_plus_z(j))
        for i, c in enumerate(term):
            lhs[i] += a[j] * c
        for i, c in enumerate(_one_plus_z(j)):
            lhs[i] += mu[j] * c
    return lhs == _one_plus_z(m)


def stirling_identity_check(K: SimplicialComplex, n_max: int = 6) -> bool:
    """sum_j j^n alpha_j == sum_j j! f_{j-1} S(n, j) for 0 <= n <= n_max."""
    a = alpha(K)
    f = f_vector(K)
    for n in range(n_max + 1):
        lhs = sum((j**n if (j or n) else 1) * a[j] for j in range(K.m))
        rhs = sum(factorial(j) * f[j] * stirling2(n, j) for j in range(K.m))
        if lhs != rhs:
            return False
    return True
