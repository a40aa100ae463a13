"""Bordism classes of X_K and X_K^R.

In Omega^U_{2m-2} the classes [X_j] of X_j = X_{Delta_[j] * boundary(Delta_[m-j])}
span every [X_K]; the raw coordinates of [X_K] are alpha(K).  The subgroup
has basis {[X_{m-1-2k}]}; reduced coordinates are taken over that basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .bier import h_vector_bier
from .charnum import milnor_number
from .errors import InternalMismatch
from .gamma import gamma_vector
from .simplicial import SimplicialComplex, boundary, euler_characteristic, f_vector, join, simplex
from .symfun import partitions
from .vectors import alpha


def basis_complex(m: int, j: int) -> SimplicialComplex:
    """K_j = Delta_[j] * boundary(Delta_[m-j])."""
    return join(simplex(j), boundary(m - j))


def basis_indices(m: int) -> list[int]:
    """Indices of the basis classes [X_{m-1}], [X_{m-3}], ..., descending."""
    return list(range(m - 1, -1, -2))


def relation(m: int, j: int) -> dict[int, int]:
    """Coefficients of [X_j] = sum_{k >= j} (-1)^(m-k-1) C(m-j, k-j) [X_k]."""
    return {k: (-1) ** (m - k - 1) * comb(m - j, k - j) for k in range(j, m)}


@lru_cache(maxsize=None)
def _expressions(m: int) -> tuple[tuple[int, ...], ...]:
    """Row j: coordinates of [X_j] over all indices, supported on the basis."""
    basis = set(basis_indices(m))
    rows: dict[int, list[int]] = {}
    for j in range(m - 1, -1, -1):
        if j in basis:
            rows[j] = [int(k == j) for k in range(m)]
            continue
        # the diagonal coefficient is -1, so 2[X_j] = sum_{k>j} a_{k,j} [X_k]
        rel = relation(m, j)
        assert rel[j] == -1
        twice = [0] * m
        for k, a in rel.items():
            if k == j:
                continue
            for t, c in enumerate(rows[k]):
                twice[t] += a * c
        if any(c % 2 for c in twice):
            raise InternalMismatch("E_NONINTEGRAL", f"[X_{j}] at m={m} has non-integral coordinates {twice}/2")
        rows[j] = [c // 2 for c in twice]
    return tuple(tuple(rows[j]) for j in range(m))


def express_in_basis(m: int, j: int) -> dict[int, int]:
    row = _expressions(m)[j]
    return {k: row[k] for k in basis_indices(m) if row[k]}


@dataclass(frozen=True)
class BordismClass:
    m: int
    raw: tuple[int, ...]
    reduced: dict[int, int]

    def expanded(self) -> tuple[int, ...]:
        return tuple(self.reduced.get(k, 0) for k in range(self.m))

    @property
    def rank(self) -> int:
        return len(basis_indices(self.m))


def decompose(K: SimplicialComplex) -> BordismClass:
    m = K.m
    raw = alpha(K)
    exprs = _expressions(m)
    coords = [0] * m
    for j, a in enumerate(raw):
        for t, c in enumerate(exprs[j]):
            coords[t] += a * c
    reduced = {k: coords[k] for k in basis_indices(m)}
    cls = BordismClass(m, raw, reduced)
    for I in partitions(m - 1):
        g = gamma_vector(m, I)
        if sum(a * b for a, b in zip(raw, g)) != sum(a * b for a, b in zip(cls.expanded(), g)):
            raise InternalMismatch("E_INTERNAL_MISMATCH", f"reduction changed c_{I}")
    return cls


def rank_of_span(m: int) -> int:
    """Rank of the span of the vectors (c_I[X_j])_I, j = 0..m-1, by exact elimination."""
    rows = [[Fraction(gamma_vector(m, I)[j]) for I in partitions(m - 1)] for j in range(m)]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


# -- unitary equality and generators ----------------------------------------


def f_criterion(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    m = K1.m
    f1, f2 = f_vector(K1), f_vector(K2)  # f[i] holds f_{i-1}
    return all(
        f1[i] - f2[i] == f1[m - i] - f2[m - i] for i in range(1, (m - 1) // 2 + 1)
    )


def h_criterion(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    h1, h2 = h_vector_bier(K1), h_vector_bier(K2)
    return all(h1[i] == h2[i] for i in range(1, (K1.m - 1) // 2 + 1))


def bordant_unitary(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    if K1.m != K2.m:
        return False
    a, b = f_criterion(K1, K2), h_criterion(K1, K2)
    if a != b:
        raise InternalMismatch("E_INTERNAL_MISMATCH", f"f-criterion {a} != h-criterion {b}")
    return a


def milnor_m(i: int) -> int:
    """m_i = p if i + 1 is a power of the prime p, else 1."""
    n = i + 1
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else 1
    return 1


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class GeneratorCertificate:
    is_generator: bool
    milnor: int
    m_value: int
    condition: str


def is_polynomial_generator(K: SimplicialComplex) -> GeneratorCertificate:
    m = K.m
    a = alpha(K)
    if m % 2 == 1 and _is_prime(m):
        ok, cond = a[0] in (1, -1), f"m={m} odd prime, alpha_0={a[0]}"
    elif m & (m - 1) == 0:
        k = m.bit_length() - 1
        val = 2 ** (k - 1) * a[0] + a[1]
        ok, cond = val in (1, -1), f"m=2^{k}, 2^{k - 1} alpha_0 + alpha_1 = {val}"
    else:
        ok, cond = False, f"m={m} is neither an odd prime nor a power of 2"
    s, mm = milnor_number(K), milnor_m(m - 1)
    if ok != (abs(s) == mm):
        raise InternalMismatch("E_INTERNAL_MISMATCH", f"generator condition {ok} but s={s}, m_{m - 1}={mm}")
    return GeneratorCertificate(ok, s, mm, cond)


# -- real and oriented bordism ------------------------------------------------


def null_bordant_real(K: SimplicialComplex) -> bool:
    """X_K^R bounds iff m is even or chi(K) is odd."""
    return K.m % 2 == 0 or euler_characteristic(K) % 2 == 1


def orientable_real(K: SimplicialComplex) -> bool:
    return K.m % 2 == 0


def null_bordant_oriented_complex(K: SimplicialComplex) -> bool:
    """X_K bounds orientedly iff m is even or chi(K) = 1."""
    return K.m % 2 == 0 or euler_characteristic(K) == 1


def null_bordant_unoriented_complex(K: SimplicialComplex) -> bool:
    return K.m % 2 == 0 or euler_characteristic(K) % 2 == 1


def oriented_class(K: SimplicialComplex) -> int:
    """Coefficient of [CP^{m-1}] in Omega^SO; zero for even m."""
    return 1 - euler_characteristic(K) if K.m % 2 else 0


def in_forgetful_kernel(K: SimplicialComplex) -> bool:
    """[X_K] != 0 in Omega^SO but maps to 0 in Omega^O."""
    return oriented_class(K) != 0 and null_bordant_unoriented_complex(K)
