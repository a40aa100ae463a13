"""Characteristic numbers and genera of X_K and its real locus from closed formulas."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .bier import bier_sphere, h_vector_bier, h_vector_bier_enumerated
from .errors import InputError, InternalMismatch
from .gamma import gamma_vector
from .simplicial import SimplicialComplex, euler_characteristic
from .symfun import partition, partitions, todd_coefficients
from .vectors import alpha


def _partition_of(n: int, I) -> tuple[int, ...]:
    I = partition(I)
    if sum(I) != n:
        raise InputError("E_PARTITION", f"{I} is not a partition of {n}")
    return I


# -- Chern and Milnor numbers ---------------------------------------------


def chern_number(K: SimplicialComplex, I: Sequence[int]) -> int:
    """c_I[X_K] = <alpha(K), gamma_I>."""
    I = _partition_of(K.m - 1, I)
    return sum(a * g for a, g in zip(alpha(K), gamma_vector(K.m, I)))


def all_chern_numbers(K: SimplicialComplex) -> dict[tuple[int, ...], int]:
    return {I: chern_number(K, I) for I in partitions(K.m - 1)}


def milnor_number(K: SimplicialComplex) -> int:
    """s_{m-1}[X_K] = m alpha_0 + ((-1)^m + 1) alpha_1."""
    a = alpha(K)
    m = K.m
    return m * a[0] + ((-1) ** m + 1) * a[1]


# -- chi_y genus ---------------------------------------------------------------


@dataclass(frozen=True)
class ChiY:
    """chi_y(X_K) as coefficients of powers of (-y), computed two ways."""

    coefficients: tuple[int, ...]
    from_alpha: tuple[int, ...] = field(repr=False)
    from_h: tuple[int, ...] = field(repr=False)

    def at(self, y: int) -> int:
        return sum(c * (-y) ** p for p, c in enumerate(self.coefficients))

    @property
    def euler(self) -> int:
        return self.at(-1)

    @property
    def todd(self) -> int:
        return self.at(0)

    @property
    def signature(self) -> int:
        return self.at(1)

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]


def chi_y_from_alpha(K: SimplicialComplex) -> tuple[int, ...]:
    # in w = -y: sum_k alpha_k (1 + w)^k (1 + w + ... + w^(m-k-1))
    m = K.m
    out = [0] * m
    for k, a in enumerate(alpha(K)):
        if not a:
            continue
        for i in range(k + 1):
            for j in range(m - k):
                out[i + j] += a * comb(k, i)
    return tuple(out)


def chi_y(K: SimplicialComplex) -> ChiY:
    a, h = chi_y_from_alpha(K), h_vector_bier(K)
    if a != h:
        raise InternalMismatch("E_INTERNAL_MISMATCH", f"chi_y alpha-route {a} != h-route {h}")
    return ChiY(a, a, h)


def euler_char_X(K: SimplicialComplex) -> int:
    return chi_y(K).euler


def todd_genus(K: SimplicialComplex) -> int:
    return chi_y(K).todd


def signature(K: SimplicialComplex) -> int:
    return chi_y(K).signature


def euler_char_routes(K: SimplicialComplex) -> dict[str, int]:
    """chi(X_K) as facet count of Bier(K), as sum of h, and from alpha."""
    m = K.m
    return {
        "bier_facets": len(bier_sphere(K).facet_pairs),
        "sum_h": sum(h_vector_bier_enumerated(K)),
        "alpha": sum(a * 2**p * (m - p) for p, a in enumerate(alpha(K))),
    }


def todd_value(K: SimplicialComplex) -> Fraction:
    """Td_{m-1}[X_K] = sum_I tau_I c_I[X_K], exact."""
    tau = todd_coefficients(K.m - 1)
    return sum((t * chern_number(K, I) for I, t in tau.items()), Fraction(0))


def todd_check(K: SimplicialComplex) -> bool:
    return todd_value(K) == 1


# -- real and oriented invariants --------------------------------------------


def pontryagin_number(K: SimplicialComplex, I: Sequence[int]) -> int:
    """p_I[X_K] = (1 - chi(K)) prod_t C(m, i_t) for m = 2n+1, I |- n."""
    m = K.m
    if m % 2 == 0:
        raise InputError("E_DIMENSION", f"no Pontryagin numbers in real dimension {2 * (m - 1)}")
    I = _partition_of((m - 1) // 2, I)
    out = 1 - euler_characteristic(K)
    for i in I:
        out *= comb(m, i)
    return out


def all_pontryagin_numbers(K: SimplicialComplex) -> dict[tuple[int, ...], int]:
    if K.m % 2 == 0:
        return {}
    return {I: pontryagin_number(K, I) for I in partitions((K.m - 1) // 2)}


def _binom_product_mod2(m: int, I) -> int:
    out = 1
    for i in I:
        out *= comb(m, i)
    return out % 2


def sw_number_real(K: SimplicialComplex, I: Sequence[int]) -> int:
    """w_I[X_K^R] = (1 + chi(K)) prod_t C(m, i_t) mod 2, I |- m-1."""
    I = _partition_of(K.m - 1, I)
    return (1 + euler_characteristic(K)) * _binom_product_mod2(K.m, I) % 2


def sw_number_complex(K: SimplicialComplex, I: Sequence[int]) -> int:
    """w_{2i_1}...w_{2i_p}[X_K] = alpha_0 w_I[CP^{m-1}] mod 2, I |- m-1."""
    I = _partition_of(K.m - 1, I)
    return alpha(K)[0] * _binom_product_mod2(K.m, I) % 2


def all_sw_numbers_real(K: SimplicialComplex) -> dict[tuple[int, ...], int]:
    return {I: sw_number_real(K, I) for I in partitions(K.m - 1)}


def all_sw_numbers_complex(K: SimplicialComplex) -> dict[tuple[int, ...], int]:
    return {I: sw_number_complex(K, I) for I in partitions(K.m - 1)}


def binary_sw_partition(m: int) -> tuple[int, ...]:
    """Powers of two in the binary expansion of m - 1: the partition detecting RP^{m-1}."""
    n = m - 1
    return tuple(sorted((1 << b for b in range(n.bit_length()) if n >> b & 1), reverse=True))


# -- immersions --------------------------------------------------------------


@dataclass(frozen=True)
class ImmersionBounds:
    p: int
    k_max: int
    N_real_min: int
    N_complex_min: int


def immersion_bounds(m: int) -> ImmersionBounds:
    """Lower bounds on N for immersions X^R_K -> R^N and X_K -> R^N, 2^(p-1) < m <= 2^p."""
    if m < 2:
        raise InputError("E_M_TOO_SMALL", f"m={m} < 2")
    p = (m - 1).bit_length()
    top = 2**p - 1
    return ImmersionBounds(p=p, k_max=top - (m - 1), N_real_min=top, N_complex_min=2 * top)


@dataclass(frozen=True)
class SharpFamily:
    n: int
    factors: tuple[SimplicialComplex, ...]
    bound: int

    @property
    def vertex_counts(self) -> tuple[int, ...]:
        return tuple(K.m for K in self.factors)


def sharp_immersion_family(n: int) -> SharpFamily:
    """Product of canonical real toric manifolds of dimension n that needs R^(2n - alpha(n)).

    Each binary digit 2^i of n contributes the boundary of the simplex on
    2^i + 1 vertices (so RP^(2^i)).
    """
    from .simplicial import boundary

    if n <= 1:
        raise InputError("E_RANGE", "n must exceed 1")
    digits = [1 << b for b in range(n.bit_length() - 1, -1, -1) if n >> b & 1]
    factors = tuple(boundary(d + 1) for d in digits)
    total = sum(immersion_bounds(K.m).N_real_min for K in factors)
    bound = 2 * n - bin(n).count("1")
    if total != bound:
        raise InternalMismatch("E_INTERNAL_MISMATCH", f"factor bounds sum to {total}, expected {bound}")
    return SharpFamily(n, factors, bound)


# -- report ------------------------------------------------------------------


@dataclass
class CharacteristicNumberReport:
    m: int
    chern: dict
    milnor: int
    pontryagin: dict
    sw_real: dict
    sw_complex: dict
    chi_y: tuple
    euler_X: int
    todd: Fraction
    signature: int
    immersion: ImmersionBounds


def report(K: SimplicialComplex, with_todd: bool = True) -> CharacteristicNumberReport:
    cy = chi_y(K)
    return CharacteristicNumberReport(
        m=K.m,
        chern=all_chern_numbers(K),
        milnor=milnor_number(K),
        pontryagin=all_pontryagin_numbers(K),
        sw_real=all_sw_numbers_real(K),
        sw_complex=all_sw_numbers_complex(K),
        chi_y=cy.coefficients,
        euler_X=cy.euler,
        todd=todd_value(K) if with_todd else Fraction(cy.todd),
        signature=cy.signature,
        immersion=immersion_bounds(K.m),
    )
