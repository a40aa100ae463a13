from fractions import Fraction

import pytest
from hypothesis import given

from conftest import E1, E2, E3, E4, E5a, E6, complexes
from torbord.bier import bier_sphere, h_vector_bier
from torbord.charnum import (
    all_chern_numbers,
    binary_sw_partition,
    chern_number,
    chi_y,
    chi_y_from_alpha,
    euler_char_routes,
    immersion_bounds,
    milnor_number,
    pontryagin_number,
    report,
    sharp_immersion_family,
    signature,
    sw_number_complex,
    sw_number_real,
    todd_check,
    todd_value,
)
from torbord.errors import InputError
from torbord.simplicial import euler_characteristic, parse_complex, void


@pytest.mark.parametrize(
    "K, I, value",
    [(E4, (1, 1, 1), 56), (E2, (1, 1), 9), (E2, (2,), 3), (E6, (1, 1), 8), (E1, (3,), 10)],
)
def test_chern_examples(K, I, value):
    assert chern_number(K, I) == value


@pytest.mark.parametrize("K, s", [(E1, -2), (E3, 3), (E4, 2)])
def test_milnor_examples(K, s):
    assert milnor_number(K) == s


def test_chi_y_examples():
    cy = chi_y(E1)
    assert cy.coefficients == (1, 4, 4, 1)
    assert cy.euler == 10 and cy.signature == 0 and cy.todd == 1
    cy = chi_y(E2)
    assert cy.coefficients == (1, 1, 1) and cy.signature == 1
    assert signature(E5a) == 0


@pytest.mark.parametrize("K", [E1, E2, E4, E5a])
def test_todd(K):
    assert todd_check(K)
    assert todd_value(K) == Fraction(1)


@pytest.mark.parametrize(
    "K, I, value",
    [(E5a, (1, 1), 0), (void(5), (1, 1), 25), (void(5), (2,), 10), (E3, (1,), 3)],
)
def test_pontryagin_examples(K, I, value):
    assert pontryagin_number(K, I) == value


def test_pontryagin_even_m():
    with pytest.raises(InputError) as info:
        pontryagin_number(E1, (1,))
    assert info.value.code == "E_DIMENSION"


def test_sw_examples():
    assert sw_number_real(void(5), (4,)) == 1
    assert all(sw_number_real(E5a, I) == 0 for I in [(4,), (2, 2), (1, 1, 1, 1)])
    assert sw_number_complex(E1, (1, 1, 1)) == 0
    # odd m with chi even: the binary-expansion partition is detected
    for m in (3, 5, 7):
        assert sw_number_complex(void(m), binary_sw_partition(m)) == 1


def test_binary_partition():
    assert binary_sw_partition(5) == (4,)
    assert binary_sw_partition(8) == (4, 2, 1)


@pytest.mark.parametrize(
    "m, k_max, real, cx",
    [(5, 3, 7, 14), (4, 0, 3, 6), (8, 0, 7, 14), (9, 7, 15, 30), (2, 0, 1, 2)],
)
def test_immersion(m, k_max, real, cx):
    b = immersion_bounds(m)
    assert (b.k_max, b.N_real_min, b.N_complex_min) == (k_max, real, cx)
    # k_max is the bitwise complement of m - 1 within p bits
    assert b.k_max == ~(m - 1) & (2**b.p - 1)


@pytest.mark.parametrize("n, counts, bound", [(4, (5,), 7), (3, (3, 2), 4), (2, (3,), 3), (7, (5, 3, 2), 11)])
def test_sharp_family(n, counts, bound):
    fam = sharp_immersion_family(n)
    assert fam.vertex_counts == counts
    assert fam.bound == bound == 2 * n - bin(n).count("1")
    assert sum(c - 1 for c in counts) == n


def test_l_genus_m5():
    # L_2 = (7 p_2 - p_1^2) / 45 reproduces the signature
    for K in (void(5), E5a, parse_complex(5, [[1], [2], [3]])):
        p11, p2 = pontryagin_number(K, (1, 1)), pontryagin_number(K, (2,))
        assert Fraction(7 * p2 - p11, 45) == signature(K)


@given(complexes(max_m=7))
def test_chi_y_properties(K):
    cy = chi_y(K)
    assert cy.is_palindromic()
    assert cy.coefficients == h_vector_bier(K) == chi_y_from_alpha(K)
    assert cy.todd == 1
    expected_sign = 1 - euler_characteristic(K) if K.m % 2 else 0
    assert cy.signature == expected_sign


@given(complexes(max_m=6))
def test_euler_routes(K):
    routes = euler_char_routes(K)
    assert len(set(routes.values())) == 1
    assert routes["bier_facets"] == chi_y(K).euler == len(bier_sphere(K).facet_pairs)


@given(complexes(max_m=7))
def test_dual_invariance(K):
    assert all_chern_numbers(K) == all_chern_numbers(K.dual)
    assert milnor_number(K) == milnor_number(K.dual)


@given(complexes(min_m=3, max_m=7))
def test_todd_property(K):
    assert todd_check(K)


def test_report_fields():
    rep = report(E1)
    assert rep.chern == {(3,): 10, (2, 1): 24, (1, 1, 1): 40}
    assert rep.pontryagin == {}
    assert rep.todd == 1 and rep.signature == 0 and rep.euler_X == 10


def test_m2_edge():
    K = parse_complex(2, [[1]])
    rep = report(K)
    assert rep.chern == {(1,): 2}
    assert rep.chi_y == (1, 1)  # CP^1
