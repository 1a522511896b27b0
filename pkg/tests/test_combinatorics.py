"""Compositions, words, densities, weights, product sums, convolution."""

from math import comb

import pytest

from klpoly import (
    DiffMonomial,
    convolution,
    density,
    differential_word,
    enumerate_compositions,
    factorial_sum_check,
    g_poly,
    generalized_binomial,
    product_rule_coefficient,
    sum_of_products,
    sum_of_products_enumerated,
    weight,
    weight_A_coefficients,
    weight_closed_form,
)
from klpoly.reductions import reduce_first_order
from helpers import dp

TABLE_432 = {
    (0, 0, 0, 3): 64,
    (0, 0, 1, 2): 48,
    (0, 0, 2, 1): 36,
    (0, 0, 3, 0): 27,
    (0, 1, 1, 1): 24,
    (0, 1, 2, 0): 18,
    (0, 1, 0, 2): 32,
    (0, 2, 1, 0): 12,
    (0, 2, 0, 1): 16,
    (0, 3, 0, 0): 8,
}


def test_compositions_432():
    betas = enumerate_compositions(4, 3, 2)
    assert len(betas) == 10
    assert set(betas) == set(TABLE_432)
    assert betas == sorted(betas)  # lexicographic


def test_compositions_edge_cases():
    assert enumerate_compositions(2, 0, 1) == [(0, 0)]
    assert enumerate_compositions(3, -1, 2) == []
    assert enumerate_compositions(4, -5, 1) == []


def test_compositions_rejects_bad_k():
    with pytest.raises(ValueError):
        enumerate_compositions(3, 2, 0)
    with pytest.raises(ValueError):
        enumerate_compositions(3, 2, 4)


def test_composition_count_stars_and_bars():
    for j in range(1, 7):
        for k in range(1, j + 1):
            for alpha in range(7):
                assert len(enumerate_compositions(j, alpha, k)) == comb(
                    alpha + j - k, j - k
                )


def test_differential_word_0111():
    # 8 u (u')^3 + 14 u^2 u' u'' + 2 u^3 u'''
    expected = dp(
        {
            (0, 1, 1, 1): {0: 8},
            (0, 0, 1, 2): {0: 14},
            (0, 0, 0, 3): {0: 2},
        }
    )
    assert differential_word((0, 1, 1, 1)) == expected


def test_differential_word_base_cases():
    assert differential_word((2,)) == dp({(2,): {0: 1}})
    assert differential_word((0, 0)) == dp({(0, 0): {0: 1}})


def test_product_rule_coefficients():
    beta = (0, 1, 1, 1)
    assert product_rule_coefficient(beta, DiffMonomial((0, 1, 1, 1))) == 8
    assert product_rule_coefficient(beta, DiffMonomial((0, 0, 1, 2))) == 14
    assert product_rule_coefficient(beta, DiffMonomial((0, 0, 0, 3))) == 2
    assert product_rule_coefficient(beta, DiffMonomial((0, 0, 3, 0))) == 2
    assert product_rule_coefficient(beta, DiffMonomial((1, 1, 1, 0))) == 8
    assert product_rule_coefficient(beta, DiffMonomial((3, 0, 0, 0))) == 2
    assert product_rule_coefficient((3,), DiffMonomial((3,))) == 1
    # monomial not occurring in the word
    assert product_rule_coefficient((2, 0), DiffMonomial((0, 2))) == 1
    assert product_rule_coefficient((2, 0), DiffMonomial((1, 1))) == 0


def test_density_examples():
    assert density((0, 1, 1, 1)) == 24
    assert density((0, 0, 0, 3)) == 64
    assert density((0, 3, 0, 0)) == 8


def test_density_table_432():
    for beta, value in TABLE_432.items():
        assert density(beta) == value


def test_density_equals_coefficient_sum():
    for j in range(1, 6):
        for alpha in range(6):
            for beta in enumerate_compositions(j, alpha, 1):
                word = differential_word(beta)
                total = sum(c.constant_value() for _, c in word.terms())
                assert total == density(beta)


def test_first_order_reduction_of_words():
    # substituting u^(t) -> λ^t u turns a word into density·λ^α·u^j
    for j in range(1, 6):
        for alpha in range(6):
            for beta in enumerate_compositions(j, alpha, 1):
                reduced = reduce_first_order(differential_word(beta))
                assert set(reduced) == {j}
                assert reduced[j].coeffs == {alpha: density(beta)}


def test_weight_examples():
    assert weight(4, 3, 2) == 285
    assert weight(4, 5, 2) == 6069
    assert weight(3, 2, 3) == 9
    assert weight(5, 4, 5) == 5**4
    assert weight(3, -1, 2) == 0
    assert weight(4, 3, 0) == weight(4, 3, 1)


def test_weight_A_coefficients():
    a4 = weight_A_coefficients(4)
    assert a4[4] == 1
    assert a4[3] == -3
    assert a4[2] == 2


def test_weight_closed_form_examples():
    assert weight_closed_form(4, 3, 2) == 285
    assert weight_closed_form(4, 5, 2) == 6069
    for j in range(1, 7):
        assert weight_closed_form(j, 0, j) == 1


def test_weight_agreement_grid():
    for j in range(1, 7):
        for k in range(1, j + 1):
            for alpha in range(7):
                assert weight(j, alpha, k) == weight_closed_form(j, alpha, k)


def test_sum_of_products_cases():
    assert sum_of_products(5, 0) == 1
    assert sum_of_products(3, 2) == 11
    assert sum_of_products(2, 3) == 0
    assert sum_of_products(3, -1) == 0
    # degenerate arguments used by the closed-form coefficient sum
    assert sum_of_products(-1, 0) == 1
    assert sum_of_products(0, 0) == 1
    assert sum_of_products(0, 1) == 0


def test_sum_of_products_recurrence_matches_enumeration():
    for n in range(1, 13):
        for alpha in range(n + 2):
            assert sum_of_products(n, alpha) == sum_of_products_enumerated(n, alpha)


def test_g_poly_examples():
    assert g_poly(1) == [1, 1]
    assert g_poly(3) == [1, 6, 11, 6]


def test_g_poly_matches_sum_of_products():
    for n in range(1, 21):
        coeffs = g_poly(n)
        assert len(coeffs) == n + 1
        for alpha in range(n + 1):
            assert coeffs[alpha] == sum_of_products(n, alpha)


def test_factorial_sum_examples():
    assert factorial_sum_check(1, 1) == (2, 2)
    assert factorial_sum_check(3, 1)[1] == 24
    assert factorial_sum_check(3, 3)[1] == 360


def test_factorial_sum_grid():
    for n in range(1, 16):
        for m in range(1, n + 1):
            lhs, rhs = factorial_sum_check(n, m)
            assert lhs == rhs


def test_generalized_binomial():
    assert generalized_binomial(-3, 2) == 6
    assert generalized_binomial(5, 0) == 1
    assert generalized_binomial(4, 2) == 6
    # negative-top reflection identity
    for n in range(1, 8):
        for q in range(8):
            assert generalized_binomial(-n, q) == (-1) ** q * comb(n + q - 1, q)


def test_convolution():
    assert convolution(3, 2) == 0
    assert convolution(7, 5) == 0
    for n in range(1, 21):
        assert convolution(n, 0) == 1
        for m in range(1, 21):
            assert convolution(n, m) == 0
