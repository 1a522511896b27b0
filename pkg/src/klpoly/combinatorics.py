"""Compositions, differential words, densities, weights, and product sums.

All results are exact.  Compositions are plain tuples of non-negative
integers; a composition of length j summing to α with its first k−1
entries zero belongs to the family Z(j, α, k).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod

from .diffalg import DiffMonomial, DiffPolynomial

Composition = tuple[int, ...]


def enumerate_compositions(j: int, alpha: int, k: int = 1) -> list[Composition]:
    """All length-j tuples of non-negative integers summing to alpha whose
    first k−1 entries are zero, in lexicographic order.

    Empty for alpha < 0.
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if not 1 <= k <= j:
        raise ValueError(f"k must satisfy 1 <= k <= j, got k={k}, j={j}")
    if alpha < 0:
        return []
    prefix = (0,) * (k - 1)
    free = j - (k - 1)

    def gen(slots: int, total: int):
        if slots == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in gen(slots - 1, total - first):
                yield (first,) + rest

    return [prefix + tail for tail in gen(free, alpha)]


@lru_cache(maxsize=None)
def differential_word(beta: Composition) -> DiffPolynomial:
    """Expand the nested derivative word of beta into differential monomials.

    Built inductively: the length-1 word is u differentiated beta[0] times;
    each further entry b multiplies by u and differentiates b times.
    """
    w = DiffPolynomial.u_power(1)
    for _ in range(beta[0]):
        w = w.differentiate()
    for b in beta[1:]:
        w = w.multiply_by_u()
        for _ in range(b):
            w = w.differentiate()
    return w


def product_rule_coefficient(beta: Composition, pi: DiffMonomial) -> int:
    """Multiplicity of the monomial pi in the differential word of beta."""
    return differential_word(beta).coefficient(pi).constant_value()


def density(beta: Composition) -> int:
    """Sum of all product rule coefficients of beta: ∏ m^beta[m-1]."""
    return prod(m**b for m, b in enumerate(beta, 1))


def weight(j: int, alpha: int, k: int) -> int:
    """Sum of densities over Z(j, alpha, k); k = 0 is an alias for k = 1,
    and the weight is 0 for negative alpha."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if not 0 <= k <= j:
        raise ValueError(f"k must satisfy 0 <= k <= j, got k={k}, j={j}")
    if alpha < 0:
        return 0
    return sum(density(beta) for beta in enumerate_compositions(j, alpha, max(k, 1)))


@lru_cache(maxsize=None)
def weight_A_coefficients(j: int) -> dict[int, Fraction]:
    """The rational coefficients A[m] (1 <= m <= j) in the closed form for
    the weight, computed bottom-up from A[j] = 1 by

        A[k] = -k * sum over m in (k, j] of m^(m-k-1)/(m-k)! * A[m].
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    a: dict[int, Fraction] = {j: Fraction(1)}
    for k in range(j - 1, 0, -1):
        a[k] = -k * sum(
            Fraction(m ** (m - k - 1), factorial(m - k)) * a[m]
            for m in range(k + 1, j + 1)
        )
    return a


def weight_closed_form(j: int, alpha: int, k: int) -> int:
    """weight(j, alpha, k) evaluated through the A-coefficient closed form:

        sum over m in [k, j] of m^(m-k)/(m-k)! * A[m] * m^alpha.

    The rational sum must come out integral; a non-integral result signals
    an implementation bug.
    """
    if not 1 <= k <= j:
        raise ValueError(f"k must satisfy 1 <= k <= j, got k={k}, j={j}")
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    a = weight_A_coefficients(j)
    total = sum(
        Fraction(m ** (m - k), factorial(m - k)) * a[m] * m**alpha
        for m in range(k, j + 1)
    )
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral weight for ({j}, {alpha}, {k}): {total}")
    return int(total)


@lru_cache(maxsize=None)
def sum_of_products(n: int, alpha: int) -> int:
    """Sum over all alpha-element subsets A of {1, ..., n} of the product
    of A; 1 when alpha = 0, 0 when alpha < 0 or alpha > max(n, 0).

    Computed by the Pascal-like recurrence
    S(n, a) = S(n-1, a) + n*S(n-1, a-1); cross-validated in the test suite
    against literal subset enumeration.
    """
    if alpha == 0:
        return 1
    if alpha < 0 or n < 1 or alpha > n:
        return 0
    return sum_of_products(n - 1, alpha) + n * sum_of_products(n - 1, alpha - 1)


def sum_of_products_enumerated(n: int, alpha: int) -> int:
    """Brute-force oracle for sum_of_products via subset enumeration."""
    if alpha == 0:
        return 1
    if alpha < 0 or n < 1 or alpha > n:
        return 0
    return sum(prod(subset) for subset in combinations(range(1, n + 1), alpha))


def g_poly(n: int) -> list[int]:
    """Coefficients of the product (1+z)(1+2z)···(1+nz); the coefficient of
    z^alpha is sum_of_products(n, alpha)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    coeffs = [1]
    for a in range(1, n + 1):
        coeffs = [
            (coeffs[i] if i < len(coeffs) else 0)
            + (a * coeffs[i - 1] if i > 0 else 0)
            for i in range(len(coeffs) + 1)
        ]
    return coeffs


def factorial_sum_check(n: int, m: int) -> tuple[int, int]:
    """Both sides of the identity

        sum over a in [0, n] of m^(n-a+1) * S(n, a)  ==  (n+m)! / (m-1)!

    returned as (lhs, rhs) for external comparison."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    lhs = sum(m ** (n - a + 1) * sum_of_products(n, a) for a in range(n + 1))
    rhs = factorial(n + m) // factorial(m - 1)
    return lhs, rhs


def generalized_binomial(top: int, q: int) -> int:
    """Falling-factorial binomial top(top-1)···(top-q+1)/q!, valid for any
    integer top (including negative) and q >= 0."""
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    num = prod(top - i for i in range(q))
    den = factorial(q)
    if num % den:
        raise ArithmeticError(f"non-integral binomial ({top}, {q})")
    return num // den


def convolution(n: int, m: int) -> int:
    """sum over k of C(n, k) * C(-n, m-k): the z^m coefficient of
    (1+z)^n (1+z)^(-n), hence 1 at m = 0 and 0 for m >= 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return sum(comb(n, k) * generalized_binomial(-n, m - k) for k in range(m + 1))
