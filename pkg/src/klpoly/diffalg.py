"""Differential monomials and polynomials with integer coefficients in λ.

The central object is a finite sum of differential products
u^(a1) u^(a2) ... u^(aj) whose coefficients are polynomials in a formal
parameter λ with arbitrary-precision integer coefficients.  Everything is
kept exact and canonical: monomials store their derivative orders sorted
ascending, and no zero coefficient is ever stored.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Union


class LambdaPolynomial:
    """Polynomial in λ over the integers, stored as a sparse exponent map.

    Instances are immutable by convention; all arithmetic returns new
    objects.  Zero coefficients are pruned on construction.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        cleaned: dict[int, int] = {}
        for exp, c in dict(coeffs).items():
            if exp < 0:
                raise ValueError(f"negative λ exponent: {exp}")
            if c:
                cleaned[exp] = cleaned.get(exp, 0) + c
        self._coeffs = {e: c for e, c in cleaned.items() if c}

    @classmethod
    def constant(cls, c: int) -> "LambdaPolynomial":
        return cls({0: c})

    @classmethod
    def lam(cls, exponent: int = 1, coeff: int = 1) -> "LambdaPolynomial":
        return cls({exponent: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs sorted by exponent."""
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def constant_value(self) -> int:
        """The value of a λ-free polynomial; raises if λ actually appears."""
        if not self._coeffs:
            return 0
        if set(self._coeffs) != {0}:
            raise ValueError(f"not a constant: {self!r}")
        return self._coeffs[0]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LambdaPolynomial.constant(other)
        if not isinstance(other, LambdaPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "LambdaPolynomial") -> "LambdaPolynomial":
        merged = dict(self._coeffs)
        for e, c in other._coeffs.items():
            merged[e] = merged.get(e, 0) + c
        return LambdaPolynomial(merged)

    def __neg__(self) -> "LambdaPolynomial":
        return LambdaPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LambdaPolynomial") -> "LambdaPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["LambdaPolynomial", int]) -> "LambdaPolynomial":
        if isinstance(other, int):
            return LambdaPolynomial({e: c * other for e, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LambdaPolynomial(out)

    __rmul__ = __mul__

    def evaluate(self, value):
        """Substitute a numeric value for λ."""
        return sum(c * value**e for e, c in self._coeffs.items())

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}·λ")
            else:
                parts.append(f"{c}·λ^{e}")
        return " + ".join(parts)


LAMBDA = LambdaPolynomial.lam()
ONE = LambdaPolynomial.constant(1)


class DiffMonomial:
    """A product u^(a1)···u^(aj) of derivatives of u, in canonical form.

    The derivative orders are stored sorted ascending so that two equal
    products compare equal.  The empty product represents the constant 1.
    """

    __slots__ = ("orders",)

    def __init__(self, orders: Iterable[int] = ()):
        orders = tuple(sorted(orders))
        if orders and orders[0] < 0:
            raise ValueError(f"negative derivative order in {orders}")
        object.__setattr__(self, "orders", orders)

    def __setattr__(self, name, value):
        raise AttributeError("DiffMonomial is immutable")

    @property
    def degree(self) -> int:
        """Number of u-factors."""
        return len(self.orders)

    @property
    def order(self) -> int:
        """Total number of derivatives across all factors."""
        return sum(self.orders)

    def sort_key(self) -> tuple:
        return (self.degree, self.order, self.orders)

    def times_u(self) -> "DiffMonomial":
        return DiffMonomial(self.orders + (0,))

    def derivative_terms(self) -> Iterator["DiffMonomial"]:
        """Product rule: yield one monomial per factor, possibly repeating."""
        for i in range(len(self.orders)):
            bumped = self.orders[:i] + (self.orders[i] + 1,) + self.orders[i + 1 :]
            yield DiffMonomial(bumped)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffMonomial):
            return NotImplemented
        return self.orders == other.orders

    def __hash__(self) -> int:
        return hash(self.orders)

    def __repr__(self) -> str:
        if not self.orders:
            return "1"
        def factor(t: int) -> str:
            return "u" + ("'" * t if t <= 2 else f"^({t})")
        return "·".join(factor(t) for t in self.orders)


CONSTANT_MONOMIAL = DiffMonomial(())
U_MONOMIAL = DiffMonomial((0,))


class DiffPolynomial:
    """Finite map from differential monomials to λ-polynomials.

    Canonical: no monomial maps to zero.  Equality is structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[DiffMonomial, LambdaPolynomial] = ()):
        self._terms = {m: c for m, c in dict(terms).items() if not c.is_zero()}

    @classmethod
    def zero(cls) -> "DiffPolynomial":
        return cls()

    @classmethod
    def from_monomial(
        cls, mono: DiffMonomial, coeff: Union[LambdaPolynomial, int] = 1
    ) -> "DiffPolynomial":
        if isinstance(coeff, int):
            coeff = LambdaPolynomial.constant(coeff)
        return cls({mono: coeff})

    @classmethod
    def u_power(cls, k: int) -> "DiffPolynomial":
        """The monomial u^k (k = 0 gives the constant 1)."""
        return cls.from_monomial(DiffMonomial((0,) * k))

    def terms(self) -> list[tuple[DiffMonomial, LambdaPolynomial]]:
        """Terms sorted by (degree, order, orders)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, mono: DiffMonomial) -> LambdaPolynomial:
        return self._terms.get(mono, LambdaPolynomial())

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int | None:
        if not self._terms:
            return None
        return min(m.degree for m in self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "DiffPolynomial") -> "DiffPolynomial":
        merged = dict(self._terms)
        for m, c in other._terms.items():
            merged[m] = merged.get(m, LambdaPolynomial()) + c
        return DiffPolynomial(merged)

    def __neg__(self) -> "DiffPolynomial":
        return DiffPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "DiffPolynomial") -> "DiffPolynomial":
        return self + (-other)

    def scale(self, c: Union[LambdaPolynomial, int]) -> "DiffPolynomial":
        if isinstance(c, int):
            c = LambdaPolynomial.constant(c)
        return DiffPolynomial({m: coeff * c for m, coeff in self._terms.items()})

    def differentiate(self) -> "DiffPolynomial":
        """∂ applied termwise via the product rule; λ is a constant."""
        out: dict[DiffMonomial, LambdaPolynomial] = {}
        for mono, coeff in self._terms.items():
            for bumped in mono.derivative_terms():
                out[bumped] = out.get(bumped, LambdaPolynomial()) + coeff
        return DiffPolynomial(out)

    def multiply_by_u(self) -> "DiffPolynomial":
        return DiffPolynomial({m.times_u(): c for m, c in self._terms.items()})

    def apply_factor(self, m: int) -> "DiffPolynomial":
        """Apply the operator factor (∂ − u + mλ)."""
        if m < 0:
            raise ValueError("factor shift m must be non-negative")
        result = self.differentiate() - self.multiply_by_u()
        if m:
            result = result + self.scale(LambdaPolynomial.lam(1, m))
        return result

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})·{m}" for m, c in self.terms())
