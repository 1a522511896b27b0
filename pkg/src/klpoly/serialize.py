"""Stable JSON serialization and plain-text rendering of polynomials.

The JSON shape is a compatibility surface: a list of terms, each
{"orders": [...], "lambda_coeffs": [[exponent, "coefficient"], ...]},
with terms sorted by (degree, order, orders) and λ-exponents ascending.
Integer coefficients are emitted as decimal strings so arbitrary
precision survives any JSON reader.
"""

from __future__ import annotations

import json

from .diffalg import DiffMonomial, DiffPolynomial, LambdaPolynomial


def poly_to_obj(p: DiffPolynomial) -> list[dict]:
    return [
        {
            "orders": list(mono.orders),
            "lambda_coeffs": [[e, str(c)] for e, c in coeff.items()],
        }
        for mono, coeff in p.terms()
    ]


def poly_to_json(p: DiffPolynomial) -> str:
    return json.dumps(poly_to_obj(p), separators=(",", ":"))


def poly_from_obj(obj: list[dict]) -> DiffPolynomial:
    terms = {}
    for entry in obj:
        mono = DiffMonomial(entry["orders"])
        coeff = LambdaPolynomial({e: int(c) for e, c in entry["lambda_coeffs"]})
        terms[mono] = coeff
    return DiffPolynomial(terms)


def _factor_text(t: int) -> str:
    if t == 0:
        return "u"
    if t <= 2:
        return "u" + "'" * t
    return f"u^({t})"


def monomial_text(mono: DiffMonomial) -> str:
    if not mono.orders:
        return "1"
    pieces = []
    i = 0
    orders = mono.orders
    while i < len(orders):
        t = orders[i]
        count = 1
        while i + count < len(orders) and orders[i + count] == t:
            count += 1
        base = _factor_text(t)
        if count == 1:
            pieces.append(base)
        elif t == 0:
            pieces.append(f"u^{count}")
        else:
            pieces.append(f"({base})^{count}")
        i += count
    return "·".join(pieces)


def _lambda_text(exp: int) -> str:
    return "λ" if exp == 1 else f"λ^{exp}"


def _term_text(mono: DiffMonomial, coeff: LambdaPolynomial) -> tuple[int, str]:
    """Render one term; returns (sign, body) with sign in {+1, -1}.

    A multi-term λ-coefficient is parenthesized and treated as positive.
    """
    items = coeff.items()
    if len(items) > 1:
        inner = str(coeff)
        return 1, f"({inner})·{monomial_text(mono)}"
    exp, c = items[0]
    sign = 1 if c > 0 else -1
    pieces = []
    if abs(c) != 1 or (exp == 0 and not mono.orders):
        pieces.append(str(abs(c)))
    if exp:
        pieces.append(_lambda_text(exp))
    if mono.orders:
        pieces.append(monomial_text(mono))
    if not pieces:
        pieces.append("1")
    return sign, "·".join(pieces)


def poly_to_text(p: DiffPolynomial) -> str:
    """Human-readable rendering, higher derivatives first within a degree."""
    if p.is_zero():
        return "0"
    ordered = sorted(
        p.terms(), key=lambda kv: (kv[0].degree, -kv[0].order, kv[0].orders)
    )
    out = []
    for i, (mono, coeff) in enumerate(ordered):
        sign, body = _term_text(mono, coeff)
        if i == 0:
            out.append(body if sign > 0 else f"−{body}")
        else:
            out.append(f" + {body}" if sign > 0 else f" − {body}")
    return "".join(out)
