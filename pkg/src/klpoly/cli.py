"""Command-line front end: expansion, tables, and verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import comb

from . import __version__
from .combinatorics import (
    convolution,
    density,
    differential_word,
    enumerate_compositions,
    factorial_sum_check,
    g_poly,
    sum_of_products,
    sum_of_products_enumerated,
    weight,
    weight_closed_form,
)
from .expansion import (
    c_alpha_formula,
    c_star,
    c_star_factorial_form,
    h_poly,
    kernel_exponents,
    kl_closed_form,
    kl_direct,
    linear_factorization,
    linear_part,
)
from .diffalg import DiffMonomial, DiffPolynomial, LambdaPolynomial
from .reductions import (
    h_at_root_of_unity_numeric,
    lambda_zero_pattern,
    reduce_first_order,
    reduce_second_order,
    thm5_verdict,
)
from .serialize import poly_to_obj, poly_to_text

# Published row order of the (4, 3, 2) density table; other parameters
# list compositions lexicographically.
TABLE_432_ORDER = [
    (0, 0, 0, 3),
    (0, 0, 1, 2),
    (0, 0, 2, 1),
    (0, 0, 3, 0),
    (0, 1, 1, 1),
    (0, 1, 2, 0),
    (0, 1, 0, 2),
    (0, 2, 1, 0),
    (0, 2, 0, 1),
    (0, 3, 0, 0),
]

USAGE_ERROR = 2
VERIFY_FAILURE = 1


def _emit(payload: dict, args, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print("\n".join(text_lines))


def cmd_expand(args) -> int:
    if not 1 <= args.n <= args.max_n:
        print(f"error: n must be in [1, {args.max_n}]", file=sys.stderr)
        return USAGE_ERROR
    expansion = kl_closed_form(args.n) if args.closed_form else kl_direct(args.n)
    payload = {
        "n": args.n,
        "provenance": expansion.provenance,
        "terms": poly_to_obj(expansion.poly),
    }
    _emit(payload, args, [poly_to_text(expansion.poly)])
    return 0


def cmd_table(args) -> int:
    j, alpha, k = args.j, args.alpha, args.k
    if j < 1 or not 1 <= k <= j or alpha < 0:
        print("error: need j >= 1, 0 <= alpha, 1 <= k <= j", file=sys.stderr)
        return USAGE_ERROR
    rows = enumerate_compositions(j, alpha, k)
    if (j, alpha, k) == (4, 3, 2):
        rows = [tuple(beta) for beta in TABLE_432_ORDER]
    entries = [(beta, density(beta)) for beta in rows]
    total = weight(j, alpha, k)
    payload = {
        "j": j,
        "alpha": alpha,
        "k": k,
        "rows": [{"beta": list(b), "density": d} for b, d in entries],
        "weight": total,
    }
    width = max((len(str(b)) for b, _ in entries), default=10)
    lines = [f"{str(b):<{width}}  {d}" for b, d in entries]
    lines.append(f"{f'W({j},{alpha},{k})':<{width}}  {total}")
    _emit(payload, args, lines)
    return 0


def cmd_cstar(args) -> int:
    if args.n < 1:
        print("error: n must be >= 1", file=sys.stderr)
        return USAGE_ERROR
    rows = [
        {
            "j": j,
            "c_star": c_star(args.n, j),
            "factorial_form": str(c_star_factorial_form(args.n, j)),
        }
        for j in range(1, args.n + 1)
    ]
    payload = {"n": args.n, "rows": rows}
    lines = [f"j={r['j']}  c*={r['c_star']}  factorial_form={r['factorial_form']}" for r in rows]
    _emit(payload, args, lines)
    return 0


def cmd_linear(args) -> int:
    if args.n < 2:
        print("error: n must be >= 2", file=sys.stderr)
        return USAGE_ERROR
    lp = linear_part(args.n)
    payload = {"n": lp.n, "c": list(lp.c)}
    lines = [f"C_{alpha} = {value}" for alpha, value in enumerate(lp.c)]
    _emit(payload, args, lines)
    return 0


def cmd_hpoly(args) -> int:
    if args.n < 2:
        print("error: n must be >= 2", file=sys.stderr)
        return USAGE_ERROR
    coeffs = h_poly(args.n)
    payload = {"n": args.n, "coefficients": coeffs}
    lines = [f"z^{alpha}: {c}" for alpha, c in enumerate(coeffs)]
    _emit(payload, args, lines)
    return 0


def _check(name: str, ok: bool, detail: str = "") -> dict:
    return {"check": name, "status": "pass" if ok else "fail", "detail": detail}


def _observed(name: str, detail: str) -> dict:
    return {"check": name, "status": "observed", "detail": detail}


def suite_identities(n_max: int) -> list[dict]:
    checks = []
    for n in range(1, n_max + 1):
        poly = kl_direct(n).poly
        first = reduce_first_order(poly)
        checks.append(_check(f"first-identity n={n}", not first))
        second = reduce_second_order(poly)
        if n % 2 == 1:
            checks.append(_check(f"second-identity n={n}", not second))
        else:
            residual = ", ".join(
                f"u^{up}·u'^{vp}: {coeff}" for (up, vp), coeff in sorted(second.items())
            )
            checks.append(
                _observed(f"second-identity n={n} (even)", f"residual [{residual}]")
            )
    return checks


def suite_cstar(n_max: int) -> list[dict]:
    checks = []
    for n in range(1, n_max + 1):
        for j in range(1, n + 1):
            direct = c_star(n, j)
            fact = c_star_factorial_form(n, j)
            checks.append(
                _check(f"c-star n={n} j={j}", direct == 0 and fact == 0, f"{direct}, {fact}")
            )
    return checks


def suite_weights(bound: int) -> list[dict]:
    checks = []
    ok = True
    for j in range(1, bound + 1):
        for k in range(1, j + 1):
            for alpha in range(bound + 1):
                if weight(j, alpha, k) != weight_closed_form(j, alpha, k):
                    ok = False
    checks.append(_check(f"weight-closed-form j,k<= {bound} alpha<={bound}", ok))
    ok = all(
        len(enumerate_compositions(j, alpha, k)) == comb(alpha + j - k, j - k)
        for j in range(1, bound + 1)
        for k in range(1, j + 1)
        for alpha in range(bound + 1)
    )
    checks.append(_check("composition-count stars-and-bars", ok))
    ok = all(
        density(beta)
        == sum(c.constant_value() for _, c in differential_word(beta).terms())
        for j in range(1, 6)
        for alpha in range(6)
        for beta in enumerate_compositions(j, alpha, 1)
    )
    checks.append(_check("density-vs-word j,alpha<=5", ok))
    ok = all(
        g_poly(n)[alpha] == sum_of_products(n, alpha)
        for n in range(1, 21)
        for alpha in range(n + 1)
    )
    checks.append(_check("generating-function n<=20", ok))
    ok = all(
        sum_of_products(n, alpha) == sum_of_products_enumerated(n, alpha)
        for n in range(1, 13)
        for alpha in range(n + 1)
    )
    checks.append(_check("product-sum recurrence-vs-enumeration n<=12", ok))
    ok = all(
        factorial_sum_check(n, m)[0] == factorial_sum_check(n, m)[1]
        for n in range(1, 16)
        for m in range(1, n + 1)
    )
    checks.append(_check("factorial-sum n<=15", ok))
    ok = all(convolution(n, m) == 0 for n in range(1, 21) for m in range(1, 21)) and all(
        convolution(n, 0) == 1 for n in range(1, 21)
    )
    checks.append(_check("binomial-convolution n,m<=20", ok))
    return checks


def suite_linear(n_max: int) -> list[dict]:
    checks = []
    for n in range(2, n_max + 1):
        lp = linear_part(n)
        ok = all(lp.c[a] == c_alpha_formula(n, a) for a in range(n))
        checks.append(_check(f"linear-coefficient-formula n={n}", ok))
        h = h_poly(n)
        ok = len(h) == n and all(h[a] == lp.c[n - 1 - a] for a in range(n))
        checks.append(_check(f"h-polynomial n={n}", ok))
        graded = DiffPolynomial(
            {
                DiffMonomial((a,)): LambdaPolynomial.lam(n - 1 - a, lp.c[a])
                for a in range(n)
            }
        )
        checks.append(
            _check(f"operator-factorization n={n}", linear_factorization(n) == graded)
        )
        try:
            roots = kernel_exponents(n)
            ok = roots == [1] + [-a for a in range(1, n - 1)]
        except ArithmeticError:
            ok = False
        checks.append(_check(f"kernel-exponents n={n}", ok))
        if n >= 2:
            verdict = lambda_zero_pattern(1, n - 1)
            checks.append(_check(f"lambda-zero-collapse n={n}", verdict.ok))
    return checks


def suite_thm5(n_max: int, m_max: int) -> list[dict]:
    checks = []
    threshold = 1e-50
    for n in range(3, n_max + 1):
        for m in range(3, m_max + 1):
            expected = {0} if m % 2 else {0, m // 2}
            verdict = thm5_verdict(n, m)
            checks.append(
                _check(f"surviving-rates n={n} m={m}", verdict == expected, str(sorted(verdict)))
            )
            ok = all(
                (h_at_root_of_unity_numeric(n, m, r) < threshold) == (r in verdict)
                for r in range(m)
            )
            checks.append(_check(f"numeric-crosscheck n={n} m={m}", ok))
    return checks


SUITE_DEFAULTS = {
    "identities": {"n_max": 8},
    "cstar": {"n_max": 8},
    "weights": {"n_max": 6},
    "linear": {"n_max": 12},
    "thm5": {"n_max": 10, "m_max": 10},
}


def run_suite(name: str, n_max: int | None, m_max: int | None) -> list[dict]:
    defaults = SUITE_DEFAULTS[name]
    n = n_max if n_max is not None else defaults["n_max"]
    if name == "identities":
        return suite_identities(n)
    if name == "cstar":
        return suite_cstar(n)
    if name == "weights":
        return suite_weights(n)
    if name == "linear":
        return suite_linear(n)
    if name == "thm5":
        m = m_max if m_max is not None else defaults["m_max"]
        return suite_thm5(n, m)
    raise ValueError(name)


def cmd_verify(args) -> int:
    suites = (
        ["identities", "cstar", "weights", "linear", "thm5"]
        if args.suite == "all"
        else [args.suite]
    )
    start = time.monotonic()
    checks = []
    for name in suites:
        checks.extend(run_suite(name, args.n_max, args.m_max))
    elapsed_ms = round((time.monotonic() - start) * 1000, 1)
    payload = {
        "tool_version": __version__,
        "command": "verify",
        "parameters": {"suite": args.suite, "n_max": args.n_max, "m_max": args.m_max},
        "checks": checks,
    }
    if not args.no_timing:
        payload["wall_time_ms"] = elapsed_ms
    lines = [
        f"{c['status'].upper():>8}  {c['check']}" + (f"  [{c['detail']}]" if c["detail"] else "")
        for c in checks
    ]
    failed = sum(1 for c in checks if c["status"] == "fail")
    passed = sum(1 for c in checks if c["status"] == "pass")
    summary = f"{passed} passed, {failed} failed, {len(checks) - passed - failed} observed"
    if not args.no_timing:
        summary += f" ({elapsed_ms} ms)"
    lines.append(summary)
    _emit(payload, args, lines)
    return VERIFY_FAILURE if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klpoly",
        description="Exact expansion and verification of the Kuchment-Lvin polynomial family.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=["json", "text"], default="text")
        p.add_argument("--no-timing", action="store_true", help="omit wall time from reports")
        p.add_argument(
            "--parallel", type=int, default=1, metavar="K",
            help="accepted for interface compatibility; suites run sequentially",
        )

    p = sub.add_parser("expand", help="expand the n-th polynomial")
    p.add_argument("n", type=int)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--max-n", dest="max_n", type=int, default=10)
    add_common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("table", help="density table for compositions of (j, alpha, k)")
    p.add_argument("j", type=int)
    p.add_argument("alpha", type=int)
    p.add_argument("k", type=int)
    add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cstar", help="degree-wise coefficient sums (all zero)")
    p.add_argument("n", type=int)
    add_common(p)
    p.set_defaults(func=cmd_cstar)

    p = sub.add_parser("linear", help="linear-part coefficients")
    p.add_argument("n", type=int)
    add_common(p)
    p.set_defaults(func=cmd_linear)

    p = sub.add_parser("hpoly", help="generating polynomial of the linear part")
    p.add_argument("n", type=int)
    add_common(p)
    p.set_defaults(func=cmd_hpoly)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "suite", choices=["all", "identities", "cstar", "weights", "linear", "thm5"]
    )
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
