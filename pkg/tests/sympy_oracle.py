"""Independent reference computations built on sympy (tests only)."""

from __future__ import annotations

from collections import Counter

import sympy as sp
from sympy.parsing.sympy_parser import (convert_xor, implicit_multiplication_application,
                                        parse_expr, standard_transformations)

a, b, c, d, t, x, y = sp.symbols("a b c d t x y")
_TR = standard_transformations + (implicit_multiplication_application, convert_xor)
_LOCALS = {k: sp.Symbol(k) for k in "abcdtxyuvws"}


def read(text: str, params=None):
    expr = parse_expr(text, local_dict=_LOCALS, transformations=_TR)
    if params is not None:
        expr = expr.subs(dict(zip((a, b, c, d), [sp.Rational(p) for p in params])))
    return sp.expand(expr)


def coefficients(equation: str, params, var=t):
    """a1..a6 of ``lhs = rhs`` read as y^2 + a1xy + a3y = x^3 + a2x^2 + a4x + a6."""
    lhs, rhs = equation.split("=")
    F = sp.Poly(read(lhs, params) - read(rhs, params), x, y)
    lead = F.coeff_monomial(y**2)
    F = sp.Poly(F.as_expr() / lead, x, y)
    return [sp.expand(e) for e in (F.coeff_monomial(x * y), -F.coeff_monomial(x**2),
                                   F.coeff_monomial(y), -F.coeff_monomial(x),
                                   -F.coeff_monomial(1))]


def invariants(a1, a2, a3, a4, a6):
    b2 = a1**2 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3**2 + 4 * a6
    b8 = a1**2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3**2 - a4**2
    c4 = b2**2 - 24 * b4
    c6 = -b2**3 + 36 * b2 * b4 - 216 * b6
    disc = -b2**2 * b8 - 8 * b4**3 - 27 * b6**2 + 9 * b2 * b4 * b6
    return [sp.expand(e) for e in (c4, c6, disc)]


def _kodaira(v4, v6, vd):
    while v4 >= 4 and v6 >= 6 and vd >= 12:
        v4, v6, vd = v4 - 4, v6 - 6, vd - 12
    if vd == 0:
        return "I0"
    if v4 == 0:
        return f"I{vd}"
    if vd >= 6 and v4 == 2 and v6 == 3:
        return f"I{vd - 6}*"
    table = {2: "II", 3: "III", 4: "IV", 6: "I0*", 8: "IV*", 9: "III*", 10: "II*"}
    return table[vd]


def _val(f, p):
    if f == 0:
        return 10**6
    q, k = sp.Poly(f, t), 0
    P = sp.Poly(p, t)
    while True:
        quo, rem = sp.div(q, P)
        if not rem.is_zero:
            return k
        q, k = quo, k + 1


def _val_inf(f, weight):
    if f == 0:
        return 10**6
    return weight - sp.Poly(f, t).degree()


def weight(coeffs) -> int:
    degs = [(sp.Poly(e, t).degree(), i) for e, i in zip(coeffs, (1, 2, 3, 4, 6)) if e != 0]
    return max(1, max(-(-dg // i) for dg, i in degs))


def fibres(coeffs, n=None):
    """Sorted list of (place, type, degree); place is a rational or 'inf' or a polynomial string."""
    c4, c6, disc = invariants(*coeffs)
    n = n or weight(coeffs)
    out = []
    for p, _ in sp.factor_list(disc, t)[1]:
        if sp.degree(p, t) < 1:
            continue
        typ = _kodaira(_val(c4, p), _val(c6, p), _val(disc, p))
        if typ == "I0":
            continue
        deg = sp.degree(p, t)
        place = sp.solve(p, t)[0] if deg == 1 else str(sp.Poly(p, t).monic().as_expr())
        out.append((place, typ, deg))
    typ = _kodaira(_val_inf(c4, 4 * n), _val_inf(c6, 6 * n), _val_inf(disc, 12 * n))
    if typ != "I0":
        out.append(("inf", typ, 1))
    return out


def configuration(fibs) -> Counter:
    conf = Counter()
    for _, typ, deg in fibs:
        conf[typ] += int(deg)
    return conf
