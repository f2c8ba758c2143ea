"""Sparse multivariate polynomials over QQ.

Only what the catalog and the six-line surface need: ring arithmetic,
substitution and conversion to univariate polynomials.
"""

from __future__ import annotations

from typing import Callable, Mapping

from .fields import QQ, FractionField, Polynomial, RationalFunction


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        # exponents are sorted tuples of (var, power) pairs
        self.terms = {m: QQ(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c) -> "MPoly":
        return cls({(): c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        other = _lift(other)
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "MPoly":
        return MPoly({m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "MPoly":
        other = _lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "MPoly":
        return _lift(other) - self

    def __mul__(self, other) -> "MPoly":
        other = _lift(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if len(other.terms) != 1 or () not in other.terms:
                raise ArithmeticError("MPoly division by a non-constant")
            other = other.terms[()]
        inv = QQ.one / QQ(other)
        return MPoly({m: c * inv for m, c in self.terms.items()})

    def __pow__(self, n: int) -> "MPoly":
        out = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def degree(self, var: str) -> int:
        if not self.terms:
            return -1
        return max(dict(m).get(var, 0) for m in self.terms)

    def coeff(self, var: str, k: int) -> "MPoly":
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            if d.get(var, 0) == k:
                d.pop(var, None)
                out[tuple(sorted(d.items()))] = c
        return MPoly(out)

    def constant_value(self):
        if set(self.terms) - {()}:
            raise ArithmeticError("not a constant")
        return self.terms.get((), QQ.zero)

    def subs(self, values: Mapping[str, object], one=None):
        """Evaluate, replacing each variable listed in ``values``.

        Unlisted variables stay symbolic (the result is then an MPoly).
        """
        result = None
        cache: dict = {}
        for m, c in self.terms.items():
            term = c if one is None else one * c
            rest = []
            for v, e in m:
                if v in values:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = values[v] ** e
                    term = cache[key] * term
                else:
                    rest.append((v, e))
            if rest:
                term = MPoly({tuple(rest): 1}) * term
            result = term if result is None else result + term
        if result is None:
            return MPoly() if one is None else one * 0
        return result

    def to_polynomial(self, var: str, field=QQ, coeff: Callable | None = None) -> Polynomial:
        """Univariate polynomial in ``var``; other variables go through ``coeff``."""
        n = self.degree(var)
        if coeff is None:
            coeff = lambda mp: field(mp.constant_value())  # noqa: E731
        return Polynomial([coeff(self.coeff(var, k)) for k in range(n + 1)], field)

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            cs = str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            parts.append(cs if not mono else (mono if c == 1 else f"{cs}*{mono}"))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MPoly({self.to_str()!r})"


def _lift(x) -> MPoly:
    return x if isinstance(x, MPoly) else MPoly.const(x)


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def to_polynomial_over(mp: MPoly, var: str, base_var: str) -> Polynomial:
    """View ``mp`` in variables {var, base_var} as a polynomial in ``var`` with
    coefficients in QQ(base_var)."""
    K = FractionField(QQ, base_var)

    def conv(c: MPoly):
        return RationalFunction(c.to_polynomial(base_var), _reduced=True) if c else K.zero

    return mp.to_polynomial(var, K, conv)


class MFrac:
    """Unreduced quotient of MPolys; equality by cross-multiplication.

    Cheap for identity checks where gcd-normalising every step would
    dominate the cost.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = _lift(num)
        self.den = MPoly.const(1) if den is None else _lift(den)
        if not self.den:
            raise ZeroDivisionError("MFrac with zero denominator")

    @staticmethod
    def _of(x) -> "MFrac":
        return x if isinstance(x, MFrac) else MFrac(x)

    def __add__(self, other):
        o = MFrac._of(other)
        if self.den == o.den:
            return MFrac(self.num + o.num, self.den)
        return MFrac(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return MFrac(-self.num, self.den)

    def __sub__(self, other):
        return self + (-MFrac._of(other))

    def __rsub__(self, other):
        return MFrac._of(other) - self

    def __mul__(self, other):
        o = MFrac._of(other)
        return MFrac(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = MFrac._of(other)
        return MFrac(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return MFrac._of(other) / self

    def __pow__(self, n: int):
        return MFrac(self.num**n, self.den**n)

    def __eq__(self, other) -> bool:
        o = MFrac._of(other)
        return self.num * o.den == o.num * self.den

    __hash__ = None
