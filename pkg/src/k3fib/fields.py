"""Exact univariate arithmetic over a generic field.

Two fields are used in practice: :data:`QQ` (exact rationals) and
``FractionField(QQ, var)``, the field of rational functions in one variable.
Because a :class:`FractionField` is itself a field, polynomials in ``t`` with
coefficients in ``Q(s)`` come for free.  Field elements only need the
arithmetic operators, ``==`` and a truth value meaning "nonzero".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import DivisionByZero, ParseError

try:  # gmpy2 is an order of magnitude faster than fractions.Fraction
    from gmpy2 import mpq as _Rational
    from gmpy2 import iroot as _iroot
except ImportError:  # pragma: no cover
    from fractions import Fraction as _Rational

    _iroot = None


def _int_root(n: int, k: int) -> tuple[int, bool]:
    if _iroot is not None:
        r, exact = _iroot(n, k)
        return int(r), bool(exact)
    if n < 2:
        return n, True
    r = 1 << -(-n.bit_length() // k)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    return r, r**k == n


class RationalField:
    """The rational numbers, elements are exact big rationals."""

    name = "QQ"

    def __init__(self) -> None:
        self.zero = _Rational(0)
        self.one = _Rational(1)

    def __call__(self, x) -> _Rational:
        if isinstance(x, str):
            try:
                return _Rational(x.strip())
            except ValueError as exc:
                raise ParseError(f"not a rational number: {x!r}") from exc
        if isinstance(x, (Polynomial, RationalFunction)):
            raise TypeError("not a rational")
        return _Rational(x)

    def is_element(self, x) -> bool:
        return isinstance(x, (int, type(self.zero)))

    def __repr__(self) -> str:
        return "QQ"

    def __reduce__(self):
        return (_qq, ())


QQ = RationalField()


def _qq() -> RationalField:
    return QQ


def rational_str(q) -> str:
    q = QQ(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_kth_root(q, k: int):
    """Return r in Q with r**k == q, or None."""
    q = QQ(q)
    if q < 0:
        if k % 2 == 0:
            return None
        r = rational_kth_root(-q, k)
        return None if r is None else -r
    n, ok1 = _int_root(int(q.numerator), k)
    d, ok2 = _int_root(int(q.denominator), k)
    if ok1 and ok2:
        return QQ(n) / QQ(d)
    return None


# --------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``X**i``."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable = (), field=QQ, *, _raw: bool = False):
        if not _raw:
            coeffs = [field(c) for c in coeffs]
        else:
            coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.field = field

    # construction helpers
    @classmethod
    def constant(cls, c, field=QQ) -> "Polynomial":
        return cls([c], field)

    @classmethod
    def gen(cls, field=QQ) -> "Polynomial":
        return cls([field.zero, field.one], field, _raw=True)

    @classmethod
    def monomial(cls, n: int, c=1, field=QQ) -> "Polynomial":
        return cls([field.zero] * n + [field(c)], field, _raw=True)

    @classmethod
    def from_roots(cls, roots: Iterable, field=QQ) -> "Polynomial":
        x = cls.gen(field)
        out = cls.constant(1, field)
        for r in roots:
            out = out * (x - r)
        return out

    def _new(self, coeffs) -> "Polynomial":
        return Polynomial(coeffs, self.field, _raw=True)

    # basic queries
    @property
    def degree(self):
        """Degree, or ``-math.inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def deg(self) -> int:
        """Degree with ``-1`` for zero; convenient for index arithmetic."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __iter__(self):
        return iter(self.coeffs)

    # comparisons
    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, RationalFunction) and not self._rf_is_coeff(other):
            return other == self
        try:
            c = self.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        if not c:
            return not self.coeffs
        return len(self.coeffs) == 1 and self.coeffs[0] == c

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # arithmetic
    def _rf_is_coeff(self, rf) -> bool:
        return isinstance(self.field, FractionField) and rf.num.field is self.field.base

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, RationalFunction) and not self._rf_is_coeff(other):
            return NotImplemented
        try:
            c = self.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Polynomial([c], self.field, _raw=True)

    def __neg__(self) -> "Polynomial":
        return self._new([-c for c in self.coeffs])

    def __pos__(self) -> "Polynomial":
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._new(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, RationalFunction) and not self._rf_is_coeff(other):
                return NotImplemented
            try:
                c = self.field(other)
            except (TypeError, ValueError):
                return NotImplemented
            if not c:
                return self._new([])
            return self._new([x * c for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new([])
        if len(a) == 1:
            c = a[0]
            return self._new([c * x for x in b])
        if len(b) == 1:
            c = b[0]
            return self._new([x * c for x in a])
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Polynomial) or (
            isinstance(other, RationalFunction) and not self._rf_is_coeff(other)
        ):
            return RationalFunction(self, Polynomial.constant(1, self.field)) / other
        c = self.field(other)
        if not c:
            raise DivisionByZero("division of a polynomial by zero")
        inv = self.field.one / c
        return self._new([x * inv for x in self.coeffs])

    def __rtruediv__(self, other):
        return RationalFunction(Polynomial.constant(other, self.field)) / self

    def __divmod__(self, other: "Polynomial"):
        other = self._coerce(other)
        if not other:
            raise DivisionByZero("polynomial division by zero")
        n = other.deg
        rem = list(self.coeffs)
        if len(rem) <= n:
            return self._new([]), self
        lead = other.coeffs[-1]
        monic = lead == self.field.one
        inv = None if monic else self.field.one / lead
        quot = [self.field.zero] * (len(rem) - n)
        bc = other.coeffs
        for k in range(len(rem) - 1, n - 1, -1):
            c = rem[k]
            if not c:
                continue
            if not monic:
                c = c * inv
            quot[k - n] = c
            off = k - n
            for j in range(n):
                if bc[j]:
                    rem[off + j] = rem[off + j] - c * bc[j]
            rem[k] = self.field.zero
        return self._new(quot), self._new(rem[:n])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    # calculus and evaluation
    def derivative(self) -> "Polynomial":
        return self._new([c * i for i, c in enumerate(self.coeffs) if i])

    def __call__(self, x):
        if not self.coeffs:
            return x * 0 if isinstance(x, (Polynomial, RationalFunction)) else self.field.zero
        it = reversed(self.coeffs)
        r = next(it)
        if isinstance(x, (Polynomial, RationalFunction)):
            r = x * 0 + r
        for c in it:
            r = x * r + c
        return r

    def compose(self, g) -> "Polynomial":
        return self(g)

    def monic(self) -> "Polynomial":
        if not self.coeffs or self.coeffs[-1] == self.field.one:
            return self
        return self / self.coeffs[-1]

    def map_coeffs(self, fn, field=None) -> "Polynomial":
        field = field or self.field
        return Polynomial([fn(c) for c in self.coeffs], field)

    def reverse(self, n: int | None = None) -> "Polynomial":
        """Return ``X**n * f(1/X)``; ``n`` defaults to the degree."""
        n = self.deg if n is None else n
        c = list(self.coeffs) + [self.field.zero] * (n + 1 - len(self.coeffs))
        return self._new(c[: n + 1][::-1])

    # printing
    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = _coeff_str(c)
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            neg = cs.startswith("-") and not cs.startswith("-(")
            body = cs[1:] if neg else cs
            if mono:
                if body == "1":
                    body = mono
                else:
                    body = f"{body}*{mono}"
            terms.append(("-" if neg else "+", body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r}, {self.field!r})"


def _coeff_str(c) -> str:
    if isinstance(c, RationalFunction):
        s = c.to_str()
        if c.den.deg > 0 or sum(1 for x in c.num.coeffs if x) > 1:
            return f"({s})"
        return s
    return rational_str(c)


# --------------------------------------------------------------------------
# gcd and friends


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    a, b = f, g
    if a.deg < b.deg:
        a, b = b, a
    if not b:
        return a.monic()
    b = b.monic()
    while b:
        r = a % b
        a, b = b, r.monic()
    return a.monic()


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    if not f or not g:
        return f._new([])
    return (f * g).exact_div(poly_gcd(f, g)).monic()


def poly_xgcd(f: Polynomial, g: Polynomial):
    """Return ``(d, u, v)`` with ``u*f + v*g = d`` and ``d`` monic."""
    one = Polynomial.constant(1, f.field)
    zero = f._new([])
    r0, r1, s0, s1, t0, t1 = f, g, one, zero, zero, one
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    lc = r0.lc
    return r0 / lc, s0 / lc, t0 / lc


def squarefree_decomposition(f: Polynomial):
    """Yun's algorithm (characteristic zero).

    Returns ``(unit, [(g, m), ...])`` with monic, squarefree, pairwise coprime
    ``g`` of positive degree and ``f == unit * prod(g**m)``.
    """
    if not f:
        raise ValueError("squarefree decomposition of zero")
    unit = f.lc
    if f.deg == 0:
        return unit, []
    f = f.monic()
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.deg > 0:
        g = poly_gcd(b, d)
        b_next = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b_next.derivative()
        if g.deg > 0:
            out.append((g, i))
        b = b_next
        i += 1
    return unit, out


def squarefree_part(f: Polynomial) -> Polynomial:
    _, parts = squarefree_decomposition(f)
    return reduce(lambda x, y: x * y, (g for g, _ in parts), Polynomial.constant(1, f.field))


def coprime_basis(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Pairwise coprime, squarefree, monic polynomials such that each nonzero
    input is a unit times a product of powers of basis elements."""
    basis: list[Polynomial] = []
    for f in polys:
        if not f or f.deg <= 0:
            continue
        for g, _ in squarefree_decomposition(f)[1]:
            basis = _refine(basis, g)
    return sorted(basis, key=lambda p: (p.deg, [str(c) for c in p.coeffs]))


def _refine(basis: list[Polynomial], new: Polynomial) -> list[Polynomial]:
    pending = [new]
    out = list(basis)
    while pending:
        g = pending.pop()
        if g.deg <= 0:
            continue
        for i, b in enumerate(out):
            d = poly_gcd(b, g)
            if d.deg > 0:
                out.pop(i)
                rest = [b.exact_div(d).monic(), d, g.exact_div(d).monic()]
                pending.extend(r for r in rest if r.deg > 0)
                break
        else:
            out.append(g.monic())
    # pieces from one split may still overlap pending pieces; a final pass
    # over all pairs keeps the invariant honest
    changed = True
    while changed:
        changed = False
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                d = poly_gcd(out[i], out[j])
                if d.deg > 0:
                    a, b = out[i], out[j]
                    out = [x for k, x in enumerate(out) if k not in (i, j)]
                    for piece in (a.exact_div(d), d, b.exact_div(d)):
                        if piece.deg > 0:
                            out.append(piece.monic())
                    changed = True
                    break
            if changed:
                break
    return out


def resultant(f: Polynomial, g: Polynomial):
    """Resultant via the Euclidean remainder sequence."""
    field = f.field
    if not f or not g:
        return field.zero
    m, n = f.deg, g.deg
    if n == 0:
        return g.lc**m
    if m == 0:
        return f.lc**n
    r = f % g
    if not r:
        return field.zero
    sign = -1 if (m * n) % 2 else 1
    return sign * g.lc ** (m - r.deg) * resultant(g, r)


def sylvester_matrix(f: Polynomial, g: Polynomial) -> list[list]:
    m, n = f.deg, g.deg
    size = m + n
    zero = f.field.zero
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def discriminant(f: Polynomial):
    n = f.deg
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


# --------------------------------------------------------------------------
# places and valuations


@dataclass(frozen=True)
class Place:
    """A finite place (monic squarefree ``poly``) or the place at infinity."""

    poly: Polynomial | None = None

    @classmethod
    def infinity(cls) -> "Place":
        return cls(None)

    @classmethod
    def finite(cls, p: Polynomial) -> "Place":
        if p.deg <= 0:
            raise ValueError("a finite place needs a polynomial of positive degree")
        return cls(p.monic())

    @classmethod
    def at(cls, r, field=QQ) -> "Place":
        return cls.finite(Polynomial([-field(r), field.one], field))

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.deg

    def label(self, var: str = "t") -> str:
        if self.poly is None:
            return "infinity"
        if self.poly.deg == 1:
            return f"{var}={_coeff_str(-self.poly[0])}"
        return f"poly: {self.poly.to_str(var)}"


def valuation(f, place: Place, weight: int = 0):
    """Order of vanishing of ``f`` at ``place``; ``math.inf`` for zero.

    At infinity a polynomial is read with the given homogenising weight, i.e.
    the result is ``weight - deg f``.
    """
    if isinstance(f, RationalFunction):
        if not f.num:
            return math.inf
        return valuation(f.num, place, weight) - valuation(f.den, place, 0)
    if not isinstance(f, Polynomial):
        return math.inf if not f else (weight if place.is_infinite else 0)
    if not f:
        return math.inf
    if place.is_infinite:
        return weight - f.deg
    p = place.poly
    v = 0
    while f.deg >= p.deg:
        q, r = divmod(f, p)
        if r:
            break
        f = q
        v += 1
    return v


# --------------------------------------------------------------------------
# rational roots over QQ


def rational_roots(f: Polynomial) -> list:
    """Distinct rational roots of a polynomial over QQ, sorted."""
    if f.field is not QQ:
        raise TypeError("rational_roots works over QQ only")
    if f.deg <= 0:
        return []
    roots = []
    for g, _ in squarefree_decomposition(f)[1]:
        roots.extend(_rational_roots_squarefree(g))
    return sorted(set(roots))


def _rational_roots_squarefree(g: Polynomial) -> list:
    import mpmath

    out = []
    if not g[0]:
        out.append(QQ(0))
        g = g.exact_div(Polynomial.gen(QQ))
    if g.deg <= 0:
        return out
    if g.deg == 1:
        return out + [-g[0] / g[1]]
    den = reduce(math.lcm, (int(c.denominator) for c in g.coeffs), 1)
    ints = [int(c * den) for c in g.coeffs]
    n = len(ints) - 1
    lead = ints[-1]
    # monic integer polynomial in X = lead * x
    mon = [ints[i] * lead ** (n - 1 - i) for i in range(n)] + [1]
    digits = max(len(str(abs(c))) for c in mon)
    with mpmath.workdps(digits + 30):
        try:
            approx = mpmath.polyroots(list(reversed(mon)), maxsteps=400, extraprec=4 * digits + 60)
        except mpmath.libmp.NoConvergence:  # pragma: no cover
            approx = mpmath.polyroots(list(reversed(mon)), maxsteps=4000, extraprec=8 * digits + 200)
        cands = set()
        for z in approx:
            if abs(mpmath.im(z)) < 0.5:
                base = int(mpmath.nint(mpmath.re(z)))
                cands.update((base - 1, base, base + 1))
    for X in cands:
        acc = 0
        for c in reversed(mon):
            acc = acc * X + c
        if acc == 0:
            out.append(QQ(X) / QQ(lead))
    return out


# --------------------------------------------------------------------------
# rational functions


class FractionField:
    """Field of rational functions over ``base``; usable as a coefficient field."""

    _cache: dict = {}

    def __new__(cls, base=QQ, var: str = "s"):
        key = (id(base), var)
        inst = cls._cache.get(key)
        if inst is None:
            inst = super().__new__(cls)
            inst.base = base
            inst.var = var
            one = Polynomial.constant(1, base)
            inst.zero = RationalFunction(Polynomial([], base), one, _reduced=True)
            inst.one = RationalFunction(one, one, _reduced=True)
            cls._cache[key] = inst
        return inst

    def __call__(self, x) -> "RationalFunction":
        if isinstance(x, RationalFunction) and x.base is self.base:
            return x
        if isinstance(x, Polynomial) and x.field is self.base:
            return RationalFunction(x, _reduced=True)
        c = self.base(x)
        one = Polynomial.constant(1, self.base)
        return RationalFunction(Polynomial([c], self.base, _raw=True), one, _reduced=True)

    def gen(self) -> "RationalFunction":
        return RationalFunction(Polynomial.gen(self.base), _reduced=True)

    def __repr__(self) -> str:
        return f"{self.base!r}({self.var})"

    def __reduce__(self):
        return (FractionField, (self.base, self.var))


class RationalFunction:
    """Reduced quotient ``num/den`` with ``den`` monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None, *, _reduced: bool = False):
        if den is None:
            den = Polynomial.constant(1, num.field)
            _reduced = True
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = Polynomial.constant(1, num.field)
            else:
                g = poly_gcd(num, den)
                if g.deg > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.lc
            if lc != num.field.one:
                num = num / lc
                den = den / lc
        self.num = num
        self.den = den

    @property
    def base(self):
        return self.num.field

    @property
    def field(self) -> FractionField:
        return FractionField(self.num.field)

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            if other.field is not self.num.field:
                # a polynomial with coefficients in our field; let it multiply us
                return NotImplemented
            return RationalFunction(other, _reduced=True)
        try:
            c = self.num.field(other)
        except (TypeError, ValueError):
            return NotImplemented
        return RationalFunction(Polynomial([c], self.num.field, _raw=True), _reduced=True)

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self.den.deg == 0 and self.num.deg <= 0:
            return hash(self.num[0])
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a:
            return other
        if not c:
            return self
        if b.deg == 0 and d.deg == 0:
            return RationalFunction(a + c, b, _reduced=True)
        if b == d:
            n = a + c
            g = poly_gcd(n, b)
            if g.deg > 0:
                return RationalFunction(n.exact_div(g), b.exact_div(g), _reduced=False)
            return RationalFunction(n, b, _reduced=True)
        g = poly_gcd(b, d)
        if g.deg == 0:
            return RationalFunction(a * d + b * c, b * d, _reduced=True)
        b1, d1 = b.exact_div(g), d.exact_div(g)
        n = a * d1 + c * b1
        h = poly_gcd(n, g)
        if h.deg > 0:
            return RationalFunction(n.exact_div(h), b1 * d1 * g.exact_div(h), _reduced=False)
        return RationalFunction(n, b1 * d, _reduced=True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if not a or not c:
            return self.field.zero
        if b.deg == 0 and d.deg == 0:
            return RationalFunction(a * c, b, _reduced=True)
        g1 = poly_gcd(a, d) if d.deg > 0 else None
        g2 = poly_gcd(c, b) if b.deg > 0 else None
        if g1 is not None and g1.deg > 0:
            a, d = a.exact_div(g1), d.exact_div(g1)
        if g2 is not None and g2.deg > 0:
            c, b = c.exact_div(g2), b.exact_div(g2)
        return RationalFunction(a * c, b * d, _reduced=False)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise DivisionByZero("inverse of zero rational function")
        return RationalFunction(self.den, self.num, _reduced=False)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num**n, self.den**n, _reduced=True)

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise DivisionByZero("evaluation at a pole")
        return self.num(x) / d

    def is_polynomial(self) -> bool:
        return self.den.deg == 0

    def as_polynomial(self) -> Polynomial:
        if self.den.deg != 0:
            raise ArithmeticError("rational function is not a polynomial")
        return self.num

    def is_constant(self) -> bool:
        return self.den.deg == 0 and self.num.deg <= 0

    def constant_value(self):
        return self.num[0]

    def to_str(self, var: str | None = None) -> str:
        var = var or "s"
        if self.den.deg == 0:
            return self.num.to_str(var)
        n = self.num.to_str(var)
        if sum(1 for c in self.num.coeffs if c) > 1:
            n = f"({n})"
        return f"{n}/({self.den.to_str(var)})"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_str()!r})"


def is_kth_power(f, k: int) -> bool:
    """Whether a nonzero element of QQ or QQ(x) is a k-th power there."""
    if isinstance(f, Polynomial):
        f = RationalFunction(f)
    if not isinstance(f, RationalFunction):
        return rational_kth_root(f, k) is not None
    if not f.num:
        return True
    if f.base is not QQ:
        raise TypeError("power test implemented over QQ(x) only")
    for part in (f.num, f.den):
        unit, factors = squarefree_decomposition(part)
        if any(m % k for _, m in factors):
            return False
    return rational_kth_root(f.num.lc / f.den.lc, k) is not None


def is_square(f) -> bool:
    return is_kth_power(f, 2)


def squarefree_kernel(f: RationalFunction) -> RationalFunction:
    """Product of the odd-multiplicity factors of numerator and denominator
    (denominator factors moved up), times the leading scalar."""
    out = RationalFunction(Polynomial.constant(f.num.lc / f.den.lc, f.base))
    for part in (f.num, f.den):
        for g, m in squarefree_decomposition(part)[1]:
            if m % 2:
                out = out * RationalFunction(g)
    return out


def kth_root(f, k: int):
    """A k-th root of ``f`` in QQ or QQ(x), or None when there is none."""
    if isinstance(f, Polynomial):
        f = RationalFunction(f)
    if not isinstance(f, RationalFunction):
        return rational_kth_root(f, k)
    if not f.num:
        return f
    roots = []
    for part in (f.num, f.den):
        acc = Polynomial.constant(1, part.field)
        for g, m in squarefree_decomposition(part)[1]:
            if m % k:
                return None
            acc = acc * g ** (m // k)
        roots.append(acc)
    scalar = rational_kth_root(f.num.lc / f.den.lc, k)
    if scalar is None:
        return None
    return RationalFunction(roots[0] * scalar, roots[1])
