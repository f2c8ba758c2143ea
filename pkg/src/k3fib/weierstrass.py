"""Weierstrass models over F[t] and their singular fibres."""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    AmbiguousBundle,
    NoSection,
    ParseError,
    SingularSurface,
    UnclassifiableTriple,
)
from .fields import (
    QQ,
    Place,
    Polynomial,
    coprime_basis,
    poly_gcd,
    rational_roots,
    rational_str,
    squarefree_decomposition,
    valuation,
)

A_INDICES = (1, 2, 3, 4, 6)


@dataclass(frozen=True, eq=False)
class WeierstrassModel:
    """``y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6`` with a_i in F[t].

    ``n`` is the homogenising weight at infinity (``a_i`` has weight ``n*i``);
    when omitted it is the least weight making the model integral there.
    """

    a1: Polynomial
    a2: Polynomial
    a3: Polynomial
    a4: Polynomial
    a6: Polynomial
    n: int | None = None
    var: str = "t"

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, n: int | None = None, var: str = "t", field=QQ):
        """``coeffs`` lists a1, a2, a3, a4, a6 as polynomials or coefficient lists."""
        polys = [c if isinstance(c, Polynomial) else Polynomial(c, field) for c in coeffs]
        return cls(*polys, n=n, var=var)

    @classmethod
    def short(cls, a2, a4, a6, n: int | None = None, var: str = "t"):
        zero = Polynomial([], a4.field)
        return cls(zero, a2 if isinstance(a2, Polynomial) else Polynomial([a2], a4.field), zero, a4, a6, n, var)

    @property
    def coeffs(self) -> tuple[Polynomial, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def field(self):
        return self.a4.field

    @cached_property
    def weight(self) -> int:
        if self.n is not None:
            return self.n
        w = 0
        for i, a in zip(A_INDICES, self.coeffs):
            if a:
                w = max(w, -(-a.deg // i))
        return max(w, 1)

    def with_weight(self, n: int | None) -> "WeierstrassModel":
        return WeierstrassModel(*self.coeffs, n=n, var=self.var)

    def renamed(self, var: str) -> "WeierstrassModel":
        return WeierstrassModel(*self.coeffs, n=self.n, var=var)

    def is_short(self) -> bool:
        return not self.a1 and not self.a3

    # invariants
    @cached_property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @cached_property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @cached_property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @cached_property
    def b8(self):
        a1, a2, a3, a4, a6 = self.coeffs
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @cached_property
    def c4(self):
        return self.b2 * self.b2 - 24 * self.b4

    @cached_property
    def c6(self):
        b2, b4, b6 = self.b2, self.b4, self.b6
        return -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6

    @cached_property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -(b2 * b2 * b8) - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def invariants(self) -> dict:
        return {
            "b2": self.b2, "b4": self.b4, "b6": self.b6, "b8": self.b8,
            "c4": self.c4, "c6": self.c6, "disc": self.discriminant,
        }

    def rhs(self, x):
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def contains(self, x, y) -> bool:
        lhs = y * y + self.a1 * x * y + self.a3 * y
        return lhs == self.rhs(x)

    # serialisation
    def to_json(self) -> dict:
        return {
            "n": self.weight,
            "a": [[rational_str(c) for c in a.coeffs] for a in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict, var: str = "t") -> "WeierstrassModel":
        try:
            coeffs = data["a"]
            if len(coeffs) != 5:
                raise ParseError("model needs five coefficient lists a1 a2 a3 a4 a6")
            polys = [Polynomial([QQ(str(c)) for c in a], QQ) for a in coeffs]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed model: {exc}") from exc
        return cls(*polys, n=data.get("n"), var=data.get("var", var))

    def to_str(self) -> str:
        v = self.var
        parts = ["y^2"]
        if self.a1:
            parts.append(f"({self.a1.to_str(v)})*x*y")
        if self.a3:
            parts.append(f"({self.a3.to_str(v)})*y")
        rhs = ["x^3"]
        for name, a, mono in (("a2", self.a2, "*x^2"), ("a4", self.a4, "*x"), ("a6", self.a6, "")):
            if a:
                rhs.append(f"({a.to_str(v)}){mono}")
        return " + ".join(parts) + " = " + " + ".join(rhs)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"WeierstrassModel({self.to_str()!r}, n={self.weight})"


def short_form(m: WeierstrassModel) -> WeierstrassModel:
    """Depressed model ``y^2 = x^3 - c4/48 x - c6/864`` (isomorphic, u = 1)."""
    zero = Polynomial([], m.field)
    return WeierstrassModel(zero, zero, zero, m.c4 / 48, m.c6 / -864, n=m.n, var=m.var)


# --------------------------------------------------------------------------
# Kodaira types

_TYPE_RE = re.compile(r"^(I|II|III|IV)(\d*)(\*?)$")


@dataclass(frozen=True, order=False)
class FiberType:
    symbol: str

    def __post_init__(self):
        m = _TYPE_RE.match(self.symbol)
        if not m:
            raise ParseError(f"unknown Kodaira symbol {self.symbol!r}")
        roman, num, star = m.groups()
        if roman != "I" and num:
            raise ParseError(f"unknown Kodaira symbol {self.symbol!r}")
        if roman == "I" and not num:
            raise ParseError(f"I needs an index: {self.symbol!r}")

    @classmethod
    def I(cls, n: int) -> "FiberType":  # noqa: E743
        return cls(f"I{n}")

    @classmethod
    def I_star(cls, n: int) -> "FiberType":
        return cls(f"I{n}*")

    @property
    def roman(self) -> str:
        return _TYPE_RE.match(self.symbol).group(1)

    @property
    def index(self) -> int:
        num = _TYPE_RE.match(self.symbol).group(2)
        return int(num) if num else 0

    @property
    def star(self) -> bool:
        return self.symbol.endswith("*")

    @property
    def components(self) -> int:
        r, n = self.roman, self.index
        if r == "I":
            if self.star:
                return n + 5
            return max(n, 1)
        return {("II", False): 1, ("III", False): 2, ("IV", False): 3,
                ("IV", True): 7, ("III", True): 8, ("II", True): 9}[(r, self.star)]

    @property
    def euler(self) -> int:
        r, n = self.roman, self.index
        if r == "I":
            return n + 6 if self.star else n
        return {("II", False): 2, ("III", False): 3, ("IV", False): 4,
                ("IV", True): 8, ("III", True): 9, ("II", True): 10}[(r, self.star)]

    @property
    def is_smooth(self) -> bool:
        return self.symbol == "I0"

    @property
    def is_filler(self) -> bool:
        """Irreducible singular fibres (II and I1)."""
        return self.symbol in ("II", "I1")

    def sort_key(self):
        r, n, s = self.roman, self.index, self.star
        if s:
            group = {"II": 0, "III": 1, "IV": 2, "I": 3}[r]
        else:
            group = {"IV": 4, "III": 5, "I": 6 if n >= 2 else 8, "II": 7}[r]
        return (group, -n)

    def __str__(self) -> str:
        return self.symbol


def kodaira_from_triple(v4, v6, vd) -> FiberType:
    """Type of a minimal triple ``(v(c4), v(c6), v(disc))`` in characteristic 0."""
    if vd == 0:
        return FiberType("I0")
    if v4 == 0:
        return FiberType.I(vd)
    if vd > 6 and v4 == 2 and v6 == 3:
        return FiberType.I_star(vd - 6)
    table = {
        2: ("II", lambda: v4 >= 1 and v6 == 1),
        3: ("III", lambda: v4 == 1 and v6 >= 2),
        4: ("IV", lambda: v4 >= 2 and v6 == 2),
        6: ("I0*", lambda: v4 >= 2 and v6 >= 3),
        8: ("IV*", lambda: v4 >= 3 and v6 == 4),
        9: ("III*", lambda: v4 == 3 and v6 >= 5),
        10: ("II*", lambda: v4 >= 4 and v6 == 5),
    }
    entry = table.get(vd)
    if entry and entry[1]():
        return FiberType(entry[0])
    raise UnclassifiableTriple(f"no Kodaira type for (v(c4), v(c6), v(disc)) = {(v4, v6, vd)}")


def _uniform_valuation(f: Polynomial, place: Place, weight: int):
    v = valuation(f, place, weight)
    if place.is_infinite or v == math.inf or place.poly.deg == 1:
        return v
    rest = f.exact_div(place.poly**v) if v else f
    if poly_gcd(rest, place.poly).deg > 0:
        raise AmbiguousBundle(f"valuation not uniform over the factors of {place.label()}")
    return v


def local_triple(m: WeierstrassModel, place: Place) -> tuple:
    """Minimal valuations of (c4, c6, disc) at ``place``."""
    n = m.weight
    disc = m.discriminant
    if not disc:
        raise SingularSurface("discriminant vanishes identically")
    v4 = _uniform_valuation(m.c4, place, 4 * n)
    v6 = _uniform_valuation(m.c6, place, 6 * n)
    vd = _uniform_valuation(disc, place, 12 * n)
    if min(v4, v6, vd) < 0:
        raise ValueError(f"model is not integral at {place.label(m.var)}")
    k = min(v4 // 4 if v4 != math.inf else math.inf, v6 // 6 if v6 != math.inf else math.inf)
    if k:
        v4, v6, vd = v4 - 4 * k, v6 - 6 * k, vd - 12 * k
    return v4, v6, vd


def classify_place(m: WeierstrassModel, place: Place) -> FiberType:
    return kodaira_from_triple(*local_triple(m, place))


def minimalize_at(m: WeierstrassModel, place: Place) -> WeierstrassModel:
    """Remove the non-minimality of ``m`` at ``place`` by rescaling."""
    while True:
        n = m.weight
        v4 = valuation(m.c4, place, 4 * n)
        v6 = valuation(m.c6, place, 6 * n)
        if not (v4 >= 4 and v6 >= 6):
            return m
        target = m
        if not all(valuation(a, place, n * i) >= i for i, a in zip(A_INDICES, m.coeffs)):
            target = short_form(m)
        if place.is_infinite:
            m = target.with_weight(n - 1)
            continue
        p = place.poly
        new = [a.exact_div(p**i) if a else a for i, a in zip(A_INDICES, target.coeffs)]
        m = WeierstrassModel(*new, n=m.n, var=m.var)


def minimal_model(m: WeierstrassModel) -> WeierstrassModel:
    """Globally minimal at the finite places, with the least weight at infinity."""
    if not m.c4 or not m.c6:
        both = m.c6 if not m.c4 else m.c4
    else:
        both = poly_gcd(m.c4, m.c6)
    if both.deg > 0:
        for p in coprime_basis([both]):
            m = minimalize_at(m, Place.finite(p))
    return m.with_weight(None)


@dataclass(frozen=True)
class FiberReport:
    place: Place
    type: FiberType
    v_delta: int
    degree: int
    var: str = "t"

    @property
    def components(self) -> int:
        return self.type.components

    @property
    def euler(self) -> int:
        return self.type.euler

    def to_json(self) -> dict:
        return {
            "place": self.place.label(self.var),
            "type": self.type.symbol,
            "vDelta": self.v_delta,
            "components": self.components,
            "euler": self.euler,
            "degree": self.degree,
        }


def singular_places(m: WeierstrassModel) -> list[Place]:
    disc = m.discriminant
    if not disc:
        raise SingularSurface("discriminant vanishes identically")
    inputs = [disc] + [c for c in (m.c4, m.c6) if c]
    places = []
    for p in coprime_basis(inputs):
        if disc % p:
            continue
        if p.field is QQ and p.deg > 1:
            roots = rational_roots(p)
            for r in roots:
                places.append(Place.at(r))
                p = p.exact_div(Polynomial([-r, 1], QQ))
            if p.deg <= 0:
                continue
        places.append(Place.finite(p))
    places.sort(key=lambda pl: (pl.poly.deg, pl.poly[0] if pl.poly.deg == 1 else 0))
    return places + [Place.infinity()]


def fiber_configuration(m: WeierstrassModel) -> list[FiberReport]:
    """Singular fibres (finite bundles, then infinity), smooth ones omitted."""
    out = []
    for place in singular_places(m):
        v4, v6, vd = local_triple(m, place)
        ft = kodaira_from_triple(v4, v6, vd)
        if ft.is_smooth:
            continue
        out.append(FiberReport(place, ft, vd, place.degree, m.var))
    return out


def euler_sum(fibers: Iterable[FiberReport]) -> int:
    return sum(f.degree * f.euler for f in fibers)


def shioda_tate_rank(fibers: Iterable, rho: int = 16) -> int:
    """``rho - 2 - sum(deg * (m_v - 1))``; accepts reports or (type, count) pairs."""
    total = 0
    for f in fibers:
        if isinstance(f, FiberReport):
            total += f.degree * (f.components - 1)
        else:
            ft, cnt = f
            total += cnt * (FiberType(str(ft)).components - 1)
    return rho - 2 - total


# --------------------------------------------------------------------------
# configurations as multisets


class Configuration(Counter):
    """Multiset of Kodaira types (bundles counted with their degree)."""

    @classmethod
    def of(cls, fibers: Iterable[FiberReport]) -> "Configuration":
        c = cls()
        for f in fibers:
            c[f.type.symbol] += f.degree
        return c

    def named(self) -> "Configuration":
        return Configuration({k: v for k, v in self.items() if v and not FiberType(k).is_filler})

    def euler(self) -> int:
        return sum(FiberType(k).euler * v for k, v in self.items())

    def to_str(self) -> str:
        keys = sorted((k for k, v in self.items() if v), key=lambda k: FiberType(k).sort_key())
        return " + ".join(k if self[k] == 1 else f"{self[k]}{k}" for k in keys)

    def __str__(self) -> str:
        return self.to_str()


_TERM_RE = re.compile(r"^(\d*|[ab])((?:I|II|III|IV)\d*\*?)$")


def parse_configuration(text: str) -> tuple[Configuration, bool]:
    """Parse e.g. ``"I10 + I2 + aII + bI1"``; returns (named part, has_filler)."""
    conf = Configuration()
    filler = False
    for raw in text.replace(" ", "").split("+"):
        m = _TERM_RE.match(raw)
        if not m:
            raise ParseError(f"bad configuration term {raw!r}")
        mult, sym = m.groups()
        FiberType(sym)
        if mult in ("a", "b"):
            filler = True
            continue
        conf[sym] += int(mult) if mult else 1
    return conf, filler


@dataclass
class ConfigMatch:
    ok: bool
    computed: str
    expected: str
    filler: tuple[int, int] | None = None
    notes: list = field(default_factory=list)


def match_configuration(computed: Configuration, expected: str, total: int = 24) -> ConfigMatch:
    """Named types must agree exactly; whatever Euler number the expected row
    leaves unaccounted for may only be made up by extra II and I1 fibres."""
    exp, _ = parse_configuration(expected)
    budget = total - exp.euler()
    notes = []
    ok = True
    if budget < 0:
        ok = False
        notes.append(f"expected row has Euler sum {exp.euler()} > {total}")
    for sym in set(computed) | set(exp):
        if sym in ("II", "I1"):
            continue
        if computed.get(sym, 0) != exp.get(sym, 0):
            ok = False
    extra_a = computed.get("II", 0) - exp.get("II", 0)
    extra_b = computed.get("I1", 0) - exp.get("I1", 0)
    if extra_a < 0 or extra_b < 0:
        ok = False
    elif budget >= 0 and 2 * extra_a + extra_b != budget:
        ok = False
        notes.append(f"filler Euler 2a+b = {2 * extra_a + extra_b}, expected {budget}")
    filler = (extra_a, extra_b) if (extra_a, extra_b) != (0, 0) or budget else None
    return ConfigMatch(ok, computed.to_str(), expected, filler, notes)


# --------------------------------------------------------------------------
# two-torsion


def _series_root(coeffs_t: list[Polynomial], t0, r0, prec: int) -> Polynomial:
    """Lift a simple root ``r0`` of F(x)|_{t=t0} to a polynomial root mod (t-t0)^prec.

    ``coeffs_t[k]`` is the coefficient of x^k.
    """
    t = Polynomial.gen(QQ)
    shifted = [c(t + t0) for c in coeffs_t]  # variable u = t - t0

    def ev(x: Polynomial) -> Polynomial:
        acc = Polynomial([], QQ)
        for c in reversed(shifted):
            acc = acc * x + c
        return acc

    deriv = sum((k * shifted[k][0] * r0 ** (k - 1) for k in range(1, len(shifted))), QQ.zero)
    x = Polynomial([r0], QQ)
    for k in range(1, prec):
        res = ev(x)
        ck = -res[k] / deriv
        x = x + Polynomial.monomial(k, ck)
    return x(t - t0)


def polynomial_roots_in_x(coeffs_t: list[Polynomial]) -> list[Polynomial]:
    """Roots in QQ[t] of ``sum coeffs_t[k] x^k`` whose leading coefficient is constant."""
    lead = coeffs_t[-1]
    if lead.deg != 0:
        raise ValueError("leading coefficient must be a nonzero constant")
    deg_x = len(coeffs_t) - 1
    bound = 0
    for k, c in enumerate(coeffs_t[:-1]):
        if c:
            bound = max(bound, -(-c.deg // (deg_x - k)))
    for t0 in _sample_points():
        spec = Polynomial([c(t0) for c in coeffs_t], QQ)
        if poly_gcd(spec, spec.derivative()).deg > 0:
            continue
        out = []
        for r0 in rational_roots(spec):
            cand = _series_root(coeffs_t, t0, r0, bound + 1)
            val = Polynomial([], QQ)
            for c in reversed(coeffs_t):
                val = val * cand + c
            if not val:
                out.append(cand)
        return out
    raise SingularSurface("cubic is inseparable at every sample point")


def _sample_points():
    yield QQ(0)
    k = 1
    while k < 200:
        yield QQ(k)
        yield QQ(-k)
        k += 1


def two_torsion(m: WeierstrassModel) -> list[tuple[Polynomial, Polynomial]]:
    """Nonzero 2-torsion sections (x, y) with x in F[t]."""
    if m.field is not QQ:
        raise NotImplementedError("two_torsion is implemented over QQ(t)")
    if not m.discriminant:
        raise SingularSurface("discriminant vanishes identically")
    # 2-torsion: 2y + a1 x + a3 = 0, so x solves 4x^3 + b2 x^2 + 2 b4 x + b6
    cubic = [m.b6, 2 * m.b4, m.b2, Polynomial([4], QQ)]
    xs = polynomial_roots_in_x(cubic)
    pts = []
    for x in sorted(xs, key=lambda p: [str(c) for c in p.coeffs]):
        y = (m.a1 * x + m.a3) / -2
        pts.append((x, y))
    return pts


def torsion_shape(points: Sequence) -> str:
    return {0: "{0}", 1: "Z/2", 3: "(Z/2)^2"}[len(points)]


def verify_section(m: WeierstrassModel, x, y=None) -> bool:
    """Check that (x, y) lies on ``m``; with ``y`` omitted, that it is 2-torsion."""
    if y is None:
        if m.a1 or m.a3:
            y = (m.a1 * x + m.a3) / -2
        else:
            return not m.rhs(x)
    return m.contains(x, y)


def require_two_torsion(m: WeierstrassModel, x) -> None:
    if not verify_section(m, x):
        raise NoSection(f"x = {x} is not the abscissa of a 2-torsion section")
