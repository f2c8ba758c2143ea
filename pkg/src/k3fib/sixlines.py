"""The double plane branched along six lines.

Lines ``L1..L6`` are ``u``, ``u-1``, ``v``, ``v-1``, ``au+bv-1`` and
``cu+dv-1``; the surface is ``w^2 = L1 L2 L3 L4 L5 L6``.  Everything here
works at explicit rational values of ``(a, b, c, d)``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IdentityFails, ParseError
from .expr import evaluate, parse
from .fields import QQ, Polynomial, rational_str
from .mpoly import MFrac, MPoly
from .transform import classical_eliminate as _eliminate
from .transform import factored

LINE_EQUATIONS = {1: "u", 2: "u-1", 3: "v", 4: "v-1", 5: "au+bv-1", 6: "cu+dv-1"}

# homogeneous coefficient vectors (p, q, r) of p u + q v + r = 0
_LINE_VECTORS = {
    1: ("1", "0", "0"),
    2: ("1", "0", "-1"),
    3: ("0", "1", "0"),
    4: ("0", "1", "-1"),
    5: ("a", "b", "-1"),
    6: ("c", "d", "-1"),
}

# six of the fifteen intersection points on one conic, one factor per
# configuration (computed once from the 6x6 conic determinants)
CONIC_CONDITIONS = (
    "a+bc-c",
    "a-bc+b-1",
    "abc+abd-ab-acd-bcd+cd",
    "ad+b-d",
    "ad-a+c",
    "ad-a-b+1",
    "ad-a-bc+b+c-d",
    "ad-a-bc+c",
    "ad-a-bc-d+1",
    "ad-bc",
    "ad-bc+b+c-1",
    "ad-bc+b-d",
    "ad-c-d+1",
    "bc-b+d",
    "bc-c-d+1",
)

# for each perfect matching {ij, kl, mn} of the six lines: P_ij, P_kl and
# P_mn are collinear
MATCHING_CONDITIONS = (
    "ad-bc", "ad-a+c", "a+bc-c", "a+b-c-d", "ad-a-bc-d+1",
    "ad-bc+b+c-1", "ad-a-bc+b+c-d", "a-bc+b-1", "ad-c-d+1", "bc-c-d+1",
    "b+c-1", "bc-b+d", "ad-a-b+1", "a+d-1", "ad+b-d",
)

# Extra coincidences of singular fibres seen by individual classes.  The
# factor below merges an I2 and an I1 of class 2.5 into a III fibre; the
# classes reached from 2.5 by a neighbor step inherit it.
_COLLISION_25 = "ab-ad+b^2c-2bc-bd+b+c+d-1"
CLASS_CONDITIONS = {
    "2.5": (_COLLISION_25,),
    "1.1": (_COLLISION_25,),
    "2.1": (_COLLISION_25,),
    "2.4": (_COLLISION_25,),
}

DEFAULT_TUPLES = ((2, 3, 5, 7), (3, 5, 7, 11), (2, 5, 3, 11), (4, 7, 3, 9))


@dataclass(frozen=True)
class SixLinesConfig:
    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for k in "abcd":
            object.__setattr__(self, k, QQ(getattr(self, k)))

    @classmethod
    def parse(cls, text: str) -> "SixLinesConfig":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ParseError(f"expected four rationals a,b,c,d, got {text!r}")
        return cls(*(QQ(p) for p in parts))

    @property
    def params(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def labels(self) -> list[str]:
        return [rational_str(x) for x in self.params]

    def __str__(self) -> str:
        return ",".join(self.labels())

    def value(self, expr: str):
        """Evaluate an expression in a, b, c, d."""
        return evaluate(parse(expr), self.env(), QQ)

    def env(self, **extra) -> dict:
        return {**dict(zip("abcd", self.params)), **extra}

    def line(self, i: int) -> MPoly:
        env = self.env(u=MPoly.var("u"), v=MPoly.var("v"))
        return evaluate(parse(LINE_EQUATIONS[i]), env, MPoly.const)

    def branch_factors(self) -> list[MPoly]:
        return [self.line(i) for i in range(1, 7)]

    def branch_locus(self) -> MPoly:
        out = MPoly.const(1)
        for f in self.branch_factors():
            out = out * f
        return out

    def intersection_point(self, i: int, j: int) -> tuple:
        """Homogeneous coordinates (u : v : z) of L_i meeting L_j."""
        p, q = (tuple(self.value(e) for e in _LINE_VECTORS[k]) for k in (i, j))
        return (
            p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0],
        )


def _det3(rows) -> object:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def genericity_check(cfg: SixLinesConfig, classes: Iterable[str] = ()) -> tuple[bool, list[str]]:
    """Whether the six lines are in general position for the given classes.

    Always checked: no two lines coincide and no three are concurrent, no
    six of the intersection points lie on a conic, and no three points from
    disjoint pairs of lines are collinear.  Class-specific collision
    factors are added for every id in ``classes``.
    """
    violations = []
    vecs = {k: tuple(cfg.value(e) for e in v) for k, v in _LINE_VECTORS.items()}
    for trip in itertools.combinations(range(1, 7), 3):
        if not _det3([vecs[k] for k in trip]):
            violations.append("lines L{} L{} L{} are concurrent".format(*trip))
    for cond in CONIC_CONDITIONS:
        if not cfg.value(cond):
            violations.append(f"conic condition {cond} = 0")
    for cond in MATCHING_CONDITIONS:
        if cond not in CONIC_CONDITIONS and not cfg.value(cond):
            violations.append(f"collinear intersection points: {cond} = 0")
    seen = set()
    for cid in classes:
        for cond in CLASS_CONDITIONS.get(cid, ()):
            if cond not in seen and not cfg.value(cond):
                seen.add(cond)
                violations.append(f"class {cid}: {cond} = 0")
    return not violations, violations


def _parse_tuples(text: str) -> list[SixLinesConfig]:
    return [SixLinesConfig.parse(chunk) for chunk in text.split(";") if chunk.strip()]


def sample_tuples(classes: Iterable[str] = ()) -> list[SixLinesConfig]:
    """Default parameter tuples (or ``K3FIB_TUPLES``) that are generic for ``classes``."""
    env = os.environ.get("K3FIB_TUPLES")
    cands = _parse_tuples(env) if env else [SixLinesConfig(*t) for t in DEFAULT_TUPLES]
    classes = list(classes)
    return [c for c in cands if genericity_check(c, classes)[0]]


# --------------------------------------------------------------------------
# elimination


@dataclass(frozen=True)
class ClassicalParameter:
    """``t = num/den`` on the double plane; ``den_factors`` keeps a product
    of branch factors split (needed when ``w`` is eliminated)."""

    num: str
    den: str
    solve_var: str | None
    den_factors: tuple = ()

    def text(self) -> str:
        return f"t = ({self.num})/({self.den})"


def _mpoly(cfg: SixLinesConfig, expr: str) -> MPoly:
    env = cfg.env(u=MPoly.var("u"), v=MPoly.var("v"), w=MPoly.var("w"))
    return evaluate(parse(expr), env, MPoly.const)


def classical_eliminate(cfg: SixLinesConfig, param: ClassicalParameter) -> Polynomial:
    """The generic fibre of ``param`` as ``y^2 = g`` with ``g`` over QQ(t)."""
    num = _mpoly(cfg, param.num)
    if param.den_factors:
        den = factored(*(_mpoly(cfg, f) for f in param.den_factors))
    else:
        den = _mpoly(cfg, param.den)
    return _eliminate(cfg.branch_factors(), num, den, param.solve_var)


# --------------------------------------------------------------------------
# identities between (t, x, y) and (u, v, w) expressions


@dataclass(frozen=True)
class CrossIdentity:
    """``lhs == rhs`` after binding ``steps`` in order; ``W`` is the branch
    product, so ``w^2`` is written ``W``."""

    name: str
    steps: Sequence[tuple[str, str]]
    lhs: str
    rhs: str


def check_identity(cfg: SixLinesConfig, ident: CrossIdentity) -> bool:
    const = lambda n: MFrac(QQ(n))  # noqa: E731
    env = {k: const(v) for k, v in zip("abcd", cfg.params)}
    env.update(u=MFrac(MPoly.var("u")), v=MFrac(MPoly.var("v")), W=MFrac(cfg.branch_locus()))
    for name, expr in ident.steps:
        env[name] = evaluate(parse(expr), env, const)
    lhs = evaluate(parse(ident.lhs), env, const)
    rhs = evaluate(parse(ident.rhs), env, const)
    return lhs == rhs


_T27 = ("t", "uv/(cu+bv-1)")
_X27 = ("x", "t(bt-dt-1)(bt+ct-t-1)(abt-bct-a+1)/(u-1)")
_G210 = (
    "b(a-c)(b-d)(ad-bc)u^2v^2 + ac^2(ad-bc+b-d)u^3"
    " + c(2ab^2-b^2c^2-abd-b^2c+bcd-ad^2+a^2d^2)u^2v"
    " - b(b^2c^2+ad^2-a^2d^2+b^2c+a^2bd-bcd-ab^2-ab^2c)uv^2"
    " + c(bc^2+abc+2ad-2a^2d-2ab)u^2 - b^3(a-c)v^2"
    " + (ad^2-2ab^2c+b^2c-2ab^2+abd+3b^2c^2-a^2d^2-bcd)uv"
    " + (ab-ad-2bc^2+abc+a^2d)u + 2b^2(a-c)v - b(a-c)"
)

CROSS_IDENTITIES = {
    "2.10": CrossIdentity(
        "s(t(u,v), x(u,v)) = g/((u-1)(audv-bvcu+cu+bv-1)(cu+bv-1))",
        (_T27, _X27),
        "((ad-bc)x - a(ad-bc+b-d)t + a(c+b-1)(ad-bc+b-d)t^2)/(t((ad-bc)t+1)((b+c-1)t-1))",
        f"({_G210})/((u-1)(audv-bvcu+cu+bv-1)(cu+bv-1))",
    ),
    "2.7": CrossIdentity(
        "y(u,v,w)^2 equals the cubic at x(u,v) modulo w^2 = W",
        (_T27, _X27),
        "(t(bt-dt-1)(bt+ct-t-1)(abt-bct-a+1)(u-bt)^2)^2 / (u(cu-1)(u-1)^2)^2 * W",
        "(x-t(bt+ct-t-1)(abt-bct-a+1))(x-at(bt-dt-1)(bt+ct-t-1))(x-t(1-ct)(bt-dt-1)(abt-bct-a+1))",
    ),
    "trivial": CrossIdentity("t composed with nothing", (_T27,), "t", "uv/(cu+bv-1)"),
}


def cross_identity_checks(class_id: str, cfg: SixLinesConfig) -> bool:
    ident = CROSS_IDENTITIES.get(class_id)
    if ident is None:
        raise KeyError(f"no (t,x,y) versus (u,v,w) identity is recorded for class {class_id}")
    if not check_identity(cfg, ident):
        raise IdentityFails(f"identity fails for class {class_id}: {ident.name}")
    return True
