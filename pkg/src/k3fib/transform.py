"""Changes of model: Weierstrass isomorphisms and genus-one curves to Weierstrass form."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from .errors import GenericityError, NotAQuartic, SingularPoint, SingularSurface
from .fields import (
    QQ,
    FractionField,
    Polynomial,
    RationalFunction,
    coprime_basis,
    kth_root,
    poly_lcm,
    rational_str,
    squarefree_decomposition,
)
from .mpoly import MPoly
from .weierstrass import WeierstrassModel, minimal_model


# --------------------------------------------------------------------------
# Weierstrass isomorphisms


@dataclass(frozen=True)
class Isomorphism:
    """``x = u^2 x' + r``, ``y = u^3 y' + s u^2 x' + w``."""

    u: object
    r: object
    s: object
    w: object

    def apply(self, m: WeierstrassModel) -> WeierstrassModel:
        u, r, s, w = self.u, self.r, self.s, self.w
        a1, a2, a3, a4, a6 = m.coeffs
        n1 = (a1 + 2 * s) / u
        n2 = (a2 - s * a1 + 3 * r - s * s) / u**2
        n3 = (a3 + r * a1 + 2 * w) / u**3
        n4 = (a4 - s * a3 + 2 * r * a2 - (w + r * s) * a1 + 3 * r * r - 2 * s * w) / u**4
        n6 = (a6 + r * a4 + r * r * a2 + r**3 - w * a3 - w * w - r * w * a1) / u**6
        out = [_as_poly(c, m.field) for c in (n1, n2, n3, n4, n6)]
        return WeierstrassModel(*out, n=m.n, var=m.var)

    def map_point(self, x, y):
        """Image on the transformed model of the point (x, y)."""
        u, r, s, w = self.u, self.r, self.s, self.w
        xp = (x - r) / u**2
        yp = (y - s * u**2 * xp - w) / u**3
        return xp, yp

    def to_json(self) -> dict:
        return {k: _elem_str(getattr(self, k)) for k in ("u", "r", "s", "w")}


def _elem_str(c) -> str:
    if isinstance(c, RationalFunction):
        return c.to_str("t")
    if isinstance(c, Polynomial):
        return c.to_str("t")
    return rational_str(c)


def _as_poly(c, field) -> Polynomial:
    if isinstance(c, Polynomial):
        return c
    if isinstance(c, RationalFunction):
        return c.as_polynomial()
    return Polynomial([c], field)


def long_to_short(m: WeierstrassModel) -> tuple[WeierstrassModel, Isomorphism]:
    """Complete the square in y: the result has a1 = a3 = 0."""
    iso = Isomorphism(QQ.one, QQ.zero, m.a1 / -2, m.a3 / -2)
    return iso.apply(m), iso


def _rf(p) -> RationalFunction:
    return p if isinstance(p, RationalFunction) else RationalFunction(p)


def find_isomorphism(m1: WeierstrassModel, m2: WeierstrassModel) -> Isomorphism | None:
    """An isomorphism over F(t) taking ``m1`` to ``m2``, or None."""
    d1, d2 = m1.discriminant, m2.discriminant
    if not d1 or not d2:
        raise SingularSurface("isomorphism test on a singular model")
    c41, c61, c42, c62 = m1.c4, m1.c6, m2.c4, m2.c6
    if c41 * c41 * c41 * d2 != c42 * c42 * c42 * d1:
        return None
    if not c41:  # j = 0: c6 ratio is u^6
        u = kth_root(_rf(c61) / _rf(c62), 6)
    elif not c61:  # j = 1728: c4 ratio is u^4
        u = kth_root(_rf(c41) / _rf(c42), 4)
    else:
        lam = _rf(c61) * _rf(c42) / (_rf(c62) * _rf(c41))
        u = kth_root(lam, 2)
    if u is None:
        return None
    a1, a2, a3 = (_rf(a) for a in m1.coeffs[:3])
    b1, b2, b3 = (_rf(a) for a in m2.coeffs[:3])
    s = (u * b1 - a1) / 2
    r = (u**2 * b2 - a2 + s * a1 + s * s) / 3
    w = (u**3 * b3 - a3 - r * a1) / 2
    iso = Isomorphism(u, r, s, w)
    return iso


def isomorphic(m1: WeierstrassModel, m2: WeierstrassModel, geometric: bool = False) -> bool:
    """Isomorphism over F(t); with ``geometric`` constant twists are ignored,
    which is isomorphism after extending the constant field."""
    if find_isomorphism(m1, m2) is not None:
        return True
    if not geometric:
        return False
    c41, c61, c42, c62 = m1.c4, m1.c6, m2.c4, m2.c6
    if c41 * c41 * c41 * m2.discriminant != c42 * c42 * c42 * m1.discriminant:
        return False
    if not c41:
        lam, k = _rf(c61) / _rf(c62), 6
    elif not c61:
        lam, k = _rf(c41) / _rf(c42), 4
    else:
        lam, k = _rf(c61) * _rf(c42) / (_rf(c62) * _rf(c41)), 2
    return kth_root(lam / (lam.num.lc / lam.den.lc), k) is not None


# --------------------------------------------------------------------------
# genus-one curves


@dataclass(frozen=True)
class CurveMap:
    """Rational map from a genus-one model onto its Weierstrass model.

    ``X = (alpha x + beta) / (gamma x + delta)``,
    ``Y = eps * y / (gamma x + delta)^k``.
    """

    alpha: object
    beta: object
    gamma: object
    delta: object
    eps: object
    k: int

    def __call__(self, x, y):
        den = self.gamma * x + self.delta
        return (self.alpha * x + self.beta) / den, self.eps * y / den**self.k


@dataclass(frozen=True)
class QuarticY2:
    """``y^2 = q(x)`` with ``q`` of degree 3 or 4 over a field."""

    q: Polynomial


@dataclass(frozen=True)
class PlaneCubicWithPoint:
    """Plane cubic ``F(u, v) = 0`` over QQ(base) with a rational point."""

    curve: MPoly
    point: tuple
    base: str = "t"
    u: str = "u"
    v: str = "v"


def absorb_squares(g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Write ``g = m^2 h`` with ``h`` squarefree up to the unit; returns (h, m)."""
    unit, parts = squarefree_decomposition(g)
    one = Polynomial.constant(1, g.field)
    h = Polynomial.constant(unit, g.field)
    m = one
    for f, e in parts:
        if e % 2:
            h = h * f
        if e >= 2:
            m = m * f ** (e // 2)
    return h, m


def absorb_squares_of_product(factors: Sequence[Polynomial]) -> Polynomial:
    """Squarefree part (up to squares) of a product given by its factors.

    Working on the factors avoids gcds of the expanded product, whose
    coefficients over QQ(t) grow quickly.
    """
    if not factors:
        raise ValueError("empty product")
    field = factors[0].field
    unit = field.one
    for f in factors:
        if not f:
            raise ValueError("zero factor")
        unit = unit * f.lc
    h = Polynomial.constant(unit, field)
    for b in coprime_basis(factors):
        mult = 0
        for f in factors:
            while f.deg >= b.deg:
                q, r = divmod(f, b)
                if r:
                    break
                f, mult = q, mult + 1
        if mult % 2:
            h = h * b
    return h


def quartic_to_weierstrass(q: Polynomial, root=None):
    """Weierstrass coefficients (a1, a2, a3, a4, a6) over the field of ``q``.

    Degree 3 is rescaled directly; degree 4 with a known root is shifted to
    degree 3; otherwise the Jacobian ``Y^2 = X^3 - 27 I X - 27 J`` is used.
    Returns the coefficients and, when available, the explicit CurveMap.
    """
    F = q.field
    zero, one = F.zero, F.one
    if q.deg == 3:
        a, b, c, d = q[3], q[2], q[1], q[0]
        coeffs = (zero, b, zero, a * c, a * a * d)
        return coeffs, CurveMap(a, zero, zero, one, a, 0)
    if q.deg != 4:
        raise NotAQuartic(f"degree {q.deg} is not 3 or 4")
    if root is not None:
        if q(root):
            raise ValueError("supplied root is not a root")
        z = Polynomial.gen(F)
        lin = z * root + one
        cubic = Polynomial([], F)
        for k in range(5):
            if q[k]:
                cubic = cubic + q[k] * lin**k * z ** (4 - k)
        coeffs, _ = quartic_to_weierstrass(cubic)
        lead = cubic[3]
        # z = 1/(x - r), X = lead z, Y = lead y z^2
        return coeffs, CurveMap(zero, lead, one, -root, lead, 2)
    e, d, c, b, a = (q[i] for i in range(5))
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c
    return (zero, zero, zero, -27 * I, -27 * J), None


def cubic_with_point_to_quartic(eq: PlaneCubicWithPoint) -> Polynomial:
    """Project from the point: lines ``v - v0 = m (u - u0)`` give ``y^2 = quartic(m)``."""
    K = FractionField(QQ, eq.base)
    u0, v0 = (K(c) if not isinstance(c, MPoly) else _mp_to_rf(c, eq.base) for c in eq.point)
    # coefficient of w^k as a polynomial in m over K
    bucket: dict[int, dict[int, RationalFunction]] = {}
    for mono, c in eq.curve.terms.items():
        d = dict(mono)
        i, j, tk = d.pop(eq.u, 0), d.pop(eq.v, 0), d.pop(eq.base, 0)
        if d:
            raise ValueError(f"unexpected variables {set(d)} in the cubic")
        coeff = K(RationalFunction(Polynomial.monomial(tk, c)))
        for a in range(i + 1):
            ca = coeff * comb(i, a) * u0 ** (i - a)
            if not ca:
                continue
            for b in range(j + 1):
                cb = ca * comb(j, b) * v0 ** (j - b)
                if cb:
                    slot = bucket.setdefault(a + b, {})
                    slot[b] = slot.get(b, K.zero) + cb

    def poly_m(k: int) -> Polynomial:
        slot = bucket.get(k, {})
        top = max(slot, default=-1)
        return Polynomial([slot.get(i, K.zero) for i in range(top + 1)], K)

    if poly_m(0):
        raise ValueError("the point is not on the cubic")
    A, B, C = poly_m(1), poly_m(2), poly_m(3)
    if not A:
        raise SingularPoint("the chosen point is singular on the cubic")
    return B * B - 4 * A * C


def _mp_to_rf(c: MPoly, base: str) -> RationalFunction:
    return RationalFunction(c.to_polynomial(base))


def integral_model(coeffs: Sequence, var: str = "t") -> WeierstrassModel:
    """Scale Weierstrass coefficients in QQ(var) to a minimal model over QQ[var]."""
    rfs = [_rf(c) if not isinstance(c, RationalFunction) else c for c in coeffs]
    den = Polynomial.constant(1, QQ)
    for c in rfs:
        if c:
            den = poly_lcm(den, c.den)
    weights = (1, 2, 3, 4, 6)
    polys = [(c * RationalFunction(den**i)).as_polynomial() if c else Polynomial([], QQ)
             for c, i in zip(rfs, weights)]
    m = WeierstrassModel(*polys, var=var)
    if not m.discriminant:
        raise SingularSurface("the curve has zero discriminant")
    return minimal_model(m)


def genus_one_to_model(eq, var: str = "t", root=None) -> WeierstrassModel:
    """Minimal Weierstrass model over QQ[var] of a genus-one curve over QQ(var)."""
    if isinstance(eq, PlaneCubicWithPoint):
        q = cubic_with_point_to_quartic(eq)
    elif isinstance(eq, QuarticY2):
        q = eq.q
    else:
        q = eq
    h, _ = absorb_squares(q)
    coeffs, _ = quartic_to_weierstrass(h, root)
    return integral_model(coeffs, var)


# --------------------------------------------------------------------------
# classical elimination on a double cover w^2 = R(u, v)


def classical_eliminate(
    factors: Sequence[MPoly],
    num: MPoly,
    den: MPoly,
    solve_var: str | None,
    base: str = "t",
) -> Polynomial:
    """Generic fibre of ``t = num/den`` on ``w^2 = prod(factors)`` as ``y^2 = g``.

    ``solve_var`` is ``"v"`` (or ``"u"``) when ``num - t*den`` is linear in it,
    ``"w"`` when ``num`` is ``w`` times a cofactor and ``den`` divides the
    branch product, and ``None`` when the parameter is the coordinate ``u``
    itself.  Returns the polynomial ``g`` over QQ(t) after absorbing squares.
    """
    T = MPoly.var(base)
    if solve_var is None:
        if num != MPoly.var("u") or den != MPoly.const(1):
            raise ValueError("identity parameter must be t = u")
        return _quartic_from_factors([f.subs({"u": T}) for f in factors], "v", base)
    if solve_var in ("u", "v"):
        other = "v" if solve_var == "u" else "u"
        rel = den * T - num
        if rel.degree(solve_var) != 1 or "w" in rel.variables():
            raise GenericityError(f"parameter is not linear in {solve_var}")
        alpha = rel.coeff(solve_var, 1)
        beta = rel.coeff(solve_var, 0)
        # substitute solve_var = -beta/alpha into each factor, clearing alpha
        pieces = []
        total = 0
        for f in factors:
            total += f.degree(solve_var)
            pieces.append(_homogenised_subs(f, solve_var, -beta, alpha))
        if total % 2:
            pieces.append(alpha)
        return _quartic_from_factors(pieces, other, base)
    if solve_var == "w":
        if num.degree("w") != 1 or num.coeff("w", 0):
            raise GenericityError("parameter numerator must be linear in w")
        cof = num.coeff("w", 1)
        remaining = list(factors)
        for d in _den_factors(den):
            for i, f in enumerate(remaining):
                if f == d or f == -d:
                    sign = -1 if f == -d else 1
                    remaining.pop(i)
                    if sign < 0:
                        remaining.append(MPoly.const(-1))
                    break
            else:
                raise GenericityError("denominator is not a product of branch factors")
        # w = t*den/cof  =>  R cof^2 = t^2 den^2  =>  (R/den) cof^2 - t^2 den = 0
        curve = _product(remaining) * cof * cof - T * T * den
        A = curve.coeff("v", 2)
        B = curve.coeff("v", 1)
        C = curve.coeff("v", 0)
        if curve.degree("v") != 2:
            raise GenericityError("elimination curve is not quadratic in v")
        return _quartic_in(B * B - 4 * A * C, "u", base)
    raise ValueError(f"unknown solve_var {solve_var!r}")


def _den_factors(den: MPoly) -> list[MPoly]:
    return list(getattr(den, "_factors", [den]))


def factored(*fs: MPoly) -> MPoly:
    """Product that remembers its factors (used for parameter denominators)."""
    out = _FactoredMPoly(_product(fs).terms)
    out._factors = list(fs)
    return out


class _FactoredMPoly(MPoly):
    __slots__ = ("_factors",)


def _product(fs) -> MPoly:
    out = MPoly.const(1)
    for f in fs:
        out = out * f
    return out


def _homogenised_subs(f: MPoly, var: str, numer: MPoly, denom: MPoly) -> MPoly:
    """``denom^deg * f(var = numer/denom)``."""
    k = f.degree(var)
    out = MPoly()
    for i in range(k + 1):
        c = f.coeff(var, i)
        if c:
            out = out + c * numer**i * denom ** (k - i)
    return out


def _quartic_from_factors(pieces: Sequence[MPoly], var: str, base: str) -> Polynomial:
    from .mpoly import to_polynomial_over

    h = absorb_squares_of_product([to_polynomial_over(p, var, base) for p in pieces])
    if h.deg not in (3, 4):
        raise NotAQuartic(f"eliminated curve has degree {h.deg} after absorbing squares")
    return h


def _quartic_in(g: MPoly, var: str, base: str) -> Polynomial:
    from .mpoly import to_polynomial_over

    poly = to_polynomial_over(g, var, base)
    h, _ = absorb_squares(poly)
    if h.deg not in (3, 4):
        raise NotAQuartic(f"eliminated curve has degree {h.deg} after absorbing squares")
    return h
