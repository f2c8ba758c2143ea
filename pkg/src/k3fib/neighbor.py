"""Two-neighbor steps between elliptic fibrations.

A new elliptic parameter ``s`` is a function on the surface of the shape
``A(t) + B(t) x`` (case ``2O``), ``A + B (y + y0)/(x - x0)`` for a section
``P = (x0, y0)`` (case ``O+P``) or the same with a 2-torsion section ``T``
(case ``O+T``, ``y0 = 0``).  Substituting turns the fibre over ``s`` into a
curve ``y^2 = g(t)`` over QQ(s); squares are absorbed and the Jacobian is
taken.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DegreeOverflow, Inconsistent, NoSection, Underdetermined
from .fields import QQ, FractionField, Place, Polynomial, RationalFunction
from .transform import absorb_squares, integral_model, long_to_short, quartic_to_weierstrass
from .weierstrass import WeierstrassModel

CASES = ("2O", "O+P", "O+T")


def _rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    return RationalFunction(Polynomial([x], QQ))


@dataclass(frozen=True)
class NeighborSpec:
    case: str
    A: RationalFunction
    B: RationalFunction
    P: tuple | None = None

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"case must be one of {CASES}")
        object.__setattr__(self, "A", _rf(self.A))
        object.__setattr__(self, "B", _rf(self.B))
        if self.P is not None:
            object.__setattr__(self, "P", tuple(_rf(c) for c in self.P))
        if self.case == "O+P" and self.P is None:
            raise ValueError("case O+P needs a section P")
        if not self.B:
            raise ValueError("B must be nonzero")


def _lift(rf: RationalFunction, K: FractionField) -> RationalFunction:
    num = Polynomial([K(c) for c in rf.num.coeffs], K)
    den = Polynomial([K(c) for c in rf.den.coeffs], K)
    return RationalFunction(num, den, _reduced=True)


def neighbor_curve(m: WeierstrassModel, spec: NeighborSpec, var: str = "s") -> Polynomial:
    """The polynomial ``g(t)`` over QQ(var) with fibre ``y^2 = g`` (squares absorbed)."""
    if not m.is_short():
        m, _ = long_to_short(m)
    K = FractionField(QQ, var)
    S = RationalFunction(Polynomial([K.gen()], K), _reduced=True)
    a2, a4, a6 = (_lift(_rf(a), K) for a in (m.a2, m.a4, m.a6))
    A, B = _lift(spec.A, K), _lift(spec.B, K)
    k = (S - A) / B
    if spec.case == "2O":
        x = k
        val = ((x + a2) * x + a4) * x + a6
    else:
        if spec.P is None:
            x0, y0 = _rf(QQ.zero), _rf(QQ.zero)
        else:
            x0 = spec.P[0]
            y0 = spec.P[1] if len(spec.P) > 1 else _rf(QQ.zero)
        if spec.case == "O+T" and y0:
            raise NoSection("a 2-torsion section has y = 0")
        lhs = y0 * y0
        rhs = ((x0 + _rf(m.a2)) * x0 + _rf(m.a4)) * x0 + _rf(m.a6)
        if lhs != rhs:
            raise NoSection("the given point is not a section of the model")
        X0, Y0 = _lift(x0, K), _lift(y0, K)
        alpha = 3 * X0 + a2
        beta = (3 * X0 + 2 * a2) * X0 + a4
        diff = alpha - k * k
        val = diff * diff - 4 * (beta + 2 * k * Y0)
    g = val.num * val.den
    h, _ = absorb_squares(g)
    return h


def two_neighbor(m: WeierstrassModel, spec: NeighborSpec, var: str = "s") -> WeierstrassModel:
    """Minimal Weierstrass model over QQ[var] of the neighbor fibration."""
    h = neighbor_curve(m, spec, var)
    if h.deg > 4:
        raise DegreeOverflow(f"the fibre over {var} has degree {h.deg} in t; the divisor is not of degree 2")
    coeffs, _ = quartic_to_weierstrass(h)
    return integral_model(coeffs, var)


# --------------------------------------------------------------------------
# fitting the parameter from vanishing conditions


@dataclass(frozen=True)
class Constraint:
    """Numerator of ``s`` restricted to ``x = x_section(t)`` vanishes to ``order`` at ``place``.

    At infinity the numerator is read with weight ``2n`` (the weight of x).
    """

    place: Place
    x_section: Polynomial
    order: int


@dataclass
class ParameterTemplate:
    """``s = (x + sum_i A_i t^i) / denominator`` with some A_i fixed."""

    denominator: Polynomial
    unknowns: Sequence[int]
    constraints: Sequence[Constraint]
    fixed: dict = field(default_factory=dict)

    def numerator(self, values: dict) -> Polynomial:
        out = Polynomial([], QQ)
        for i, c in {**self.fixed, **values}.items():
            out = out + Polynomial.monomial(i, c)
        return out

    def spec(self, values: dict) -> NeighborSpec:
        """The 2O spec ``s = A + B x`` for solved coefficients."""
        den = _rf(self.denominator)
        return NeighborSpec("2O", _rf(self.numerator(values)) / den, den.inverse())


def solve_linear(rows: list[list], rhs: list, n: int | None = None) -> list:
    """Unique solution in ``n`` unknowns of a linear system over QQ (Gauss-Jordan)."""
    if n is None:
        n = len(rows[0]) if rows else 0
    aug = [[QQ(c) for c in r] + [QQ(b)] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = QQ.one / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [vi - f * vr for vi, vr in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][n]:
            raise Inconsistent("vanishing conditions are inconsistent")
    if r < n:
        free = sorted(set(range(n)) - set(piv_cols))
        raise Underdetermined(f"{len(free)} coefficient(s) left free: columns {free}")
    sol = [QQ.zero] * n
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][n]
    return sol


def fit_parameter(m: WeierstrassModel, template: ParameterTemplate) -> dict:
    """Solve the linear conditions for the free coefficients ``A_i``."""
    unknowns = list(template.unknowns)
    fixed = template.numerator({})
    rows, rhs = [], []
    weight_x = 2 * m.weight
    for con in template.constraints:
        base = con.x_section + fixed
        if con.place.is_infinite:
            top = weight_x - con.order
            degs = range(top + 1, max([base.deg] + unknowns) + 1)
            for j in degs:
                rows.append([QQ.one if i == j else QQ.zero for i in unknowns])
                rhs.append(-base[j])
            continue
        modulus = con.place.poly**con.order
        rem = base % modulus
        cols = [Polynomial.monomial(i, 1) % modulus for i in unknowns]
        for j in range(modulus.deg):
            rows.append([c[j] for c in cols])
            rhs.append(-rem[j])
    sol = solve_linear(rows, rhs, len(unknowns))
    return dict(zip(unknowns, sol))
