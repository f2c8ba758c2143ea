import pytest
import sympy as sp

from k3fib import catalog as cat
from k3fib.errors import DegreeOverflow, Inconsistent, NoSection, Underdetermined
from k3fib.fields import QQ, Place, Polynomial, RationalFunction
from k3fib.neighbor import (
    Constraint,
    NeighborSpec,
    ParameterTemplate,
    fit_parameter,
    neighbor_curve,
    solve_linear,
    two_neighbor,
)
from k3fib.sixlines import SixLinesConfig
from k3fib.transform import isomorphic
from k3fib.weierstrass import (
    Configuration,
    euler_sum,
    fiber_configuration,
    match_configuration,
    shioda_tate_rank,
)

t = Polynomial.gen()
CFG = SixLinesConfig(2, 3, 5, 7)
GENERIC = SixLinesConfig(3, 5, 7, 11)


def P(*coeffs):
    return Polynomial([QQ(c) for c in coeffs])


def table(cid, cfg):
    return cat.CATALOG[cid].models[0].build(cfg)


def printed_spec(cid, cfg, label="printed"):
    return {n.label: n for n in cat.CATALOG[cid].neighbor}[label].spec(cfg)


# ---------------------------------------------------------------- spec validation


def test_spec_validation():
    with pytest.raises(ValueError):
        NeighborSpec("3O", P(), P(1))
    with pytest.raises(ValueError):
        NeighborSpec("2O", P(), P())
    with pytest.raises(ValueError):
        NeighborSpec("O+P", P(), P(1))


def test_section_must_lie_on_curve():
    m = table("2.7", CFG)
    with pytest.raises(NoSection):
        neighbor_curve(m, NeighborSpec("O+P", P(), P(1), (P(1), P(1))))
    with pytest.raises(NoSection):
        neighbor_curve(m, NeighborSpec("O+T", P(), P(1), (P(0), P(1))))


# ---------------------------------------------------------------- 2.7 -> 2.10


def test_27_to_210_configuration():
    new = two_neighbor(table("2.7", CFG), printed_spec("2.10", CFG))
    fibres = fiber_configuration(new)
    assert Configuration.of(fibres).to_str() == "I2* + 2I0* + 4I1"
    assert euler_sum(fibres) == 24 and new.weight == 2


def test_27_to_210_printed_target_is_not_reached():
    new = two_neighbor(table("2.7", CFG), printed_spec("2.10", CFG))
    target = {v.label: v for v in cat.CATALOG["2.10"].models}["target"].build(CFG).renamed("s")
    assert Configuration.of(fiber_configuration(target)).to_str() == "I0* + I3 + 15I1"
    assert not isomorphic(new, target, geometric=True)


def test_fit_reproduces_printed_210_parameter():
    assert cat.fitted_coefficients("2.10", CFG) == {0: 0, 1: -10, 2: 70, 4: 0}
    for cfg in (GENERIC, SixLinesConfig(2, 5, 3, 11)):
        fitted = cat.fitted_coefficients("2.10", cfg)
        spec = printed_spec("2.10", cfg)
        ratio = spec.A / spec.B
        assert ratio == RationalFunction(sum((Polynomial.monomial(i, c) for i, c in fitted.items()), P()))


def _j_of_fibre(m, spec, s0):
    """j of the genus-one fibre over s = s0, by direct substitution and sympy."""
    T = sp.Symbol("t")

    def to_sp(rf):
        num = sum(sp.Rational(str(c)) * T**i for i, c in enumerate(rf.num.coeffs))
        den = sum(sp.Rational(str(c)) * T**i for i, c in enumerate(rf.den.coeffs))
        return num / den

    x = (sp.Rational(s0) - to_sp(spec.A)) / to_sp(spec.B)
    a2, a4, a6 = (to_sp(RationalFunction(a)) for a in (m.a2, m.a4, m.a6))
    num, den = sp.fraction(sp.together(x**3 + a2 * x**2 + a4 * x + a6))
    g = sp.Poly(sp.expand(num * den), T)
    _, factors = sp.sqf_list(g)
    h = sp.Poly(g.LC(), T)
    for f, k in factors:
        if k % 2:
            h = h * f
    cs = h.all_coeffs()
    assert len(cs) in (4, 5)
    if len(cs) == 4:
        cs = [0] + cs
    a, b, c, d, e = cs
    I = 12 * a * e - 3 * b * d + c**2
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d**2 - 27 * e * b**2 - 2 * c**3
    A, B = -27 * I, -27 * J
    return sp.Rational(1728) * 4 * A**3 / (4 * A**3 + 27 * B**2)


@pytest.mark.parametrize("s0", [2, 3, -5])
def test_specialising_s_commutes(s0):
    m, spec = table("2.7", CFG), printed_spec("2.10", CFG)
    new = two_neighbor(m, spec)
    c4 = new.c4(QQ(s0))
    disc = new.discriminant(QQ(s0))
    assert sp.Rational(str(c4 ** 3 / disc)) == _j_of_fibre(m, spec, s0)


# ---------------------------------------------------------------- 2.5 -> 2.4


def test_24_fit():
    for cfg in (GENERIC, SixLinesConfig(2, 5, 3, 11), SixLinesConfig(4, 7, 3, 9)):
        fit = cat.fitted_coefficients("2.4", cfg)
        assert fit[0] == 0 and fit[1] == -1


def test_24_fit_proportional_a2():
    fit = cat.fitted_coefficients("2.4", GENERIC)
    t1 = GENERIC.value("(ad-bc+b-d)/((a-1)(ad-bc)(c+d-1))")
    assert fit[2] == -fit[1] / t1


def test_25_to_24_repaired_parameter():
    src = cat.resolved_model("2.5", GENERIC)
    new = two_neighbor(src, printed_spec("2.4", GENERIC, "repaired"))
    assert Configuration.of(fiber_configuration(new)).to_str() == "I6* + 4I2 + 4I1"


# ---------------------------------------------------------------- 1.1 via O+T


def test_11_repaired_o_plus_t():
    src = cat.resolved_model("2.5", GENERIC)
    new = two_neighbor(src, printed_spec("1.1", GENERIC, "repaired"))
    fibres = fiber_configuration(new)
    res = match_configuration(Configuration.of(fibres), "I10 + I2 + aII + bI1")
    assert res.ok
    assert shioda_tate_rank(fibres) == 4


def test_degree_overflow_is_raised_for_wrong_divisor():
    m = table("2.7", CFG)
    with pytest.raises(DegreeOverflow):
        two_neighbor(m, NeighborSpec("2O", P(), RationalFunction(P(1), t ** 3)))


PRINTED_STEPS = [("1.1", "2.5"), ("1.4", "2.7"), ("2.1", "2.5"), ("2.2", "2.7"), ("2.3", "2.7"),
                 ("2.4", "2.5"), ("2.6", "2.7"), ("2.10", "2.7")]


@pytest.mark.parametrize("cid,src", PRINTED_STEPS)
def test_degree_overflow_never_fires_on_printed_specs(cid, src):
    model = cat.resolved_model(src, GENERIC)
    two_neighbor(model, printed_spec(cid, GENERIC))


# ---------------------------------------------------------------- linear solver


def test_empty_constraints_underdetermined():
    m = table("2.7", CFG)
    with pytest.raises(Underdetermined):
        fit_parameter(m, ParameterTemplate(t, [0, 1], []))


def test_inconsistent_constraints():
    m = table("2.7", CFG)
    tmpl = ParameterTemplate(t, [0], [Constraint(Place.at(0), P(1), 1)], {1: QQ(1)})
    assert fit_parameter(m, tmpl) == {0: -1}
    tmpl = ParameterTemplate(t, [0], [Constraint(Place.at(0), P(1), 1), Constraint(Place.at(1), P(1), 1)],
                             {1: QQ(1)})
    with pytest.raises(Inconsistent):
        fit_parameter(m, tmpl)


def test_solve_linear():
    assert solve_linear([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    with pytest.raises(Underdetermined):
        solve_linear([[1, 1], [2, 2]], [1, 2])
    with pytest.raises(Inconsistent):
        solve_linear([[1, 1], [2, 2]], [1, 3])
