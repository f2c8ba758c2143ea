import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from k3fib.errors import ParseError
from k3fib.fields import (
    QQ,
    FractionField,
    Place,
    Polynomial,
    RationalFunction,
    coprime_basis,
    is_square,
    kth_root,
    poly_gcd,
    rational_roots,
    rational_str,
    resultant,
    squarefree_decomposition,
    squarefree_kernel,
    sylvester_matrix,
    valuation,
)

t = Polynomial.gen()


def P(*coeffs):
    return Polynomial([QQ(c) for c in coeffs])


# ---------------------------------------------------------------- rationals


def test_rationals_are_canonical():
    assert QQ("6/4") == QQ("3/2")
    assert rational_str(QQ("-6/4")) == "-3/2"
    assert rational_str(QQ(0)) == "0"
    assert rational_str(QQ("10/5")) == "2"


# ---------------------------------------------------------------- gcd


def test_gcd_examples():
    assert poly_gcd(t * t - 1, t - 1) == t - 1
    assert poly_gcd(t, t + 1) == P(1)
    assert poly_gcd((t - 2) ** 2 * (t + 3), (t - 2) * (t + 5)) == t - 2
    assert poly_gcd(Polynomial([]), 3 * t + 6) == t + 2


def test_gcd_is_monic():
    assert poly_gcd(6 * t * t - 6, 4 * t - 4).lc == 1


# ---------------------------------------------------------------- squarefree


def test_squarefree_examples():
    unit, parts = squarefree_decomposition(t ** 3)
    assert unit == 1 and parts == [(t, 3)]
    unit, parts = squarefree_decomposition((t * t - 1) ** 2 * (t - 2))
    assert sorted(parts, key=lambda p: p[1]) == [(t - 2, 1), (t * t - 1, 2)]


def test_squarefree_of_zero_rejected():
    with pytest.raises(Exception):
        squarefree_decomposition(Polynomial([]))


def test_coprime_basis_examples():
    assert sorted(coprime_basis([t * (t - 1), t * (t + 2)]), key=lambda p: p[0]) == sorted(
        [t, t - 1, t + 2], key=lambda p: p[0])
    assert set(map(str, coprime_basis([t * t - 1, t - 1]))) == {"t - 1", "t + 1"}


small_poly = st.lists(st.integers(-4, 4), min_size=1, max_size=4).map(lambda cs: P(*cs)).filter(lambda p: p.deg >= 1)


@st.composite
def structured_poly(draw):
    factors = draw(st.lists(st.tuples(small_poly, st.integers(1, 3)), min_size=1, max_size=3))
    scale = draw(st.integers(1, 9)) * draw(st.sampled_from([1, -1]))
    f = P(scale)
    for g, m in factors:
        f = f * g ** m
    return f


@settings(max_examples=1000, deadline=None)
@given(structured_poly())
def test_squarefree_round_trip(f):
    unit, parts = squarefree_decomposition(f)
    prod = P(unit)
    for g, m in parts:
        assert g.lc == 1 and g.deg >= 1
        assert poly_gcd(g, g.derivative()).deg == 0
        prod = prod * g ** m
    assert prod == f
    for (g1, _), (g2, _) in zip(parts, parts[1:]):
        assert poly_gcd(g1, g2).deg == 0


@settings(max_examples=1000, deadline=None)
@given(st.lists(structured_poly(), min_size=1, max_size=3))
def test_coprime_basis_round_trip(fs):
    basis = coprime_basis(fs)
    for i, g in enumerate(basis):
        assert g.lc == 1 and poly_gcd(g, g.derivative()).deg == 0
        for h in basis[i + 1:]:
            assert poly_gcd(g, h).deg == 0
    for f in fs:
        rest = f
        for g in basis:
            while not rest % g:
                rest = rest.exact_div(g)
        assert rest.deg == 0


@settings(max_examples=200, deadline=None)
@given(structured_poly(), structured_poly())
def test_gcd_matches_sympy(f, g):
    x = sp.Symbol("t")
    ref = sp.Poly(sp.gcd(sp.Poly(f.coeffs[::-1], x), sp.Poly(g.coeffs[::-1], x)), x).monic()
    ours = poly_gcd(f, g)
    assert [sp.Rational(str(c)) for c in ours.coeffs[::-1]] == ref.all_coeffs()


# ---------------------------------------------------------------- valuations


def test_valuation_examples():
    assert valuation(t ** 3 + t ** 4, Place.at(0)) == 3
    assert valuation(RationalFunction(t * t, t ** 3 + 1), Place.infinity()) == 1
    assert valuation(t - 1, Place.at(1)) == 1
    assert valuation(t ** 2 + 1, Place.finite(t ** 2 + 1)) == 1


@settings(max_examples=200, deadline=None)
@given(structured_poly(), structured_poly(), st.integers(-3, 3))
def test_valuation_additive(f, g, r):
    for place in (Place.at(r), Place.infinity()):
        w = 0
        assert valuation(f * g, place, w) == valuation(f, place, w) + valuation(g, place, w)


# ---------------------------------------------------------------- resultants


def test_resultant_examples():
    assert resultant(t - 2, t - 5) == -3
    K = FractionField(QQ, "a")
    a = K.gen()
    X = Polynomial([K(0), K(1)], K)
    r = resultant(X - a, X * X - K(1))
    assert r == a * a - K(1)


def test_sylvester_generic_quadratics():
    f = P(3, -1, 2)
    g = P(-5, 4, 7)
    m = sp.Matrix([[sp.Rational(str(c)) for c in row] for row in sylvester_matrix(f, g)])
    assert m.shape == (4, 4)
    assert m.det() == sp.Rational(str(resultant(f, g)))
    x = sp.Symbol("x")
    assert sp.resultant(2 * x**2 - x + 3, 7 * x**2 + 4 * x - 5, x) == m.det()


# ---------------------------------------------------------------- rational functions, roots


def test_rational_function_normal_form():
    f = RationalFunction(2 * t * t - 2, 4 * t - 4)
    assert f.den.lc == 1
    assert f == RationalFunction(t + 1, P(2))
    assert RationalFunction(t, t) == RationalFunction(P(1))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        RationalFunction(t, Polynomial([]))


def test_rational_roots():
    assert rational_roots((2 * t - 1) * (t + 4) * (t * t + 1)) == [QQ(-4), QQ("1/2")]


def test_squares_and_roots():
    assert is_square(RationalFunction(4 * (t + 1) ** 2, (t - 3) ** 4))
    assert not is_square(RationalFunction(t))
    assert kth_root(RationalFunction(8 * t ** 3), 3) == RationalFunction(2 * t)
    assert squarefree_kernel(RationalFunction(t ** 3 * (t + 1) ** 2)) == RationalFunction(t)


def test_bad_rational_text():
    with pytest.raises((ParseError, ValueError)):
        QQ("1/x")
