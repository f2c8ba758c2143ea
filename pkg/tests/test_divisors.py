import itertools
import time

import pytest

from k3fib.divisors import (
    CHECKS,
    CurveSymbol,
    Divisor,
    Unrecognized,
    base_symbols,
    divisor_of,
    evaluate_expression,
    function_divisor,
    intersection,
    kodaira_type_of_divisor,
    pairing,
    parse_divisor,
    run_check,
)
from k3fib.errors import OpaquePairing, ParseError, UnknownSymbol

L = CurveSymbol.line
E = CurveSymbol.point
MU = CurveSymbol.mu
D = parse_divisor

FUNCTIONS = ["u", "u-1", "v", "v-1", "au+bv-1", "cu+dv-1", "w"] + [
    f"M[{p[0]}{p[1]}|{q[0]}{q[1]}]"
    for p, q in itertools.combinations(itertools.combinations(range(1, 7), 2), 2)
    if not set(p) & set(q)
]


# ---------------------------------------------------------------- symbols and rules


def test_symbol_counts():
    syms = base_symbols()
    assert len(syms) == 66 and len(set(syms)) == 66
    assert sum(s.kind == "mu" for s in syms) == 45


def test_all_self_pairings():
    assert all(intersection(s, s) == -2 for s in base_symbols())


def test_pairing_is_symmetric():
    syms = base_symbols()
    for x, y in itertools.combinations(syms, 2):
        assert intersection(x, y) == intersection(y, x)


def test_rule_lines_are_disjoint():
    assert intersection(L(1), L(2)) == 0


def test_rule_line_meets_its_points():
    assert intersection(L(1), E(1, 3)) == 1
    assert intersection(L(2), E(1, 3)) == 0


def test_rule_points_are_disjoint():
    assert intersection(E(1, 2), E(1, 3)) == 0


def test_rule_line_and_mu():
    assert intersection(L(5), MU((1, 2), (3, 4))) == 1
    assert intersection(L(1), MU((1, 2), (3, 4))) == 0


def test_rule_point_and_mu():
    assert intersection(E(1, 2), MU((1, 2), (3, 4))) == 2
    assert intersection(E(5, 6), MU((1, 2), (3, 4))) == 0


def test_rule_mu_pairs():
    assert intersection(MU((1, 2), (3, 4)), MU((1, 3), (5, 6))) == 2
    assert intersection(MU((1, 2), (3, 4)), MU((1, 2), (5, 6))) == 0


def test_symbol_normalisation():
    assert MU((4, 3), (2, 1)) == MU((1, 2), (3, 4))
    assert E(3, 1) == E(1, 3)
    with pytest.raises(UnknownSymbol):
        MU((1, 2), (2, 3))
    with pytest.raises(UnknownSymbol):
        L(7)


# ---------------------------------------------------------------- principal divisors


@pytest.mark.parametrize("name", FUNCTIONS)
def test_principal_divisors_pair_to_zero(name):
    d = function_divisor(name)
    assert all(pairing(d, Divisor.of(s)) == 0 for s in base_symbols())


def test_polar_part_of_u():
    # the polar part of u is the boundary curve configuration away from P_12
    assert str(function_divisor("u").negative()) == str(D("mu[12|34] + l34"))


def test_divisor_of_products():
    d = divisor_of([("u", 1), ("v", 1), ("M[15|36]", -1)])
    assert d == D("l16 + l14 + 2*(l1 + l13 + l3) + l23 + l35 - mu[15|36] - mu[12|34]")
    assert divisor_of([("u", 1), ("u", -1)]) == Divisor()


def test_unknown_function():
    with pytest.raises(UnknownSymbol):
        function_divisor("u+v")


# ---------------------------------------------------------------- named checks


def test_divisor_of_t_for_27():
    ok, msg = run_check("div-t-2.7")
    assert ok and "zero part I2*" in msg and "polar part I2" in msg


def test_cross_product_identity():
    ok, msg = run_check("cross-product")
    assert ok


def test_unknown_check():
    with pytest.raises(UnknownSymbol):
        run_check("nope")


def test_fibres_of_t_are_isotropic():
    d = divisor_of(CHECKS["div-t-2.7"].function)
    zero, pole = d.positive(), d.negative()
    assert pairing(zero, zero) == 0 and pairing(pole, pole) == 0 and pairing(zero, pole) == 0


def test_suite_runtime():
    start = time.perf_counter()
    for name in CHECKS:
        run_check(name)
    for s in base_symbols():
        intersection(s, s)
    assert time.perf_counter() - start < 1.0


# ---------------------------------------------------------------- dual graphs


def test_d6_tilde_zero_part():
    assert kodaira_type_of_divisor(D("l16 + l14 + 2*(l1 + l13 + l3) + l23 + l35")).symbol == "I2*"


def test_two_curves_meeting_twice():
    assert kodaira_type_of_divisor(D("mu[12|34] + mu[15|36]")).symbol == "I2"


def test_d4_tilde():
    assert kodaira_type_of_divisor(D("2*l1 + l12 + l13 + l14 + l15")).symbol == "I0*"


def test_cycle():
    # l1 - l13 - l3 - l34 - l4 - l46 - l6 - l16 - l1
    d = D("l1 + l13 + l3 + l34 + l4 + l46 + l6 + l16")
    assert kodaira_type_of_divisor(d).symbol == "I8"


def test_not_fibres():
    single = kodaira_type_of_divisor(D("l1"))
    assert isinstance(single, Unrecognized) and not single
    assert not kodaira_type_of_divisor(D("l1 + l13"))
    assert not kodaira_type_of_divisor(D("2*l16 + 2*l14 + 4*(l1 + l13 + l3) + 2*l23 + 2*l35"))
    assert not kodaira_type_of_divisor(D("l1 - l13"))


# ---------------------------------------------------------------- syntax


def test_parse_and_print():
    d = D("2*l1 + mu[34|12] - l13")
    assert d.terms[MU((1, 2), (3, 4))] == 1
    assert D(str(d)) == d


def test_expression_pairing():
    assert evaluate_expression("l1 . l13") == 1
    assert evaluate_expression("l1 . l1") == -2
    assert evaluate_expression("div(u) . l5") == 0


def test_opaque_symbols():
    d = D("eta[(12)(34)(15)|(36)(56)] + l1")
    assert any(s.is_opaque for s in d.terms)
    with pytest.raises(OpaquePairing):
        evaluate_expression("eta[(12)(34)(15)|(36)(56)] . l1")


@pytest.mark.parametrize("bad", ["l1 +", "l7", "mu[12|23]", "foo", "l1 . l2 . l3", "2*"])
def test_parse_errors(bad):
    with pytest.raises((ParseError, UnknownSymbol)):
        evaluate_expression(bad)
