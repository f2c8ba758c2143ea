import pytest

from k3fib import catalog as cat
from k3fib.errors import IdentityFails, ParseError
from k3fib.fields import QQ, Polynomial, RationalFunction
from k3fib.sixlines import (
    CROSS_IDENTITIES,
    ClassicalParameter,
    CrossIdentity,
    SixLinesConfig,
    check_identity,
    classical_eliminate,
    cross_identity_checks,
    genericity_check,
    sample_tuples,
)
from k3fib.transform import QuarticY2, genus_one_to_model, isomorphic

TUPLES = [SixLinesConfig(*p) for p in ((2, 3, 5, 7), (3, 5, 7, 11), (2, 5, 3, 11), (4, 7, 3, 9))]


# ---------------------------------------------------------------- configuration


def test_parse_and_labels():
    cfg = SixLinesConfig.parse("1/2, 3, -5, 7")
    assert cfg.labels() == ["1/2", "3", "-5", "7"]
    assert str(cfg) == "1/2,3,-5,7"
    assert cfg.value("ad-bc") == QQ("7/2") + 15
    with pytest.raises(ParseError):
        SixLinesConfig.parse("1,2,3")


def test_intersection_points():
    cfg = SixLinesConfig(2, 3, 5, 7)
    u, v, z = cfg.intersection_point(1, 3)
    assert (u, v) == (0, 0) and z
    u, v, z = cfg.intersection_point(5, 6)
    assert 2 * u + 3 * v == z and 5 * u + 7 * v == z
    assert cfg.branch_locus().degree("u") == 4


def test_generic_tuple():
    ok, why = genericity_check(SixLinesConfig(2, 3, 5, 7))
    assert ok and why == []


def test_all_equal_is_degenerate():
    ok, why = genericity_check(SixLinesConfig(1, 1, 1, 1))
    assert not ok
    assert any("coincide" in w or "concurrent" in w for w in why)


def test_zero_parameter_is_degenerate():
    ok, why = genericity_check(SixLinesConfig(0, 1, 2, 3))
    assert not ok and any("concurrent" in w for w in why)


def test_collinear_intersection_points():
    # a + b = c + d: the points P12, P34, P56 are collinear
    ok, why = genericity_check(SixLinesConfig(4, 7, 2, 9))
    assert not ok and why == ["collinear intersection points: a+b-c-d = 0"]


def test_class_collision_factor():
    cfg = SixLinesConfig(2, 3, 5, 7)
    assert genericity_check(cfg, ["2.7"])[0]
    ok, why = genericity_check(cfg, ["2.5", "2.4"])
    assert not ok and len(why) == 1 and why[0].startswith("class 2.5")


def test_default_tuples_are_generic():
    for cfg in TUPLES:
        assert genericity_check(cfg)[0]
    assert len(sample_tuples()) == 4
    assert len(sample_tuples(["2.5"])) == 3


def test_tuple_override(monkeypatch):
    monkeypatch.setenv("K3FIB_TUPLES", "3,5,7,11; 1,1,1,1")
    assert [str(c) for c in sample_tuples()] == ["3,5,7,11"]


# ---------------------------------------------------------------- elimination


@pytest.mark.parametrize("cfg", TUPLES, ids=str)
@pytest.mark.parametrize("cid", ["2.7", "2.8"])
def test_elimination_matches_table(cid, cfg):
    g = classical_eliminate(cfg, cat.CATALOG[cid].classical[0])
    assert g.deg in (3, 4)
    derived = genus_one_to_model(QuarticY2(g))
    assert isomorphic(derived, cat.CATALOG[cid].models[0].build(cfg))


def test_elimination_for_parameter_u():
    cfg = SixLinesConfig(2, 3, 5, 7)
    g = classical_eliminate(cfg, cat.CATALOG["2.11"].classical[0])
    K = g.field
    t = K.gen()
    v = Polynomial.gen(K)
    a, b, c, d = (K(RationalFunction(Polynomial([x]))) for x in cfg.params)
    one = K.one
    want = t * (t - one) * v * (v - one) * (v * b + (a * t - one)) * (v * d + (c * t - one))
    assert g == want


def test_elimination_solving_for_u():
    cfg = SixLinesConfig(3, 5, 7, 11)
    g = classical_eliminate(cfg, ClassicalParameter("uv", "cu+bv-1", "u"))
    derived = genus_one_to_model(QuarticY2(g))
    assert isomorphic(derived, cat.CATALOG["2.7"].models[0].build(cfg), geometric=True)


# ---------------------------------------------------------------- cross identities


@pytest.mark.parametrize("cid", sorted(CROSS_IDENTITIES))
def test_cross_identities(cid):
    for cfg in TUPLES:
        assert cross_identity_checks(cid, cfg)


def test_cross_identity_failure_is_reported():
    cfg = TUPLES[0]
    bad = CrossIdentity("off by one", (), "u", "u+1")
    assert not check_identity(cfg, bad)
    with pytest.raises(KeyError):
        cross_identity_checks("1.1", cfg)


def test_cross_identity_raises(monkeypatch):
    monkeypatch.setitem(CROSS_IDENTITIES, "x", CrossIdentity("wrong", (), "uv", "vu+1"))
    with pytest.raises(IdentityFails):
        cross_identity_checks("x", TUPLES[0])
