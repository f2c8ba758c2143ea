import pytest

from k3fib import catalog as cat
from k3fib.sixlines import SixLinesConfig, sample_tuples

TUPLES = [str(c) for c in sample_tuples()]
SKIPPED = {("1.1", "2,3,5,7"), ("2.1", "2,3,5,7"), ("2.4", "2,3,5,7"), ("2.5", "2,3,5,7")}
REPORT_KEYS = {"class", "params", "fibers", "euler", "expected", "computed", "filler", "config_match",
               "torsion", "torsion_match", "rank", "rank_match", "derivation_match", "model", "anomalies"}


def test_sixteen_classes():
    assert len(cat.CLASS_IDS) == 16
    assert cat.CLASS_IDS[0] == "1.1" and cat.CLASS_IDS[-1] == "2.12"


def test_non_generic_pairs_are_skipped(catalog_run):
    reports, _ = catalog_run
    assert {(c, t) for c in cat.CLASS_IDS for t in TUPLES} - set(reports) == SKIPPED


@pytest.mark.parametrize("cid", cat.CLASS_IDS)
def test_class_verifies(cid, catalog_run):
    reports, _ = catalog_run
    for key, rep in reports.items():
        if key[0] == cid:
            assert rep.ok, (key, rep.computed, rep.anomalies)
            assert rep.euler == 24


def test_report_json(catalog_run):
    reports, _ = catalog_run
    for rep in reports.values():
        data = rep.to_json()
        assert set(data) == REPORT_KEYS
        assert all(set(f) == {"place", "type", "vDelta", "components", "euler", "degree"} for f in data["fibers"])


def test_transcription_anomalies_name_the_place(catalog_run):
    reports, _ = catalog_run
    rep = reports[("2.6", "3,5,7,11")]
    assert any("long-form transcription" in a and "I1* at infinity" in a for a in rep.anomalies)
    rep = reports[("2.9", "3,5,7,11")]
    assert any("I0* at t=-1" in a for a in rep.anomalies)
    assert rep.model == "table-repaired"


def test_resolutions_are_logged(catalog_run):
    reports, _ = catalog_run
    assert any("resolved by 'repaired'" in a for a in reports[("2.4", "3,5,7,11")].anomalies)
    assert any("up to t -> -t" in a for a in reports[("2.5", "3,5,7,11")].anomalies)
    assert any("resolved by table-repaired" in a for a in reports[("2.11", "3,5,7,11")].anomalies)


def test_clean_classes_have_no_anomalies(catalog_run):
    reports, _ = catalog_run
    for t in TUPLES:
        assert reports[("2.7", t)].anomalies == []
        assert reports[("2.12", t)].anomalies == []


def test_filler_reported_for_short_rows(catalog_run):
    reports, _ = catalog_run
    rep = reports[("1.2", "3,5,7,11")]
    assert rep.filler == (0, 12)
    assert reports[("2.8", "2,3,5,7")].filler == (0, 2)


def test_resolved_model_is_cached():
    cfg = SixLinesConfig(3, 5, 7, 11)
    assert cat.resolved_model("2.7", cfg) is cat.resolved_model("2.7", cfg)


def test_unknown_class():
    with pytest.raises(KeyError):
        cat.verify_class("3.1", SixLinesConfig(3, 5, 7, 11))
