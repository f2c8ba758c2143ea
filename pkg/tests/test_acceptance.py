"""Acceptance criteria, one PASS/FAIL line each (also shown in the terminal summary)."""

import time

import pytest

from k3fib import catalog as cat
from k3fib import divisors as dv
from k3fib.errors import K3FibError
from k3fib.fields import Polynomial, RationalFunction
from k3fib.neighbor import two_neighbor
from k3fib.sixlines import SixLinesConfig, classical_eliminate, sample_tuples
from k3fib.transform import QuarticY2, genus_one_to_model, isomorphic
from k3fib.weierstrass import (
    Configuration,
    euler_sum,
    fiber_configuration,
    match_configuration,
    minimal_model,
    parse_configuration,
    shioda_tate_rank,
    torsion_shape,
    two_torsion,
    verify_section,
)

from conftest import c4_c6_identity_violations

FIRST = SixLinesConfig(2, 3, 5, 7)


@pytest.fixture
def verdict(acceptance_log):
    def record(crit, checks):
        """``checks`` is a list of (ok, text); the criterion passes when all do."""
        ok = all(c for c, _ in checks)
        detail = "; ".join(f"{'ok' if c else 'FAILED'}: {text}" for c, text in checks)
        line = ("PASS" if ok else "FAIL", detail)
        acceptance_log.append((crit, *line))
        print(f"{line[0]} criterion {crit}: {detail}")
        assert ok, detail
    return record


def variant(cid, label):
    return {v.label: v for v in cat.CATALOG[cid].models}[label]


def neighbor_variant(cid, label="printed"):
    return {n.label: n for n in cat.CATALOG[cid].neighbor}[label]


def test_criterion_01_class_27(verdict):
    checks = []
    mv = variant("2.7", "table")
    for cfg in (FIRST, SixLinesConfig(3, 5, 7, 11), SixLinesConfig(2, 5, 3, 11)):
        start = time.perf_counter()
        m = mv.build(cfg)
        fibres = fiber_configuration(m)
        conf = Configuration.of(fibres)
        secs = [verify_section(m, cat.polynomial(x, cfg)) for x in mv.sections.values()]
        shape = torsion_shape(two_torsion(m))
        elapsed = time.perf_counter() - start
        checks.append((
            conf == Configuration({"I2*": 1, "I2": 8}) and len(secs) == 3 and all(secs)
            and shape == "(Z/2)^2" and shioda_tate_rank(fibres) == 0 and euler_sum(fibres) == 24
            and elapsed < 2,
            f"({cfg}) {conf}, {sum(secs)}/3 sections, torsion {shape}, rank {shioda_tate_rank(fibres)}, "
            f"euler {euler_sum(fibres)}, {elapsed:.2f}s"))
    verdict(1, checks)


def _places(fibres):
    return {f.place.label(): f.type.symbol for f in fibres}


def test_criterion_02_class_211_positions(verdict):
    start = time.perf_counter()
    fibres = fiber_configuration(variant("2.11", "table").build(FIRST))
    elapsed = time.perf_counter() - start
    want = {"t=0": "I0*", "t=1": "I0*", "t=2": "I2", "t=1/2": "I2", "t=1/5": "I2", "t=-4": "I2",
            "t=8/5": "I2", "infinity": "I2"}
    resolved = fiber_configuration(cat.resolved_model("2.11", FIRST))
    res_i2 = sorted(p for p, k in _places(resolved).items() if k == "I2")
    verdict(2, [
        (_places(fibres) == want and elapsed < 2,
         f"printed equation: {sorted(_places(fibres).items())} in {elapsed:.2f}s"),
        (Configuration.of(resolved) == Configuration({"I0*": 2, "I2": 6}),
         f"resolved equation has the same multiset with I2 at {', '.join(res_i2)}"),
    ])


def test_criterion_03_short_tables(verdict, catalog_run):
    reports, _ = catalog_run
    checks = []
    for cid in ("1.2", "2.5", "2.8", "2.9", "2.12"):
        reps = [r for (c, _), r in reports.items() if c == cid]
        ok = bool(reps) and all(r.config_match for r in reps)
        fill = sorted({r.filler for r in reps if r.filler})
        models = sorted({r.model for r in reps})
        checks.append((ok, f"{cid} matches at {len(reps)} tuples using {'/'.join(models)}"
                       + (f", filler (a,b) {fill}" if fill else "")))
    verdict(3, checks)


def test_criterion_04_classical_27(verdict):
    checks = []
    for cfg in sample_tuples():
        g = classical_eliminate(cfg, cat.CATALOG["2.7"].classical[0])
        derived = genus_one_to_model(QuarticY2(g))
        checks.append((isomorphic(derived, variant("2.7", "table").build(cfg)), f"({cfg}) isomorphic"))
    verdict(4, checks)


def test_criterion_05_neighbor_27_to_210(verdict):
    m = variant("2.7", "table").build(FIRST)
    new = two_neighbor(m, neighbor_variant("2.10").spec(FIRST))
    conf = Configuration.of(fiber_configuration(new))
    target = variant("2.10", "target").build(FIRST).renamed(new.var)
    fit = cat.fitted_coefficients("2.10", FIRST)
    spec = neighbor_variant("2.10").spec(FIRST)
    fitted = sum((Polynomial.monomial(i, c) for i, c in fit.items()), Polynomial([]))
    shown = {i: str(c) for i, c in fit.items()}
    verdict(5, [
        (isomorphic(new, target), "output isomorphic to the printed target"),
        (conf.to_str() == "I2* + 2I0* + 8I1",
         f"configuration {conf} (the expected I2* + 2I0* + 8I1 has Euler number 28)"),
        (spec.A / spec.B == RationalFunction(fitted), f"fit reproduces the printed coefficients {shown}"),
    ])


def test_criterion_06_neighbor_25_to_24(verdict):
    cfg = SixLinesConfig(3, 5, 7, 11)
    src = cat.resolved_model("2.5", cfg)
    try:
        two_neighbor(src, neighbor_variant("2.4").spec(cfg))
        printed = "printed parameter accepted"
    except K3FibError as exc:
        printed = f"printed parameter rejected ({type(exc).__name__}); resolved variant used and logged"
    checks = []
    for c in sample_tuples(["2.4"]):
        new = two_neighbor(cat.resolved_model("2.5", c), neighbor_variant("2.4", "repaired").spec(c))
        conf = Configuration.of(fiber_configuration(new))
        checks.append((conf.to_str() == "I6* + 4I2 + 4I1", f"({c}) {conf}"))
    fits = [cat.fitted_coefficients("2.4", c) for c in sample_tuples(["2.4"])]
    checks.append((all(f[0] == 0 and f[1] == -1 for f in fits), "fit gives A0 = 0, A1 = -1"))
    checks.append((True, printed))
    verdict(6, checks)


SEVEN = {"1.1": "2.5", "1.4": "2.7", "2.1": "2.5", "2.2": "2.7", "2.3": "2.7", "2.6": "2.7"}


def test_criterion_07_printed_neighbor_specs(verdict):
    checks = []
    for cid, src in SEVEN.items():
        entry = cat.CATALOG[cid]
        results = []
        for cfg in sample_tuples([cid]):
            try:
                new = two_neighbor(cat.resolved_model(src, cfg), neighbor_variant(cid).spec(cfg))
            except K3FibError as exc:
                results.append((False, f"{type(exc).__name__}"))
                continue
            fibres = fiber_configuration(new)
            res = match_configuration(Configuration.of(fibres), entry.expected)
            ok = res.ok and shioda_tate_rank(fibres) == entry.rank
            results.append((ok, res.computed))
        ok = all(r for r, _ in results)
        checks.append((ok, f"{cid}: " + (f"{results[0][1]}, rank {entry.rank}" if ok else
                                         ", ".join(sorted({t for _, t in results})))))
    verdict(7, checks)


def test_criterion_08_shioda_tate(verdict):
    checks = []
    for cid in cat.CLASS_IDS:
        entry = cat.CATALOG[cid]
        named, _ = parse_configuration(entry.expected)
        r = shioda_tate_rank(named.items())
        checks.append((r == entry.rank, f"{cid} {r}"))
    verdict(8, checks)


def test_criterion_09_divisors(verdict):
    start = time.perf_counter()
    selfs = all(dv.intersection(s, s) == -2 for s in dv.base_symbols())
    ok5, msg5 = dv.run_check("div-t-2.7")
    ok12, _ = dv.run_check("cross-product")
    d = dv.divisor_of(dv.CHECKS["div-t-2.7"].function)
    zero, pole = d.positive(), d.negative()
    kind = dv.kodaira_type_of_divisor(zero)
    iso = dv.pairing(zero, zero) == 0 and dv.pairing(pole, pole) == 0
    elapsed = time.perf_counter() - start
    verdict(9, [
        (selfs, "all 66 self-pairings are -2"),
        (ok5, "divisor of t matches"),
        (ok12, "identity for (cu-1)(bv-1)/(cu+bv-1) holds"),
        (str(kind) == "I2*", f"zero part is {kind}"),
        (iso, "F.F = 0 for both fibres"),
        (elapsed < 1, f"{elapsed * 1000:.0f} ms"),
    ])


def test_criterion_10_properties(verdict, built_models, classified):
    import test_fields
    import test_transform

    checks = []
    for fn in (test_fields.test_squarefree_round_trip, test_fields.test_coprime_basis_round_trip,
               test_transform.test_planted_root_paths_agree):
        try:
            fn()
            checks.append((True, f"{fn.__name__}"))
        except AssertionError as exc:
            checks.append((False, f"{fn.__name__}: {exc}"))
    bad = c4_c6_identity_violations(built_models)
    checks.append((bool(built_models) and not bad,
                   f"1728 disc = c4^3 - c6^2 on all {len(built_models)} models built"
                   + (f" ({len(bad)} violations)" if bad else "")))
    # n is the weight of the minimal model; a few transcribed equations carry a
    # removable factor and are stored at a larger weight
    wrong, stored = [], 0
    for m, f in classified:
        n = minimal_model(m).weight
        stored += n == m.weight
        if euler_sum(f) != 12 * n:
            wrong.append(m)
    checks.append((bool(classified) and not wrong,
                   f"euler sum 12n on {len(classified)} classifications"
                   f" ({len(classified) - stored} stored above minimal weight)"
                   + (f", {len(wrong)} violations" if wrong else "")))
    verdict(10, checks)


def test_criterion_11_long_form_transcriptions(verdict, catalog_run):
    reports, seconds = catalog_run
    mismatched, surfaced = set(), True
    for (cid, params), rep in reports.items():
        six = [a for a in rep.anomalies
               if a.startswith("long-form transcription") or a.startswith("long-form: equation unusable")]
        if six:
            mismatched.add(cid)
            for a in six:
                surfaced &= (" at " in a) or "unusable" in a or "Euler sum" in a
    logged = all(
        any(key in a for a in reports[(cid, "3,5,7,11")].anomalies)
        for cid, key in (("2.4", "resolved by 'repaired'"), ("2.9", "resolved by table-repaired")))
    total = sum(seconds.values())
    verdict(11, [
        (not mismatched, f"long-form equations classify to their rows (mismatch: {', '.join(sorted(mismatched))})"),
        (surfaced, "each mismatch is reported with the offending place"),
        (logged, "suspected typos resolved in favour of the matching variant and logged"),
        (total < 120, f"full catalog {total:.0f}s over {len(seconds)} tuples"),
    ])
