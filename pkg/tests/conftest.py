import sys

import pytest

from k3fib import weierstrass
from k3fib.weierstrass import WeierstrassModel

# every model constructed during the run, for the global invariant check
BUILT_MODELS: list = []
# (model, fibres) for every successful classification
CLASSIFIED: list = []
# (criterion, verdict, detail) lines of the acceptance suite
ACCEPTANCE: list = []

_orig_init = WeierstrassModel.__init__


def _recording_init(self, *args, **kwargs):
    _orig_init(self, *args, **kwargs)
    BUILT_MODELS.append(self)


WeierstrassModel.__init__ = _recording_init

_orig_classify = weierstrass.fiber_configuration


def _recording_classify(m):
    fibres = _orig_classify(m)
    CLASSIFIED.append((m, fibres))
    return fibres


# patch every module that imported the name before this point, and the source
for _name, _mod in list(sys.modules.items()):
    if _name.startswith("k3fib") and getattr(_mod, "fiber_configuration", None) is _orig_classify:
        _mod.fiber_configuration = _recording_classify


def c4_c6_identity_violations(models) -> list:
    bad = []
    for m in models:
        if m.c4 ** 3 - m.c6 ** 2 != 1728 * m.discriminant:
            bad.append(m)
    return bad


def pytest_collection_modifyitems(session, config, items):
    # the acceptance summary runs last so it sees every model built by the suite
    items.sort(key=lambda item: item.nodeid.startswith("tests/test_acceptance.py"))


@pytest.fixture(scope="session")
def built_models():
    return BUILT_MODELS


@pytest.fixture(scope="session")
def classified():
    return CLASSIFIED


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit, verdict, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"{verdict} criterion {crit}: {detail}")


@pytest.fixture(scope="session")
def catalog_run():
    """Every class at every default tuple it is generic for, as the CLI runs it.

    Returns (reports keyed by (class, tuple text), seconds spent per tuple).
    """
    import time

    from k3fib import catalog as cat
    from k3fib.sixlines import genericity_check, sample_tuples

    cat._RESOLVED.clear()
    reports, seconds = {}, {}
    for cfg in sample_tuples():
        start = time.perf_counter()
        for cid in cat.CLASS_IDS:
            if genericity_check(cfg, [cid])[0]:
                reports[(cid, str(cfg))] = cat.verify_class(cid, cfg)
        seconds[str(cfg)] = time.perf_counter() - start
    return reports, seconds
