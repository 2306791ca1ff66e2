import pytest

from dimdatum.lie_core import build_root_datum
from dimdatum.subgroups import catalog_lookup


@pytest.fixture(scope="session")
def A1():
    return build_root_datum([("A", 1)])


@pytest.fixture(scope="session")
def A2():
    return build_root_datum([("A", 2)])


@pytest.fixture(scope="session")
def B2():
    return build_root_datum([("B", 2)])


@pytest.fixture(scope="session")
def cat():
    return catalog_lookup


ACCEPTANCE_LINES = {}


def record_criterion(key, ok, detail=""):
    prev = ACCEPTANCE_LINES.get(key)
    ACCEPTANCE_LINES[key] = (ok and (prev is None or prev[0]), detail if not ok or prev is None else prev[1])


@pytest.fixture
def criterion(request):
    """Yields a recorder; the test's outcome decides PASS/FAIL for its criterion key."""
    state = {}

    def set_key(key, detail=""):
        state["key"], state["detail"] = key, detail

    yield set_key
    rep = getattr(request.node, "rep_call", None)
    if "key" in state and rep is not None:
        ok = rep.passed
        detail = state["detail"]
        if not ok:
            crash = getattr(rep.longrepr, "reprcrash", None)
            detail = crash.message.splitlines()[0] if crash else str(rep.longrepr).splitlines()[-1]
        record_criterion(state["key"], ok, detail)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: int(k.split()[0][1:])):
        ok, detail = ACCEPTANCE_LINES[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {detail}".rstrip())
