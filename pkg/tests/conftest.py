import pytest

from helpers import k33_minus_edge_pair
from regspec.constructions import complete, complete_bipartite, cycle, gadget_4regular, hypercube, petersen, star


@pytest.fixture(scope="session")
def named_graphs():
    return {
        "petersen": petersen(),
        "gadget": gadget_4regular(),
        "c6": cycle(6),
        "k4": complete(4),
        "k5": complete(5),
        "k33": complete_bipartite(3, 3),
        "q3": hypercube(3),
        "star3": star(3),
        "k33e_pair": k33_minus_edge_pair(),
    }


# --- acceptance summary ---------------------------------------------------

_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _CRITERIA.append((mark.args[0], mark.args[1], rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome, duration in sorted(_CRITERIA):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2} [{verdict}] {title} ({duration:.1f}s)")
