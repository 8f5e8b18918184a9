import numpy as np
import pytest

from mild4 import field
from mild4.lie import QuadraticPresentation
from mild4.reduction import OrbitLabel, canonical_plane

# acceptance criterion id -> list of (test id, outcome)
_criteria = {}


def random_invertible(rng, p, n=4):
    while True:
        a = rng.integers(0, p, size=(n, n))
        if field.det(a, p):
            return a


def random_full_rank(rng, p, rows=4, cols=6):
    while True:
        a = rng.integers(0, p, size=(rows, cols))
        if field.rank(a, p) == rows:
            return a


def canonical_presentation(label, p):
    """Relators whose complement is the canonical plane of the given orbit."""
    comp = canonical_plane(label, p)
    return QuadraticPresentation.from_rows(field.orthogonal_complement(comp).matrix(), p)


@pytest.fixture
def rng():
    return np.random.default_rng(20051220)


@pytest.fixture(params=list(OrbitLabel), ids=lambda l: f"O{int(l)}")
def orbit_label(request):
    return request.param


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = getattr(report, "criterion", None)
    if crit is None:
        for key, value in report.user_properties:
            if key == "criterion":
                crit = value
    if crit is not None:
        _criteria.setdefault(crit, []).append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_criteria):
        results = _criteria[crit]
        ok = all(outcome == "passed" for _, outcome in results)
        name = results[0][0].split("::")[-1]
        terminalreporter.write_line(f"criterion {crit:>2}: {'PASS' if ok else 'FAIL'}  ({name})")
