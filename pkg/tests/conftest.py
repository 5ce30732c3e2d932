import pytest

from subresinterp.field import FieldSpec
from subresinterp.interp import InterpolationProblem
from subresinterp.poly import Polynomial

QQ = FieldSpec.rational()
GF7 = FieldSpec.prime(7)
GF13 = FieldSpec.prime(13)
GF101 = FieldSpec.prime(101)


def poly(field, *coeffs):
    return Polynomial(field, coeffs)


def sixth_roots_problem(field, xs):
    """Cauchy data ``y_i = x_i^5 + 2`` at the sixth roots of unity, a=3, b=2."""
    nodes = [field(x) for x in xs]
    return InterpolationProblem.cauchy(field, 3, 2, nodes, [x**5 + 2 for x in nodes])


def osculatory_problem():
    """Nodes (1, 2), (2, 3); derivative data (2, 3), (6, 7, 8) read as Taylor (2, 3), (6, 7, 4)."""
    return InterpolationProblem(QQ, 2, 2, ((QQ(1), 2), (QQ(2), 3)), ((2, 3), (6, 7, 4)))


@pytest.fixture
def gf7_example():
    return sixth_roots_problem(GF7, range(1, 7))


@pytest.fixture
def qq_example():
    return osculatory_problem()


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and report.when == "call":
        _acceptance.append((marker.args[0], marker.args[1], report.outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    grouped = {}
    for number, title, outcome in _acceptance:
        grouped.setdefault((number, title), []).append(outcome == "passed")
    terminalreporter.section("acceptance criteria")
    for (number, title), results in sorted(grouped.items()):
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} ({sum(results)}/{len(results)} parts)")
