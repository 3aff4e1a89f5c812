import pytest

from preprank.exactlinalg import FieldSpec
from preprank.fixtures import fixture_names, load_fixture
from preprank.preproj import Preprojective

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
F5 = FieldSpec.prime(5)
BIG = FieldSpec.prime(65521)
QQ = FieldSpec.rational()

QUIVER_FIXTURES = [n for n in fixture_names() if n != "point"]


def engine_for(name, field=BIG):
    q, w = load_fixture(name)
    return Preprojective(q, w, field)


@pytest.fixture
def a2():
    return engine_for("a2")


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[k])
