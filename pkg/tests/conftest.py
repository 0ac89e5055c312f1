import pytest

from ascover import make_field


@pytest.fixture(scope="session")
def F4():
    return make_field(2)


@pytest.fixture(scope="session")
def F8():
    return make_field(3)


@pytest.fixture(scope="session")
def F16():
    return make_field(4)


@pytest.fixture(scope="session")
def F32():
    return make_field(5)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
